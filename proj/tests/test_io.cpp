#include <doctest.h>

#include "dcat/io.hpp"

using namespace dcat;

namespace {

const char* kMinimalCategory = R"({
  "format_version": 1,
  "kind": "category",
  "payload": {
    "objects": 1,
    "morphisms": [{"src": 0, "tgt": 0}],
    "identity": [0],
    "composition": [[0, 0, 0]]
  }
})";

}  // namespace

TEST_CASE("a minimal one-object category document parses") {
  Document doc = parse_document(kMinimalCategory);
  REQUIRE(doc.kind == DocKind::Category);
  CHECK(doc.category->object_count() == 1);
  CHECK(validate_category(*doc.category).ok());
}

TEST_CASE("dangling ids raise RangeError with the path") {
  std::string text = kMinimalCategory;
  text.replace(text.find("[[0, 0, 0]]"), 11, "[[0, 0, 99]]");
  try {
    (void)parse_document(text);
    FAIL("expected RangeError");
  } catch (const Error& e) {
    CHECK(e.code() == Err::RangeError);
    CHECK(std::string(e.what()).find("composition") != std::string::npos);
  }
}

TEST_CASE("unknown and missing fields are rejected") {
  std::string extra = kMinimalCategory;
  extra.replace(extra.find("\"objects\": 1,"), 13, "\"objects\": 1, \"color\": 3,");
  CHECK_THROWS_AS((void)parse_document(extra), Error);

  std::string missing = kMinimalCategory;
  missing.replace(missing.find("\"identity\": [0],"), 16, "");
  CHECK_THROWS_AS((void)parse_document(missing), Error);

  CHECK_THROWS_AS((void)parse_document("{nope"), Error);  // SyntaxError
  std::string badver = kMinimalCategory;
  badver.replace(badver.find("\"format_version\": 1"), 19, "\"format_version\": 2");
  CHECK_THROWS_AS((void)parse_document(badver), Error);
}

TEST_CASE("rel(2) round-trips byte-identically") {
  auto rel = build_rel(2);
  std::string first = serialize_double_category(*rel);
  Document doc = parse_document(first);
  REQUIRE(doc.kind == DocKind::DoubleCategory);
  CHECK(doc.double_category->square_count() == 2778);
  std::string second = serialize_double_category(*doc.double_category);
  CHECK(first == second);
  CHECK(validate_double_category(*doc.double_category).ok());
}

TEST_CASE("serialization is canonical") {
  auto a = build_monoid_bundle(make_cyclic_group(2));
  auto b = build_monoid_bundle(make_cyclic_group(2));
  CHECK(serialize_double_category(*a) == serialize_double_category(*b));
}

TEST_CASE("span fragments keep their capacity marks through documents") {
  auto span = build_span({2, 2});
  std::string text = serialize_double_category(*span);
  Document doc = parse_document(text);
  CHECK(validate_double_category(*doc.double_category).ok());
  CHECK(serialize_double_category(*doc.double_category) == text);
}

TEST_CASE("indexing documents round-trip and validate") {
  auto zdg = build_group_double_groupoid(2, make_cyclic_group(2));
  Pi2Indexing phi = induce_opindexing(zdg);
  std::string text = serialize_indexing(phi);
  Document doc = parse_document(text);
  REQUIRE(doc.kind == DocKind::Indexing);
  CHECK(validate_indexing(*doc.indexing).ok());
  CHECK(serialize_indexing(*doc.indexing) == text);
  // the parsed indexing still certifies the original double category
  CHECK(check_induces(*zdg, *doc.indexing).ok());
  // and drives a crossed product build
  CrossedProduct q = build_crossed_product(*doc.indexing);
  CHECK(q.dc->class_count() == 2);
}

TEST_CASE("decorated and two-category documents round-trip") {
  auto zdg = build_group_double_groupoid(2, make_cyclic_group(2));
  DecoratedTwoCategory d = decorated_horizontalization(zdg);
  std::string text = serialize_decorated(d);
  Document doc = parse_document(text);
  REQUIRE(doc.kind == DocKind::Decorated);
  CHECK(decorated_equal(*doc.decorated, d));
  CHECK(serialize_decorated(*doc.decorated) == text);
}

TEST_CASE("instance specs round-trip and build") {
  InstanceSpec spec = parse_instance_spec("group_double_groupoid", "none", 2, 2, "z2", "path2");
  std::string text = serialize_instance_spec(spec);
  Document doc = parse_document(text);
  REQUIRE(doc.kind == DocKind::InstanceSpec);
  CHECK(serialize_instance_spec(*doc.instance) == text);
  auto c = document_double_category(doc);
  REQUIRE(c);
  CHECK(c->square_count() == 8);
}
