#include "dcat/io.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

namespace dcat {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& why) {
  throw Error(Err::SchemaError, path + ": " + why);
}

void expect_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  for (auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* allowed : keys)
      if (k == allowed) known = true;
    if (!known) schema_error(path, "unknown field '" + k + "'");
  }
  for (const char* required : keys)
    if (!j.contains(required)) schema_error(path, std::string("missing field '") + required + "'");
}

std::int64_t get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::int32_t get_id(const json& j, const std::string& path, std::int64_t limit) {
  std::int64_t v = get_int(j, path);
  if (v < 0 || v >= limit)
    throw Error(Err::RangeError, path + ": id " + std::to_string(v) + " out of range [0, " +
                                     std::to_string(limit) + ")");
  return static_cast<std::int32_t>(v);
}

// ---- category ----

FiniteCategory parse_category(const json& j, const std::string& path) {
  expect_keys(j, path, {"objects", "morphisms", "identity", "composition"});
  FiniteCategory c;
  const std::int64_t nobj = get_int(j["objects"], path + ".objects");
  if (nobj < 0 || nobj > 100000) schema_error(path + ".objects", "unreasonable object count");
  for (std::int64_t i = 0; i < nobj; ++i) c.add_object();
  if (!j["morphisms"].is_array()) schema_error(path + ".morphisms", "expected an array");
  for (std::size_t i = 0; i < j["morphisms"].size(); ++i) {
    const json& m = j["morphisms"][i];
    const std::string mp = path + ".morphisms[" + std::to_string(i) + "]";
    expect_keys(m, mp, {"src", "tgt"});
    c.add_morphism(get_id(m["src"], mp + ".src", nobj), get_id(m["tgt"], mp + ".tgt", nobj));
  }
  c.finalize();
  const std::int64_t nmor = c.morphism_count();
  if (!j["identity"].is_array() || j["identity"].size() != static_cast<std::size_t>(nobj))
    schema_error(path + ".identity", "expected one entry per object");
  for (std::int64_t a = 0; a < nobj; ++a)
    c.set_identity(static_cast<ObjId>(a),
                   get_id(j["identity"][a], path + ".identity[" + std::to_string(a) + "]", nmor));
  if (!j["composition"].is_array()) schema_error(path + ".composition", "expected an array");
  for (std::size_t i = 0; i < j["composition"].size(); ++i) {
    const json& row = j["composition"][i];
    const std::string rp = path + ".composition[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != 3) schema_error(rp, "expected [second, first, result]");
    c.set_composite(get_id(row[0], rp + "[0]", nmor), get_id(row[1], rp + "[1]", nmor),
                    get_id(row[2], rp + "[2]", nmor));
  }
  return c;
}

json category_json(const FiniteCategory& c) {
  json j;
  j["objects"] = c.object_count();
  json mor = json::array();
  for (MorId m = 0; m < c.morphism_count(); ++m) mor.push_back({{"src", c.src(m)}, {"tgt", c.tgt(m)}});
  j["morphisms"] = std::move(mor);
  json ident = json::array();
  for (ObjId a = 0; a < c.object_count(); ++a) ident.push_back(c.identity(a));
  j["identity"] = std::move(ident);
  json comp = json::array();
  for (MorId g = 0; g < c.morphism_count(); ++g)
    for (MorId f = 0; f < c.morphism_count(); ++f)
      if (c.composable(g, f)) comp.push_back({g, f, c.raw_entry(g, f)});
  j["composition"] = std::move(comp);
  return j;
}

// ---- two-category ----

std::shared_ptr<FiniteTwoCategory> parse_two_category(const json& j, const std::string& path) {
  expect_keys(j, path,
              {"objects", "one_cells", "one_identity", "one_composition", "two_cells",
               "two_identity", "vcomp2", "hcomp2"});
  auto b = std::make_shared<FiniteTwoCategory>();
  const std::int64_t nobj = get_int(j["objects"], path + ".objects");
  b->set_object_count(static_cast<std::int32_t>(nobj));
  for (std::size_t i = 0; i < j["one_cells"].size(); ++i) {
    const json& m = j["one_cells"][i];
    const std::string mp = path + ".one_cells[" + std::to_string(i) + "]";
    expect_keys(m, mp, {"src", "tgt"});
    b->add_one_cell(get_id(m["src"], mp + ".src", nobj), get_id(m["tgt"], mp + ".tgt", nobj));
  }
  const std::int64_t nh = b->one_cell_count();
  if (j["one_identity"].size() != static_cast<std::size_t>(nobj))
    schema_error(path + ".one_identity", "expected one entry per object");
  for (std::int64_t a = 0; a < nobj; ++a)
    b->set_unit1(static_cast<ObjId>(a),
                 get_id(j["one_identity"][a], path + ".one_identity", nh));
  for (std::size_t i = 0; i < j["one_composition"].size(); ++i) {
    const json& row = j["one_composition"][i];
    const std::string rp = path + ".one_composition[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != 3) schema_error(rp, "expected [left, right, result]");
    b->set_compose1(get_id(row[0], rp, nh), get_id(row[1], rp, nh), get_id(row[2], rp, nh));
  }
  for (std::size_t i = 0; i < j["two_cells"].size(); ++i) {
    const json& m = j["two_cells"][i];
    const std::string mp = path + ".two_cells[" + std::to_string(i) + "]";
    expect_keys(m, mp, {"src", "tgt"});
    b->add_cell(get_id(m["src"], mp + ".src", nh), get_id(m["tgt"], mp + ".tgt", nh));
  }
  b->finalize();
  const std::int64_t nc = b->cell_count();
  if (j["two_identity"].size() != static_cast<std::size_t>(nh))
    schema_error(path + ".two_identity", "expected one entry per 1-cell");
  for (std::int64_t h = 0; h < nh; ++h)
    b->set_identity2(static_cast<HorId>(h), get_id(j["two_identity"][h], path + ".two_identity", nc));
  for (std::size_t i = 0; i < j["vcomp2"].size(); ++i) {
    const json& row = j["vcomp2"][i];
    const std::string rp = path + ".vcomp2[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != 3) schema_error(rp, "expected [top, bottom, result]");
    b->set_vcomp2(get_id(row[0], rp, nc), get_id(row[1], rp, nc), get_id(row[2], rp, nc));
  }
  for (std::size_t i = 0; i < j["hcomp2"].size(); ++i) {
    const json& row = j["hcomp2"][i];
    const std::string rp = path + ".hcomp2[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != 3) schema_error(rp, "expected [left, right, result]");
    b->set_hcomp2(get_id(row[0], rp, nc), get_id(row[1], rp, nc), get_id(row[2], rp, nc));
  }
  return b;
}

json two_category_json(const TwoCat& b, const ValidateOptions& opt) {
  if (static_cast<std::uint64_t>(b.cell_count()) > opt.max_tuples)
    throw Error(Err::BudgetExceeded, "two-category too large to serialize");
  json j;
  j["objects"] = b.object_count();
  json cells1 = json::array();
  for (HorId h = 0; h < b.one_cell_count(); ++h)
    cells1.push_back({{"src", b.src1(h)}, {"tgt", b.tgt1(h)}});
  j["one_cells"] = std::move(cells1);
  json ident1 = json::array();
  for (ObjId a = 0; a < b.object_count(); ++a) ident1.push_back(b.unit1(a));
  j["one_identity"] = std::move(ident1);
  json comp1 = json::array();
  for (HorId l = 0; l < b.one_cell_count(); ++l)
    for (HorId r = 0; r < b.one_cell_count(); ++r)
      if (b.tgt1(l) == b.src1(r) && b.compose1_within(l, r)) comp1.push_back({l, r, b.compose1(l, r)});
  j["one_composition"] = std::move(comp1);
  json cells2 = json::array();
  for (CellId x = 0; x < b.cell_count(); ++x)
    cells2.push_back({{"src", b.src2(x)}, {"tgt", b.tgt2(x)}});
  j["two_cells"] = std::move(cells2);
  json ident2 = json::array();
  for (HorId h = 0; h < b.one_cell_count(); ++h) ident2.push_back(b.identity2(h));
  j["two_identity"] = std::move(ident2);
  json v2 = json::array(), h2 = json::array();
  std::uint64_t pairs = 0;
  for (CellId x = 0; x < b.cell_count(); ++x)
    for (CellId y = 0; y < b.cell_count(); ++y) {
      if (b.vcomposable2(x, y)) {
        if (++pairs > opt.max_tuples) throw Error(Err::BudgetExceeded, "two-category pair budget");
        v2.push_back({x, y, *b.vcomp2(x, y)});
      }
      if (b.hcomposable2(x, y)) {
        if (++pairs > opt.max_tuples) throw Error(Err::BudgetExceeded, "two-category pair budget");
        h2.push_back({x, y, *b.hcomp2(x, y)});
      }
    }
  j["vcomp2"] = std::move(v2);
  j["hcomp2"] = std::move(h2);
  return j;
}

// ---- decorated ----

DecoratedTwoCategory parse_decorated(const json& j, const std::string& path) {
  expect_keys(j, path, {"two_category", "vertical_category"});
  DecoratedTwoCategory d;
  d.two_cat = parse_two_category(j["two_category"], path + ".two_category");
  d.vertical = parse_category(j["vertical_category"], path + ".vertical_category");
  return d;
}

json decorated_json(const DecoratedTwoCategory& d, const ValidateOptions& opt) {
  json j;
  j["two_category"] = two_category_json(*d.two_cat, opt);
  j["vertical_category"] = category_json(d.vertical);
  return j;
}

// ---- double category ----

std::shared_ptr<TableDoubleCat> parse_double_category(const json& j, const std::string& path) {
  expect_keys(j, path,
              {"vertical_category", "hcells", "hunit", "hcomposition", "hcell_out_of_capacity",
               "squares", "unit_square", "videntity", "vcomp", "hcomp"});
  auto c = std::make_shared<TableDoubleCat>();
  c->set_vertical_category(parse_category(j["vertical_category"], path + ".vertical_category"));
  const std::int64_t nobj = c->vertical_category().object_count();
  const std::int64_t nvert = c->vertical_category().morphism_count();
  for (std::size_t i = 0; i < j["hcells"].size(); ++i) {
    const json& m = j["hcells"][i];
    const std::string mp = path + ".hcells[" + std::to_string(i) + "]";
    expect_keys(m, mp, {"src", "tgt"});
    c->add_hcell(get_id(m["src"], mp + ".src", nobj), get_id(m["tgt"], mp + ".tgt", nobj));
  }
  const std::int64_t nh = c->hcell_count();
  if (j["hunit"].size() != static_cast<std::size_t>(nobj))
    schema_error(path + ".hunit", "expected one entry per object");
  for (std::int64_t a = 0; a < nobj; ++a)
    c->set_hunit(static_cast<ObjId>(a), get_id(j["hunit"][a], path + ".hunit", nh));
  for (std::size_t i = 0; i < j["hcomposition"].size(); ++i) {
    const json& row = j["hcomposition"][i];
    const std::string rp = path + ".hcomposition[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != 3) schema_error(rp, "expected [left, right, result]");
    c->set_hcompose(get_id(row[0], rp, nh), get_id(row[1], rp, nh), get_id(row[2], rp, nh));
  }
  for (std::size_t i = 0; i < j["hcell_out_of_capacity"].size(); ++i) {
    const json& row = j["hcell_out_of_capacity"][i];
    const std::string rp = path + ".hcell_out_of_capacity[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != 2) schema_error(rp, "expected [left, right]");
    c->set_out_of_capacity(get_id(row[0], rp, nh), get_id(row[1], rp, nh));
  }
  for (std::size_t i = 0; i < j["squares"].size(); ++i) {
    const json& m = j["squares"][i];
    const std::string mp = path + ".squares[" + std::to_string(i) + "]";
    expect_keys(m, mp, {"left", "right", "top", "bottom"});
    c->add_square({get_id(m["left"], mp + ".left", nvert), get_id(m["right"], mp + ".right", nvert),
                   get_id(m["top"], mp + ".top", nh), get_id(m["bottom"], mp + ".bottom", nh)});
  }
  const std::int64_t nsq = c->square_count();
  if (j["unit_square"].size() != static_cast<std::size_t>(nvert))
    schema_error(path + ".unit_square", "expected one entry per vertical morphism");
  for (std::int64_t f = 0; f < nvert; ++f)
    c->set_unit_square(static_cast<VertId>(f), get_id(j["unit_square"][f], path + ".unit_square", nsq));
  if (j["videntity"].size() != static_cast<std::size_t>(nh))
    schema_error(path + ".videntity", "expected one entry per horizontal 1-cell");
  for (std::int64_t h = 0; h < nh; ++h)
    c->set_videntity(static_cast<HorId>(h), get_id(j["videntity"][h], path + ".videntity", nsq));
  for (std::size_t i = 0; i < j["vcomp"].size(); ++i) {
    const json& row = j["vcomp"][i];
    const std::string rp = path + ".vcomp[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != 3) schema_error(rp, "expected [top, bottom, result]");
    c->set_vcomp(get_id(row[0], rp, nsq), get_id(row[1], rp, nsq), get_id(row[2], rp, nsq));
  }
  for (std::size_t i = 0; i < j["hcomp"].size(); ++i) {
    const json& row = j["hcomp"][i];
    const std::string rp = path + ".hcomp[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != 3) schema_error(rp, "expected [left, right, result]");
    c->set_hcomp(get_id(row[0], rp, nsq), get_id(row[1], rp, nsq), get_id(row[2], rp, nsq));
  }
  c->finalize();
  return c;
}

json double_category_json(const DoubleCat& cat, const ValidateOptions& opt) {
  TableDoubleCat mat = materialize(cat, opt);
  json j;
  j["vertical_category"] = category_json(mat.vertical_category());
  json hs = json::array();
  for (HorId h = 0; h < mat.hcell_count(); ++h)
    hs.push_back({{"src", mat.hsrc(h)}, {"tgt", mat.htgt(h)}});
  j["hcells"] = std::move(hs);
  json hu = json::array();
  for (ObjId a = 0; a < mat.vertical_category().object_count(); ++a) hu.push_back(mat.hunit(a));
  j["hunit"] = std::move(hu);
  json hc = json::array();
  {
    std::vector<std::array<std::int64_t, 3>> rows;
    for (auto& [k, v] : mat.hcompose_table())
      rows.push_back({static_cast<std::int64_t>(k >> 32),
                      static_cast<std::int64_t>(k & 0xffffffffu), v});
    std::sort(rows.begin(), rows.end());
    for (auto& r : rows) hc.push_back({r[0], r[1], r[2]});
  }
  j["hcomposition"] = std::move(hc);
  json oc = json::array();
  {
    auto rows = mat.out_of_capacity_pairs();
    std::sort(rows.begin(), rows.end());
    for (auto& [l, r] : rows) oc.push_back({l, r});
  }
  j["hcell_out_of_capacity"] = std::move(oc);
  json sq = json::array();
  for (SqId s = 0; s < mat.square_count(); ++s) {
    SquareBoundary b = mat.boundary(s);
    sq.push_back({{"left", b.left}, {"right", b.right}, {"top", b.top}, {"bottom", b.bottom}});
  }
  j["squares"] = std::move(sq);
  json us = json::array();
  for (VertId f = 0; f < mat.vertical_category().morphism_count(); ++f)
    us.push_back(mat.unit_square(f));
  j["unit_square"] = std::move(us);
  json vi = json::array();
  for (HorId h = 0; h < mat.hcell_count(); ++h) vi.push_back(mat.videntity(h));
  j["videntity"] = std::move(vi);
  auto table_rows = [](const std::unordered_map<std::uint64_t, SqId>& t) {
    std::vector<std::array<std::int64_t, 3>> rows;
    for (auto& [k, v] : t)
      rows.push_back({static_cast<std::int64_t>(k >> 32),
                      static_cast<std::int64_t>(k & 0xffffffffu), v});
    std::sort(rows.begin(), rows.end());
    json out = json::array();
    for (auto& r : rows) out.push_back({r[0], r[1], r[2]});
    return out;
  };
  j["vcomp"] = table_rows(mat.vcomp_table());
  j["hcomp"] = table_rows(mat.hcomp_table());
  return j;
}

// ---- indexing ----

Pi2Indexing parse_indexing(const json& j, const std::string& path) {
  expect_keys(j, path, {"direction", "base", "monoids", "homs"});
  Pi2Indexing phi;
  std::string dir = j["direction"].is_string() ? j["direction"].get<std::string>() : "";
  if (dir == "indexing")
    phi.direction = IndexingDirection::Indexing;
  else if (dir == "opindexing")
    phi.direction = IndexingDirection::Opindexing;
  else
    schema_error(path + ".direction", "expected \"indexing\" or \"opindexing\"");
  phi.base = parse_decorated(j["base"], path + ".base");
  const std::int64_t nobj = phi.base.vertical.object_count();
  const std::int64_t ncell = phi.base.two_cat->cell_count();
  if (j["monoids"].size() != static_cast<std::size_t>(nobj))
    schema_error(path + ".monoids", "expected one monoid per object");
  for (std::int64_t a = 0; a < nobj; ++a) {
    const json& m = j["monoids"][a];
    const std::string mp = path + ".monoids[" + std::to_string(a) + "]";
    expect_keys(m, mp, {"object", "unit", "elements", "op"});
    Pi2Monoid pm;
    pm.base_object = get_id(m["object"], mp + ".object", nobj);
    const std::int64_t n = static_cast<std::int64_t>(m["elements"].size());
    pm.presentation.size = static_cast<std::int32_t>(n);
    pm.presentation.unit = get_id(m["unit"], mp + ".unit", n);
    for (std::int64_t e = 0; e < n; ++e) {
      SqId cell = get_id(m["elements"][e], mp + ".elements", ncell);
      pm.elements.push_back(cell);
      pm.element_index[cell] = static_cast<ElemId>(e);
    }
    if (m["op"].size() != static_cast<std::size_t>(n * n))
      schema_error(mp + ".op", "expected a dense row-major n*n table");
    for (std::int64_t i = 0; i < n * n; ++i)
      pm.presentation.op.push_back(get_id(m["op"][i], mp + ".op", n));
    phi.monoids.push_back(std::move(pm));
  }
  const std::int64_t nvert = phi.base.vertical.morphism_count();
  if (j["homs"].size() != static_cast<std::size_t>(nvert))
    schema_error(path + ".homs", "expected one table per vertical morphism");
  for (std::int64_t f = 0; f < nvert; ++f) {
    const json& t = j["homs"][f];
    const std::string tp = path + ".homs[" + std::to_string(f) + "]";
    const std::int64_t dn = phi.monoids[phi.hom_domain(static_cast<VertId>(f))].presentation.size;
    const std::int64_t cn = phi.monoids[phi.hom_codomain(static_cast<VertId>(f))].presentation.size;
    if (!t.is_array() || t.size() != static_cast<std::size_t>(dn))
      schema_error(tp, "expected one entry per domain element");
    std::vector<ElemId> row;
    for (std::int64_t x = 0; x < dn; ++x) row.push_back(get_id(t[x], tp, cn));
    phi.hom.push_back(std::move(row));
  }
  return phi;
}

json indexing_json(const Pi2Indexing& phi, const ValidateOptions& opt) {
  json j;
  j["direction"] = phi.direction == IndexingDirection::Opindexing ? "opindexing" : "indexing";
  j["base"] = decorated_json(phi.base, opt);
  json ms = json::array();
  for (const Pi2Monoid& m : phi.monoids) {
    json mj;
    mj["object"] = m.base_object;
    mj["unit"] = m.presentation.unit;
    json elems = json::array();
    for (SqId e : m.elements) elems.push_back(e);
    mj["elements"] = std::move(elems);
    json op = json::array();
    for (ElemId v : m.presentation.op) op.push_back(v);
    mj["op"] = std::move(op);
    ms.push_back(std::move(mj));
  }
  j["monoids"] = std::move(ms);
  json hs = json::array();
  for (const auto& row : phi.hom) {
    json r = json::array();
    for (ElemId v : row) r.push_back(v);
    hs.push_back(std::move(r));
  }
  j["homs"] = std::move(hs);
  return j;
}

// ---- instance spec ----

InstanceSpec parse_instance(const json& j, const std::string& path) {
  expect_keys(j, path, {"kind", "restriction", "n", "apex", "monoid", "category", "twisted"});
  if (!j["twisted"].is_boolean()) schema_error(path + ".twisted", "expected a boolean");
  return parse_instance_spec(j["kind"].get<std::string>(), j["restriction"].get<std::string>(),
                             static_cast<int>(get_int(j["n"], path + ".n")),
                             static_cast<int>(get_int(j["apex"], path + ".apex")),
                             j["monoid"].get<std::string>(), j["category"].get<std::string>(),
                             j["twisted"].get<bool>());
}

json instance_json(const InstanceSpec& s) {
  json j;
  switch (s.kind) {
    case InstanceSpec::Kind::Rel: j["kind"] = "rel"; break;
    case InstanceSpec::Kind::Span: j["kind"] = "span"; break;
    case InstanceSpec::Kind::CommutingSquares: j["kind"] = "commuting_squares"; break;
    case InstanceSpec::Kind::MonoidBundle: j["kind"] = "monoid_bundle"; break;
    case InstanceSpec::Kind::GroupDoubleGroupoid: j["kind"] = "group_double_groupoid"; break;
  }
  switch (s.restriction) {
    case InstanceSpec::Restriction::None: j["restriction"] = "none"; break;
    case InstanceSpec::Restriction::Star: j["restriction"] = "star"; break;
    case InstanceSpec::Restriction::Tilde: j["restriction"] = "tilde"; break;
    case InstanceSpec::Restriction::Hat: j["restriction"] = "hat"; break;
  }
  j["n"] = s.n;
  j["apex"] = s.apex;
  j["monoid"] = s.monoid;
  j["category"] = s.category;
  j["twisted"] = s.twisted;
  return j;
}

std::string envelope(const char* kind, json payload) {
  json doc;
  doc["format_version"] = 1;
  doc["kind"] = kind;
  doc["payload"] = std::move(payload);
  return doc.dump(2) + "\n";
}

}  // namespace

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Err::SyntaxError, e.what());
  }
  if (!j.is_object()) throw Error(Err::SchemaError, "document root must be an object");
  expect_keys(j, "$", {"format_version", "kind", "payload"});
  Document doc;
  doc.format_version = static_cast<int>(get_int(j["format_version"], "$.format_version"));
  if (doc.format_version != 1)
    throw Error(Err::SchemaError, "unsupported format_version " + std::to_string(doc.format_version));
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  const json& p = j["payload"];
  if (kind == "category") {
    doc.kind = DocKind::Category;
    doc.category = parse_category(p, "$.payload");
  } else if (kind == "two_category") {
    doc.kind = DocKind::TwoCategory;
    doc.two_category = parse_two_category(p, "$.payload");
  } else if (kind == "decorated") {
    doc.kind = DocKind::Decorated;
    doc.decorated = parse_decorated(p, "$.payload");
  } else if (kind == "double_category") {
    doc.kind = DocKind::DoubleCategory;
    doc.double_category = parse_double_category(p, "$.payload");
  } else if (kind == "indexing") {
    doc.kind = DocKind::Indexing;
    doc.indexing = parse_indexing(p, "$.payload");
  } else if (kind == "instance_spec") {
    doc.kind = DocKind::InstanceSpec;
    doc.instance = parse_instance(p, "$.payload");
  } else {
    throw Error(Err::SchemaError, "$.kind: unknown kind '" + kind + "'");
  }
  return doc;
}

std::string serialize_category(const FiniteCategory& c) {
  return envelope("category", category_json(c));
}

std::string serialize_two_category(const TwoCat& b, const ValidateOptions& opt) {
  return envelope("two_category", two_category_json(b, opt));
}

std::string serialize_decorated(const DecoratedTwoCategory& d, const ValidateOptions& opt) {
  return envelope("decorated", decorated_json(d, opt));
}

std::string serialize_double_category(const DoubleCat& c, const ValidateOptions& opt) {
  return envelope("double_category", double_category_json(c, opt));
}

std::string serialize_indexing(const Pi2Indexing& phi, const ValidateOptions& opt) {
  return envelope("indexing", indexing_json(phi, opt));
}

std::string serialize_instance_spec(const InstanceSpec& s) {
  return envelope("instance_spec", instance_json(s));
}

std::shared_ptr<const DoubleCat> document_double_category(const Document& doc) {
  switch (doc.kind) {
    case DocKind::DoubleCategory: return doc.double_category;
    case DocKind::InstanceSpec: return build_instance(*doc.instance);
    default: return nullptr;
  }
}

}  // namespace dcat
