#pragma once

#include <memory>
#include <optional>
#include <string>

#include "dcat/crossprod.hpp"
#include "dcat/instances.hpp"
#include "dcat/twocat.hpp"

namespace dcat {

enum class DocKind { Category, TwoCategory, Decorated, DoubleCategory, Indexing, InstanceSpec };

/// A parsed document: format version, kind tag and the decoded payload.
/// All referential integrity (id ranges, table shapes) is checked at parse
/// time; SyntaxError / SchemaError / RangeError are thrown with a path.
struct Document {
  int format_version = 1;
  DocKind kind = DocKind::Category;
  std::optional<FiniteCategory> category;
  std::shared_ptr<FiniteTwoCategory> two_category;
  std::optional<DecoratedTwoCategory> decorated;
  std::shared_ptr<TableDoubleCat> double_category;
  std::optional<Pi2Indexing> indexing;
  std::optional<InstanceSpec> instance;
};

Document parse_document(const std::string& text);

// Canonical serialization: sorted keys, fixed integer rendering, sorted table
// rows; equal in-memory values produce byte-identical documents.
std::string serialize_category(const FiniteCategory& c);
std::string serialize_two_category(const TwoCat& b, const ValidateOptions& opt = {});
std::string serialize_decorated(const DecoratedTwoCategory& d, const ValidateOptions& opt = {});
std::string serialize_double_category(const DoubleCat& c, const ValidateOptions& opt = {});
std::string serialize_indexing(const Pi2Indexing& phi, const ValidateOptions& opt = {});
std::string serialize_instance_spec(const InstanceSpec& s);

/// Loads the double category a document denotes: an explicit table, a built
/// instance, or the base of an indexing. Returns null when the document only
/// holds 1-categorical data.
std::shared_ptr<const DoubleCat> document_double_category(const Document& doc);

}  // namespace dcat
