#pragma once

// JSON input documents. Every parse failure names the offending field with a
// JSON pointer so a caller can locate it in the file.

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snccoh/bicomplex.hpp"
#include "snccoh/localmodel.hpp"
#include "snccoh/presheaf.hpp"
#include "snccoh/snc.hpp"
#include "snccoh/toric.hpp"

namespace snccoh::cli {

using json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : std::runtime_error(what + " at " + (pointer.empty() ? "/" : pointer)), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// A json value together with its pointer from the document root.
class Node {
 public:
  Node(const json& value, std::string pointer) : value_(&value), pointer_(std::move(pointer)) {}

  const json& value() const { return *value_; }
  const std::string& pointer() const { return pointer_; }

  bool has(const std::string& key) const;
  Node at(const std::string& key) const;  // required member
  Node at(std::size_t i) const;
  std::size_t size() const;  // array length; throws unless array

  std::size_t as_count() const;
  long as_integer() const;
  bool as_bool() const;
  std::string as_string() const;
  Rational as_rational() const;  // integer or "n/d" string
  std::vector<Vertex> as_tuple() const;
  Simplex as_simplex() const;
  RationalMatrix as_matrix(std::size_t rows, std::size_t cols) const;
  RationalMatrix as_matrix() const;  // shape from the data; [] is 0 x 0

  [[noreturn]] void fail(const std::string& what) const;

 private:
  const json* value_;
  std::string pointer_;
};

json load_document(const std::string& path);

/// The "kind" member of a document.
std::string document_kind(const json& doc);

SimplicialComplex parse_complex(const Node& node);
Presheaf parse_presheaf(const Node& node);
/// A presheaf body ("dims", "restrictions") on a known base.
Presheaf parse_presheaf_on(const SimplicialComplex& base, const Node& node);
Section parse_section(const Node& node);
SncDivisor parse_divisor(const Node& node);
Fan parse_fan(const Node& node);
std::vector<std::size_t> parse_selected_rays(const Node& node, const Fan& fan);
LocalModelSpec parse_localmodel(const Node& node);
Bicomplex parse_bicomplex(const Node& node);

struct CurveSpec {
  std::vector<std::size_t> genera;
  std::size_t edges = 0;
};
CurveSpec parse_curve(const Node& node);

}  // namespace snccoh::cli
