#include "io.hpp"

#include <fstream>
#include <sstream>

namespace snccoh::cli {
namespace {

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

void require_object(const Node& node) {
  if (!node.value().is_object()) node.fail("expected an object");
}

}  // namespace

void Node::fail(const std::string& what) const { throw SchemaError(pointer_, what); }

bool Node::has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

Node Node::at(const std::string& key) const {
  require_object(*this);
  if (!value_->contains(key)) fail("missing required field \"" + key + "\"");
  return Node(value_->at(key), pointer_ + "/" + escape_token(key));
}

Node Node::at(std::size_t i) const {
  if (!value_->is_array()) fail("expected an array");
  if (i >= value_->size()) fail("index " + std::to_string(i) + " out of range");
  return Node((*value_)[i], pointer_ + "/" + std::to_string(i));
}

std::size_t Node::size() const {
  if (!value_->is_array()) fail("expected an array");
  return value_->size();
}

std::size_t Node::as_count() const {
  if (!value_->is_number_integer() || value_->get<long long>() < 0) fail("expected a nonnegative integer");
  return value_->get<std::size_t>();
}

long Node::as_integer() const {
  if (!value_->is_number_integer()) fail("expected an integer");
  return value_->get<long>();
}

bool Node::as_bool() const {
  if (!value_->is_boolean()) fail("expected a boolean");
  return value_->get<bool>();
}

std::string Node::as_string() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

Rational Node::as_rational() const {
  if (value_->is_number_integer()) return Rational(value_->get<long>());
  if (!value_->is_string()) fail("expected a rational as an integer or a \"num/den\" string");
  try {
    return parse_rational(value_->get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

std::vector<Vertex> Node::as_tuple() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(static_cast<Vertex>(at(i).as_count()));
  return out;
}

Simplex Node::as_simplex() const {
  try {
    return Simplex(as_tuple());
  } catch (const Error& e) {
    fail(e.what());
  }
}

RationalMatrix Node::as_matrix() const {
  const std::size_t rows = size();
  const std::size_t cols = rows == 0 ? 0 : at(0).size();
  return as_matrix(rows, cols);
}

RationalMatrix Node::as_matrix(std::size_t rows, std::size_t cols) const {
  if (size() == 0 && rows * cols == 0) return RationalMatrix(rows, cols);
  if (size() != rows)
    fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(size()));
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Node row = at(i);
    if (row.size() != cols)
      row.fail("expected " + std::to_string(cols) + " columns, found " + std::to_string(row.size()));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = row.at(j).as_rational();
  }
  return m;
}

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

std::string document_kind(const json& doc) { return Node(doc, "").at("kind").as_string(); }

SimplicialComplex parse_complex(const Node& node) {
  const std::size_t n = node.at("vertex_count").as_count();
  const Node facets = node.at("facets");
  std::vector<std::vector<Vertex>> list;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const Simplex s = facets.at(i).as_simplex();
    for (Vertex v : s.vertices())
      if (v >= n) facets.at(i).fail("vertex " + std::to_string(v) + " >= vertex_count");
    list.emplace_back(s.vertices().begin(), s.vertices().end());
  }
  try {
    return SimplicialComplex::from_facets(n, list);
  } catch (const Error& e) {
    facets.fail(e.what());
  }
}

Presheaf parse_presheaf_on(const SimplicialComplex& base, const Node& node) {
  PresheafBuilder builder(base);
  if (node.has("dims")) {
    const Node dims = node.at("dims");
    for (std::size_t i = 0; i < dims.size(); ++i) {
      const Node entry = dims.at(i);
      const Simplex s = entry.at("simplex").as_simplex();
      if (!base.contains(s)) entry.at("simplex").fail("simplex not in the complex");
      builder.set_dim(s, entry.at("dim").as_count());
    }
  }
  if (node.has("restrictions")) {
    const Node maps = node.at("restrictions");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const Node entry = maps.at(i);
      const Simplex from = entry.at("from").as_simplex();
      const Simplex to = entry.at("to").as_simplex();
      if (to.size() != from.size() + 1 || !to.contains(from))
        entry.fail("restrictions go from a simplex to a codimension-one coface");
      builder.set_restriction(from, to, entry.at("matrix").as_matrix());
    }
  }
  return builder.build();
}

Presheaf parse_presheaf(const Node& node) { return parse_presheaf_on(parse_complex(node.at("complex")), node); }

Section parse_section(const Node& node) {
  Section out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const Node entry = node.at(i);
    const Node vec = entry.at("vector");
    std::vector<Rational> v;
    for (std::size_t j = 0; j < vec.size(); ++j) v.push_back(vec.at(j).as_rational());
    out[entry.at("simplex").as_simplex()] = std::move(v);
  }
  return out;
}

SncDivisor parse_divisor(const Node& node) {
  SncDivisor d;
  const Node comps = node.at("components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Node c = comps.at(i);
    d.components.push_back({c.has("name") ? c.at("name").as_string() : "D" + std::to_string(i), c.at("dim").as_count()});
  }
  if (node.has("multiplicities")) {
    const Node m = node.at("multiplicities");
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::size_t r = m.at(i).as_count();
      if (r == 0) m.at(i).fail("multiplicities must be >= 1");
      d.multiplicities.push_back(static_cast<unsigned>(r));
    }
    if (d.multiplicities.size() != d.components.size()) m.fail("one multiplicity per component required");
  }
  if (node.has("ambient_dim")) d.ambient_dim = node.at("ambient_dim").as_count();
  if (node.has("irreducible")) d.irreducible = node.at("irreducible").as_bool();

  if (node.has("strata")) {
    const Node strata = node.at("strata");
    for (std::size_t i = 0; i < strata.size(); ++i) {
      const Simplex s = strata.at(i).as_simplex();
      if (s.vertices().back() >= d.components.size()) strata.at(i).fail("names a missing component");
      if (s.size() > 1) d.strata.insert(s);
    }
  }

  if (node.has("tables")) {
    const Node tables = node.at("tables");
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const Node t = tables.at(i);
      const Simplex s = t.at("tuple").as_simplex();
      Flavor flavor = Flavor::Sheaf;
      if (t.has("flavor")) {
        const std::string f = t.at("flavor").as_string();
        if (f == "derham")
          flavor = Flavor::DeRham;
        else if (f != "sheaf")
          t.at("flavor").fail("expected \"sheaf\" or \"derham\"");
      }
      const std::size_t r = t.has("r") ? t.at("r").as_count() : 0;
      const std::size_t q = t.at("q").as_count();
      TableEntry entry;
      entry.dim = t.at("dim").as_count();
      if (t.has("restriction")) {
        const Node res = t.at("restriction");
        if (res.value().is_string()) {
          const std::string kind = res.as_string();
          if (kind == "zero")
            entry.restriction.kind = RestrictionData::Kind::Zero;
          else if (kind == "constant")
            entry.restriction.kind = RestrictionData::Kind::Constant;
          else
            res.fail("expected \"zero\", \"constant\" or an object with \"maps\"");
        } else {
          entry.restriction.kind = RestrictionData::Kind::Explicit;
          const Node maps = res.at("maps");
          for (std::size_t j = 0; j < maps.size(); ++j) {
            const Node m = maps.at(j);
            const Simplex to = m.at("to").as_simplex();
            if (to.size() != s.size() + 1 || !to.contains(s)) m.at("to").fail("not a codimension-one coface of the tuple");
            entry.restriction.maps[to] = m.at("matrix").as_matrix();
          }
        }
      }
      d.set_table(s, flavor, r, q, std::move(entry));
    }
  }
  return d;
}

Fan parse_fan(const Node& node) {
  Fan f;
  f.n = node.at("n").as_count();
  const Node rays = node.at("rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    Ray r;
    const Node ray = rays.at(i);
    for (std::size_t j = 0; j < ray.size(); ++j) r.push_back(ray.at(j).as_integer());
    f.rays.push_back(std::move(r));
  }
  f.cones.insert(Cone{});
  const Node cones = node.at("cones");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    Cone c;
    for (auto v : cones.at(i).as_tuple()) {
      if (v >= f.rays.size()) cones.at(i).fail("names a missing ray");
      c.push_back(v);
    }
    f.add_cone(std::move(c));
  }
  return f;
}

std::vector<std::size_t> parse_selected_rays(const Node& node, const Fan& fan) {
  std::vector<std::size_t> out;
  if (!node.has("selected_rays")) {
    for (std::size_t i = 0; i < fan.rays.size(); ++i) out.push_back(i);
    return out;
  }
  const Node sel = node.at("selected_rays");
  for (std::size_t i = 0; i < sel.size(); ++i) {
    const std::size_t r = sel.at(i).as_count();
    if (r >= fan.rays.size()) sel.at(i).fail("names a missing ray");
    out.push_back(r);
  }
  return out;
}

LocalModelSpec parse_localmodel(const Node& node) {
  LocalModelSpec spec;
  spec.n = node.at("n").as_count();
  const Node comps = node.at("components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::size_t c = comps.at(i).as_count();
    if (c < 1 || c > spec.n) comps.at(i).fail("coordinate index must lie in 1..n");
    spec.components.push_back(c);
  }
  const Node mult = node.at("multiplicities");
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const std::size_t r = mult.at(i).as_count();
    if (r == 0) mult.at(i).fail("multiplicities must be >= 1");
    spec.multiplicities.push_back(static_cast<unsigned>(r));
  }
  if (spec.multiplicities.size() != spec.components.size()) mult.fail("one multiplicity per component required");
  if (node.has("degree_bound")) spec.degree_bound = node.at("degree_bound").as_count();
  try {
    spec.validate();
  } catch (const Error& e) {
    node.fail(e.what());
  }
  return spec;
}

Bicomplex parse_bicomplex(const Node& node) {
  const std::size_t width = node.at("width").as_count();
  const std::size_t height = node.at("height").as_count();
  Bicomplex b(width, height);
  const Node dims = node.at("dims");
  if (dims.size() != width + 1) dims.fail("expected width + 1 columns");
  for (std::size_t p = 0; p <= width; ++p) {
    const Node column = dims.at(p);
    if (column.size() != height + 1) column.fail("expected height + 1 entries");
    for (std::size_t q = 0; q <= height; ++q) b.set_dim(p, q, column.at(q).as_count());
  }
  auto read_maps = [&](const char* key, bool horizontal) {
    if (!node.has(key)) return;
    const Node maps = node.at(key);
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const Node m = maps.at(i);
      const std::size_t p = m.at("p").as_count();
      const std::size_t q = m.at("q").as_count();
      if (p > width || q > height) m.fail("cell off the grid");
      if (horizontal ? p == width : q == height) m.fail("map leaves the grid");
      const std::size_t rows = horizontal ? b.dim(p + 1, q) : b.dim(p, q + 1);
      const RationalMatrix matrix = m.at("matrix").as_matrix(rows, b.dim(p, q));
      if (horizontal)
        b.set_horizontal(p, q, matrix);
      else
        b.set_vertical(p, q, matrix);
    }
  };
  read_maps("horizontal", true);
  read_maps("vertical", false);
  return b;
}

CurveSpec parse_curve(const Node& node) {
  CurveSpec c;
  const Node g = node.at("genera");
  for (std::size_t i = 0; i < g.size(); ++i) c.genera.push_back(g.at(i).as_count());
  c.edges = node.at("edges").as_count();
  return c;
}

}  // namespace snccoh::cli
