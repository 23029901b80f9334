#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace snccoh::cli {
namespace {

struct Result {
  json body;
  bool verified = true;
};

using Handler = std::function<Result(const Node&, const Options&)>;

json tuple_json(const Simplex& s) { return json(std::vector<Vertex>(s.vertices().begin(), s.vertices().end())); }

long alternating_sum(const std::vector<std::size_t>& v) {
  long sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += i % 2 == 0 ? static_cast<long>(v[i]) : -static_cast<long>(v[i]);
  return sum;
}

json report_json(const CohomologyReport& r) {
  json summands = json::array();
  for (const auto& s : r.summands) summands.push_back({{"p", s.p}, {"q", s.q}, {"dim", s.dim}, {"source", s.source}});
  return {{"label", r.label}, {"totals", r.totals}, {"euler_characteristic", alternating_sum(r.totals)},
          {"summands", summands}};
}

json page_json(const SpectralPage& page) {
  json columns = json::array();
  for (std::size_t p = 0; p <= page.width; ++p) {
    std::vector<std::size_t> column;
    for (std::size_t q = 0; q <= page.height; ++q) column.push_back(page.at(p, q));
    columns.push_back(column);
  }
  return columns;
}

std::string page_name(PageIndex r) {
  switch (r) {
    case PageIndex::Zero: return "E0";
    case PageIndex::One: return "E1";
    case PageIndex::Two: return "E2";
    case PageIndex::Infinity: return "Einf";
  }
  return "";
}

std::string kind_of(const Node& doc) { return doc.at("kind").as_string(); }

void expect_kind(const Node& doc, std::initializer_list<const char*> kinds) {
  const std::string k = kind_of(doc);
  std::string list;
  for (const char* allowed : kinds) {
    if (k == allowed) return;
    list += std::string(list.empty() ? "" : ", ") + allowed;
  }
  doc.at("kind").fail("this command takes kind " + list + ", not \"" + k + "\"");
}

SimplicialComplex complex_from(const Node& doc) {
  expect_kind(doc, {"complex", "divisor"});
  return kind_of(doc) == "complex" ? parse_complex(doc) : dual_complex(parse_divisor(doc));
}

Bicomplex bicomplex_from(const Node& doc, const Options& options) {
  expect_kind(doc, {"bicomplex", "divisor"});
  if (kind_of(doc) == "bicomplex") return parse_bicomplex(doc);
  Flavor flavor = Flavor::Sheaf;
  if (doc.has("flavor") && doc.at("flavor").as_string() == "derham") flavor = Flavor::DeRham;
  return assembly_bicomplex(parse_divisor(doc), options.form_degree.value_or(0), flavor);
}

Result cmd_dual_complex(const Node& doc, const Options&) {
  expect_kind(doc, {"divisor"});
  const SncDivisor d = parse_divisor(doc);
  const SimplicialComplex k = dual_complex(d);
  json vertices = json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i)
    vertices.push_back({{"index", i}, {"name", d.components[i].name}, {"dim", d.components[i].dim}});
  json by_dim = json::array();
  std::vector<std::size_t> f_vector;
  for (int p = 0; p <= k.dimension(); ++p) {
    json list = json::array();
    for (const auto& s : k.simplices(p)) list.push_back(tuple_json(s));
    by_dim.push_back(list);
    f_vector.push_back(k.simplices(p).size());
  }
  json facets = json::array();
  for (const auto& s : k.facets()) facets.push_back(tuple_json(s));
  return {{{"vertices", vertices},
           {"dimension", k.dimension()},
           {"f_vector", f_vector},
           {"simplices", by_dim},
           {"facets", facets},
           {"euler_characteristic", euler_characteristic(k)}}};
}

Result cmd_betti(const Node& doc, const Options&) {
  const SimplicialComplex k = complex_from(doc);
  return {{{"dimension", k.dimension()}, {"betti", betti_numbers(k)}, {"euler_characteristic", euler_characteristic(k)}}};
}

Result cmd_integral(const Node& doc, const Options&) {
  const SimplicialComplex k = complex_from(doc);
  json degrees = json::array();
  const auto h = integral_cohomology(k);
  for (std::size_t p = 0; p < h.size(); ++p) {
    std::vector<std::string> torsion;
    for (const auto& t : h[p].torsion) torsion.push_back(t.get_str());
    degrees.push_back({{"degree", p}, {"free_rank", h[p].free_rank}, {"torsion", torsion}});
  }
  return {{{"dimension", k.dimension()}, {"degrees", degrees}}};
}

Result cmd_presheaf_cohomology(const Node& doc, const Options&) {
  expect_kind(doc, {"presheaf"});
  const Presheaf v = parse_presheaf(doc);
  const CochainComplex c = cech_complex(v);
  return {{{"cochain_dims", c.space_dims}, {"cohomology", presheaf_cohomology(v)}}};
}

Result cmd_snc_cohomology(const Node& doc, const Options&) {
  expect_kind(doc, {"divisor"});
  return {{{"structure_sheaf", report_json(structure_sheaf_cohomology(parse_divisor(doc)))}}};
}

Result cmd_forms(const Node& doc, const Options& options) {
  expect_kind(doc, {"divisor"});
  if (!options.form_degree) throw SchemaError("", "forms requires --form-degree");
  const std::size_t r = *options.form_degree;
  return {{{"form_degree", r}, {"reduced_forms", report_json(reduced_forms_cohomology(parse_divisor(doc), r))}}};
}

Result cmd_derham(const Node& doc, const Options&) {
  expect_kind(doc, {"divisor"});
  return {{{"derham", report_json(derham_cohomology(parse_divisor(doc)))}}};
}

Result cmd_hodge(const Node& doc, const Options&) {
  expect_kind(doc, {"divisor"});
  const HodgeReport h = hodge_decomposition(parse_divisor(doc));
  json table = json::array();
  for (std::size_t r = 0; r < h.hodge.size(); ++r) table.push_back({{"r", r}, {"h_q", h.hodge[r]}});
  return {{{"hodge_numbers", table},
           {"antidiagonal_sums", h.antidiagonal_sums},
           {"derham_totals", h.derham_totals},
           {"stratum_mismatches", h.stratum_mismatches},
           {"verdict", h.mismatch ? "HodgeMismatch" : "consistent"}},
          !h.mismatch};
}

Result cmd_euler(const Node& doc, const Options&) {
  expect_kind(doc, {"divisor", "curve"});
  if (kind_of(doc) == "curve") {
    const CurveSpec c = parse_curve(doc);
    const CurveEuler e = snc_curve_euler(c.genera, c.edges);
    return {{{"genera", c.genera},
             {"edges", c.edges},
             {"euler_characteristic", e.value},
             {"via_dual_complex", e.via_dual_complex},
             {"via_strata", e.via_strata}}};
  }
  const SncDivisor d = parse_divisor(doc);
  const long chi = sheaf_euler_characteristic(d);
  const long assembled = alternating_sum(structure_sheaf_cohomology(d).totals);
  return {{{"sheaf_euler_characteristic", chi},
           {"alternating_sum_of_totals", assembled},
           {"dual_complex_euler_characteristic", euler_characteristic(dual_complex(d))},
           {"verdict", chi == assembled ? "consistent" : "inconsistent"}},
          chi == assembled};
}

Result cmd_toric(const Node& doc, const Options&) {
  expect_kind(doc, {"fan"});
  const Fan f = parse_fan(doc);
  validate_fan(f);
  const auto selected = parse_selected_rays(doc, f);
  std::string completeness;
  try {
    completeness = to_string(completeness_certificate(f));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NecessaryConditionFailed) throw;
    completeness = std::string("not complete: ") + e.what();
  }
  const SncDivisor d = boundary_divisor(f, selected);
  const CombinatorialCheck check = combinatorial_cohomology_check(d);
  const SimplicialComplex k = dual_complex(d);
  json facets = json::array();
  for (const auto& s : k.facets()) facets.push_back(tuple_json(s));
  std::vector<std::string> names;
  for (const auto& c : d.components) names.push_back(c.name);
  return {{{"smooth", true},
           {"completeness", completeness},
           {"components", names},
           {"dual_complex_facets", facets},
           {"betti", check.betti},
           {"structure_sheaf", report_json(check.structure)},
           {"sheaf_euler_characteristic", sheaf_euler_characteristic(d)},
           {"dual_complex_euler_characteristic", euler_characteristic(k)},
           {"verdict", check.agrees ? "H^i(D, O_D) = H^i(Delta, Q)" : "mismatch"}},
          check.agrees};
}

Result cmd_verify_lemma31(const Node& doc, const Options& options) {
  expect_kind(doc, {"localmodel"});
  LocalModelSpec spec = parse_localmodel(doc);
  if (options.degree_bound) spec.degree_bound = options.degree_bound;
  const Lemma31Verdict v = verify_lemma31(spec);
  json rows = json::array();
  for (std::size_t k = 0; k < v.homology.size(); ++k) rows.push_back({{"degree", k}, {"homology", v.homology[k]}});
  const std::string summary = (v.exact ? "exact in all degrees <= " : "not exact within degrees <= ") +
                              std::to_string(v.degree_bound);
  return {{{"n", spec.n},
           {"components", spec.components},
           {"multiplicities", spec.multiplicities},
           {"degree_bound", v.degree_bound},
           {"homology", rows},
           {"verdict", summary}},
          v.exact};
}

Result cmd_bicomplex_pages(const Node& doc, const Options& options) {
  const Bicomplex b = bicomplex_from(doc, options);
  if (options.max_page > 2) throw SchemaError("", "--max-page must be 0, 1 or 2");
  json pages = json::object();
  for (std::size_t r = 0; r <= options.max_page; ++r) {
    const auto idx = static_cast<PageIndex>(r);
    pages[page_name(idx)] = page_json(page(b, idx));
  }
  const SpectralPage inf = page_infinity(b);
  pages["Einf"] = page_json(inf);
  const auto h = total_cohomology(b);
  bool converges = true;
  std::vector<std::size_t> sums;
  for (std::size_t m = 0; m < h.size(); ++m) {
    sums.push_back(inf.antidiagonal(m));
    if (sums.back() != h[m]) converges = false;
  }
  return {{{"width", b.width()},
           {"height", b.height()},
           {"pages", pages},
           {"total_cohomology", h},
           {"einf_antidiagonal_sums", sums},
           {"verdict", converges ? "Einf sums match total cohomology" : "Einf sums disagree with total cohomology"}},
          converges};
}

Result cmd_degeneration(const Node& doc, const Options& options) {
  const Bicomplex b = bicomplex_from(doc, options);
  const SpectralPage e2 = page(b, PageIndex::Two);
  const SpectralPage inf = page_infinity(b);
  json differing = json::array();
  for (std::size_t p = 0; p <= b.width(); ++p)
    for (std::size_t q = 0; q <= b.height(); ++q)
      if (e2.at(p, q) != inf.at(p, q))
        differing.push_back({{"p", p}, {"q", q}, {"E2", e2.at(p, q)}, {"Einf", inf.at(p, q)}});
  const bool degenerates = differing.empty();
  return {{{"degenerates_at_two", degenerates},
           {"E2", page_json(e2)},
           {"Einf", page_json(inf)},
           {"differing_cells", differing},
           {"verdict", degenerates ? "E2 = Einf" : "degeneration fails"}},
          degenerates};
}

Result cmd_rational_check(const Node& doc, const Options&) {
  expect_kind(doc, {"divisor"});
  const SncDivisor d = parse_divisor(doc);
  const Presheaf scheme = parse_presheaf_on(dual_complex(d), doc.at("scheme_h0"));
  const Section unit = parse_section(doc.at("unit"));
  const bool claimed = doc.has("claimed_higher_direct_images_zero") &&
                       doc.at("claimed_higher_direct_images_zero").as_bool();
  const RationalSingularityReport r = rational_singularity_check(d, claimed, scheme, unit);
  const bool ok = r.additivity_holds && r.inclusion_holds && !r.obstructed();
  std::string verdict = "no obstruction";
  if (!r.additivity_holds || !r.inclusion_holds)
    verdict = "inclusion of H(Delta, C) fails";
  else if (r.obstructed())
    verdict = "Betti obstruction: claimed rationality contradicts nonzero higher Betti numbers";
  return {{{"multiplicities", r.multiplicities},
           {"betti", r.betti},
           {"scheme_h0_cohomology", r.scheme_h0},
           {"ideal_part_cohomology", r.ideal_part},
           {"additivity_holds", r.additivity_holds},
           {"inclusion_holds", r.inclusion_holds},
           {"claimed_higher_direct_images_zero", claimed},
           {"obstruction_degrees", r.obstruction_degrees},
           {"conditional", claimed},
           {"conditional_on", r.conditional_on},
           {"verdict", verdict}},
          ok};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"dual-complex", cmd_dual_complex},
      {"betti", cmd_betti},
      {"integral", cmd_integral},
      {"presheaf-cohomology", cmd_presheaf_cohomology},
      {"snc-cohomology", cmd_snc_cohomology},
      {"forms", cmd_forms},
      {"derham", cmd_derham},
      {"hodge", cmd_hodge},
      {"euler", cmd_euler},
      {"toric", cmd_toric},
      {"verify-lemma31", cmd_verify_lemma31},
      {"bicomplex-pages", cmd_bicomplex_pages},
      {"degeneration", cmd_degeneration},
      {"rational-check", cmd_rational_check},
  };
  return table;
}

// Text rendering.

bool is_scalar(const json& v) { return !v.is_array() && !v.is_object(); }

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_flat_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return is_scalar(x); });
}

std::string inline_text(const json& v) {
  if (is_scalar(v)) return scalar_text(v);
  std::string out = "(";
  bool first = true;
  for (const auto& x : v) {
    out += (first ? "" : ", ") + inline_text(x);
    first = false;
  }
  return out + ")";
}

bool is_record_list(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& x : v) {
    if (!x.is_object()) return false;
    for (const auto& [k, field] : x.items())
      if (!is_scalar(field) && !is_flat_array(field)) return false;
  }
  return true;
}

void render(const json& v, const std::string& indent, std::ostringstream& out) {
  std::size_t width = 0;
  for (const auto& [key, value] : v.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : v.items()) {
    const std::string label = indent + key + std::string(width - key.size(), ' ');
    if (is_scalar(value) || (value.is_array() && std::all_of(value.begin(), value.end(), [](const json& x) {
                               return is_scalar(x) || is_flat_array(x);
                             }))) {
      out << label << "  " << inline_text(value) << '\n';
    } else if (is_record_list(value)) {
      out << indent << key << ":\n";
      std::vector<std::string> columns;
      for (const auto& [k, f] : value.front().items()) columns.push_back(k);
      std::vector<std::size_t> widths;
      for (const auto& c : columns) {
        std::size_t w = c.size();
        for (const auto& row : value) w = std::max(w, row.contains(c) ? inline_text(row[c]).size() : 0);
        widths.push_back(w);
      }
      out << indent << "  ";
      for (std::size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << std::string(widths[i] - columns[i].size() + 2, ' ');
      out << '\n';
      for (const auto& row : value) {
        out << indent << "  ";
        for (std::size_t i = 0; i < columns.size(); ++i) {
          const std::string cell = row.contains(columns[i]) ? inline_text(row[columns[i]]) : "";
          out << cell << std::string(widths[i] - cell.size() + 2, ' ');
        }
        out << '\n';
      }
    } else if (value.is_object()) {
      out << indent << key << ":\n";
      render(value, indent + "  ", out);
    } else {
      out << label << "  " << inline_text(value) << '\n';
    }
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Outcome run(const std::string& command, const json& document, const std::string& input_name, const Options& options) {
  auto it = handlers().find(command);
  if (it == handlers().end()) throw SchemaError("", "unknown command " + command);
  if (options.field != "rational") throw SchemaError("", "only --field rational is supported");
  Result result = it->second(Node(document, ""), options);
  Outcome out;
  out.exit_code = result.verified ? kExitOk : kExitVerificationFailed;
  out.report = {{"schema", "snccoh.report.v1"},
                {"command", command},
                {"input", input_name},
                {"status", result.verified ? "ok" : "verification_failed"},
                {"result", std::move(result.body)}};
  return out;
}

std::string render_text(const json& report) {
  std::ostringstream out;
  out << report.at("command").get<std::string>() << " " << report.at("input").get<std::string>() << ": "
      << report.at("status").get<std::string>() << '\n';
  render(report.at("result"), "  ", out);
  return out.str();
}

}  // namespace snccoh::cli
