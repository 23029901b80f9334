#include "snccoh/snc.hpp"

#include <algorithm>

namespace snccoh {
namespace {

std::string describe(const Simplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

std::string presheaf_label(Flavor flavor, std::size_t r, std::size_t q) {
  if (flavor == Flavor::DeRham) return "H^" + std::to_string(q) + "_dR(C)";
  if (r == 0) return "H^" + std::to_string(q) + "(O)";
  return "H^" + std::to_string(q) + "(Omega^" + std::to_string(r) + ")";
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::size_t max_stratum_dimension(const SncDivisor& d, const SimplicialComplex& delta) {
  std::size_t top = 0;
  for (int p = 0; p <= delta.dimension(); ++p)
    for (const Simplex& s : delta.simplices(p)) top = std::max(top, d.stratum_dimension(s));
  return top;
}

CohomologyReport assemble(const SncDivisor& d, std::size_t r, Flavor flavor, std::string label) {
  CohomologyReport report;
  report.label = std::move(label);
  const SimplicialComplex delta = dual_complex(d);
  if (delta.empty()) return report;

  const std::size_t dim_d = d.dimension();
  const std::size_t top_q = flavor == Flavor::DeRham ? 2 * max_stratum_dimension(d, delta)
                                                     : max_stratum_dimension(d, delta);
  report.totals.assign(flavor == Flavor::DeRham ? 2 * dim_d + 1 : dim_d + 2, 0);

  for (std::size_t q = 0; q <= top_q; ++q) {
    const auto h = presheaf_cohomology(build_presheaf(d, r, q, flavor));
    for (std::size_t p = 0; p < h.size(); ++p) {
      report.summands.push_back({p, q, h[p], presheaf_label(flavor, r, q)});
      if (h[p] == 0) continue;
      if (p + q >= report.totals.size()) report.totals.resize(p + q + 1, 0);
      report.totals[p + q] += h[p];
    }
  }
  return report;
}

}  // namespace

std::string to_string(Flavor flavor) { return flavor == Flavor::DeRham ? "derham" : "sheaf"; }

std::size_t SncDivisor::dimension() const {
  std::size_t top = 0;
  for (const auto& c : components) top = std::max(top, c.dim);
  return top;
}

std::size_t SncDivisor::ambient_dimension() const { return ambient_dim.value_or(dimension() + 1); }

std::size_t SncDivisor::stratum_dimension(const Simplex& s) const {
  long total = 0;
  for (Vertex v : s.vertices()) {
    if (v >= components.size()) throw Error(ErrorKind::BadTuple, "component index out of range in " + describe(s));
    total += static_cast<long>(components[v].dim);
  }
  total -= static_cast<long>(ambient_dimension()) * s.dimension();
  if (total < 0) throw Error(ErrorKind::InvalidSpec, "stratum " + describe(s) + " has negative expected dimension");
  return static_cast<std::size_t>(total);
}

void SncDivisor::set_table(const Simplex& s, Flavor flavor, std::size_t r, std::size_t q, TableEntry entry) {
  tables[TableKey{s, flavor, flavor == Flavor::DeRham ? 0 : r, q}] = std::move(entry);
}

TableEntry SncDivisor::table(const Simplex& s, Flavor flavor, std::size_t r, std::size_t q) const {
  if (flavor == Flavor::DeRham) r = 0;
  auto it = tables.find(TableKey{s, flavor, r, q});
  const bool h0 = q == 0 && r == 0;
  if (it != tables.end()) {
    if (h0 && it->second.dim != 1)
      throw Error(ErrorKind::InvalidSpec, "stratum " + describe(s) + " must be connected: h^0 = 1 required");
    return it->second;
  }
  const std::size_t sd = stratum_dimension(s);
  const bool vanishes = flavor == Flavor::DeRham ? q > 2 * sd : (q > sd || r > sd);
  if (vanishes) return TableEntry{0, {RestrictionData::Kind::Zero, {}}};
  if (h0) return TableEntry{1, {RestrictionData::Kind::Constant, {}}};
  throw Error(ErrorKind::MissingTable, "no " + to_string(flavor) + " table for " + describe(s) + " at r=" +
                                           std::to_string(r) + ", q=" + std::to_string(q));
}

SimplicialComplex dual_complex(const SncDivisor& d) {
  if (!d.irreducible)
    throw Error(ErrorKind::NotSimplicial, "intersections not asserted irreducible; the dual complex is not simplicial");
  if (!d.multiplicities.empty()) {
    if (d.multiplicities.size() != d.components.size())
      throw Error(ErrorKind::InvalidSpec, "one multiplicity per component required");
    for (unsigned m : d.multiplicities)
      if (m == 0) throw Error(ErrorKind::InvalidSpec, "multiplicities must be positive");
  }
  std::vector<std::vector<Vertex>> facets;
  for (std::size_t i = 0; i < d.components.size(); ++i) facets.push_back({static_cast<Vertex>(i)});
  for (const Simplex& s : d.strata) {
    for (Vertex v : s.vertices())
      if (v >= d.components.size()) throw Error(ErrorKind::BadTuple, "stratum " + describe(s) + " names a missing component");
    for (std::size_t k = 0; s.size() > 1 && k < s.size(); ++k)
      if (!d.strata.contains(s.facet(k)) && s.facet(k).size() > 1)
        throw Error(ErrorKind::NotClosed, "stratum " + describe(s) + " present but its face " +
                                              describe(s.facet(k)) + " is absent");
    facets.emplace_back(s.vertices().begin(), s.vertices().end());
  }
  return SimplicialComplex::from_facets(d.components.size(), facets);
}

Presheaf build_presheaf(const SncDivisor& d, std::size_t r, std::size_t q, Flavor flavor) {
  const SimplicialComplex delta = dual_complex(d);
  PresheafBuilder builder(delta);
  std::map<Simplex, TableEntry> entries;
  for (int p = 0; p <= delta.dimension(); ++p)
    for (const Simplex& s : delta.simplices(p)) {
      entries.emplace(s, d.table(s, flavor, r, q));
      builder.set_dim(s, entries.at(s).dim);
    }

  for (int p = 1; p <= delta.dimension(); ++p)
    for (const Simplex& tau : delta.simplices(p))
      for (std::size_t k = 0; k < tau.size(); ++k) {
        const Simplex face = tau.facet(k);
        const TableEntry& src = entries.at(face);
        const std::size_t rows = entries.at(tau).dim;
        const std::size_t cols = src.dim;
        if (rows == 0 || cols == 0) {
          builder.set_restriction(face, tau, RationalMatrix(rows, cols));
          continue;
        }
        switch (src.restriction.kind) {
          case RestrictionData::Kind::Zero:
            builder.set_restriction(face, tau, RationalMatrix(rows, cols));
            break;
          case RestrictionData::Kind::Constant:
            if (rows != cols)
              throw Error(ErrorKind::ShapeMismatch, "constant restriction " + describe(face) + " -> " +
                                                        describe(tau) + " between spaces of different dimension");
            builder.set_restriction(face, tau, RationalMatrix::identity(rows));
            break;
          case RestrictionData::Kind::Explicit: {
            auto it = src.restriction.maps.find(tau);
            if (it == src.restriction.maps.end())
              throw Error(ErrorKind::UnderdeterminedRestrictions,
                          "no matrix for " + describe(face) + " -> " + describe(tau) + " in " +
                              presheaf_label(flavor, r, q));
            builder.set_restriction(face, tau, it->second);
            break;
          }
          case RestrictionData::Kind::Unspecified:
            throw Error(ErrorKind::UnderdeterminedRestrictions,
                        presheaf_label(flavor, r, q) + " on " + describe(face) +
                            " has dimension data only; restriction maps cannot be derived");
        }
      }
  return builder.build();
}

CohomologyReport structure_sheaf_cohomology(const SncDivisor& d) {
  return assemble(d, 0, Flavor::Sheaf, "H^i(D, O_D)");
}

CohomologyReport reduced_forms_cohomology(const SncDivisor& d, std::size_t r) {
  return assemble(d, r, Flavor::Sheaf, "H^i(D, reduced Omega^" + std::to_string(r) + ")");
}

CohomologyReport derham_cohomology(const SncDivisor& d) { return assemble(d, 0, Flavor::DeRham, "H^i_dR(D, C)"); }

HodgeReport hodge_decomposition(const SncDivisor& d) {
  HodgeReport report;
  const SimplicialComplex delta = dual_complex(d);
  if (delta.empty()) return report;

  const std::size_t n = d.dimension();
  report.hodge.assign(n + 1, std::vector<std::size_t>(n + 1, 0));
  report.antidiagonal_sums.assign(2 * n + 1, 0);
  for (std::size_t r = 0; r <= n; ++r) {
    const auto forms = reduced_forms_cohomology(d, r);
    for (std::size_t q = 0; q < forms.totals.size(); ++q) {
      if (forms.totals[q] == 0) continue;
      if (q > n) {
        report.mismatch = true;
        report.stratum_mismatches.push_back("h^" + std::to_string(q) + "(Omega^" + std::to_string(r) +
                                            ") nonzero above dim D");
        continue;
      }
      report.hodge[r][q] = forms.totals[q];
      report.antidiagonal_sums[r + q] += forms.totals[q];
    }
  }
  report.derham_totals = derham_cohomology(d).totals;

  for (int p = 0; p <= delta.dimension(); ++p)
    for (const Simplex& s : delta.simplices(p)) {
      const std::size_t sd = d.stratum_dimension(s);
      for (std::size_t k = 0; k <= 2 * sd; ++k) {
        std::size_t forms = 0;
        for (std::size_t r = 0; r <= k; ++r) forms += d.table(s, Flavor::Sheaf, r, k - r).dim;
        const std::size_t dr = d.table(s, Flavor::DeRham, 0, k).dim;
        if (forms != dr)
          report.stratum_mismatches.push_back("stratum " + describe(s) + ": h^" + std::to_string(k) + "_dR = " +
                                              std::to_string(dr) + " but Hodge numbers sum to " +
                                              std::to_string(forms));
      }
    }
  if (!report.stratum_mismatches.empty()) report.mismatch = true;
  if (trimmed(report.antidiagonal_sums) != trimmed(report.derham_totals)) report.mismatch = true;
  return report;
}

long sheaf_euler_characteristic(const SncDivisor& d) {
  const SimplicialComplex delta = dual_complex(d);
  long chi = 0;
  for (int p = 0; p <= delta.dimension(); ++p)
    for (const Simplex& s : delta.simplices(p)) {
      long stratum_chi = 0;
      for (std::size_t q = 0; q <= d.stratum_dimension(s); ++q) {
        const long h = static_cast<long>(d.table(s, Flavor::Sheaf, 0, q).dim);
        stratum_chi += q % 2 == 0 ? h : -h;
      }
      chi += p % 2 == 0 ? stratum_chi : -stratum_chi;
    }
  return chi;
}

CurveEuler snc_curve_euler(const std::vector<std::size_t>& genera, std::size_t edges) {
  const long n = static_cast<long>(genera.size());
  const long e = static_cast<long>(edges);
  long genus_sum = 0;
  long strata = 0;
  for (auto g : genera) {
    genus_sum += static_cast<long>(g);
    strata += 1 - static_cast<long>(g);
  }
  strata -= e;  // chi(O_pt) = 1 per edge
  CurveEuler out{n - e - genus_sum, (n - e) - genus_sum, strata};
  if (out.value != out.via_dual_complex || out.value != out.via_strata)
    throw Error(ErrorKind::InvalidSpec, "curve Euler characteristic routes disagree");
  return out;
}

CombinatorialCheck combinatorial_cohomology_check(const SncDivisor& d) {
  const SimplicialComplex delta = dual_complex(d);
  for (int p = 0; p <= delta.dimension(); ++p)
    for (const Simplex& s : delta.simplices(p))
      for (std::size_t q = 1; q <= d.stratum_dimension(s); ++q)
        if (d.table(s, Flavor::Sheaf, 0, q).dim != 0)
          throw Error(ErrorKind::HypothesisViolated,
                      "stratum " + describe(s) + " has h^" + std::to_string(q) + "(O) != 0");
  CombinatorialCheck out;
  out.betti = betti_numbers(delta);
  out.structure = structure_sheaf_cohomology(d);
  out.agrees = trimmed(out.betti) == trimmed(out.structure.totals);
  return out;
}

RationalSingularityReport rational_singularity_check(const SncDivisor& d, bool claimed_higher_direct_images_zero,
                                                     const Presheaf& scheme_h0_presheaf, const Section& unit) {
  const SimplicialComplex delta = dual_complex(d);
  if (!(scheme_h0_presheaf.base() == delta))
    throw Error(ErrorKind::BaseMismatch, "scheme H^0 presheaf does not live on the dual complex");

  const ConstantSplit split = split_constant(scheme_h0_presheaf, unit);

  RationalSingularityReport report;
  report.multiplicities = d.multiplicities.empty() ? std::vector<unsigned>(d.components.size(), 1) : d.multiplicities;
  report.betti = betti_numbers(delta);
  report.scheme_h0 = presheaf_cohomology(scheme_h0_presheaf);
  report.ideal_part = presheaf_cohomology(split.complement);
  report.claimed_higher_direct_images_zero = claimed_higher_direct_images_zero;
  report.conditional_on = "E2 degeneration of the Cech-Dolbeault spectral sequence for non-reduced divisors "
                          "with SNC support (unproven)";

  report.additivity_holds = report.scheme_h0.size() == report.betti.size();
  report.inclusion_holds = report.additivity_holds;
  for (std::size_t i = 0; i < report.betti.size() && report.scheme_h0.size() == report.betti.size(); ++i) {
    if (report.scheme_h0[i] != report.betti[i] + report.ideal_part[i]) report.additivity_holds = false;
    if (report.betti[i] > report.scheme_h0[i]) report.inclusion_holds = false;
  }
  if (claimed_higher_direct_images_zero)
    for (std::size_t i = 1; i < report.betti.size(); ++i)
      if (report.betti[i] > 0) report.obstruction_degrees.push_back(i);
  return report;
}

Bicomplex assembly_bicomplex(const SncDivisor& d, std::size_t r, Flavor flavor) {
  const SimplicialComplex delta = dual_complex(d);
  std::vector<CochainComplex> rows;
  if (delta.empty()) return bicomplex_from_rows(rows);
  const std::size_t top_q = flavor == Flavor::DeRham ? 2 * max_stratum_dimension(d, delta)
                                                     : max_stratum_dimension(d, delta);
  for (std::size_t q = 0; q <= top_q; ++q) rows.push_back(cech_complex(build_presheaf(d, r, q, flavor)));
  return bicomplex_from_rows(rows);
}

}  // namespace snccoh
