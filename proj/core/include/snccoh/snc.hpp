#pragma once

// SNC divisor data model and the assemblers that rebuild the cohomology of
// D from the dual complex plus per-stratum cohomology tables:
//
//   H^i(D, F) = (+)_{p+q=i} H^p(Delta(D), H^q(F restricted to strata)).
//
// Stratum cohomology is input data. Nothing here derives it from equations.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "snccoh/bicomplex.hpp"
#include "snccoh/exactla.hpp"
#include "snccoh/presheaf.hpp"
#include "snccoh/simplicial.hpp"

namespace snccoh {

/// Sheaf: H^q(D_sigma, Omega^r) (r = 0 is the structure sheaf).
/// DeRham: H^q_dR(D_sigma, C); the form degree is ignored and stored as 0.
enum class Flavor { Sheaf, DeRham };

/// How a table entry's space maps into the same (flavor, r, q) space of each
/// codimension-one coface stratum.
struct RestrictionData {
  enum class Kind { Unspecified, Zero, Constant, Explicit };
  Kind kind = Kind::Unspecified;
  std::map<Simplex, RationalMatrix> maps;  // keyed by coface, for Explicit
};

struct TableEntry {
  std::size_t dim = 0;
  RestrictionData restriction;
};

struct TableKey {
  Simplex stratum;
  Flavor flavor = Flavor::Sheaf;
  std::size_t r = 0;
  std::size_t q = 0;

  auto operator<=>(const TableKey&) const = default;
};

struct Component {
  std::string name;
  std::size_t dim = 0;
};

/// D_(r) = sum r_i D_i with SNC support.
///
/// Missing tables fall back as follows: entries with q (or r) above the
/// stratum dimension are zero, deRham entries with q above twice the stratum
/// dimension are zero, and H^0(O) and H^0_dR are the constant rank-one
/// presheaf. Anything else missing raises MissingTable.
struct SncDivisor {
  std::vector<Component> components;
  std::vector<unsigned> multiplicities;  // empty means all 1
  std::set<Simplex> strata;              // nonempty intersections; singletons implied
  std::map<TableKey, TableEntry> tables;
  bool irreducible = true;
  /// Ambient dimension n. Defaults to max component dimension + 1.
  std::optional<std::size_t> ambient_dim;

  std::size_t ambient_dimension() const;
  /// Max component dimension; 0 for the empty divisor.
  std::size_t dimension() const;
  /// Expected dimension sum(k_i) - n * p of the stratum on p+1 components.
  std::size_t stratum_dimension(const Simplex& s) const;

  /// Table lookup with the fallbacks described above.
  TableEntry table(const Simplex& s, Flavor flavor, std::size_t r, std::size_t q) const;

  void set_table(const Simplex& s, Flavor flavor, std::size_t r, std::size_t q, TableEntry entry);
};

/// Throws NotSimplicial when the irreducibility flag is unset, NotClosed when
/// the strata are not downward closed, BadTuple for out-of-range indices.
SimplicialComplex dual_complex(const SncDivisor& d);

Presheaf build_presheaf(const SncDivisor& d, std::size_t r, std::size_t q, Flavor flavor);

struct Summand {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t dim = 0;
  std::string source;  // which presheaf contributed, e.g. "H^1(O)"
};

struct CohomologyReport {
  std::string label;
  std::vector<std::size_t> totals;
  std::vector<Summand> summands;  // every (p, q) with its dimension, zeros included
};

/// Sheaf reports cover degrees 0..dim D + 1 and deRham reports 0..2 dim D,
/// extended if some summand lands further out.
CohomologyReport structure_sheaf_cohomology(const SncDivisor& d);
CohomologyReport reduced_forms_cohomology(const SncDivisor& d, std::size_t r);
CohomologyReport derham_cohomology(const SncDivisor& d);

struct HodgeReport {
  /// hodge[r][q] = h^q(D, reduced r-forms), r, q = 0..dim D.
  std::vector<std::vector<std::size_t>> hodge;
  std::vector<std::size_t> antidiagonal_sums;  // i = 0..2 dim D
  std::vector<std::size_t> derham_totals;
  /// Strata whose own tables violate h^k_dR = sum_{r+s=k} h^s(Omega^r).
  std::vector<std::string> stratum_mismatches;
  bool mismatch = false;  // HodgeMismatch: sums differ or a stratum is inconsistent
};

HodgeReport hodge_decomposition(const SncDivisor& d);

/// sum_p (-1)^p sum_{|sigma| = p+1} chi(O_sigma), from the r = 0 tables.
long sheaf_euler_characteristic(const SncDivisor& d);

struct CurveEuler {
  long value = 0;            // N - e - sum g
  long via_dual_complex = 0;  // chi(Delta) - sum g
  long via_strata = 0;        // sum (1 - g_i) - e * chi(O_pt)
};

/// Euler characteristic of O_C for an SNC curve with smooth components of the
/// given genera and `edges` nodes; the dual graph may have multiple edges.
/// Throws if the three routes disagree.
CurveEuler snc_curve_euler(const std::vector<std::size_t>& genera, std::size_t edges);

struct CombinatorialCheck {
  std::vector<std::size_t> betti;  // of the dual complex
  CohomologyReport structure;
  bool agrees = false;  // betti == structure totals up to trailing zeros
};

/// When every stratum has h^q(O) = 0 for q > 0, H^i(D, O_D) = H^i(Delta, Q).
/// Throws HypothesisViolated otherwise.
CombinatorialCheck combinatorial_cohomology_check(const SncDivisor& d);

struct RationalSingularityReport {
  std::vector<unsigned> multiplicities;
  std::vector<std::size_t> betti;                // H^i(Delta, C)
  std::vector<std::size_t> scheme_h0;            // H^i(Delta, H^0(O_(r)))
  std::vector<std::size_t> ideal_part;           // H^i(Delta, H^0(I^(r)))
  bool additivity_holds = false;                 // scheme_h0 = betti + ideal_part
  bool inclusion_holds = false;                  // betti_i <= scheme_h0_i for all i
  bool claimed_higher_direct_images_zero = false;
  std::vector<std::size_t> obstruction_degrees;  // i > 0 with betti_i > 0, when claimed
  /// The deduction "rational => higher Betti numbers vanish" assumes E_2
  /// degeneration for the non-reduced structure sheaf, which is unproven.
  std::string conditional_on;
  bool obstructed() const { return !obstruction_degrees.empty(); }
};

/// Splits the constant summand off the scheme-theoretic H^0 presheaf and
/// checks the inclusion H^i(Delta, C) -> H^i(Delta, H^0(O_(r))) dimensionwise.
RationalSingularityReport rational_singularity_check(const SncDivisor& d, bool claimed_higher_direct_images_zero,
                                                     const Presheaf& scheme_h0_presheaf, const Section& unit);

/// Rows q = 0..top are the Cech complexes of the (flavor, r, q) presheaves,
/// with zero vertical maps.
Bicomplex assembly_bicomplex(const SncDivisor& d, std::size_t r, Flavor flavor);

std::string to_string(Flavor flavor);

}  // namespace snccoh
