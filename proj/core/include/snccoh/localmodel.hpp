#pragma once

// Coordinate hyperplanes D_i = {x_{c_i} = 0} in affine n-space with
// multiplicities r_i. Every ring in the augmented Cech sequence
//   0 -> O_{D_(r)} -> (+) O_{D_i} -> (+) O_{D_ij} -> ...
// is a monomial quotient and every map sends a surviving monomial to its
// class, so each total degree k gives a finite complex of its own.

#include <cstddef>
#include <optional>
#include <vector>

#include "snccoh/presheaf.hpp"
#include "snccoh/simplicial.hpp"

namespace snccoh {

struct LocalModelSpec {
  std::size_t n = 0;
  std::vector<std::size_t> components;  // coordinate indices in 1..n, distinct
  std::vector<unsigned> multiplicities;  // one per component, >= 1
  std::optional<std::size_t> degree_bound;  // defaults to 2 * sum r_i

  std::size_t bound() const;
  /// Throws InvalidSpec.
  void validate() const;
};

using Exponent = std::vector<unsigned>;

struct MonomialQuotientBasis {
  std::size_t degree = 0;
  std::vector<Exponent> monomials;  // lexicographic

  std::optional<std::size_t> index_of(const Exponent& a) const;
};

/// Survival in O_{D_(r)} (tuple == nullopt) or in O of the scheme-theoretic
/// intersection of the components in `tuple` (indices into spec.components).
bool survives(const LocalModelSpec& spec, const std::optional<Simplex>& tuple, const Exponent& a);

MonomialQuotientBasis quotient_basis(const LocalModelSpec& spec, const std::optional<Simplex>& tuple, std::size_t k);

/// Augmented complex in degree k, starting at -1 with the whole divisor;
/// position p >= 0 sums over (p+1)-tuples in lexicographic order.
CochainComplex sheaf_cech_complex(const LocalModelSpec& spec, std::size_t k);

struct Lemma31Verdict {
  bool exact = false;
  std::size_t degree_bound = 0;
  /// homology[k][j]: cohomology at position j - 1 of the degree-k complex.
  std::vector<std::vector<std::size_t>> homology;
};

Lemma31Verdict verify_lemma31(const LocalModelSpec& spec);

}  // namespace snccoh
