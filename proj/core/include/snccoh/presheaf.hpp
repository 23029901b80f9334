#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "snccoh/exactla.hpp"
#include "snccoh/simplicial.hpp"

namespace snccoh {

/// Finite cochain complex. space_dims[i] is the dimension in degree
/// `start + i`; differentials[i] maps degree start+i to start+i+1.
struct CochainComplex {
  int start = 0;
  std::vector<std::size_t> space_dims;
  std::vector<RationalMatrix> differentials;

  /// Throws ShapeMismatch or CompositionNonzero if the chain is malformed.
  void validate() const;
};

/// Cohomology dimension in each degree of `c`, same indexing as space_dims.
std::vector<std::size_t> cohomology(const CochainComplex& c);

/// Covariant presheaf of finite-dimensional Q-vector spaces on a simplicial
/// complex. Only codimension-one restrictions are stored; longer ones are
/// composites, and construction verifies that both routes around every
/// codimension-two square agree.
class Presheaf {
 public:
  static Presheaf constant(const SimplicialComplex& base, std::size_t d);
  static Presheaf zero(const SimplicialComplex& base) { return constant(base, 0); }

  const SimplicialComplex& base() const noexcept { return base_; }
  std::size_t dim(const Simplex& s) const;
  std::size_t dim(int p, std::size_t index) const { return dims_[static_cast<std::size_t>(p)][index]; }
  /// Restriction V(tau.facet(k)) -> V(tau), shape dim(tau) x dim(facet).
  const RationalMatrix& restriction(const Simplex& tau, std::size_t k) const;
  const RationalMatrix& restriction(int p, std::size_t tau_index, std::size_t k) const {
    return restrictions_[static_cast<std::size_t>(p)][tau_index][k];
  }
  /// Restriction along an arbitrary codimension-one inclusion face < tau.
  const RationalMatrix& restriction(const Simplex& face, const Simplex& tau) const;

  bool is_zero() const;

 private:
  friend class PresheafBuilder;
  explicit Presheaf(SimplicialComplex base);

  SimplicialComplex base_;
  std::vector<std::vector<std::size_t>> dims_;                         // [p][index]
  std::vector<std::vector<std::vector<RationalMatrix>>> restrictions_;  // [p][tau index][k]
};

/// Assembles a presheaf simplex by simplex. A restriction may be omitted only
/// when its source or target space is zero; build() refuses to guess any other
/// missing map (UnderdeterminedRestrictions) and rejects non-commuting squares
/// (FunctorialityViolation).
class PresheafBuilder {
 public:
  explicit PresheafBuilder(SimplicialComplex base);

  PresheafBuilder& set_dim(const Simplex& s, std::size_t d);
  PresheafBuilder& set_restriction(const Simplex& face, const Simplex& tau, RationalMatrix m);

  Presheaf build() const;

 private:
  SimplicialComplex base_;
  std::map<Simplex, std::size_t> dims_;
  std::map<std::pair<Simplex, Simplex>, RationalMatrix> maps_;
};

/// C^p = sum over p-simplices (lexicographic) of V(sigma), with block
/// (tau, tau minus its k-th vertex) equal to (-1)^k times the restriction.
CochainComplex cech_complex(const Presheaf& v);

/// H^p(base, V) for p = 0..dim(base).
std::vector<std::size_t> presheaf_cohomology(const Presheaf& v);

/// Dimensionwise sum with block-diagonal restrictions. Throws BaseMismatch.
Presheaf direct_sum(const Presheaf& v, const Presheaf& w);

/// One vector per simplex.
using Section = std::map<Simplex, std::vector<Rational>>;

struct ConstantSplit {
  std::size_t constant_dim = 1;
  /// V / <unit>, realized as the kernel of `retraction`.
  Presheaf complement;
  /// Compatible functionals phi_sigma with phi(unit) = 1 and
  /// phi_tau * R = phi_sigma; they split V = Q.unit (+) complement.
  Section retraction;
};

/// Splits the rank-one constant subpresheaf spanned by `unit` off V.
/// Throws ZeroSection if some unit vector is zero or missing,
/// IncompatibleSection if the units do not restrict to each other, and
/// NotSplit if no compatible retraction exists (then the cohomology of V is
/// not the sum of the two pieces).
ConstantSplit split_constant(const Presheaf& v, const Section& unit);

}  // namespace snccoh
