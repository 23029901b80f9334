#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "snccoh/exactla.hpp"

namespace snccoh {

using Vertex = std::uint32_t;

/// Strictly ascending vertex tuple. The ascending order is the orientation:
/// dropping the k-th vertex is the face map with sign (-1)^k.
class Simplex {
 public:
  Simplex() = default;
  /// Throws BadTuple unless `vertices` is nonempty and strictly ascending.
  explicit Simplex(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  /// Simplex with the k-th vertex removed. Requires size() >= 2.
  Simplex facet(std::size_t k) const;
  bool contains(const Simplex& face) const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Finite abstract simplicial complex, closed under taking nonempty faces.
/// Simplices of each dimension are kept in lexicographic order, which fixes
/// the block order of every cochain space.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of `facets`. Throws BadTuple on unsorted tuples or vertex
  /// indices >= vertex_count.
  static SimplicialComplex from_facets(std::size_t vertex_count,
                                       const std::vector<std::vector<Vertex>>& facets);

  /// Full simplex on n vertices and its boundary (n >= 1).
  static SimplicialComplex full_simplex(std::size_t n);
  static SimplicialComplex simplex_boundary(std::size_t n);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t simplex_count() const noexcept { return total_; }
  bool empty() const noexcept { return total_ == 0; }

  /// Lexicographically ordered p-simplices; empty span when p is out of range.
  std::span<const Simplex> simplices(int p) const;
  /// Position of `s` inside simplices(s.dimension()), if present.
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Inclusion-maximal simplices, ordered by dimension then lexicographically.
  std::vector<Simplex> facets() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.by_dim_ == b.by_dim_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::size_t total_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
};

long euler_characteristic(const SimplicialComplex& k);

/// Rational Betti numbers b_0..b_dim, taken as the Cech cohomology of the
/// constant rank-one presheaf. Empty complex gives an empty list.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& k);

struct IntegralDegree {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  friend bool operator==(const IntegralDegree&, const IntegralDegree&) = default;
};

/// H^p(K; Z) for p = 0..dim, from Smith normal forms of the integral
/// coboundary matrices.
std::vector<IntegralDegree> integral_cohomology(const SimplicialComplex& k);

/// Integral coboundary delta^p : C^p -> C^{p+1} of the constant presheaf Z.
IntegerMatrix integral_coboundary(const SimplicialComplex& k, int p);

}  // namespace snccoh
