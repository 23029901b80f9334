#include "snccoh/simplicial.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "snccoh/presheaf.hpp"

namespace snccoh {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorKind::BadTuple, "empty simplex");
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i - 1] >= vertices_[i]) throw Error(ErrorKind::BadTuple, "vertex tuple not strictly ascending");
}

Simplex Simplex::facet(std::size_t k) const {
  std::vector<Vertex> v;
  v.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (i != k) v.push_back(vertices_[i]);
  return Simplex(std::move(v));
}

bool Simplex::contains(const Simplex& face) const {
  return std::includes(vertices_.begin(), vertices_.end(), face.vertices_.begin(), face.vertices_.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 const std::vector<std::vector<Vertex>>& facets) {
  std::set<Simplex> all;
  for (const auto& tuple : facets) {
    Simplex top(tuple);
    for (Vertex v : top.vertices())
      if (v >= vertex_count)
        throw Error(ErrorKind::BadTuple, "vertex " + std::to_string(v) + " >= vertex_count " +
                                             std::to_string(vertex_count));
    const std::size_t n = top.size();
    if (n > 30) throw Error(ErrorKind::BadTuple, "simplex too large to close under faces");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) face.push_back(top[i]);
      all.emplace(std::move(face));
    }
  }

  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  for (const auto& s : all) {
    const auto p = static_cast<std::size_t>(s.dimension());
    if (k.by_dim_.size() <= p) k.by_dim_.resize(p + 1);
    k.by_dim_[p].push_back(s);  // std::set order is lexicographic
  }
  for (const auto& layer : k.by_dim_)
    for (std::size_t i = 0; i < layer.size(); ++i) k.index_.emplace(layer[i], i);
  k.total_ = all.size();
  return k;
}

SimplicialComplex SimplicialComplex::full_simplex(std::size_t n) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  return from_facets(n, n == 0 ? std::vector<std::vector<Vertex>>{} : std::vector<std::vector<Vertex>>{all});
}

SimplicialComplex SimplicialComplex::simplex_boundary(std::size_t n) {
  std::vector<std::vector<Vertex>> facets;
  if (n >= 2) {
    for (std::size_t skip = 0; skip < n; ++skip) {
      std::vector<Vertex> f;
      for (std::size_t i = 0; i < n; ++i)
        if (i != skip) f.push_back(static_cast<Vertex>(i));
      facets.push_back(std::move(f));
    }
  }
  return from_facets(n, facets);
}

std::span<const Simplex> SimplicialComplex::simplices(int p) const {
  if (p < 0 || p >= static_cast<int>(by_dim_.size())) return {};
  return by_dim_[static_cast<std::size_t>(p)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int p = 0; p <= dimension(); ++p)
    for (const auto& s : simplices(p)) {
      bool maximal = true;
      for (const auto& t : simplices(p + 1))
        if (t.contains(s)) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(s);
    }
  return out;
}

long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  for (int p = 0; p <= k.dimension(); ++p) {
    const long count = static_cast<long>(k.simplices(p).size());
    chi += (p % 2 == 0) ? count : -count;
  }
  return chi;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k) {
  return presheaf_cohomology(Presheaf::constant(k, 1));
}

IntegerMatrix integral_coboundary(const SimplicialComplex& k, int p) {
  const auto source = k.simplices(p);
  const auto target = k.simplices(p + 1);
  IntegerMatrix d(target.size(), source.size());
  for (std::size_t row = 0; row < target.size(); ++row) {
    const Simplex& tau = target[row];
    for (std::size_t j = 0; j < tau.size(); ++j) {
      const auto col = k.index_of(tau.facet(j));
      d(row, *col) = (j % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

std::vector<IntegralDegree> integral_cohomology(const SimplicialComplex& k) {
  const int top = k.dimension();
  std::vector<IntegralDegree> out;
  if (top < 0) return out;

  // snf[p] = invariant factors of delta^p, p = -1..top (delta^{-1} = delta^{top} = 0).
  std::vector<std::vector<Integer>> snf(static_cast<std::size_t>(top) + 2);
  for (int p = 0; p < top; ++p) snf[static_cast<std::size_t>(p) + 1] = smith_normal_form(integral_coboundary(k, p));

  for (int p = 0; p <= top; ++p) {
    const auto& incoming = snf[static_cast<std::size_t>(p)];
    const auto& outgoing = snf[static_cast<std::size_t>(p) + 1];
    IntegralDegree deg;
    deg.free_rank = k.simplices(p).size() - outgoing.size() - incoming.size();
    for (const auto& f : incoming)
      if (f > 1) deg.torsion.push_back(f);
    out.push_back(std::move(deg));
  }
  return out;
}

}  // namespace snccoh
