#include "snccoh/localmodel.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace snccoh {
namespace {

void compositions(std::size_t vars, std::size_t k, Exponent& current, std::vector<Exponent>& out) {
  if (current.size() + 1 == vars) {
    current.push_back(static_cast<unsigned>(k));
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (std::size_t first = k + 1; first-- > 0;) {
    current.push_back(static_cast<unsigned>(first));
    compositions(vars, k - first, current, out);
    current.pop_back();
  }
}

}  // namespace

std::size_t LocalModelSpec::bound() const {
  return degree_bound.value_or(2 * std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0}));
}

void LocalModelSpec::validate() const {
  if (components.size() > n) throw Error(ErrorKind::InvalidSpec, "more components than coordinates");
  if (multiplicities.size() != components.size())
    throw Error(ErrorKind::InvalidSpec, "one multiplicity per component required");
  std::set<std::size_t> seen;
  for (auto c : components)
    if (c < 1 || c > n || !seen.insert(c).second)
      throw Error(ErrorKind::InvalidSpec, "component indices must be distinct and within 1..n");
  for (auto r : multiplicities)
    if (r == 0) throw Error(ErrorKind::InvalidSpec, "multiplicities must be >= 1");
}

std::optional<std::size_t> MonomialQuotientBasis::index_of(const Exponent& a) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), a);
  if (it == monomials.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - monomials.begin());
}

bool survives(const LocalModelSpec& spec, const std::optional<Simplex>& tuple, const Exponent& a) {
  auto below = [&](std::size_t i) { return a[spec.components[i] - 1] < spec.multiplicities[i]; };
  if (!tuple) {
    for (std::size_t i = 0; i < spec.components.size(); ++i)
      if (below(i)) return true;
    return false;
  }
  for (Vertex i : tuple->vertices())
    if (!below(i)) return false;
  return true;
}

MonomialQuotientBasis quotient_basis(const LocalModelSpec& spec, const std::optional<Simplex>& tuple, std::size_t k) {
  spec.validate();
  MonomialQuotientBasis basis;
  basis.degree = k;
  if (spec.n == 0) {
    if (k == 0 && survives(spec, tuple, {})) basis.monomials.push_back({});
    return basis;
  }
  std::vector<Exponent> all;
  Exponent scratch;
  compositions(spec.n, k, scratch, all);
  for (auto& a : all)
    if (survives(spec, tuple, a)) basis.monomials.push_back(std::move(a));
  std::sort(basis.monomials.begin(), basis.monomials.end());
  return basis;
}

CochainComplex sheaf_cech_complex(const LocalModelSpec& spec, std::size_t k) {
  spec.validate();
  CochainComplex c;
  c.start = -1;
  const MonomialQuotientBasis whole = quotient_basis(spec, std::nullopt, k);
  c.space_dims.push_back(whole.monomials.size());
  if (spec.components.empty()) return c;

  const SimplicialComplex nerve = SimplicialComplex::full_simplex(spec.components.size());
  std::vector<std::vector<MonomialQuotientBasis>> bases(static_cast<std::size_t>(nerve.dimension() + 1));
  std::vector<std::vector<std::size_t>> offsets(bases.size());
  for (int p = 0; p <= nerve.dimension(); ++p) {
    std::size_t total = 0;
    for (const Simplex& s : nerve.simplices(p)) {
      offsets[p].push_back(total);
      bases[p].push_back(quotient_basis(spec, s, k));
      total += bases[p].back().monomials.size();
    }
    c.space_dims.push_back(total);
  }

  RationalMatrix augmentation(c.space_dims[1], whole.monomials.size());
  for (std::size_t v = 0; v < bases[0].size(); ++v)
    for (std::size_t col = 0; col < whole.monomials.size(); ++col)
      if (auto row = bases[0][v].index_of(whole.monomials[col])) augmentation(offsets[0][v] + *row, col) = 1;
  c.differentials.push_back(std::move(augmentation));

  for (int p = 0; p < nerve.dimension(); ++p) {
    RationalMatrix d(c.space_dims[p + 2], c.space_dims[p + 1]);
    const auto cofaces = nerve.simplices(p + 1);
    for (std::size_t t = 0; t < cofaces.size(); ++t)
      for (std::size_t j = 0; j < cofaces[t].size(); ++j) {
        const std::size_t f = *nerve.index_of(cofaces[t].facet(j));
        const auto& src = bases[p][f];
        const auto& dst = bases[p + 1][t];
        for (std::size_t col = 0; col < src.monomials.size(); ++col)
          if (auto row = dst.index_of(src.monomials[col]))
            d(offsets[p + 1][t] + *row, offsets[p][f] + col) = j % 2 == 0 ? 1 : -1;
      }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

Lemma31Verdict verify_lemma31(const LocalModelSpec& spec) {
  spec.validate();
  Lemma31Verdict verdict;
  verdict.degree_bound = spec.bound();
  verdict.exact = true;
  for (std::size_t k = 0; k <= verdict.degree_bound; ++k) {
    verdict.homology.push_back(cohomology(sheaf_cech_complex(spec, k)));
    for (auto h : verdict.homology.back())
      if (h != 0) verdict.exact = false;
  }
  return verdict;
}

}  // namespace snccoh
