#include "snccoh/toric.hpp"

#include <algorithm>
#include <numeric>

namespace snccoh {
namespace {

std::string describe(const Cone& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + "}";
}

IntegerMatrix ray_matrix(const Fan& f, const Cone& c) {
  IntegerMatrix m(c.size(), f.n);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < f.n; ++j) m(i, j) = Integer(f.rays[c[i]][j]);
  return m;
}

bool is_subset(const Cone& small, const Cone& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Upper half-plane (including the positive x-axis) first, then by cross product.
bool angle_less(const Ray& a, const Ray& b) {
  auto half = [](const Ray& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  return a[0] * b[1] - a[1] * b[0] > 0;
}

Completeness certify_low_dimension(const Fan& f) {
  if (f.n == 0) return Completeness::Certified;
  if (f.n == 1) {
    bool pos = false, neg = false;
    for (const auto& c : f.cones)
      if (c.size() == 1) (f.rays[c[0]][0] > 0 ? pos : neg) = true;
    if (!pos || !neg) throw Error(ErrorKind::NecessaryConditionFailed, "the rays do not cover both half-lines");
    return Completeness::Certified;
  }
  std::vector<std::size_t> order(f.rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return angle_less(f.rays[a], f.rays[b]); });
  if (order.size() < 3) throw Error(ErrorKind::NecessaryConditionFailed, "fewer than three rays cannot cover the plane");
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t a = order[i];
    const std::size_t b = order[(i + 1) % order.size()];
    const Ray& u = f.rays[a];
    const Ray& v = f.rays[b];
    Cone c{std::min(a, b), std::max(a, b)};
    if (u[0] * v[1] - u[1] * v[0] <= 0 || !f.cones.contains(c))
      throw Error(ErrorKind::NecessaryConditionFailed, "gap between consecutive rays " + describe(c));
  }
  return Completeness::Certified;
}

}  // namespace

void Fan::add_cone(Cone c) {
  std::sort(c.begin(), c.end());
  const std::size_t k = c.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Cone face;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) face.push_back(c[i]);
    cones.insert(face);
  }
}

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones) {
    bool maximal = true;
    for (const auto& d : cones)
      if (d.size() > c.size() && is_subset(c, d)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

void validate_fan(const Fan& f) {
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    const Ray& r = f.rays[i];
    if (r.size() != f.n) throw Error(ErrorKind::InvalidFan, "ray " + std::to_string(i) + " has the wrong length");
    long g = 0;
    for (long x : r) g = std::gcd(g, x);
    if (g != 1) throw Error(ErrorKind::InvalidFan, "ray " + std::to_string(i) + " is zero or not primitive");
  }
  if (!f.cones.contains(Cone{})) throw Error(ErrorKind::InvalidFan, "the empty cone is missing");
  for (const auto& c : f.cones) {
    if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error(ErrorKind::InvalidFan, "cone " + describe(c) + " is not strictly ascending");
    for (auto i : c)
      if (i >= f.rays.size()) throw Error(ErrorKind::InvalidFan, "cone " + describe(c) + " names a missing ray");
    for (std::size_t k = 0; k < c.size(); ++k) {
      Cone face = c;
      face.erase(face.begin() + static_cast<long>(k));
      if (!f.cones.contains(face))
        throw Error(ErrorKind::InvalidFan, "cone " + describe(c) + " lacks its face " + describe(face));
    }
    if (rank(to_rational(ray_matrix(f, c))) != c.size())
      throw Error(ErrorKind::InvalidFan, "cone " + describe(c) + " is not simplicial");
  }
}

bool is_smooth(const Fan& f) {
  validate_fan(f);
  for (const auto& c : f.maximal_cones()) {
    if (c.empty()) continue;
    const auto factors = smith_normal_form(ray_matrix(f, c));
    if (factors.size() != c.size()) return false;
    for (const auto& x : factors)
      if (x != 1) return false;
  }
  return true;
}

Completeness completeness_certificate(const Fan& f) {
  validate_fan(f);
  if (f.n <= 2) return certify_low_dimension(f);

  std::vector<Cone> top;
  for (const auto& c : f.cones)
    if (c.size() == f.n) top.push_back(c);
  if (top.empty()) throw Error(ErrorKind::NecessaryConditionFailed, "no full-dimensional cone");

  std::vector<std::size_t> parent(top.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& wall : f.cones) {
    if (wall.size() + 1 != f.n) continue;
    std::vector<std::size_t> owners;
    for (std::size_t i = 0; i < top.size(); ++i)
      if (is_subset(wall, top[i])) owners.push_back(i);
    if (owners.size() != 2)
      throw Error(ErrorKind::NecessaryConditionFailed,
                  "wall " + describe(wall) + " lies in " + std::to_string(owners.size()) + " maximal cones");
    parent[find(owners[0])] = find(owners[1]);
  }
  for (std::size_t i = 0; i < top.size(); ++i)
    if (find(i) != find(0))
      throw Error(ErrorKind::NecessaryConditionFailed, "cone " + describe(top[i]) + " is not connected to " +
                                                           describe(top[0]) + " through walls");
  return Completeness::Uncertified;
}

Fan projective_space_fan(std::size_t n) {
  Fan f;
  f.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    Ray e(n, 0);
    e[i] = 1;
    f.rays.push_back(e);
  }
  f.rays.push_back(Ray(n, -1));
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    f.add_cone(c);
  }
  return f;
}

Fan p1xp1_fan() {
  Fan f;
  f.n = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  f.add_cone({0, 1});
  f.add_cone({1, 2});
  f.add_cone({2, 3});
  f.add_cone({0, 3});
  return f;
}

SncDivisor boundary_divisor(const Fan& f, const std::vector<std::size_t>& selected_rays) {
  if (!is_smooth(f)) throw Error(ErrorKind::NotSmooth, "boundary divisor requires a smooth fan");
  if (selected_rays.empty()) throw Error(ErrorKind::InvalidSpec, "no rays selected");
  std::vector<std::size_t> selected = selected_rays;
  std::sort(selected.begin(), selected.end());
  if (std::adjacent_find(selected.begin(), selected.end()) != selected.end() || selected.back() >= f.rays.size())
    throw Error(ErrorKind::InvalidSpec, "selected rays must be distinct ray indices");

  SncDivisor d;
  d.ambient_dim = f.n;
  for (auto ray : selected) d.components.push_back({"D_" + std::to_string(ray), f.n == 0 ? 0 : f.n - 1});
  for (const auto& c : f.cones) {
    if (c.size() < 2) continue;
    std::vector<Vertex> tuple;
    for (auto ray : c) {
      auto it = std::lower_bound(selected.begin(), selected.end(), ray);
      if (it == selected.end() || *it != ray) break;
      tuple.push_back(static_cast<Vertex>(it - selected.begin()));
    }
    if (tuple.size() == c.size()) d.strata.insert(Simplex(tuple));
  }

  std::vector<Simplex> all;
  for (std::size_t i = 0; i < selected.size(); ++i) all.push_back(Simplex({static_cast<Vertex>(i)}));
  all.insert(all.end(), d.strata.begin(), d.strata.end());
  for (const auto& s : all) {
    d.set_table(s, Flavor::Sheaf, 0, 0, TableEntry{1, {RestrictionData::Kind::Constant, {}}});
    for (std::size_t q = 1; q <= d.stratum_dimension(s); ++q)
      d.set_table(s, Flavor::Sheaf, 0, q, TableEntry{0, {RestrictionData::Kind::Zero, {}}});
  }
  return d;
}

CombinatorialCheck toric_snc_cohomology(const Fan& f, const std::vector<std::size_t>& selected_rays) {
  return combinatorial_cohomology_check(boundary_divisor(f, selected_rays));
}

std::string to_string(Completeness c) {
  return c == Completeness::Certified ? "certified" : "uncertified (necessary conditions passed)";
}

}  // namespace snccoh
