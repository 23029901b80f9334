#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "snccoh/simplicial.hpp"

using namespace snccoh;

namespace {

SimplicialComplex hollow_triangle() { return SimplicialComplex::from_facets(3, {{0, 1}, {0, 2}, {1, 2}}); }

SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

}  // namespace

TEST(Simplex, RejectsBadTuples) {
  EXPECT_THROW(Simplex(std::vector<Vertex>{}), Error);
  EXPECT_THROW(Simplex({1, 0}), Error);
  EXPECT_THROW(Simplex({2, 2}), Error);
  const Simplex s({0, 2, 5});
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_EQ(s.facet(1), Simplex({0, 5}));
  EXPECT_TRUE(s.contains(Simplex({2, 5})));
  EXPECT_FALSE(s.contains(Simplex({1})));
}

TEST(FromFacets, Closure) {
  EXPECT_EQ(SimplicialComplex::from_facets(3, {{0, 1, 2}}).simplex_count(), 7u);
  EXPECT_EQ(SimplicialComplex::simplex_boundary(4).simplex_count(), 14u);
  const auto empty = SimplicialComplex::from_facets(0, {});
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(empty.dimension(), -1);
  EXPECT_THROW(SimplicialComplex::from_facets(2, {{0, 2}}), Error);
  EXPECT_THROW(SimplicialComplex::from_facets(3, {{2, 1}}), Error);
}

TEST(FromFacets, LexicographicOrder) {
  const auto k = SimplicialComplex::from_facets(3, {{1, 2}, {0, 2}, {0, 1}});
  const auto edges = k.simplices(1);
  ASSERT_EQ(edges.size(), 3u);
  EXPECT_EQ(edges[0], Simplex({0, 1}));
  EXPECT_EQ(edges[1], Simplex({0, 2}));
  EXPECT_EQ(edges[2], Simplex({1, 2}));
  EXPECT_EQ(k.index_of(Simplex({0, 2})), 1u);
  EXPECT_FALSE(k.index_of(Simplex({0, 1, 2})).has_value());
}

TEST(FromFacets, Idempotent) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 7));
    const auto k = gen::complex_from_masks(n, gen::random_facet_masks(rng, n, 3));
    std::vector<std::vector<Vertex>> facets;
    for (const auto& f : k.facets()) facets.emplace_back(f.vertices().begin(), f.vertices().end());
    EXPECT_EQ(SimplicialComplex::from_facets(n, facets), k);
  }
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic(SimplicialComplex::full_simplex(1)), 1);
  EXPECT_EQ(euler_characteristic(hollow_triangle()), 0);
  EXPECT_EQ(euler_characteristic(SimplicialComplex::simplex_boundary(4)), 2);
  EXPECT_EQ(euler_characteristic(SimplicialComplex()), 0);
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti_numbers(SimplicialComplex::simplex_boundary(4)), (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_EQ(betti_numbers(SimplicialComplex::full_simplex(1)), (std::vector<std::size_t>{1}));
  EXPECT_EQ(betti_numbers(SimplicialComplex::from_facets(2, {{0}, {1}})), (std::vector<std::size_t>{2}));
  EXPECT_TRUE(betti_numbers(SimplicialComplex()).empty());
  EXPECT_EQ(betti_numbers(rp2()), (std::vector<std::size_t>{1, 0, 0}));
}

TEST(Betti, SphereBoundaries) {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<std::size_t> expected(n, 0);
    expected.front() = 1;
    expected.back() += 1;
    EXPECT_EQ(betti_numbers(SimplicialComplex::simplex_boundary(n + 1)), expected) << "n = " << n;
  }
}

TEST(Betti, EulerAndOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 7));
    const auto masks = gen::random_facet_masks(rng, n, static_cast<std::size_t>(gen::uniform(rng, 1, 5)));
    const auto k = gen::complex_from_masks(n, masks);
    const auto b = betti_numbers(k);
    long alt = 0;
    for (std::size_t i = 0; i < b.size(); ++i) alt += i % 2 == 0 ? static_cast<long>(b[i]) : -static_cast<long>(b[i]);
    EXPECT_EQ(alt, euler_characteristic(k));
    EXPECT_EQ(b, oracle::betti_by_boundaries(masks));
    const auto z = integral_cohomology(k);
    ASSERT_EQ(z.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(z[i].free_rank, b[i]);
  }
}

TEST(IntegralCohomology, Examples) {
  const auto circle = integral_cohomology(hollow_triangle());
  ASSERT_EQ(circle.size(), 2u);
  EXPECT_EQ(circle[0], (IntegralDegree{1, {}}));
  EXPECT_EQ(circle[1], (IntegralDegree{1, {}}));

  const auto projective = integral_cohomology(rp2());
  ASSERT_EQ(projective.size(), 3u);
  EXPECT_EQ(projective[0], (IntegralDegree{1, {}}));
  EXPECT_EQ(projective[1], (IntegralDegree{0, {}}));
  EXPECT_EQ(projective[2], (IntegralDegree{0, {Integer(2)}}));

  const auto point = integral_cohomology(SimplicialComplex::full_simplex(1));
  ASSERT_EQ(point.size(), 1u);
  EXPECT_EQ(point[0], (IntegralDegree{1, {}}));
}
