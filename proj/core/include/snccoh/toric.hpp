#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "snccoh/snc.hpp"

namespace snccoh {

using Ray = std::vector<long>;
using Cone = std::vector<std::size_t>;  // ascending ray indices

/// Simplicial fan in Z^n. The cone set includes the empty cone and is closed
/// under faces.
struct Fan {
  std::size_t n = 0;
  std::vector<Ray> rays;
  std::set<Cone> cones;

  /// Adds a cone together with all its faces.
  void add_cone(Cone c);
  std::vector<Cone> maximal_cones() const;
};

/// Throws InvalidFan on non-primitive or zero rays, wrong ray length,
/// out-of-range or unsorted cones, missing faces, or dependent cone rays.
void validate_fan(const Fan& f);

/// Every cone's rays form part of a Z-basis.
bool is_smooth(const Fan& f);

enum class Completeness { Certified, Uncertified };

/// Exact for n <= 2. For n >= 3 only checks that every (n-1)-cone lies in
/// exactly two n-cones and the n-cones are connected through such faces.
/// Throws NecessaryConditionFailed naming the offending cone.
Completeness completeness_certificate(const Fan& f);

/// Rays e_1..e_n, -(e_1+...+e_n); cones are all proper subsets.
Fan projective_space_fan(std::size_t n);

/// Rays +-e_1, +-e_2 with the four quadrant cones.
Fan p1xp1_fan();

/// One component D_<ray> per selected ray, strata are the selected subsets
/// spanning a cone, structure sheaf tables h^q = [q == 0].
SncDivisor boundary_divisor(const Fan& f, const std::vector<std::size_t>& selected_rays);

/// combinatorial_cohomology_check of the boundary divisor.
CombinatorialCheck toric_snc_cohomology(const Fan& f, const std::vector<std::size_t>& selected_rays);

std::string to_string(Completeness c);

}  // namespace snccoh
