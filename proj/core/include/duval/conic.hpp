#pragma once

#include <array>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace duval {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Homogeneous coordinates (x : y : z) with exact rational entries.
struct ProjectivePoint {
  std::array<Rational, 3> xyz;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t exact_rank(std::vector<std::vector<BigInt>> rows);

/// Dimension of the space of plane conics through the given points:
/// 6 minus the rank of the evaluation matrix of x^2, y^2, z^2, xy, xz, yz.
int conic_space_dim(const std::vector<ProjectivePoint>& points);

}  // namespace duval
