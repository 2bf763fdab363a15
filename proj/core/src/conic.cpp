#include "duval/conic.hpp"

#include <utility>

#include <boost/integer/common_factor.hpp>

#include "duval/error.hpp"

namespace duval {

std::size_t exact_rank(std::vector<std::vector<BigInt>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

int conic_space_dim(const std::vector<ProjectivePoint>& points) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (p.xyz[0] == 0 && p.xyz[1] == 0 && p.xyz[2] == 0) {
      throw Error(ErrorCode::BadPoint, "(0 : 0 : 0) is not a point of the plane");
    }
    // Clear denominators; rank does not see nonzero row scalings.
    BigInt lcm = 1;
    for (const auto& c : p.xyz) lcm = boost::integer::lcm(lcm, BigInt(denominator(c)));
    std::array<BigInt, 3> v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = numerator(p.xyz[i]) * (lcm / denominator(p.xyz[i]));
    rows.push_back({v[0] * v[0], v[1] * v[1], v[2] * v[2], v[0] * v[1], v[0] * v[2], v[1] * v[2]});
  }
  return 6 - static_cast<int>(exact_rank(std::move(rows)));
}

}  // namespace duval
