#include <doctest.h>

#include "duval/conic.hpp"
#include "generators.hpp"

using namespace duval;
using namespace duval::testing;

namespace {

using Matrix = std::array<std::array<Rational, 3>, 3>;

// Product of random elementary matrices, so it is unimodular.
Matrix random_unimodular(Rng& rng) {
  Matrix m{};
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = 1;
  for (int step = 0; step < 6; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, 2));
    auto j = static_cast<std::size_t>(rng.uniform(0, 1));
    if (j >= i) ++j;
    const int k = rng.uniform(-3, 3);
    for (std::size_t c = 0; c < 3; ++c) m[i][c] += k * m[j][c];
  }
  return m;
}

ProjectivePoint apply(const Matrix& m, const ProjectivePoint& p, const Rational& scale) {
  ProjectivePoint out;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += m[i][j] * p.xyz[j];
    out.xyz[i] = scale * s;
  }
  return out;
}

}  // namespace

TEST_CASE("conic_space_dim is projectively invariant") {
  Rng rng(0x5eed0301);
  for (int t = 0; t < kInstances; ++t) {
    std::vector<ProjectivePoint> pts;
    const int count = rng.uniform(0, 7);
    for (int i = 0; i < count; ++i) pts.push_back(random_point(rng, rng.coin() ? 1 : 5));
    const Matrix m = random_unimodular(rng);
    std::vector<ProjectivePoint> moved;
    for (const auto& p : pts) moved.push_back(apply(m, p, Rational(rng.uniform(1, 5) * (rng.coin() ? 1 : -1), rng.uniform(1, 3))));
    rng.shuffle(moved);
    const int d = conic_space_dim(pts);
    CHECK(d == conic_space_dim(moved));
    CHECK(d >= std::max(0, 6 - count));
    CHECK(d <= 6);
  }
}

TEST_CASE("points on the unit circle always leave a conic") {
  Rng rng(0x5eed0302);
  for (int t = 0; t < kInstances; ++t) {
    std::vector<ProjectivePoint> pts;
    const int count = rng.uniform(5, 9);
    for (int i = 0; i < count; ++i) {
      // Rational parametrization ((1 - s^2), 2s, 1 + s^2).
      const Rational s(rng.uniform(-20, 20), rng.uniform(1, 7));
      pts.push_back({{1 - s * s, 2 * s, 1 + s * s}});
    }
    CHECK(conic_space_dim(pts) >= 1);
  }
}
