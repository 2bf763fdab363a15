#include <doctest.h>

#include <json.hpp>

#include "duval/conic.hpp"
#include "duval/error.hpp"
#include "fixture_data.hpp"

using namespace duval;

namespace {

Rational parse(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  const std::string s = v.get<std::string>();
  const auto slash = s.find('/');
  return Rational(BigInt(s.substr(0, slash))) / Rational(BigInt(s.substr(slash + 1)));
}

ProjectivePoint pt(long long x, long long y, long long z) { return {{Rational(x), Rational(y), Rational(z)}}; }

}  // namespace

TEST_CASE("exact rank") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == 3);
  CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
  const BigInt big = BigInt(1) << 200;
  CHECK(exact_rank({{big, big + 1}, {big - 1, big}}) == 2);
}

TEST_CASE("conic fixtures") {
  const auto j = nlohmann::json::parse(fixtures::derived_json());
  for (const auto& f : j.at("conic")) {
    std::vector<ProjectivePoint> pts;
    for (const auto& p : f.at("points")) pts.push_back({{parse(p[0]), parse(p[1]), parse(p[2])}});
    CAPTURE(f.at("name").get<std::string>());
    CHECK(conic_space_dim(pts) == f.at("dim").get<int>());
  }
}

TEST_CASE("small configurations") {
  CHECK(conic_space_dim({}) == 6);
  CHECK(conic_space_dim({pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)}) == 2);
  // A repeated point imposes one condition.
  CHECK(conic_space_dim({pt(1, 2, 3), pt(2, 4, 6)}) == 5);
  // Four collinear points: the line plus any line, and conics through the fourth are forced.
  CHECK(conic_space_dim({pt(1, 0, 1), pt(2, 0, 1), pt(3, 0, 1), pt(4, 0, 1)}) == 3);
  CHECK_THROWS_AS(conic_space_dim({pt(0, 0, 0)}), Error);
}
