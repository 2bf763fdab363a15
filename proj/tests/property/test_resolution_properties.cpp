#include <doctest.h>

#include <map>

#include "duval/cover_invariants.hpp"
#include "duval/duval_planes.hpp"
#include "generators.hpp"

using namespace duval;
using namespace duval::testing;

namespace {

std::map<std::string, std::int64_t> by_center(const ResolvedCover& c) {
  std::map<std::string, std::int64_t> out;
  for (const auto& s : c.steps) out[s.center.value] = c.smooth_class.coefficient(s.center);
  out["__base"] = c.smooth_class[0];
  return out;
}

}  // namespace

TEST_CASE("smooth class is ledger-consistent and even") {
  Rng rng(0x5eed0101);
  for (int t = 0; t < kInstances; ++t) {
    const BranchModel b = random_plane_branch(rng);
    const ResolvedCover c = resolve(b);
    CHECK(2 * c.half_class == c.smooth_class);
    for (const auto& s : c.steps) {
      CHECK(intersect(c.smooth_class, exceptional_class(c.model, s.center)) == 2 * (s.multiplicity / 2));
      CHECK(s.exceptional_in_branch == (s.multiplicity % 2 == 1));
    }
    CHECK(chi_of_cover(c, 1) == chi_of_cover_on_resolution(c, 1));
    CHECK(ksq_of_resolution(c) == ksq_of_resolution_on_resolution(c));
    CHECK(h0_two_k_plus_delta(c, 1) == h0_two_k_plus_delta_ledger(c, 1));
  }
}

TEST_CASE("resolution does not depend on the order of the singularities") {
  Rng rng(0x5eed0102);
  for (int t = 0; t < kInstances; ++t) {
    const BranchModel b = random_plane_branch(rng);
    BranchModel shuffled = b;
    rng.shuffle(shuffled.singularities);
    const ResolvedCover x = resolve(b), y = resolve(shuffled);
    CHECK(by_center(x) == by_center(y));
    CHECK(chi_of_cover(x, 1) == chi_of_cover(y, 1));
    CHECK(ksq_of_resolution(x) == ksq_of_resolution(y));
    CHECK(h0_two_k_plus_delta(x, 1) == h0_two_k_plus_delta(y, 1));
  }
}

TEST_CASE("double points and [2,2]-points are neutral") {
  Rng rng(0x5eed0103);
  for (int t = 0; t < kInstances; ++t) {
    const BranchModel b = random_plane_branch(rng);
    BranchModel more = b;
    const int kind = rng.uniform(0, 2);
    if (kind == 0) more.singularities.push_back(Mtuple{CenterId{"dp"}, 2, std::nullopt});
    if (kind == 1) more.singularities.push_back(Mtuple{CenterId{"tp"}, 3, std::nullopt});
    if (kind == 2) more.singularities.push_back(RRpoint{CenterId{"t"}, CenterId{"t'"}, 2, std::nullopt});
    const ResolvedCover x = resolve(b), y = resolve(more);
    CHECK(chi_of_cover(x, 1) == chi_of_cover(y, 1));
    CHECK(ksq_of_resolution(x) == ksq_of_resolution(y));
    CHECK(h0_two_k_plus_delta(x, 1) == h0_two_k_plus_delta(y, 1));
  }
}

TEST_CASE("every admissible configuration has integral invariants with chi >= 1") {
  const auto configs = admissible_dn_configs();
  REQUIRE(configs.size() >= 60);
  Rng rng(0x5eed0104);
  for (int t = 0; t < kInstances; ++t) {
    const DuValConfig& c = configs[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(configs.size()) - 1))];
    const ResolvedCover cover = resolve(build_branch(c));
    const std::int64_t chi = chi_of_cover(cover, 1);
    CHECK(chi == 7 - c.n - c.delta1 - c.delta2);
    CHECK(chi >= 1);
    CHECK(ksq_of_resolution(cover) == 8 - 2 * (c.n + c.delta1 + c.delta2));
  }
}
