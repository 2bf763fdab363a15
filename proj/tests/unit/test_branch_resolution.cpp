#include <doctest.h>

#include <algorithm>

#include "duval/duval_planes.hpp"
#include "duval/error.hpp"

using namespace duval;

namespace {

std::string message_of(auto&& f, ErrorCode want) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == want);
    return e.what();
  }
  FAIL("expected duval::Error");
  return {};
}

BranchModel plane_branch(int degree, std::vector<SingularityAssignment> s) {
  const ModelPtr p2 = make_surface(SurfaceKind::plane());
  return BranchModel{p2, degree * line_class(p2), std::move(s)};
}

}  // namespace

TEST_CASE("effective multiplicities of [r,r]-points") {
  using V = std::vector<std::pair<CenterId, int>>;
  CHECK(effective_multiplicities(RRpoint{CenterId{"p"}, CenterId{"p'"}, 5, std::nullopt}) ==
        V{{CenterId{"p"}, 5}, {CenterId{"p'"}, 6}});
  CHECK(effective_multiplicities(RRpoint{CenterId{"q"}, CenterId{"q'"}, 4, std::nullopt}) ==
        V{{CenterId{"q"}, 4}, {CenterId{"q'"}, 4}});
  CHECK(effective_multiplicities(Mtuple{CenterId{"g"}, 6, std::nullopt}) == V{{CenterId{"g"}, 6}});
}

TEST_CASE("D1 ledger") {
  const ResolvedCover c = resolve(build_branch(type_dn(1, 0, 0)));
  REQUIRE(c.steps.size() == 3);
  CHECK(c.steps[0].center == CenterId{"p1"});
  CHECK(c.steps[0].subtraction == 4);
  CHECK(c.steps[0].exceptional_in_branch);
  CHECK(c.steps[1].center == CenterId{"p1'"});
  CHECK(c.steps[1].multiplicity == 6);
  CHECK(c.steps[1].subtraction == 6);
  CHECK(c.steps[2].center == CenterId{"gamma"});
  CHECK(c.steps[2].subtraction == 4);
  CHECK(c.smooth_class.to_string() == "12L - 4E[p1] - 6E[p1'] - 4E[gamma]");
  CHECK(2 * c.half_class == c.smooth_class);
  CHECK(half_class(c) == c.half_class);
}

TEST_CASE("type D has an empty ledger") {
  const ResolvedCover c = resolve(build_branch(type_d()));
  CHECK(c.steps.empty());
  CHECK(c.smooth_class.to_string() == "8L");
}

TEST_CASE("ledger ordering puts parents before children and large multiplicities first") {
  const ResolvedCover c = resolve(plane_branch(
      20, {Mtuple{CenterId{"a"}, 3, std::nullopt}, Mtuple{CenterId{"b"}, 7, CenterId{"a"}}, Mtuple{CenterId{"c"}, 5, std::nullopt}}));
  std::vector<std::string> order;
  for (const auto& s : c.steps) order.push_back(s.center.value);
  CHECK(order == std::vector<std::string>{"c", "a", "b"});
}

TEST_CASE("the smooth branch meets each exceptional class in the subtraction") {
  const ResolvedCover c = resolve(build_branch(type_dn(3, 2, 1)));
  for (const auto& s : c.steps) {
    CHECK(intersect(c.smooth_class, exceptional_class(c.model, s.center)) == s.subtraction);
    CHECK(s.subtraction == 2 * (s.multiplicity / 2));
  }
}

TEST_CASE("odd branch classes are reported with the coefficient") {
  const std::string msg = message_of([] { resolve(plane_branch(7, {})); }, ErrorCode::OddBranchClass);
  CHECK(msg.find("coefficient 7 of L") != std::string::npos);
}

TEST_CASE("invalid singularity data") {
  message_of([] { resolve(plane_branch(8, {Mtuple{CenterId{"a"}, 1, std::nullopt}})); }, ErrorCode::InvalidParameter);
  message_of([] { resolve(plane_branch(8, {RRpoint{CenterId{"a"}, CenterId{"a'"}, 1, std::nullopt}})); },
             ErrorCode::InvalidParameter);
  message_of([] { resolve(plane_branch(8, {Mtuple{CenterId{"a"}, 2, std::nullopt}, Mtuple{CenterId{"a"}, 2, std::nullopt}})); },
             ErrorCode::InvalidCenter);
  message_of([] { resolve(plane_branch(8, {Mtuple{CenterId{"a"}, 2, CenterId{"z"}}})); }, ErrorCode::InvalidCenter);
  message_of([] { resolve(plane_branch(8, {Mtuple{CenterId{"a"}, 2, CenterId{"b"}}, Mtuple{CenterId{"b"}, 2, CenterId{"a"}}})); },
             ErrorCode::InvalidCenter);
}

TEST_CASE("branch on a model with existing centers") {
  const ModelPtr w0 = make_model(SurfaceKind::plane(), {{CenterId{"p0"}, std::nullopt}});
  const BranchModel b{w0, 10 * line_class(w0) - 2 * exceptional_class(w0, CenterId{"p0"}),
                      {Mtuple{CenterId{"x"}, 3, CenterId{"p0"}}}};
  const ResolvedCover c = resolve(b);
  CHECK(c.model->rank() == 3);
  CHECK(c.smooth_class.coefficient(CenterId{"x"}) == -2);
  CHECK(c.smooth_class.coefficient(CenterId{"p0"}) == -2);
}

TEST_CASE("(-2)-curves of D_n branches") {
  for (const auto& c : admissible_dn_configs()) {
    if (!base_point_free_regime(c)) continue;
    const ResolvedCover cover = resolve(build_branch(c));
    const auto curves = minus_two_components(cover, minus_two_candidates(c, cover.model));
    CHECK(static_cast<int>(curves.size()) == 2 * c.n + c.delta1);
  }
  const ResolvedCover cover = resolve(build_branch(type_dn(2, 0, 0)));
  const ModelPtr p2 = make_surface(SurfaceKind::plane());
  CHECK_THROWS_AS(minus_two_components(cover, {line_class(p2)}), Error);
}

TEST_CASE("lines through gamma and p_i on the unresolved branch") {
  for (int n = 0; n <= 6; ++n) {
    const BranchModel b = build_branch(type_dn(n, 0, 0));
    const DivisorClass l = line_class(b.ambient);
    CHECK(intersect(l, b.branch_class - l) == 2 * n + 9);
  }
}
