#include <doctest.h>

#include <json.hpp>

#include "duval/cover_invariants.hpp"
#include "duval/duval_planes.hpp"
#include "duval/error.hpp"
#include "fixture_data.hpp"

using namespace duval;

namespace {

const nlohmann::json& fixture_json() {
  static const nlohmann::json j = nlohmann::json::parse(fixtures::derived_json());
  return j;
}

ResolvedCover smooth_plane(int degree) {
  const ModelPtr p2 = make_surface(SurfaceKind::plane());
  return resolve(BranchModel{p2, degree * line_class(p2), {}});
}

}  // namespace

TEST_CASE("smooth plane branches") {
  for (const auto& row : fixture_json().at("plane_smooth")) {
    const ResolvedCover c = smooth_plane(row.at("degree").get<int>());
    CHECK(chi_of_cover(c, 1) == row.at("chi").get<std::int64_t>());
    CHECK(chi_of_cover_on_resolution(c, 1) == row.at("chi").get<std::int64_t>());
    CHECK(ksq_of_resolution(c) == row.at("ksq_resolution").get<std::int64_t>());
    CHECK(ksq_of_resolution_on_resolution(c) == row.at("ksq_resolution").get<std::int64_t>());
    CHECK(h0_two_k_plus_delta(c, 1) == row.at("h0").get<std::int64_t>());
    CHECK(h0_two_k_plus_delta_ledger(c, 1) == row.at("h0").get<std::int64_t>());
  }
  // Octic: p_g = 3, K^2 = 2. Dectic: p_g = 6, K^2 = 8.
  CHECK(chi_of_cover(smooth_plane(8), 1) - 1 == 3);
  CHECK(ksq_of_resolution(smooth_plane(8)) == 2);
  CHECK(chi_of_cover(smooth_plane(10), 1) - 1 == 6);
  CHECK(ksq_of_resolution(smooth_plane(10)) == 8);
}

TEST_CASE("ledger and on-resolution forms agree on the sweep") {
  for (const auto& row : fixture_json().at("sweep")) {
    const DuValConfig c = type_dn(row.at("n"), row.at("delta1"), row.at("delta2"), row.at("gamma_infinitely_near"));
    const ResolvedCover cover = resolve(build_branch(c));
    CAPTURE(label(c));
    CHECK(chi_of_cover(cover, 1) == row.at("chi").get<std::int64_t>());
    CHECK(chi_of_cover_on_resolution(cover, 1) == row.at("chi").get<std::int64_t>());
    CHECK(ksq_of_resolution(cover) == row.at("ksq_resolution").get<std::int64_t>());
    CHECK(ksq_of_resolution_on_resolution(cover) == row.at("ksq_resolution").get<std::int64_t>());
    CHECK(h0_two_k_plus_delta(cover, 1) == row.at("h0").get<std::int64_t>());
    CHECK(h0_two_k_plus_delta_ledger(cover, 1) == row.at("h0").get<std::int64_t>());
    CHECK(chi_of_cover(cover, 1) >= 1);
  }
}

TEST_CASE("fixed points") {
  // k = K^2 - 2chi + 6chi(Sigma) - 2h0, kr = k + 4chi - 8chi(Sigma).
  CHECK(fixed_point_counts(2, 2, 1, 0) == FixedPoints{4, 4});
  CHECK(fixed_point_counts(9, 7, 1, 0) == FixedPoints{1, 21});
  for (const auto& row : fixture_json().at("fixed_points")) {
    const DuValConfig c = type_dn(row.at("n"), row.at("delta1"), row.at("delta2"));
    const SurfaceReport r = surface_report(c);
    CHECK(r.k_isolated == row.at("k").get<int>());
    CHECK(r.k_isolated == 2 * c.n + c.delta1);
    CHECK(r.k_isolated == r.ksq_minimal - 2 * r.chi + 6);
  }
}

TEST_CASE("pencil genus") {
  const ModelPtr p2 = make_surface(SurfaceKind::plane());
  const ResolvedCover c = resolve(BranchModel{p2, 10 * line_class(p2), {Mtuple{CenterId{"r"}, 4, std::nullopt}}});
  const DivisorClass f = line_class(c.model) - exceptional_class(c.model, CenterId{"r"});
  CHECK(pencil_genus(c, f) == 2);
  CHECK_THROWS_AS(pencil_genus(c, line_class(c.model)), Error);
  try {
    pencil_genus(c, line_class(c.model));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPencil);
  }

  const ModelPtr f2 = make_surface(SurfaceKind::hirzebruch(2));
  const ResolvedCover b = resolve(BranchModel{f2, 8 * negative_section_class(f2) + 14 * fibre_class(f2), {}});
  CHECK(pencil_genus(b, fibre_class(f2)) == 3);
}

TEST_CASE("compute_invariants") {
  const ResolvedCover cover = resolve(build_branch(type_dn(2, 0, 3)));
  const CoverInvariants inv = compute_invariants(cover, 1, 2);
  CHECK(inv.chi == 2);
  CHECK(inv.pg_minus_q == inv.chi - 1);
  CHECK(inv.ksq_resolution == -2);
  CHECK(inv.h0_2k_delta == 0);
  CHECK(inv.k_isolated == 4);
}

TEST_CASE("f2 smooth branch") {
  const auto& row = fixture_json().at("f2_smooth");
  const ModelPtr f2 = make_surface(SurfaceKind::hirzebruch(2));
  const ResolvedCover c = resolve(BranchModel{f2, 8 * negative_section_class(f2) + 14 * fibre_class(f2), {}});
  CHECK(chi_of_cover(c, 1) == row.at("chi").get<std::int64_t>());
  CHECK(ksq_of_resolution(c) == row.at("ksq_resolution").get<std::int64_t>());
  CHECK(h0_two_k_plus_delta(c, 1) == row.at("h0").get<std::int64_t>());
}
