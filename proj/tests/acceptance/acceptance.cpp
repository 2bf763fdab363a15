// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include <json.hpp>

#include "duval/classification_tables.hpp"
#include "duval/cover_invariants.hpp"
#include "duval/duval_planes.hpp"
#include "duval/ruled_models.hpp"
#include "fixture_data.hpp"
#include "generators.hpp"

using namespace duval;
using namespace duval::testing;

namespace {

struct Criterion {
  int number;
  const char* title;
  std::function<std::string()> run;  // empty string on success, else the first failure
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

ResolvedCover smooth_plane(int degree) {
  const ModelPtr p2 = make_surface(SurfaceKind::plane());
  return resolve(BranchModel{p2, degree * line_class(p2), {}});
}

std::string smooth_branches() {
  for (const auto& [degree, pg, ksq] : {std::tuple(8, 3, 2), std::tuple(10, 6, 8)}) {
    const ResolvedCover c = smooth_plane(degree);
    if (chi_of_cover(c, 1) - 1 != pg || ksq_of_resolution(c) != ksq) return "degree " + std::to_string(degree);
  }
  return "";
}

std::string sweep() {
  int cases = 0;
  for (int n = 0; n <= 6; ++n) {
    for (int d1 = 0; n + d1 <= 6; ++d1) {
      for (int d2 = 0; n + d1 + d2 <= 6; ++d2) {
        if (n <= 1 && d2 > n) continue;
        for (bool inf : {false, true}) {
          if (inf && n != 1) continue;
          const DuValConfig c = type_dn(n, d1, d2, inf);
          const ResolvedCover cover = resolve(build_branch(c));
          ++cases;
          if (chi_of_cover(cover, 1) != 7 - n - d1 - d2) return label(c) + " chi";
          if (ksq_of_resolution(cover) != 8 - 2 * n - 2 * d1 - 2 * d2) return label(c) + " K^2";
        }
      }
    }
  }
  return expect(cases == 64, "expected 64 cases, got " + std::to_string(cases));
}

std::string minimal_ksq() {
  for (const auto& c : admissible_dn_configs()) {
    const SurfaceReport r = surface_report(c);
    if (base_point_free_regime(c)) {
      if (r.ksq_minimal != 8 - c.delta1 - 2 * c.delta2) return label(c);
      if (r.ksq_minimal - r.ksq_resolution != 2 * c.n + c.delta1) return label(c) + " difference";
      if (r.minus_two_curves != 2 * c.n + c.delta1) return label(c) + " (-2)-curves";
    } else if (r.ksq_minimal != 8 - c.n - c.delta1 - 2 * c.delta2) {
      return label(c);
    }
  }
  if (!check_base_point_free_table().matches) return "n >= 2 multiset";
  if (!check_one_base_point_table().matches) return "n <= 1 multiset";
  return "";
}

std::string vanishing() {
  for (int n = 2; n <= 6; ++n) {
    if (4 * (n * n + n - 2) - (4 * n * n + 4 * n) + 8 != 0) return "closed form at n = " + std::to_string(n);
    const ResolvedCover c = resolve(build_branch(type_dn(n, 0, 0)));
    if (h0_two_k_plus_delta(c, 1) != 0 || h0_two_k_plus_delta_ledger(c, 1) != 0) return "n = " + std::to_string(n);
  }
  return "";
}

std::string fixed_points(const nlohmann::json& fx) {
  for (const auto& row : fx.at("fixed_points")) {
    const DuValConfig c = type_dn(row.at("n"), row.at("delta1"), row.at("delta2"));
    const SurfaceReport r = surface_report(c);
    const FixedPoints fp = fixed_point_counts(r.ksq_minimal, r.chi, 1, 0);
    if (fp.k != 2 * c.n + c.delta1 || fp.k != row.at("k").get<std::int64_t>()) return label(c);
  }
  return "";
}

std::string xiao(const nlohmann::json& fx) {
  const EliminationCertificate iii = eliminate_xiao_case(XiaoCase::III);
  if (iii.d_squared != 0 || iii.d_dot_k != -2 || iii.d_dot_branch != 8) return "S_III";
  const EliminationCertificate iv = eliminate_xiao_case(XiaoCase::IV);
  if (iv.d_dot_branch != fx.at("xiao").at("IV").at("d_dot_branch").get<std::int64_t>() || iv.d_dot_branch != 12 ||
      !(iv.d_dot_branch < iv.xi) || iv.xi != 16) {
    return "S_IV";
  }
  return expect(iii.holds() && iv.holds(), "certificate");
}

std::string tables() {
  for (const KsqNTable* t : {&regular_pg0_table(), &regular_pg1_table(), &irregular_pg1_table()}) {
    const TableCheck check = table_check(*t, enumerate_classification(t->pg, t->q));
    for (const auto& cell : check.cells) {
      if (cell.realized_by.empty()) return t->name + " (K^2=" + std::to_string(cell.ksq) + ", n=" + std::to_string(cell.n) + ")";
    }
  }
  return "";
}

std::string bicanonical() {
  const SurfaceReport r = surface_report(type_dn(2, 0, 3));
  return expect(r.pg == 1 && r.q == 0 && r.ksq_minimal == 2 && r.bicanonical_degree == 4 &&
                    r.bicanonical_image_degree == 2,
                "D2(0,3)");
}

std::string conics(const nlohmann::json& fx) {
  const std::map<std::string, int> want{{"pythagorean_six", 1}, {"rational_on_circle_six", 1}, {"generic_six", 0},
                                        {"five_general", 1}};
  int seen = 0;
  for (const auto& f : fx.at("conic")) {
    const std::string name = f.at("name");
    std::vector<ProjectivePoint> pts;
    for (const auto& p : f.at("points")) {
      ProjectivePoint q;
      for (std::size_t i = 0; i < 3; ++i) {
        q.xyz[i] = p[i].is_string() ? Rational(p[i].get<std::string>()) : Rational(p[i].get<long long>());
      }
      pts.push_back(q);
    }
    const int d = conic_space_dim(pts);
    if (d != f.at("dim").get<int>()) return name;
    if (auto it = want.find(name); it != want.end()) {
      ++seen;
      if (d != it->second) return name;
    }
  }
  return expect(seen == static_cast<int>(want.size()), "missing conic fixtures");
}

// Short versions of the property suites, 100 instances each.
std::string properties() {
  constexpr int n = 100;
  Rng rng(0xacce97);
  for (int t = 0; t < n; ++t) {
    const ModelPtr w = random_model(rng);
    const DivisorClass a = random_class(rng, w), b = random_class(rng, w), c = random_class(rng, w);
    if (intersect(a, b) != intersect(b, a) || intersect(3 * a - 2 * b, c) != 3 * intersect(a, c) - 2 * intersect(b, c)) {
      return "bilinearity";
    }
    const BlowUp up = blow_up(w, std::nullopt, CenterId{"new"});
    if (intersect(pullback(a, up.model), pullback(b, up.model)) != intersect(a, b)) return "pullback isometry";
    if (canonical_class(up.model) != pullback(canonical_class(w), up.model) + exceptional_class(up.model, up.center)) {
      return "canonical class";
    }
  }
  for (int t = 0; t < n; ++t) {
    const int e = rng.uniform(1, 4);
    const ModelPtr f = make_surface(SurfaceKind::hirzebruch(e));
    const BranchModel br{f, 8 * negative_section_class(f) + 2 * rng.uniform(8, 20) * fibre_class(f), {}};
    if (!elementary_transform(br, {CenterId{"p"}, rng.coin(), rng.uniform(0, 4), false, std::nullopt}).step.is_isometry()) {
      return "elementary isometry";
    }
    const ModelPtr w = make_model(SurfaceKind::plane(), random_forest(rng, rng.uniform(3, 6)));
    const std::array<CenterId, 3> ids{w->centers()[0].id, w->centers()[1].id, w->centers()[2].id};
    const TransformStep there = cremona_quadratic(w, ids);
    const TransformStep back = cremona_quadratic(
        there.target, {CenterId{ids[0].value + "^"}, CenterId{ids[1].value + "^"}, CenterId{ids[2].value + "^"}}, ids);
    const DivisorClass x = random_class(rng, w);
    const DivisorClass y = back.apply(there.apply(x));
    if (!there.is_isometry() || !std::equal(x.coeffs().begin(), x.coeffs().end(), y.coeffs().begin())) {
      return "quadratic involution";
    }
  }
  for (int t = 0; t < n; ++t) {
    const BranchModel b = random_plane_branch(rng);
    BranchModel shuffled = b;
    rng.shuffle(shuffled.singularities);
    const ResolvedCover x = resolve(b), y = resolve(shuffled);
    for (const auto& s : x.steps) {
      if (x.smooth_class.coefficient(s.center) != y.smooth_class.coefficient(s.center)) return "order invariance";
    }
    BranchModel more = b;
    more.singularities.push_back(Mtuple{CenterId{"dp"}, 2, std::nullopt});
    const ResolvedCover z = resolve(more);
    if (chi_of_cover(z, 1) != chi_of_cover(x, 1) || ksq_of_resolution(z) != ksq_of_resolution(x)) {
      return "double point neutrality";
    }
  }
  return "";
}

}  // namespace

int main() {
  const nlohmann::json fx = nlohmann::json::parse(fixtures::derived_json());
  const Criterion criteria[] = {
      {1, "smooth plane branches of degree 8 and 10", smooth_branches},
      {2, "chi and K^2 of S* over the full (n, delta1, delta2) sweep", sweep},
      {3, "minimal-model K^2 and the (-2)-curve count", minimal_ksq},
      {4, "h0(2K + Delta) vanishes for n = 2..6", vanishing},
      {5, "isolated fixed points equal 2n + delta1 for n >= 2", [&] { return fixed_points(fx); }},
      {6, "elimination certificates for S_III and S_IV", [&] { return xiao(fx); }},
      {7, "every (K^2, n) table cell is realized", tables},
      {8, "bicanonical degree 4 onto a quadric cone for (1, 0, 2)", bicanonical},
      {9, "conic space dimensions of the point fixtures", [&] { return conics(fx); }},
      {10, "property suites, 100 instances each", properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::printf("criterion %2d PASS  %s\n", c.number, c.title);
    } else {
      ++failed;
      std::printf("criterion %2d FAIL  %s: %s\n", c.number, c.title, why.c_str());
    }
  }
  return failed == 0 ? 0 : 1;
}
