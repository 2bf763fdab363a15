#include "catalog.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "duval/classification_tables.hpp"
#include "duval/conic.hpp"
#include "duval/cover_invariants.hpp"
#include "duval/error.hpp"
#include "fixture_data.hpp"

namespace duval::cli {

std::string to_string(Basis basis) {
  switch (basis) {
    case Basis::Reference: return "reference";
    case Basis::Elementary: return "elementary";
    case Basis::Derived: return "derived";
  }
  return "?";
}

namespace {

// Key order is irrelevant when comparing a computed object with a fixture.
bool same_value(const Json& a, const Json& b) { return nlohmann::json::parse(a.dump()) == nlohmann::json::parse(b.dump()); }

class Catalog {
 public:
  void add(std::string id, std::string statement, Basis basis, Json expected, const std::function<Json()>& compute) {
    add_noted(std::move(id), std::move(statement), basis, std::move(expected),
              [&](std::vector<std::string>&) { return compute(); });
  }

  void add_noted(std::string id, std::string statement, Basis basis, Json expected,
                 const std::function<Json(std::vector<std::string>&)>& compute) {
    CheckRecord r{std::move(id), std::move(statement), nullptr, std::move(expected), basis, false, {}};
    try {
      r.computed = compute(r.notes);
      r.pass = same_value(r.computed, r.expected);
    } catch (const std::exception& e) {
      r.computed = Json{{"exception", e.what()}};
    }
    records_.push_back(std::move(r));
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  std::vector<CheckRecord> records_;
};

std::string triple(const DuValConfig& c) {
  return "(" + std::to_string(c.n) + "," + std::to_string(c.delta1) + "," + std::to_string(c.delta2) + ")" +
         (c.gamma_infinitely_near ? "*" : "");
}

ResolvedCover smooth_plane(int degree) {
  const ModelPtr p2 = make_surface(SurfaceKind::plane());
  return resolve(BranchModel{p2, degree * line_class(p2), {}});
}

const Json& fixtures() {
  static const Json j = Json::parse(fixtures::derived_json());
  return j;
}

const Json& sweep_row(const DuValConfig& c) {
  for (const auto& row : fixtures().at("sweep")) {
    if (row.at("n") == c.n && row.at("delta1") == c.delta1 && row.at("delta2") == c.delta2 &&
        row.at("gamma_infinitely_near") == c.gamma_infinitely_near) {
      return row;
    }
  }
  throw std::runtime_error("no fixture row for " + label(c));
}

void smooth_branches(Catalog& cat) {
  const std::pair<int, Json> published[] = {{8, Json::array({3, 0, 2})}, {10, Json::array({6, 0, 8})}};
  for (const auto& [degree, expected] : published) {
    cat.add("smooth-plane-branch(" + std::to_string(degree) + ")",
            "double plane branched along a smooth curve of degree " + std::to_string(degree) + " has (p_g, q, K^2) = " +
                expected.dump(),
            Basis::Reference, expected, [degree = degree] {
              const ResolvedCover c = smooth_plane(degree);
              return Json::array({chi_of_cover(c, 1) - 1, 0, ksq_of_resolution(c)});
            });
  }
  for (const auto& row : fixtures().at("plane_smooth")) {
    const int degree = row.at("degree").get<int>();
    Json expected = row;
    expected.erase("degree");
    cat.add("smooth-plane-ledger(" + std::to_string(degree) + ")",
            "chi, K^2 and h0(2K + Delta) for a smooth plane branch of degree " + std::to_string(degree),
            Basis::Derived, expected, [degree] {
              const ResolvedCover c = smooth_plane(degree);
              return Json{{"chi", chi_of_cover(c, 1)},
                          {"h0", h0_two_k_plus_delta(c, 1)},
                          {"ksq_resolution", ksq_of_resolution(c)}};
            });
  }
  cat.add("smooth-f2-ledger", "chi, K^2 and h0(2K + Delta) for a smooth branch in |8C0 + 14G| on F2", Basis::Derived,
          fixtures().at("f2_smooth"), [] {
            const ModelPtr f2 = make_surface(SurfaceKind::hirzebruch(2));
            const ResolvedCover c = resolve(BranchModel{f2, 8 * negative_section_class(f2) + 14 * fibre_class(f2), {}});
            return Json{{"chi", chi_of_cover(c, 1)},
                        {"h0", h0_two_k_plus_delta(c, 1)},
                        {"ksq_resolution", ksq_of_resolution(c)}};
          });
}

void fixed_types(Catalog& cat) {
  cat.add("type-b-report", "type B double plane has p_g = 6 and K^2 = 9", Basis::Reference, Json::array({6, 9}), [] {
    const SurfaceReport r = surface_report(type_b());
    return Json::array({r.pg, r.ksq_minimal});
  });
  cat.add("type-d-report", "type D double plane has (p_g, q, K^2) = (3, 0, 2) and ample canonical class",
          Basis::Elementary, Json::array({3, 0, 2, true}), [] {
            const SurfaceReport r = surface_report(type_d());
            return Json::array({r.pg, r.q, r.ksq_minimal, r.ample_canonical.value_or(false)});
          });
}

void resolution_sweep(Catalog& cat, const std::vector<DuValConfig>& configs) {
  for (const auto& c : configs) {
    const int s = c.n + c.delta1 + c.delta2;
    cat.add("resolution-chi" + triple(c), "chi(O_S*) = 7 - n - delta1 - delta2, from the ledger and on W_s",
            Basis::Reference, Json::array({7 - s, 7 - s}), [&c] {
              const ResolvedCover cover = resolve(build_branch(c));
              return Json::array({chi_of_cover(cover, 1), chi_of_cover_on_resolution(cover, 1)});
            });
    cat.add("resolution-ksq" + triple(c), "K^2 of S* = 8 - 2n - 2 delta1 - 2 delta2, from the ledger and on W_s",
            Basis::Reference, Json::array({8 - 2 * s, 8 - 2 * s}), [&c] {
              const ResolvedCover cover = resolve(build_branch(c));
              return Json::array({ksq_of_resolution(cover), ksq_of_resolution_on_resolution(cover)});
            });
    Json expected = sweep_row(c);
    for (const char* k : {"n", "delta1", "delta2", "gamma_infinitely_near"}) expected.erase(k);
    cat.add("resolution-oracle" + triple(c), "report numbers agree with the brute-force ledger", Basis::Derived,
            expected, [&c] {
              const SurfaceReport r = surface_report(c);
              return Json{{"chi", r.chi},
                          {"h0", r.h0_2k_delta},
                          {"ksq_resolution", r.ksq_resolution},
                          {"minus_two_curves", r.minus_two_curves}};
            });
  }
}

void minimal_models(Catalog& cat, const std::vector<DuValConfig>& configs) {
  for (const auto& c : configs) {
    const bool bpf = base_point_free_regime(c);
    const int expected = bpf ? 8 - c.delta1 - 2 * c.delta2 : 8 - c.n - c.delta1 - 2 * c.delta2;
    cat.add("minimal-ksq" + triple(c),
            bpf ? "K_S^2 = 8 - delta1 - 2 delta2 when |2K| has no base point from gamma"
                : "K_S^2 = 8 - n - delta1 - 2 delta2 when gamma gives a base point",
            Basis::Reference, expected, [&c] { return surface_report(c).ksq_minimal; });
    if (!bpf) continue;
    const int count = 2 * c.n + c.delta1;
    cat.add("minus-two-count" + triple(c), "K_S^2 - K_S*^2 equals the number 2n + delta1 of (-2)-curves in B_s",
            Basis::Reference, Json::array({count, count}), [&c] {
              const SurfaceReport r = surface_report(c);
              return Json::array({r.ksq_minimal - r.ksq_resolution, r.minus_two_curves});
            });
  }
  auto multiset = [](const MultisetCheck& m) { return Json{{"missing", m.missing}, {"extra", m.extra}}; };
  const Json clean{{"missing", Json::array()}, {"extra", Json::array()}};
  cat.add("chi-ksq-table-n-ge-2", "(chi - 1, K^2) over D_n with n >= 2 is the published multiset", Basis::Reference,
          clean, [&] { return multiset(check_base_point_free_table()); });
  cat.add_noted("chi-ksq-table-n-le-1",
                "(chi - 1, K^2) over D_0 and D_1 with gamma not infinitely near is the published multiset",
                Basis::Reference, clean, [&](std::vector<std::string>& notes) {
                  const MultisetCheck m = check_one_base_point_table();
                  for (const auto& r : m.residue) notes.push_back("not tabulated: " + r);
                  return multiset(m);
                });
}

void vanishing_and_fixed_points(Catalog& cat, const std::vector<DuValConfig>& configs) {
  for (int n = 2; n <= 6; ++n) {
    cat.add("h0-vanishing(" + std::to_string(n) + ")",
            "h0(2K_s + Delta_s) = 1/2 (n^2 + n - 2) - 1/8 (4n^2 + 4n) + 1 = 0 for D_n with no further points",
            Basis::Reference, Json::array({0, 0}), [n] {
              // Times 8, so the closed form stays integral.
              const int closed = 4 * (n * n + n - 2) - (4 * n * n + 4 * n) + 8;
              return Json::array({surface_report(type_dn(n, 0, 0)).h0_2k_delta, closed});
            });
  }
  const Json& rows = fixtures().at("fixed_points");
  for (const auto& c : configs) {
    if (c.n < 2) continue;
    const Json* row = nullptr;
    for (const auto& r : rows) {
      if (r.at("n") == c.n && r.at("delta1") == c.delta1 && r.at("delta2") == c.delta2) row = &r;
    }
    const Json expected = row ? row->at("k") : Json(nullptr);
    cat.add("fixed-points" + triple(c), "isolated fixed points of the involution on S, from the oracle ledger",
            Basis::Derived, expected, [&c] { return surface_report(c).k_isolated; });
    cat.add("fixed-points-count" + triple(c), "isolated fixed points equal 2n + delta1 when h0(2K + Delta) = 0",
            Basis::Reference, 2 * c.n + c.delta1, [&c] { return surface_report(c).k_isolated; });
  }
}

void xiao(Catalog& cat) {
  cat.add("xiao-s3-d-squared", "case S_III: the fibre class D has D^2 = 0", Basis::Reference, 0,
          [] { return eliminate_xiao_case(XiaoCase::III).d_squared; });
  cat.add("xiao-s3-d-dot-k", "case S_III: D.K = -2", Basis::Reference, -2,
          [] { return eliminate_xiao_case(XiaoCase::III).d_dot_k; });
  cat.add("xiao-s3-d-dot-branch", "case S_III: D.B = 8", Basis::Reference, 8,
          [] { return eliminate_xiao_case(XiaoCase::III).d_dot_branch; });
  cat.add("xiao-s4-d-dot-branch", "case S_IV: D.B = 12, below 16", Basis::Derived,
          fixtures().at("xiao").at("IV").at("d_dot_branch"),
          [] { return eliminate_xiao_case(XiaoCase::IV).d_dot_branch; });
  for (const auto& [name, which] : {std::pair("III", XiaoCase::III), std::pair("IV", XiaoCase::IV)}) {
    const std::string tag = name == std::string("III") ? "s3" : "s4";
    cat.add("xiao-" + tag + "-certificate", "all intersection numbers of the case " + std::string(name) +
                                                " certificate agree with the oracle",
            Basis::Derived, fixtures().at("xiao").at(name), [which = which] {
              const EliminationCertificate e = eliminate_xiao_case(which);
              return Json{{"d_dot_base_branch", e.d_dot_base_branch}, {"d_dot_branch", e.d_dot_branch},
                          {"d_dot_e0", e.d_dot_e0},       {"d_dot_k", e.d_dot_k},
                          {"d_squared", e.d_squared},     {"xi", e.xi}};
            });
    cat.add("xiao-" + tag + "-eliminated", "D.B < xi, so the case cannot occur", Basis::Elementary, true,
            [which = which] { return eliminate_xiao_case(which).holds(); });
  }
}

void conversions(Catalog& cat) {
  cat.add("cremona-numbers-d0", "quadratic transform at the three triple points of a degree-10 curve gives (11; 4, 4, 4)",
          Basis::Reference, Json::array({11, 4, 4, 4}), [] {
            const PlaneCurveData p = cremona_numbers({10, {3, 3, 3}});
            return Json::array({p.degree, p.multiplicities[0], p.multiplicities[1], p.multiplicities[2]});
          });
  for (const auto& row : fixtures().at("cremona_d0")) {
    const int d1 = row.at("delta1").get<int>();
    const DuValConfig d0 = type_dn(0, d1, 0);
    cat.add("d0-to-d1(" + std::to_string(d1) + ")", "D_0 with distinct tangent lines at q1, q2 converts to D_1",
            Basis::Reference, label(type_dn(1, d1 - 2, 1)), [d0] { return label(convert_d0_to_d1(d0, true)); });
    Json expected = row;
    expected.erase("delta1");
    cat.add("cremona-d0-profile(" + std::to_string(d1) + ")",
            "degree and sorted subtractions of the transformed smooth branch", Basis::Derived, expected, [d0] {
              const ResolvedCover before = resolve(build_branch(d0));
              const TransformStep step =
                  cremona_quadratic(before.model, {CenterId{"q1"}, CenterId{"q1'"}, CenterId{"q2"}});
              const DivisorClass mapped = step.apply(before.smooth_class);
              std::vector<std::int64_t> subs;
              for (std::size_t i = 1; i < mapped.coeffs().size(); ++i) subs.push_back(-mapped[i]);
              std::sort(subs.begin(), subs.end());
              return Json{{"degree", mapped[0]}, {"subtractions", subs}};
            });
  }
  for (int n = 1; n <= 6; ++n) {
    const int i = n - 1;
    cat.add("f2-chain(" + std::to_string(n) + ")",
            "elementary transform of 8C0 + (16 + 2i)G on F2 at a [5,5]-point, then contraction, gives B.C0 = 2n + 2 "
            "on F1 and a degree 10 + 2n plane curve with a (2n + 2)-tuple point",
            Basis::Reference, Json::array({2 * n + 2, 10 + 2 * n, 2 * n + 2}), [n, i] {
              const ModelPtr f2 = make_surface(SurfaceKind::hirzebruch(2));
              BranchModel b{f2, 8 * negative_section_class(f2) + (16 + 2 * i) * fibre_class(f2), {}};
              for (int k = 1; k <= n; ++k) {
                const std::string p = "p" + std::to_string(k);
                b.singularities.push_back(RRpoint{CenterId{p}, CenterId{p + "'"}, 5, std::nullopt});
              }
              const auto elm = elementary_transform(b, {CenterId{"p1"}, false, 5, false, std::nullopt});
              const auto f1 = elm.branch.ambient;
              const auto plane = contract_negative_section(elm.branch, false);
              return Json::array({intersect(elm.branch.branch_class, negative_section_class(f1)),
                                  plane.branch.branch_class[0], plane.image_multiplicity});
            });
  }
}

void bicanonical(Catalog& cat) {
  cat.add("bicanonical-degree-four",
          "D_2 with three 4-tuple points: (p_g, q, K^2) = (1, 0, 2), bicanonical map of degree 4 onto a quadric cone",
          Basis::Reference, Json::array({1, 0, 2, 4, 2}), [] {
            const SurfaceReport r = surface_report(type_dn(2, 0, 3));
            return Json::array({r.pg, r.q, r.ksq_minimal, r.bicanonical_degree, r.bicanonical_image_degree.value_or(0)});
          });
}

void tables(Catalog& cat) {
  for (const KsqNTable* t : {&regular_pg0_table(), &regular_pg1_table(), &irregular_pg1_table()}) {
    cat.add_noted("table-" + t->name, "every (K^2, n) cell is realized: " + t->source, Basis::Reference,
                  Json::array(), [t](std::vector<std::string>& notes) {
              const TableCheck check = table_check(*t, enumerate_classification(t->pg, t->q));
              notes = check.warnings;
              for (const auto& o : check.outside_range) notes.push_back(o + " lies outside the tabulated range");
              Json unrealized = Json::array();
              for (const auto& c : check.cells) {
                if (c.realized_by.empty()) unrealized.push_back(Json::array({c.ksq, c.n}));
              }
              return unrealized;
            });
  }
  cat.add("classify-pg1-q0-ksq8", "p_g = 1, q = 0, K^2 = 8 occurs only for n = 5", Basis::Reference,
          Json::array({5}), [] {
            std::set<int> ns;
            for (const auto& s : enumerate_classification(1, 0, 8)) ns.insert(s.config.n);
            return Json(std::vector<int>(ns.begin(), ns.end()));
          });
  cat.add("classify-pg1-q1-ksq7", "p_g = q = 1, K^2 = 7 is D_5 with one [3,3]-point", Basis::Reference,
          Json::array({"D5(1,0)"}), [] {
            Json labels = Json::array();
            for (const auto& s : enumerate_classification(1, 1, 7)) labels.push_back(label(s.config));
            return labels;
          });
}

void conics(Catalog& cat) {
  for (const auto& f : fixtures().at("conic")) {
    const std::string name = f.at("name").get<std::string>();
    cat.add("conic-dim(" + name + ")", "dimension of the space of conics through the fixture points", Basis::Derived,
            f.at("dim"), [&f] {
              std::vector<ProjectivePoint> pts;
              for (std::size_t i = 0; i < f.at("points").size(); ++i) {
                const Json& p = f.at("points")[i];
                const std::string path = "points[" + std::to_string(i) + "]";
                pts.push_back({{rational_from_json(p[0], path), rational_from_json(p[1], path),
                                rational_from_json(p[2], path)}});
              }
              return conic_space_dim(pts);
            });
  }
}

void lattice_samples(Catalog& cat) {
  const Json& pairs = fixtures().at("pairings");
  cat.add("pairing-f1", "(4C0 + 5G).(12C0 + 20G) on F1", Basis::Derived, pairs.at("f1_4c0_5g_dot_12c0_20g"), [] {
    const ModelPtr f1 = make_surface(SurfaceKind::hirzebruch(1));
    const DivisorClass c0 = negative_section_class(f1), g = fibre_class(f1);
    return intersect(4 * c0 + 5 * g, 12 * c0 + 20 * g);
  });
  cat.add("pairing-f2-section", "C0.(8C0 + 14G) on F2", Basis::Derived, pairs.at("f2_c0_dot_8c0_14g"), [] {
    const ModelPtr f2 = make_surface(SurfaceKind::hirzebruch(2));
    return intersect(negative_section_class(f2), 8 * negative_section_class(f2) + 14 * fibre_class(f2));
  });
  cat.add("pairing-f2-fibre", "G.(8C0 + 14G) on F2", Basis::Derived, pairs.at("f2_branch_dot_fibre"), [] {
    const ModelPtr f2 = make_surface(SurfaceKind::hirzebruch(2));
    return intersect(fibre_class(f2), 8 * negative_section_class(f2) + 14 * fibre_class(f2));
  });

  const Json& pencils = fixtures().at("pencils");
  cat.add("guard-line-pencil", "lines through a 4-tuple point of a degree-10 branch", Basis::Derived,
          pencils.at("line_through_4_tuple_deg10"), [] {
            const ModelPtr p2 = make_surface(SurfaceKind::plane());
            const ResolvedCover c = resolve(BranchModel{p2, 10 * line_class(p2), {Mtuple{CenterId{"r"}, 4, {}}}});
            const DivisorClass f = line_class(c.model) - exceptional_class(c.model, CenterId{"r"});
            return Json{{"dot_branch", intersect(f, c.smooth_class)}, {"self", intersect(f, f)}};
          });
  cat.add("guard-conic-pencil", "conics through r1, r2, p1, p1' on D_1 with two 4-tuple points", Basis::Derived,
          pencils.at("conic_d1_two_4_tuples"), [] {
            const ModelPtr p2 = make_surface(SurfaceKind::plane());
            BranchModel b{p2, 12 * line_class(p2), {}};
            b.singularities = {Mtuple{CenterId{"gamma"}, 4, {}}, RRpoint{CenterId{"p1"}, CenterId{"p1'"}, 5, {}},
                               Mtuple{CenterId{"r1"}, 4, {}}, Mtuple{CenterId{"r2"}, 4, {}}};
            const ResolvedCover c = resolve(b);
            const ModelPtr& w = c.model;
            const DivisorClass f = 2 * line_class(w) - exceptional_class(w, CenterId{"r1"}) -
                                   exceptional_class(w, CenterId{"r2"}) - exceptional_class(w, CenterId{"p1"}) -
                                   exceptional_class(w, CenterId{"p1'"});
            return Json{{"dot_branch", intersect(f, c.smooth_class)}, {"self", intersect(f, f)}};
          });
  cat.add("guard-rejects-d0-with-4-tuple", "D_0 with a 4-tuple point is in the standard case", Basis::Elementary, false,
          [] { return check_admissible(type_dn(0, 0, 1)).admissible; });

  cat.add("isometry-elementary", "elementary transforms at points on and off C0 preserve the pairing",
          Basis::Elementary, Json::array({true, true, true, true}), [] {
            Json out = Json::array();
            for (int e : {1, 2}) {
              const ModelPtr f = make_surface(SurfaceKind::hirzebruch(e));
              const BranchModel b{f, 6 * negative_section_class(f) + (3 * e + 4) * fibre_class(f), {}};
              for (bool on : {true, false}) {
                const ElementaryResult r =
                    elementary_transform(b, ElementaryCenter{CenterId{"x"}, on, on ? 1 : 0, false, std::nullopt});
                out.push_back(r.step.is_isometry());
              }
            }
            return out;
          });
  cat.add("isometry-contraction", "contracting C0 on F1 preserves the pairing", Basis::Elementary, true, [] {
    const ModelPtr f1 = make_surface(SurfaceKind::hirzebruch(1));
    const BranchModel b{f1, 4 * negative_section_class(f1) + 6 * fibre_class(f1), {}};
    return contract_negative_section(b, false).step.is_isometry();
  });
  cat.add("cremona-involution", "the quadratic transform applied twice is the identity on a D_0 branch",
          Basis::Elementary, Json::array({true, true}), [] {
            const ResolvedCover before = resolve(build_branch(type_dn(0, 3, 0)));
            const std::array<CenterId, 3> ids{CenterId{"q1"}, CenterId{"q2"}, CenterId{"q3"}};
            const TransformStep there = cremona_quadratic(before.model, ids);
            const TransformStep back = cremona_quadratic(
                there.target, {CenterId{"q1^"}, CenterId{"q2^"}, CenterId{"q3^"}}, ids);
            const DivisorClass round = back.apply(there.apply(before.smooth_class));
            return Json::array({there.is_isometry(), round.coeffs().size() == before.smooth_class.coeffs().size() &&
                                                         std::equal(round.coeffs().begin(), round.coeffs().end(),
                                                                    before.smooth_class.coeffs().begin())});
          });
}

}  // namespace

std::vector<CheckRecord> run_catalog() {
  Catalog cat;
  const std::vector<DuValConfig> configs = admissible_dn_configs();
  smooth_branches(cat);
  fixed_types(cat);
  resolution_sweep(cat, configs);
  minimal_models(cat, configs);
  vanishing_and_fixed_points(cat, configs);
  xiao(cat);
  conversions(cat);
  bicanonical(cat);
  tables(cat);
  conics(cat);
  lattice_samples(cat);
  return cat.take();
}

Json catalog_to_json(const std::vector<CheckRecord>& records) {
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& r : records) {
    if (!r.pass) ++failed;
    checks.push_back(Json{{"id", r.id},
                          {"statement", r.statement},
                          {"computed", r.computed},
                          {"expected", Json{{"value", r.expected}, {"basis", to_string(r.basis)}}},
                          {"status", r.pass ? "pass" : "fail"}});
    if (!r.notes.empty()) checks.back()["notes"] = r.notes;
  }
  return Json{{"checks", checks}, {"total", records.size()}, {"failed", failed}};
}

}  // namespace duval::cli
