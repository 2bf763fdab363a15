#include "duval/duval_planes.hpp"

#include <algorithm>
#include <tuple>

#include "duval/cover_invariants.hpp"
#include "duval/error.hpp"
#include "duval/ruled_models.hpp"

namespace duval {

std::string to_string(DuValType type) {
  switch (type) {
    case DuValType::B: return "B";
    case DuValType::D: return "D";
    case DuValType::Dn: return "Dn";
  }
  return "?";
}

DuValConfig type_b() { return DuValConfig{DuValType::B, 0, 0, 0, false, ConicGeneric{}}; }
DuValConfig type_d() { return DuValConfig{DuValType::D, 0, 0, 0, false, ConicGeneric{}}; }
DuValConfig type_dn(int n, int delta1, int delta2, bool gamma_infinitely_near, ConicEvidence conic) {
  return DuValConfig{DuValType::Dn, n, delta1, delta2, gamma_infinitely_near, std::move(conic)};
}

std::string label(const DuValConfig& c) {
  if (c.type != DuValType::Dn) return to_string(c.type);
  std::string s = "D" + std::to_string(c.n) + "(" + std::to_string(c.delta1) + "," + std::to_string(c.delta2) + ")";
  if (c.gamma_infinitely_near) s += "*";
  return s;
}

namespace {

CenterId id(const std::string& s) { return CenterId{s}; }
CenterId indexed(const char* prefix, int i, bool prime = false) {
  return CenterId{prefix + std::to_string(i) + (prime ? "'" : "")};
}

BranchModel build_unchecked(const DuValConfig& c) {
  switch (c.type) {
    case DuValType::B: {
      const ModelPtr f2 = make_surface(SurfaceKind::hirzebruch(2));
      // C0 + G' with G' in |7C0 + 14G|.
      return BranchModel{f2, 8 * negative_section_class(f2) + 14 * fibre_class(f2), {}};
    }
    case DuValType::D: {
      const ModelPtr p2 = make_surface(SurfaceKind::plane());
      return BranchModel{p2, 8 * line_class(p2), {}};
    }
    case DuValType::Dn: break;
  }
  const ModelPtr p2 = make_surface(SurfaceKind::plane());
  BranchModel b{p2, (10 + 2 * c.n) * line_class(p2), {}};
  if (c.n >= 1) {
    std::optional<CenterId> parent;
    if (c.gamma_infinitely_near) parent = indexed("p", 1, true);
    b.singularities.push_back(Mtuple{id("gamma"), 2 * c.n + 2, parent});
  }
  for (int i = 1; i <= c.n; ++i) b.singularities.push_back(RRpoint{indexed("p", i), indexed("p", i, true), 5, std::nullopt});
  for (int j = 1; j <= c.delta1; ++j) {
    b.singularities.push_back(RRpoint{indexed("q", j), indexed("q", j, true), 3, std::nullopt});
  }
  for (int j = 1; j <= c.delta2; ++j) b.singularities.push_back(Mtuple{indexed("r", j), 4, std::nullopt});
  return b;
}

// A genus-2 pencil on the resolution means the surface is in the standard
// case and is not one of ours.
std::optional<std::string> standard_case_witness(const DuValConfig& c) {
  if (c.type != DuValType::Dn) return std::nullopt;
  const bool lines = c.n == 0 && c.delta2 >= 1;
  const bool conics = c.n == 1 && c.delta2 >= 2;
  if (!lines && !conics) return std::nullopt;
  const ResolvedCover cover = resolve(build_unchecked(c));
  const ModelPtr& w = cover.model;
  DivisorClass f = line_class(w) - exceptional_class(w, id("r1"));
  if (conics) {
    f = 2 * line_class(w) - exceptional_class(w, id("r1")) - exceptional_class(w, id("r2")) -
        exceptional_class(w, id("p1")) - exceptional_class(w, id("p1'"));
  }
  const std::int64_t g = pencil_genus(cover, f);
  if (g != 2) return std::nullopt;
  return std::string("standard case: the pencil ") + f.to_string() + " has genus 2";
}

void require_admissible(const DuValConfig& c) {
  const AdmissibilityReport r = check_admissible(c);
  if (r.admissible) return;
  std::string msg = label(c) + " is not admissible";
  for (const auto& reason : r.reasons) msg += "; " + reason;
  throw Error(ErrorCode::Inadmissible, msg);
}

Irregularity irregularity_given_chi(const DuValConfig& c, int chi) {
  const Irregularity regular{chi - 1, 0};
  if (c.type != DuValType::Dn) return regular;
  const int m = c.n + c.delta1 + c.delta2;

  bool on_conic = std::holds_alternative<ConicOnConic>(c.conic);
  if (const auto* coords = std::get_if<ConicCoordinates>(&c.conic)) {
    if (static_cast<int>(coords->points.size()) != m) {
      throw Error(ErrorCode::BadEvidence, "expected " + std::to_string(m) + " points, got " +
                                              std::to_string(coords->points.size()));
    }
    const int dim = conic_space_dim(coords->points);
    if (m == 6) {
      if (dim >= 2) throw Error(ErrorCode::BadEvidence, "five of the six points are collinear or two coincide");
      on_conic = dim == 1;
    } else if (dim != 6 - m) {
      throw Error(ErrorCode::BadEvidence, "points are not distinct with no four on a line (conics through them: " +
                                              std::to_string(dim) + ")");
    }
  }
  if (m != 6 || !on_conic) return regular;
  const bool eligible = c.n >= 2 || (c.n == 1 && !c.gamma_infinitely_near && c.delta1 == 5 && c.delta2 == 0);
  if (!eligible) return regular;
  return {1, 1};
}

}  // namespace

AdmissibilityReport check_admissible(const DuValConfig& c) {
  AdmissibilityReport r;
  auto fail = [&](std::string why) {
    r.admissible = false;
    r.reasons.push_back(std::move(why));
  };
  if (c.type != DuValType::Dn) {
    if (c.n != 0 || c.delta1 != 0 || c.delta2 != 0 || c.gamma_infinitely_near) {
      fail("type " + to_string(c.type) + " takes no n, delta1, delta2 or gamma flag");
    }
    return r;
  }
  if (c.n < 0 || c.n > 6) fail("n must lie in 0..6");
  if (c.delta1 < 0 || c.delta2 < 0) fail("delta1 and delta2 must be non-negative");
  if (c.n + c.delta1 + c.delta2 > 6) fail("n + delta1 + delta2 <= 6 fails");
  if (c.n <= 1 && c.delta2 > c.n) fail("delta2 <= n fails (required for n <= 1)");
  if (c.gamma_infinitely_near && c.n != 1) fail("gamma can only be infinitely near p1' when n = 1");
  if (c.n >= 0 && c.n <= 6 && c.delta1 >= 0 && c.delta2 >= 0 && (c.gamma_infinitely_near ? c.n == 1 : true)) {
    if (auto w = standard_case_witness(c)) fail(*w);
  }
  return r;
}

BranchModel build_branch(const DuValConfig& config) {
  require_admissible(config);
  return build_unchecked(config);
}

std::vector<DivisorClass> minus_two_candidates(const DuValConfig& c, const ModelPtr& w) {
  std::vector<DivisorClass> out;
  if (c.type == DuValType::B) {
    out.push_back(negative_section_class(w));
    return out;
  }
  if (c.type == DuValType::D) return out;
  for (int i = 1; i <= c.n; ++i) {
    out.push_back(line_class(w) - exceptional_class(w, id("gamma")) - exceptional_class(w, indexed("p", i)) -
                  exceptional_class(w, indexed("p", i, true)));
  }
  for (int i = 1; i <= c.n; ++i) {
    out.push_back(exceptional_class(w, indexed("p", i)) - exceptional_class(w, indexed("p", i, true)));
  }
  for (int j = 1; j <= c.delta1; ++j) {
    out.push_back(exceptional_class(w, indexed("q", j)) - exceptional_class(w, indexed("q", j, true)));
  }
  return out;
}

bool base_point_free_regime(const DuValConfig& c) {
  return c.type == DuValType::Dn && (c.n >= 2 || (c.n == 1 && !c.gamma_infinitely_near));
}

SurfaceReport surface_report(const DuValConfig& c) {
  require_admissible(c);
  const ResolvedCover cover = resolve(build_unchecked(c));
  SurfaceReport r;
  r.chi = static_cast<int>(chi_of_cover(cover, 1));
  r.ksq_resolution = static_cast<int>(ksq_of_resolution(cover));
  r.h0_2k_delta = static_cast<int>(h0_two_k_plus_delta(cover, 1));
  r.minus_two_curves = static_cast<int>(minus_two_components(cover, minus_two_candidates(c, cover.model)).size());

  switch (c.type) {
    case DuValType::B:
      r.ksq_minimal = r.ksq_resolution + r.minus_two_curves;
      r.pencil = PencilReport{3, true, 1, 0};
      break;
    case DuValType::D:
      r.ksq_minimal = r.ksq_resolution;
      r.ample_canonical = true;
      break;
    case DuValType::Dn:
      if (base_point_free_regime(c)) {
        r.ksq_minimal = 8 - c.delta1 - 2 * c.delta2;
        r.pencil = PencilReport{3, true, 0, c.n};
      } else {
        r.ksq_minimal = 8 - c.n - c.delta1 - 2 * c.delta2;
        if (c.n == 0 && c.delta1 == 0) {
          r.ample_canonical = true;
        } else {
          r.pencil = PencilReport{3, true, 1, c.n};
        }
      }
      break;
  }

  const Irregularity irr = irregularity_given_chi(c, r.chi);
  r.pg = irr.pg;
  r.q = irr.q;
  const FixedPoints fp = fixed_point_counts(r.ksq_minimal, r.chi, 1, r.h0_2k_delta);
  r.k_isolated = static_cast<int>(fp.k);
  r.kr = static_cast<int>(fp.kr);
  r.torsion_rank_lower = (c.type == DuValType::Dn && c.n >= 2) ? c.n - 1 : 0;
  r.bicanonical_degree = (r.pg == 1 && r.q == 0 && r.ksq_minimal == 2) ? 4 : 2;
  if (r.ksq_minimal >= 2) r.bicanonical_image_degree = 4 * r.ksq_minimal / r.bicanonical_degree;

  if (r.ksq_minimal <= 0) {
    r.notes.push_back("K^2 = " + std::to_string(r.ksq_minimal) + " is not positive; no minimal surface of general type has these numbers");
  } else if (r.ksq_minimal == 1 && c.type == DuValType::Dn) {
    r.notes.push_back("K^2 = 1 does not appear in the p_g <= 1 classification tables");
  }
  return r;
}

Irregularity irregularity(const DuValConfig& c) {
  require_admissible(c);
  const int chi = static_cast<int>(chi_of_cover(resolve(build_unchecked(c)), 1));
  return irregularity_given_chi(c, chi);
}

std::vector<DuValConfig> admissible_dn_configs() {
  std::vector<DuValConfig> out;
  for (int n = 0; n <= 6; ++n) {
    for (int d1 = 0; n + d1 <= 6; ++d1) {
      for (int d2 = 0; n + d1 + d2 <= 6; ++d2) {
        for (bool inf : {false, true}) {
          if (inf && n != 1) continue;
          DuValConfig c = type_dn(n, d1, d2, inf);
          if (check_admissible(c).admissible) out.push_back(c);
        }
      }
    }
  }
  return out;
}

std::vector<ClassifiedSurface> enumerate_classification(int pg, int q, std::optional<int> ksq) {
  std::vector<ClassifiedSurface> out;
  const bool irregular = pg == 1 && q == 1;
  for (DuValConfig c : admissible_dn_configs()) {
    if (6 - c.n - c.delta1 - c.delta2 != pg - q) continue;
    if (irregular) c.conic = ConicOnConic{};
    SurfaceReport r = surface_report(c);
    if (r.pg != pg || r.q != q) continue;
    if (ksq && r.ksq_minimal != *ksq) continue;
    out.push_back({c, std::move(r)});
  }
  std::sort(out.begin(), out.end(), [](const ClassifiedSurface& a, const ClassifiedSurface& b) {
    return std::tuple(a.report.ksq_minimal, a.config.n, a.config.delta1, a.config.delta2, a.config.gamma_infinitely_near) <
           std::tuple(b.report.ksq_minimal, b.config.n, b.config.delta1, b.config.delta2, b.config.gamma_infinitely_near);
  });
  return out;
}

DuValConfig convert_d0_to_d1(const DuValConfig& c, bool tangent_lines_distinct) {
  if (c.type != DuValType::Dn || c.n != 0) throw Error(ErrorCode::Inadmissible, "conversion starts from type D0");
  if (c.delta1 < 2) throw Error(ErrorCode::Inadmissible, "conversion needs at least two [3,3]-points");
  require_admissible(c);
  if (!tangent_lines_distinct) {
    throw Error(ErrorCode::NotConvertible, "the tangent lines at q1 and q2 coincide");
  }

  const int degree = 10;
  const PlaneCurveData image = cremona_numbers({degree, {3, 3, 3}});
  if (image != PlaneCurveData{11, {4, 4, 4}}) {
    throw Error(ErrorCode::NotConvertible, "quadratic transform of the branch has unexpected degree");
  }

  const DuValConfig d1 = type_dn(1, c.delta1 - 2, 1, false);
  const ResolvedCover before = resolve(build_unchecked(c));
  const TransformStep step = cremona_quadratic(before.model, {id("q1"), id("q1'"), id("q2")});
  const DivisorClass mapped = step.apply(before.smooth_class);
  const ResolvedCover after = resolve(build_unchecked(d1));

  // Compare degree and the multiset of subtractions; the centers are
  // relabelled (q1^, q1'^) -> (p1, p1'), q2^ -> r1, q2' -> gamma.
  auto profile = [](const DivisorClass& cls) {
    std::vector<std::int64_t> v(cls.coeffs().begin() + 1, cls.coeffs().end());
    std::sort(v.begin(), v.end());
    return std::pair(cls[0], v);
  };
  if (profile(mapped) != profile(after.smooth_class)) {
    throw Error(ErrorCode::NotConvertible, "transformed branch " + mapped.to_string() + " does not match " +
                                               after.smooth_class.to_string());
  }
  return d1;
}

}  // namespace duval
