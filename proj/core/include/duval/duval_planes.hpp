#pragma once

// Du Val double planes of types B, D and D_n: admissibility, branch data,
// invariants of the minimal model, and the enumeration behind the p_g <= 1
// classification tables.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "duval/branch_resolution.hpp"
#include "duval/conic.hpp"

namespace duval {

enum class DuValType { B, D, Dn };

std::string to_string(DuValType type);

struct ConicGeneric {
  friend bool operator==(const ConicGeneric&, const ConicGeneric&) = default;
};
struct ConicOnConic {
  friend bool operator==(const ConicOnConic&, const ConicOnConic&) = default;
};
/// Coordinates of p1..pn, q1..q_delta1, r1..r_delta2 in that order.
struct ConicCoordinates {
  std::vector<ProjectivePoint> points;

  friend bool operator==(const ConicCoordinates&, const ConicCoordinates&) = default;
};

using ConicEvidence = std::variant<ConicGeneric, ConicOnConic, ConicCoordinates>;

struct DuValConfig {
  DuValType type = DuValType::Dn;
  int n = 0;
  /// Number of [3,3]-points.
  int delta1 = 0;
  /// Number of 4-tuple points.
  int delta2 = 0;
  /// n = 1 only: gamma lies on the exceptional curve over p1'.
  bool gamma_infinitely_near = false;
  ConicEvidence conic = ConicGeneric{};

  friend bool operator==(const DuValConfig&, const DuValConfig&) = default;
};

DuValConfig type_b();
DuValConfig type_d();
DuValConfig type_dn(int n, int delta1, int delta2, bool gamma_infinitely_near = false,
                    ConicEvidence conic = ConicGeneric{});

/// Short label such as "D2(0,3)" or "D1(4,0)*" (star: gamma infinitely near).
std::string label(const DuValConfig& config);

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<std::string> reasons;
};

AdmissibilityReport check_admissible(const DuValConfig& config);

/// Throws Inadmissible with the collected reasons.
BranchModel build_branch(const DuValConfig& config);

/// Strict transforms that can be (-2)-curves in the smooth branch: the lines
/// through gamma and p_i, the exceptional curves over odd [r,r]-first-points,
/// and C0 on F2.
std::vector<DivisorClass> minus_two_candidates(const DuValConfig& config, const ModelPtr& resolved);

struct PencilReport {
  int genus = 3;
  bool hyperelliptic = true;
  int base_points = 0;
  int double_fibres = 0;
  // Numerics of the pulled-back pencil on the resolution.
  int h_squared = 0;
  int h_dot_k = 4;
  int h_dot_r = 8;

  friend bool operator==(const PencilReport&, const PencilReport&) = default;
};

struct SurfaceReport {
  int pg = 0;
  int q = 0;
  int ksq_minimal = 0;
  int ksq_resolution = 0;
  int chi = 0;
  int k_isolated = 0;
  int kr = 0;
  int h0_2k_delta = 0;
  int minus_two_curves = 0;
  std::optional<PencilReport> pencil;
  int torsion_rank_lower = 0;
  int bicanonical_degree = 2;
  std::optional<bool> ample_canonical;
  std::optional<int> bicanonical_image_degree;
  std::vector<std::string> notes;

  friend bool operator==(const SurfaceReport&, const SurfaceReport&) = default;
};

/// True for n >= 2 and for n = 1 with gamma not infinitely near p1': the
/// (-2)-curves of the smooth branch account for K_S^2 - K_{S*}^2.
bool base_point_free_regime(const DuValConfig& config);

SurfaceReport surface_report(const DuValConfig& config);

struct Irregularity {
  int pg = 0;
  int q = 0;

  friend bool operator==(const Irregularity&, const Irregularity&) = default;
};

Irregularity irregularity(const DuValConfig& config);

struct ClassifiedSurface {
  DuValConfig config;
  SurfaceReport report;
};

/// Every admissible D_n configuration with p_g - q = pg - q whose report
/// has the requested (pg, q) and, when given, K^2. Sorted by
/// (K^2, n, delta1, delta2, gamma flag).
std::vector<ClassifiedSurface> enumerate_classification(int pg, int q, std::optional<int> ksq = std::nullopt);

/// All admissible D_n configurations (both gamma positions for n = 1).
std::vector<DuValConfig> admissible_dn_configs();

/// D0 with delta1 >= 2 [3,3]-points whose first two tangent lines differ
/// becomes D1 with a 4-tuple point and delta1 - 2 [3,3]-points.
DuValConfig convert_d0_to_d1(const DuValConfig& config, bool tangent_lines_distinct);

}  // namespace duval
