#pragma once

// Branch curves on Hirzebruch surfaces: the shape list for xi = B.G >= 8,
// elementary transformations, contraction of C0 on F1, the quadratic Cremona
// map of the plane, and the lattice certificates ruling out two shapes.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "duval/branch_resolution.hpp"

namespace duval {

struct RuledBranchShape {
  int xi = 0;
  int zeta = 0;
  int e = 0;
  /// (r, count) pairs of [r,r]-points.
  std::vector<std::pair<int, int>> rr_points;
  /// (m, count) pairs of further m-tuple points.
  std::vector<std::pair<int, int>> extra;
};

enum class ShapeKind { SI, SII, Eliminated, NotInList };

struct ShapeVerdict {
  ShapeKind kind = ShapeKind::NotInList;
  /// The index i for SII.
  std::optional<int> index;
  std::string reason;

  friend bool operator==(const ShapeVerdict&, const ShapeVerdict&) = default;
};

std::string to_string(ShapeKind kind);

ShapeVerdict shape_admissible(const RuledBranchShape& shape);

enum class XiaoCase { III, IV };

/// Lattice data showing that a shape cannot be minimal: a pencil |D| with
/// D^2 = 0, D.K = -2 (so a rational pencil) meeting the resolved branch in
/// fewer than xi points.
struct EliminationCertificate {
  XiaoCase which = XiaoCase::III;
  std::int64_t xi = 0;
  std::int64_t d_squared = 0;
  std::int64_t d_dot_k = 0;
  std::int64_t d_dot_e0 = 0;
  /// D against the base branch class, before subtractions.
  std::int64_t d_dot_base_branch = 0;
  std::int64_t d_dot_branch = 0;
  /// (C0 + G).B against 3r: a section through the three [r,r]-points would
  /// have to be a branch component.
  std::int64_t section_dot_branch = 0;
  std::int64_t section_bound = 0;
  std::vector<std::string> assumptions;

  bool holds() const noexcept { return d_squared == 0 && d_dot_k == -2 && d_dot_branch < xi; }
};

/// The branch of shape (12,14) or (16,18) on F1, written on the plane blown
/// up at p0 (F1 = Bl_p0 P2, C0 = E0, G = L - E0).
BranchModel xiao_branch(XiaoCase which);

EliminationCertificate eliminate_xiao_case(XiaoCase which);

enum class TransformKind { ElementaryOnSection, ElementaryOffSection, ContractNegativeSection, CremonaQuadratic };

std::string to_string(TransformKind kind);

/// An identification of the Picard lattices of two models of the same
/// surface. basis_images[i] is the class, in the source lattice, of the
/// i-th basis element of the target.
struct TransformStep {
  TransformKind kind;
  ModelPtr source;
  ModelPtr target;
  std::vector<DivisorClass> basis_images;

  DivisorClass apply(const DivisorClass& cls) const;
  DivisorClass apply_inverse(const DivisorClass& cls) const;
  bool is_isometry() const;
};

struct ElementaryCenter {
  /// The point p being blown up; it becomes a plain point of the target.
  CenterId point;
  bool on_negative_section = false;
  /// Multiplicity of the whole branch at p, counting the fibre through p if
  /// that fibre is a branch component.
  int multiplicity = 0;
  bool fibre_in_branch = false;
  /// Name for the image q of the contracted fibre. Defaults to point + "~".
  std::optional<CenterId> new_point;
};

struct ElementaryResult {
  BranchModel branch;
  TransformStep step;
  CenterId new_point;
  int new_multiplicity = 0;
  /// The exceptional curve over p is a branch component; it is the fibre
  /// through q on the target.
  bool new_fibre_in_branch = false;
};

/// elm_p: blow up p on F_e and contract the strict transform of its fibre.
/// The branch must live on a Hirzebruch surface without blow-ups.
ElementaryResult elementary_transform(const BranchModel& branch, const ElementaryCenter& center);

struct ContractionResult {
  BranchModel branch;
  TransformStep step;
  CenterId image_point;
  int image_multiplicity = 0;
};

/// Contracts C0 on F1 to a point gamma of the plane.
ContractionResult contract_negative_section(const BranchModel& branch, bool c0_in_branch,
                                            const CenterId& image_point = CenterId{"gamma"});

/// Lattice substitution L' = 2L - E1 - E2 - E3, E1' = L - E2 - E3, ... on a
/// plane model. The three centers keep their positions under new names.
TransformStep cremona_quadratic(const ModelPtr& plane_model, const std::array<CenterId, 3>& centers,
                                std::optional<std::array<CenterId, 3>> new_ids = std::nullopt);

struct PlaneCurveData {
  std::int64_t degree = 0;
  std::array<std::int64_t, 3> multiplicities{};

  friend bool operator==(const PlaneCurveData&, const PlaneCurveData&) = default;
};

/// d' = 2d - m1 - m2 - m3, m_i' = d - m_j - m_k.
PlaneCurveData cremona_numbers(const PlaneCurveData& curve);

}  // namespace duval
