#pragma once

// Canonical resolution of a branch curve at the level of divisor classes.
// Singularities are supplied by the caller; nothing here looks at equations.

#include <optional>
#include <variant>
#include <vector>

#include "duval/picard_lattice.hpp"

namespace duval {

/// An ordinary m-fold point.
struct Mtuple {
  CenterId center;
  int m = 0;
  std::optional<CenterId> parent;

  friend bool operator==(const Mtuple&, const Mtuple&) = default;
};

/// An [r,r]-point: multiplicity r at p and again r at p' on the exceptional
/// curve over p.
struct RRpoint {
  CenterId p;
  CenterId p_prime;
  int r = 0;
  /// Parent of p; p' always hangs off p.
  std::optional<CenterId> parent;

  friend bool operator==(const RRpoint&, const RRpoint&) = default;
};

using SingularityAssignment = std::variant<Mtuple, RRpoint>;

struct BranchModel {
  /// The surface W0 carrying B0. It may already contain blow-up centers
  /// (e.g. F1 written as a blown-up plane); these get no resolution step.
  ModelPtr ambient;
  DivisorClass branch_class;
  std::vector<SingularityAssignment> singularities;
};

struct ResolutionStep {
  CenterId center;
  std::optional<CenterId> parent;
  /// Multiplicity of the total branch at the center, including the
  /// exceptional curve when it joins the branch.
  int multiplicity = 0;
  int floor_half = 0;
  int subtraction = 0;
  /// The exceptional curve of this blow-up is a branch component.
  bool exceptional_in_branch = false;

  friend bool operator==(const ResolutionStep&, const ResolutionStep&) = default;
};

struct ResolvedCover {
  BranchModel branch;
  ModelPtr model;
  DivisorClass smooth_class;
  DivisorClass half_class;
  std::vector<ResolutionStep> steps;
};

/// Effective multiplicity an assignment imposes on each of its centers, in
/// blow-up order (p before p' for an [r,r]-point).
std::vector<std::pair<CenterId, int>> effective_multiplicities(const SingularityAssignment& s);

ResolvedCover resolve(const BranchModel& branch);

/// Exact half of the smooth branch class.
DivisorClass half_class(const ResolvedCover& cover);
DivisorClass halve(const DivisorClass& cls);

/// Keeps the candidates that are (-2)-curves lying in the smooth branch:
/// C^2 = -2 and C.B_s = -2.
std::vector<DivisorClass> minus_two_components(const ResolvedCover& cover,
                                               const std::vector<DivisorClass>& candidates);

}  // namespace duval
