#include "duval/branch_resolution.hpp"

#include <algorithm>
#include <set>

#include "duval/error.hpp"

namespace duval {

namespace {

struct PendingCenter {
  CenterId id;
  std::optional<CenterId> parent;
  int multiplicity;
  std::size_t order;
};

std::vector<PendingCenter> flatten(const std::vector<SingularityAssignment>& singularities) {
  std::vector<PendingCenter> out;
  for (const auto& s : singularities) {
    if (const auto* mt = std::get_if<Mtuple>(&s)) {
      if (mt->m < 2) throw Error(ErrorCode::InvalidParameter, "m-tuple point needs m >= 2, got " + std::to_string(mt->m));
      out.push_back({mt->center, mt->parent, mt->m, out.size()});
    } else {
      const auto& rr = std::get<RRpoint>(s);
      if (rr.r < 2) throw Error(ErrorCode::InvalidParameter, "[r,r]-point needs r >= 2, got " + std::to_string(rr.r));
      out.push_back({rr.p, rr.parent, rr.r, out.size()});
      out.push_back({rr.p_prime, rr.p, rr.r + rr.r % 2, out.size()});
    }
  }
  return out;
}

// Highest multiplicity first, input order on ties, parents always before
// their children.
std::vector<PendingCenter> processing_order(std::vector<PendingCenter> pending, const SurfaceModel& ambient) {
  std::set<CenterId> ids;
  for (const auto& c : pending) {
    if (ambient.has_center(c.id) || !ids.insert(c.id).second) {
      throw Error(ErrorCode::InvalidCenter, "duplicate center id '" + c.id.value + "'");
    }
  }
  for (const auto& c : pending) {
    if (c.parent && !ids.count(*c.parent) && !ambient.has_center(*c.parent)) {
      throw Error(ErrorCode::InvalidCenter, "center '" + c.id.value + "' has unknown parent '" + c.parent->value + "'");
    }
  }

  std::vector<PendingCenter> ordered;
  std::set<CenterId> placed;
  std::vector<bool> used(pending.size(), false);
  while (ordered.size() < pending.size()) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (used[i]) continue;
      const auto& c = pending[i];
      if (c.parent && ids.count(*c.parent) && !placed.count(*c.parent)) continue;
      if (!best || c.multiplicity > pending[*best].multiplicity) best = i;
    }
    if (!best) throw Error(ErrorCode::InvalidCenter, "infinitely-near relation contains a cycle");
    used[*best] = true;
    placed.insert(pending[*best].id);
    ordered.push_back(pending[*best]);
  }
  return ordered;
}

}  // namespace

std::vector<std::pair<CenterId, int>> effective_multiplicities(const SingularityAssignment& s) {
  std::vector<std::pair<CenterId, int>> out;
  for (const auto& c : flatten({s})) out.emplace_back(c.id, c.multiplicity);
  return out;
}

DivisorClass halve(const DivisorClass& cls) {
  std::vector<std::int64_t> half(cls.coeffs().size());
  for (std::size_t i = 0; i < half.size(); ++i) {
    if (cls[i] % 2 != 0) {
      throw Error(ErrorCode::OddBranchClass, "coefficient " + std::to_string(cls[i]) + " of " +
                                                 cls.owner()->basis_label(i) + " in " + cls.to_string() +
                                                 " is odd");
    }
    half[i] = cls[i] / 2;
  }
  return DivisorClass(cls.owner(), std::move(half));
}

ResolvedCover resolve(const BranchModel& branch) {
  if (!branch.ambient) throw Error(ErrorCode::InvalidParameter, "branch without ambient surface");
  if (!same_lattice(*branch.branch_class.owner(), *branch.ambient)) {
    throw Error(ErrorCode::LatticeMismatch, "branch class does not live on the ambient surface");
  }
  const auto ordered = processing_order(flatten(branch.singularities), *branch.ambient);

  ModelPtr model = branch.ambient;
  std::vector<ResolutionStep> steps;
  for (const auto& c : ordered) {
    model = blow_up(model, c.parent, c.id).model;
    const int a = c.multiplicity / 2;
    steps.push_back({c.id, c.parent, c.multiplicity, a, 2 * a, c.multiplicity % 2 != 0});
  }

  DivisorClass smooth = pullback(branch.branch_class, model);
  for (const auto& s : steps) smooth = smooth - s.subtraction * exceptional_class(model, s.center);
  DivisorClass half = halve(smooth);
  return ResolvedCover{branch, model, std::move(smooth), std::move(half), std::move(steps)};
}

DivisorClass half_class(const ResolvedCover& cover) { return halve(cover.smooth_class); }

std::vector<DivisorClass> minus_two_components(const ResolvedCover& cover,
                                               const std::vector<DivisorClass>& candidates) {
  std::vector<DivisorClass> out;
  for (const auto& c : candidates) {
    if (!same_lattice(*c.owner(), *cover.model)) {
      throw Error(ErrorCode::LatticeMismatch, "candidate " + c.to_string() + " is not on the resolved model");
    }
    if (intersect(c, c) == -2 && intersect(c, cover.smooth_class) == -2) out.push_back(c);
  }
  return out;
}

}  // namespace duval
