#include "duval/cover_invariants.hpp"

#include <boost/rational.hpp>

#include "duval/error.hpp"

namespace duval {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;
using Q = boost::rational<std::int64_t>;

namespace {

std::int64_t require_integer(const Q& v, const char* what) {
  if (v.denominator() != 1) {
    throw Error(ErrorCode::InconsistentBranch, std::string(what) + " evaluates to the non-integer " +
                                                   std::to_string(v.numerator()) + "/" +
                                                   std::to_string(v.denominator()));
  }
  return v.numerator();
}

const DivisorClass& base_branch(const ResolvedCover& cover) { return cover.branch.branch_class; }

DivisorClass base_canonical(const ResolvedCover& cover) { return canonical_class(cover.branch.ambient); }

}  // namespace

std::int64_t chi_of_cover(const ResolvedCover& cover, std::int64_t chi_base) {
  const DivisorClass& b0 = base_branch(cover);
  const DivisorClass k0 = base_canonical(cover);
  // (K0 + B0/2).(B0/2) = (2K0 + B0).B0 / 4
  Q chi(intersect(2 * k0 + b0, b0), 8);
  chi += checked_mul(2, chi_base);
  std::int64_t ledger = 0;
  for (const auto& s : cover.steps) {
    ledger = checked_add(ledger, checked_mul(s.floor_half, s.floor_half - 1));
  }
  chi -= Q(ledger, 2);
  return require_integer(chi, "chi(O_S*)");
}

std::int64_t chi_of_cover_on_resolution(const ResolvedCover& cover, std::int64_t chi_base) {
  const DivisorClass ks = canonical_class(cover.model);
  const DivisorClass& d = cover.half_class;
  Q chi(intersect(d, ks + d), 2);
  chi += checked_mul(2, chi_base);
  return require_integer(chi, "chi(O_S*)");
}

std::int64_t ksq_of_resolution(const ResolvedCover& cover) {
  const DivisorClass& b0 = base_branch(cover);
  const DivisorClass k0 = base_canonical(cover);
  const DivisorClass twice = 2 * k0 + b0;  // 2(K0 + D0)
  Q ksq(intersect(twice, twice), 2);
  std::int64_t ledger = 0;
  for (const auto& s : cover.steps) {
    ledger = checked_add(ledger, checked_mul(s.floor_half - 1, s.floor_half - 1));
  }
  ksq -= checked_mul(2, ledger);
  return require_integer(ksq, "K^2 of S*");
}

std::int64_t ksq_of_resolution_on_resolution(const ResolvedCover& cover) {
  const DivisorClass a = canonical_class(cover.model) + cover.half_class;
  return checked_mul(2, intersect(a, a));
}

std::int64_t h0_two_k_plus_delta(const ResolvedCover& cover, std::int64_t chi_base) {
  const DivisorClass ks = canonical_class(cover.model);
  const DivisorClass& d = cover.half_class;
  Q v(intersect(2 * ks + d, ks + d), 2);
  v += chi_base;
  return require_integer(v, "chi(2K + Delta)");
}

std::int64_t h0_two_k_plus_delta_ledger(const ResolvedCover& cover, std::int64_t chi_base) {
  const DivisorClass& b0 = base_branch(cover);
  const DivisorClass k0 = base_canonical(cover);
  // (2K0 + D0).(K0 + D0) = (4K0 + B0).(2K0 + B0) / 4
  Q v(intersect(4 * k0 + b0, 2 * k0 + b0), 8);
  std::int64_t ledger = 0;
  for (const auto& s : cover.steps) {
    const std::int64_t m = 2 * static_cast<std::int64_t>(s.floor_half);
    ledger = checked_add(ledger, checked_mul(m - 4, m - 2));
  }
  v -= Q(ledger, 8);
  v += chi_base;
  return require_integer(v, "chi(2K + Delta)");
}

FixedPoints fixed_point_counts(std::int64_t ksq_min, std::int64_t chi_s, std::int64_t chi_sigma, std::int64_t h0) {
  std::int64_t k = checked_sub(ksq_min, checked_mul(2, chi_s));
  k = checked_add(k, checked_mul(6, chi_sigma));
  k = checked_sub(k, checked_mul(2, h0));
  const std::int64_t kr = checked_sub(checked_add(k, checked_mul(4, chi_s)), checked_mul(8, chi_sigma));
  return {k, kr};
}

std::int64_t pencil_genus(const ResolvedCover& cover, const DivisorClass& fibre) {
  const DivisorClass f = same_lattice(*fibre.owner(), *cover.model) ? fibre : pullback(fibre, cover.model);
  const std::int64_t self = intersect(f, f);
  if (self != 0) {
    throw Error(ErrorCode::NotAPencil, f.to_string() + " has self-intersection " + std::to_string(self));
  }
  const std::int64_t fb = intersect(f, cover.smooth_class);
  if (fb % 2 != 0) {
    throw Error(ErrorCode::OddBranchIntersection, f.to_string() + " meets the branch in " + std::to_string(fb) +
                                                      " points");
  }
  return (fb - 2) / 2;
}

bool bicanonical_factorization_test(const ResolvedCover& cover, std::int64_t chi_base) {
  return h0_two_k_plus_delta(cover, chi_base) == 0;
}

CoverInvariants compute_invariants(const ResolvedCover& cover, std::int64_t chi_base, std::int64_t ksq_minimal) {
  CoverInvariants out;
  out.chi = chi_of_cover(cover, chi_base);
  out.ksq_resolution = ksq_of_resolution(cover);
  out.pg_minus_q = out.chi - 1;
  out.h0_2k_delta = h0_two_k_plus_delta(cover, chi_base);
  const FixedPoints fp = fixed_point_counts(ksq_minimal, out.chi, chi_base, out.h0_2k_delta);
  out.k_isolated = fp.k;
  out.kr = fp.kr;
  return out;
}

}  // namespace duval
