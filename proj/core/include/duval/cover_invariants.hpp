#pragma once

// Numerical invariants of the double cover S* -> W_s branched along the
// smooth class B_s = 2 Delta_s, evaluated from closed formulas.

#include <cstdint>

#include "duval/branch_resolution.hpp"

namespace duval {

struct CoverInvariants {
  std::int64_t chi = 0;
  std::int64_t ksq_resolution = 0;
  std::int64_t pg_minus_q = 0;
  std::int64_t h0_2k_delta = 0;
  std::int64_t k_isolated = 0;
  std::int64_t kr = 0;

  friend bool operator==(const CoverInvariants&, const CoverInvariants&) = default;
};

/// chi(O_S*) from the data on W0 and the subtraction ledger:
///   1/2 (K0 + D0).D0 + 2 chi_base - 1/2 sum a_i (a_i - 1),  a_i = floor(m_i / 2).
std::int64_t chi_of_cover(const ResolvedCover& cover, std::int64_t chi_base);

/// Same quantity evaluated directly on W_s: 2 chi_base + 1/2 Delta_s.(K_s + Delta_s).
std::int64_t chi_of_cover_on_resolution(const ResolvedCover& cover, std::int64_t chi_base);

/// K^2 of S*: 2 (K0 + D0)^2 - 2 sum (a_i - 1)^2.
std::int64_t ksq_of_resolution(const ResolvedCover& cover);

/// 2 (K_s + Delta_s)^2 on W_s.
std::int64_t ksq_of_resolution_on_resolution(const ResolvedCover& cover);

/// chi(2K_s + Delta_s) by Riemann-Roch on W_s. Equals h^0 under the usual
/// vanishing, which the caller vouches for.
std::int64_t h0_two_k_plus_delta(const ResolvedCover& cover, std::int64_t chi_base);

/// Same number from W0 data: 1/2 (2K0 + D0).(K0 + D0) - 1/8 sum (m_i - 4)(m_i - 2) + chi_base
/// with m_i = 2 a_i.
std::int64_t h0_two_k_plus_delta_ledger(const ResolvedCover& cover, std::int64_t chi_base);

struct FixedPoints {
  std::int64_t k = 0;
  /// K_S . R, the canonical degree of the divisorial fixed locus.
  std::int64_t kr = 0;

  friend bool operator==(const FixedPoints&, const FixedPoints&) = default;
};

/// Isolated fixed points of the covering involution on the minimal model.
FixedPoints fixed_point_counts(std::int64_t ksq_min, std::int64_t chi_s, std::int64_t chi_sigma, std::int64_t h0);

/// Genus of the pencil |F| pulled back to the cover, F^2 = 0.
std::int64_t pencil_genus(const ResolvedCover& cover, const DivisorClass& fibre);

bool bicanonical_factorization_test(const ResolvedCover& cover, std::int64_t chi_base = 1);

CoverInvariants compute_invariants(const ResolvedCover& cover, std::int64_t chi_base, std::int64_t ksq_minimal);

}  // namespace duval
