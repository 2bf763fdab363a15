#pragma once

#include <optional>
#include <string>
#include <vector>

#include "duval/duval_planes.hpp"

namespace duval {

/// K^2 -> admissible values of n, for surfaces with bicanonical map of
/// degree 2 that come from D_n double planes.
struct KsqNTable {
  std::string name;
  std::string source;
  int pg = 0;
  int q = 0;
  /// Range of K^2 the table covers; outputs outside it are not compared.
  int ksq_min = 0;
  int ksq_max = 0;
  std::vector<std::pair<int, std::vector<int>>> cells;
};

const KsqNTable& regular_pg0_table();
const KsqNTable& regular_pg1_table();
const KsqNTable& irregular_pg1_table();
const KsqNTable* table_for(int pg, int q);

struct TableCell {
  int ksq = 0;
  int n = 0;
  std::vector<std::string> realized_by;
};

struct TableCheck {
  std::string table;
  std::vector<TableCell> cells;
  /// Enumerator outputs inside the K^2 range with no matching cell.
  std::vector<std::string> warnings;
  /// Enumerator outputs outside the K^2 range of the table.
  std::vector<std::string> outside_range;

  bool complete() const;
};

TableCheck table_check(const KsqNTable& table, const std::vector<ClassifiedSurface>& outputs);

/// Rows chi - 1 -> multiset of K^2 over a family of configurations.
struct ChiKsqTable {
  std::string name;
  std::string source;
  std::vector<std::pair<int, std::vector<int>>> rows;
};

/// n >= 2.
const ChiKsqTable& base_point_free_chi_ksq_table();
/// n <= 1.
const ChiKsqTable& one_base_point_chi_ksq_table();

struct MultisetCheck {
  std::string table;
  bool matches = false;
  std::vector<std::string> missing;
  std::vector<std::string> extra;
  /// Configurations left out of the comparison, with their (chi - 1, K^2).
  std::vector<std::string> residue;
};

/// Compares the (chi - 1, K^2_S) values of all admissible n >= 2 configurations.
MultisetCheck check_base_point_free_table();
/// Compares n = 0 and n = 1 with gamma not infinitely near; the n = 1
/// configurations with gamma infinitely near p1' are reported as residue.
MultisetCheck check_one_base_point_table();

}  // namespace duval
