#include "duval/classification_tables.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

namespace duval {

const KsqNTable& regular_pg0_table() {
  static const KsqNTable t{
      "regular_pg0",
      "p_g = 0, bicanonical map of degree 2, not the standard case",
      0,
      0,
      2,
      8,
      {{2, {0, 1, 2, 3}}, {3, {1, 2, 3}}, {4, {2, 3, 4}}, {5, {3, 4}}, {6, {4, 5}}, {7, {5}}, {8, {6}}}};
  return t;
}

const KsqNTable& regular_pg1_table() {
  static const KsqNTable t{
      "regular_pg1",
      "q = 0, p_g = 1, bicanonical map of degree 2, image not a K3 surface",
      1,
      0,
      2,
      8,
      {{2, {2}}, {3, {0, 1, 2}}, {4, {1, 2, 3}}, {5, {2, 3}}, {6, {3, 4}}, {7, {4}}, {8, {5}}}};
  return t;
}

const KsqNTable& irregular_pg1_table() {
  static const KsqNTable t{"irregular_pg1",
                           "p_g = q = 1, 7 <= K^2 <= 8, bicanonical map of degree 2",
                           1,
                           1,
                           7,
                           8,
                           {{7, {5}}, {8, {6}}}};
  return t;
}

const KsqNTable* table_for(int pg, int q) {
  if (pg == 0 && q == 0) return &regular_pg0_table();
  if (pg == 1 && q == 0) return &regular_pg1_table();
  if (pg == 1 && q == 1) return &irregular_pg1_table();
  return nullptr;
}

bool TableCheck::complete() const {
  return std::all_of(cells.begin(), cells.end(), [](const TableCell& c) { return !c.realized_by.empty(); });
}

TableCheck table_check(const KsqNTable& table, const std::vector<ClassifiedSurface>& outputs) {
  TableCheck out;
  out.table = table.name;
  for (const auto& [ksq, ns] : table.cells) {
    for (int n : ns) out.cells.push_back({ksq, n, {}});
  }
  for (const auto& o : outputs) {
    const int ksq = o.report.ksq_minimal;
    const std::string tag = label(o.config) + " K^2=" + std::to_string(ksq);
    if (ksq < table.ksq_min || ksq > table.ksq_max) {
      out.outside_range.push_back(tag);
      continue;
    }
    auto it = std::find_if(out.cells.begin(), out.cells.end(),
                           [&](const TableCell& c) { return c.ksq == ksq && c.n == o.config.n; });
    if (it == out.cells.end()) {
      out.warnings.push_back(tag + " (n=" + std::to_string(o.config.n) + ") has no cell in the table");
    } else {
      it->realized_by.push_back(label(o.config));
    }
  }
  return out;
}

const ChiKsqTable& base_point_free_chi_ksq_table() {
  static const ChiKsqTable t{"chi_ksq_n_ge_2",
                             "(chi - 1, K^2) for D_n, n >= 2",
                             {{4, {8}},
                              {3, {6, 7, 8}},
                              {2, {4, 5, 6, 6, 7, 8}},
                              {1, {2, 3, 4, 4, 5, 5, 6, 6, 7, 8}},
                              {0, {0, 1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6, 7, 8}}}};
  return t;
}

const ChiKsqTable& one_base_point_chi_ksq_table() {
  static const ChiKsqTable t{"chi_ksq_n_le_1",
                             "(chi - 1, K^2) for D_n, n <= 1",
                             {{6, {8}},
                              {5, {7, 8}},
                              {4, {6, 6, 7}},
                              {3, {5, 5, 6}},
                              {2, {4, 4, 5}},
                              {1, {3, 3, 4}},
                              {0, {2, 2, 3}}}};
  return t;
}

namespace {

MultisetCheck compare(const ChiKsqTable& table, const std::map<int, std::vector<int>>& computed) {
  MultisetCheck out;
  out.table = table.name;
  std::map<int, std::vector<int>> expected;
  for (const auto& [row, values] : table.rows) expected[row] = values;
  std::set<int> rows;
  for (const auto& [r, _] : expected) rows.insert(r);
  for (const auto& [r, _] : computed) rows.insert(r);
  for (int r : rows) {
    std::vector<int> want = expected.count(r) ? expected.at(r) : std::vector<int>{};
    std::vector<int> got = computed.count(r) ? computed.at(r) : std::vector<int>{};
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    std::vector<int> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
    for (int k : missing) out.missing.push_back("(" + std::to_string(r) + ", " + std::to_string(k) + ")");
    for (int k : extra) out.extra.push_back("(" + std::to_string(r) + ", " + std::to_string(k) + ")");
  }
  out.matches = out.missing.empty() && out.extra.empty();
  return out;
}

}  // namespace

MultisetCheck check_base_point_free_table() {
  std::map<int, std::vector<int>> computed;
  for (const auto& c : admissible_dn_configs()) {
    if (c.n < 2) continue;
    const SurfaceReport r = surface_report(c);
    computed[r.chi - 1].push_back(r.ksq_minimal);
  }
  return compare(base_point_free_chi_ksq_table(), computed);
}

MultisetCheck check_one_base_point_table() {
  std::map<int, std::vector<int>> computed;
  std::vector<std::string> residue;
  for (const auto& c : admissible_dn_configs()) {
    if (c.n > 1) continue;
    const SurfaceReport r = surface_report(c);
    if (c.gamma_infinitely_near) {
      residue.push_back(label(c) + " -> (" + std::to_string(r.chi - 1) + ", " + std::to_string(r.ksq_minimal) + ")");
      continue;
    }
    computed[r.chi - 1].push_back(r.ksq_minimal);
  }
  MultisetCheck out = compare(one_base_point_chi_ksq_table(), computed);
  out.residue = std::move(residue);
  return out;
}

}  // namespace duval
