#pragma once

#include <string>
#include <vector>

#include "serialize.hpp"

namespace duval::cli {

/// Where an expected value comes from: a published statement, a one-line
/// computation, or the fixture produced by tools/oracles/derive_fixtures.py.
enum class Basis { Reference, Elementary, Derived };

std::string to_string(Basis basis);

struct CheckRecord {
  std::string id;
  /// The statement being checked, in words.
  std::string statement;
  Json computed;
  Json expected;
  Basis basis = Basis::Reference;
  bool pass = false;
  /// Informational only, such as table pairs with no published cell.
  std::vector<std::string> notes;
};

/// Runs every check in catalog order. Never throws for a failing check; a
/// check whose computation throws is recorded as failed with the message.
std::vector<CheckRecord> run_catalog();

Json catalog_to_json(const std::vector<CheckRecord>& records);

}  // namespace duval::cli
