#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "duval/branch_resolution.hpp"
#include "duval/classification_tables.hpp"
#include "duval/duval_planes.hpp"
#include "duval/ruled_models.hpp"

namespace duval::cli {

using Json = nlohmann::ordered_json;

/// Input that is valid JSON but does not match the expected shape.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Malformed JSON text, with 1-based line and column of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(message), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Json parse_text(std::string_view text);

Rational rational_from_json(const Json& j, const std::string& path);
Json rational_to_json(const Rational& r);

DuValConfig config_from_json(const Json& j);
Json config_to_json(const DuValConfig& c);

Json report_to_json(const SurfaceReport& r);
Json admissibility_to_json(const AdmissibilityReport& r);

Json class_to_json(const DivisorClass& cls);
Json model_to_json(const SurfaceModel& m);

/// Raw branch input: {"ambient": {...}, "class": [...], "singularities": [...]}.
BranchModel branch_from_json(const Json& j);
Json branch_to_json(const BranchModel& b);

Json resolution_to_json(const ResolvedCover& cover);

Json table_check_to_json(const TableCheck& t);
Json multiset_check_to_json(const MultisetCheck& m);
Json certificate_to_json(const EliminationCertificate& c);

Json error_json(std::string_view code, const std::string& message);

}  // namespace duval::cli
