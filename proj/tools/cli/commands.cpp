#include "commands.hpp"

#include <functional>

#include "catalog.hpp"
#include "duval/classification_tables.hpp"
#include "duval/error.hpp"
#include "serialize.hpp"

namespace duval::cli {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

CommandResult fail(int code, const Json& error) { return {code, "", dump(error)}; }

// Maps the exceptions of parsing and of the library onto exit codes.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    Json err = error_json("parse_error", e.what());
    err["error"]["line"] = e.line();
    err["error"]["column"] = e.column();
    return fail(exit_code::parse_error, err);
  } catch (const SchemaError& e) {
    Json err = error_json("schema_error", e.what());
    err["error"]["path"] = e.path();
    return fail(exit_code::parse_error, err);
  } catch (const Error& e) {
    return fail(exit_code::domain_error, error_json(to_string(e.code()), e.what()));
  }
}

std::optional<CommandResult> reject_inadmissible(const DuValConfig& c) {
  const AdmissibilityReport a = check_admissible(c);
  if (a.admissible) return std::nullopt;
  Json err = error_json(to_string(ErrorCode::Inadmissible), label(c) + " is not admissible");
  err["error"]["reasons"] = a.reasons;
  return fail(exit_code::domain_error, err);
}

Json resolution_json(const ResolvedCover& cover, const std::vector<DivisorClass>& minus_two) {
  Json j = resolution_to_json(cover);
  Json curves = Json::array();
  for (const auto& c : minus_two) curves.push_back(class_to_json(c));
  j["minus_two_curves"] = curves;
  return j;
}

}  // namespace

CommandResult cmd_report(std::string_view text) {
  return guarded([&] {
    const DuValConfig c = config_from_json(parse_text(text));
    if (auto rejected = reject_inadmissible(c)) return *rejected;
    Json out = report_to_json(surface_report(c));
    return CommandResult{exit_code::ok, dump(out), ""};
  });
}

CommandResult cmd_classify(int pg, int q, std::optional<int> ksq) {
  return guarded([&] {
    const std::vector<ClassifiedSurface> found = enumerate_classification(pg, q, ksq);
    Json surfaces = Json::array();
    for (const auto& s : found) {
      surfaces.push_back(Json{{"label", label(s.config)}, {"config", config_to_json(s.config)},
                              {"report", report_to_json(s.report)}});
    }
    Json out{{"pg", pg}, {"q", q}};
    if (ksq) out["ksq"] = *ksq;
    out["surfaces"] = surfaces;
    if (const KsqNTable* t = table_for(pg, q)) {
      KsqNTable rows = *t;
      if (ksq) {
        // Only the requested row of the table is in play.
        std::erase_if(rows.cells, [&](const auto& cell) { return cell.first != *ksq; });
      }
      out["table_check"] = table_check_to_json(table_check(rows, found));
    } else {
      out["table_check"] = nullptr;
    }
    return CommandResult{exit_code::ok, dump(out), ""};
  });
}

CommandResult cmd_resolve(std::string_view text) {
  return guarded([&] {
    const Json in = parse_text(text);
    if (in.is_object() && in.contains("ambient")) {
      const ResolvedCover cover = resolve(branch_from_json(in));
      return CommandResult{exit_code::ok, dump(resolution_json(cover, {})), ""};
    }
    if (in.is_object() && in.value("type", "") == "xiao") {
      const std::string which = in.value("case", "");
      if (which != "III" && which != "IV") throw SchemaError("$.case", "expected \"III\" or \"IV\"");
      for (const auto& [key, _] : in.items()) {
        if (key != "type" && key != "case") throw SchemaError("$", "unknown field '" + key + "'");
      }
      const ResolvedCover cover = resolve(xiao_branch(which == "III" ? XiaoCase::III : XiaoCase::IV));
      return CommandResult{exit_code::ok, dump(resolution_json(cover, {})), ""};
    }
    const DuValConfig c = config_from_json(in);
    if (auto rejected = reject_inadmissible(c)) return *rejected;
    const ResolvedCover cover = resolve(build_branch(c));
    const auto minus_two = minus_two_components(cover, minus_two_candidates(c, cover.model));
    return CommandResult{exit_code::ok, dump(resolution_json(cover, minus_two)), ""};
  });
}

CommandResult cmd_verify_paper() {
  const std::vector<CheckRecord> records = run_catalog();
  const Json out = catalog_to_json(records);
  const std::size_t failed = out.at("failed").get<std::size_t>();
  std::string summary = "verify-paper: " + std::to_string(records.size() - failed) + "/" +
                        std::to_string(records.size()) + " checks passed";
  for (const auto& r : records) {
    if (!r.pass) summary += "\n  failed: " + r.id;
  }
  return CommandResult{failed == 0 ? exit_code::ok : exit_code::check_failed, dump(out), summary + "\n"};
}

}  // namespace duval::cli
