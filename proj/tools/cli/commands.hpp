#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace duval::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse_error = 1;
inline constexpr int domain_error = 2;
inline constexpr int check_failed = 3;
}  // namespace exit_code

struct CommandResult {
  int exit_code = exit_code::ok;
  std::string out;
  std::string err;
};

/// `text` is the content of a config file.
CommandResult cmd_report(std::string_view text);
CommandResult cmd_classify(int pg, int q, std::optional<int> ksq);
/// Accepts a config, {"type": "xiao", "case": "III" | "IV"}, or a raw branch.
CommandResult cmd_resolve(std::string_view text);
CommandResult cmd_verify_paper();

}  // namespace duval::cli
