#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "serialize.hpp"

namespace {

// "-" reads standard input.
bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

int emit(const duval::cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

int with_file(const std::string& path, duval::cli::CommandResult (*cmd)(std::string_view)) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << duval::cli::error_json("io_error", "cannot read '" + path + "'").dump(2) << "\n";
    return duval::cli::exit_code::parse_error;
  }
  return emit(cmd(text));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and classification of Du Val double planes"};
  app.require_subcommand(1);

  std::string report_path;
  auto* report = app.add_subcommand("report", "print the invariants of a configuration");
  report->add_option("config", report_path, "config JSON file, or - for stdin")->required();

  int pg = 0, q = 0;
  std::optional<int> ksq;
  auto* classify = app.add_subcommand("classify", "list configurations with the given p_g, q and K^2");
  classify->add_option("--pg", pg)->required();
  classify->add_option("--q", q)->required();
  classify->add_option("--ksq", ksq);

  std::string resolve_path;
  auto* resolve = app.add_subcommand("resolve", "print the canonical resolution ledger of a branch curve");
  resolve->add_option("input", resolve_path, "config, xiao case or raw branch JSON, or - for stdin")->required();

  auto* verify = app.add_subcommand("verify-paper", "run the regression catalog of published identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : duval::cli::exit_code::parse_error;
  }

  if (*report) return with_file(report_path, duval::cli::cmd_report);
  if (*classify) return emit(duval::cli::cmd_classify(pg, q, ksq));
  if (*resolve) return with_file(resolve_path, duval::cli::cmd_resolve);
  if (*verify) return emit(duval::cli::cmd_verify_paper());
  return duval::cli::exit_code::parse_error;
}
