// Front end: tables, verification sweeps, series dumps, Young-lattice
// queries and index reports.  Exit codes: 0 success, 1 verification
// mismatch, 2 usage error, 3 size cap exceeded.

#include "hassepaths/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) out.push_back(token);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hassepaths;

  CLI::App app{"Hasse-diagram edge counts for lattices of lattice paths and Young lattices"};
  app.require_subcommand(1);

  int table_max_n = 10;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Edge-count table for the eight path families");
  table->add_option("--max-n", table_max_n, "Largest size column (default 10)");
  table->add_option("--format", table_format, "text, csv or json (default text)");

  std::string verify_selector = "all";
  int verify_max_n = 6;
  std::string verify_routes;
  bool verify_force = false;
  auto* verify = app.add_subcommand("verify", "Cross-check the counting routes against each other");
  verify->add_option("selector", verify_selector, "Class code or 'all' (default all)");
  verify->add_option("--max-n", verify_max_n, "Check sizes 0..max-n (default 6)");
  verify->add_option("--routes", verify_routes,
                     "Comma-separated subset of enum,formula,series,order "
                     "(default enum,formula,series)");
  verify->add_flag("--force", verify_force, "Override the per-class size caps");

  std::string series_name;
  std::string series_class;
  int series_order = 10;
  std::string series_format = "text";
  auto* series = app.add_subcommand("series", "Dump exact series coefficients");
  series->add_option("name", series_name,
                     "edge, edge-via-delta, delta, or base:B|C|T|M|d|r")
      ->required();
  series->add_option("--class", series_class, "Path class code (DD, GD, MM, GM, SS, GS, FF, GF)");
  series->add_option("-N", series_order, "Truncation order (default 10)");
  series->add_option("--format", series_format, "text, csv or json (default text)");

  std::string young_partition;
  bool young_full = false;
  auto* young = app.add_subcommand("young", "Edge count of the ideal lattice of a partition");
  young->add_option("--partition", young_partition, "Comma-separated parts, e.g. \"2,1\"")
      ->required();
  young->add_flag("--full", young_full, "Emit a JSON report instead of the bare count");

  std::string index_class;
  long long index_n = 1;
  bool index_asymptotic = false;
  auto* index = app.add_subcommand("index", "Hasse index of a path lattice");
  index->add_option("--class", index_class, "Path class code")->required();
  index->add_option("-n", index_n, "Size")->required();
  index->add_flag("--asymptotic", index_asymptotic, "Also report the asymptotic form");

  std::string dist_class;
  int dist_n = 0;
  bool dist_force = false;
  auto* distribution =
      app.add_subcommand("distribution", "Cover-degree histogram polynomials at one size");
  distribution->add_option("--class", dist_class, "Path class code")->required();
  distribution->add_option("-n", dist_n, "Size")->required();
  distribution->add_flag("--force", dist_force, "Override the enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CommandResult result;
    if (*table) {
      result = cmd_table(table_max_n, parse_format(table_format));
    } else if (*verify) {
      const bool fault = std::getenv("HASSE_PATHS_FAULT_INJECT") != nullptr;
      result = cmd_verify(verify_selector, verify_max_n, split_csv(verify_routes),
                          verify_force, fault);
    } else if (*series) {
      result = cmd_series(series_name, series_class, series_order, parse_format(series_format));
    } else if (*young) {
      result = cmd_young(young_partition, young_full);
    } else if (*index) {
      result = cmd_index(index_class, index_n, index_asymptotic);
    } else if (*distribution) {
      result = cmd_distribution(dist_class, dist_n, dist_force);
    }
    std::cout << result.output;
    return result.exit_code;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
