#pragma once

// Command implementations for the front end, kept as pure functions that
// return the rendered output plus an exit code so they can be tested
// without spawning a process.  Exit codes: 0 success, 1 verification
// mismatch, 2 usage error (thrown as std::invalid_argument), 3 resource
// cap exceeded (thrown as CapExceeded).

#include "hassepaths/catalog.hpp"
#include "hassepaths/closedforms.hpp"
#include "hassepaths/order.hpp"
#include "hassepaths/pathcore.hpp"
#include "hassepaths/younglat.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hassepaths {

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

enum class OutputFormat { Text, Csv, Json };

inline OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + name + "' (text, csv or json)");
}

inline PathClass parse_class(const std::string& code) {
  if (const auto c = class_from_code(code)) return *c;
  std::string known;
  for (PathClass c : all_classes()) known += std::string(known.empty() ? "" : ", ") + class_spec(c).code;
  throw std::invalid_argument("unknown class '" + code + "' (one of " + known + ")");
}

// ---------------------------------------------------------------------------
// table: the edge-count table for all eight families, closed-form route.

namespace detail {

struct TableRow {
  const char* family;  // one-letter family tag used in row labels
  PathClass cls;
};

inline const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {"F", PathClass::Fibonacci},  {"GF", PathClass::GrandFibonacci},
      {"D", PathClass::Dyck},       {"GD", PathClass::GrandDyck},
      {"M", PathClass::Motzkin},    {"GM", PathClass::GrandMotzkin},
      {"S", PathClass::Schroeder},  {"GS", PathClass::GrandSchroeder},
  };
  return rows;
}

}  // namespace detail

inline CommandResult cmd_table(int max_n, OutputFormat format) {
  if (max_n < 0) throw std::invalid_argument("--max-n must be nonnegative");
  const auto& rows = detail::table_rows();
  std::vector<std::vector<std::string>> values(rows.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (int n = 0; n <= max_n; ++n)
      values[r].push_back(to_decimal(edge_count_formula(rows[r].cls, n)));

  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text: {
      std::vector<std::string> labels = {"n"};
      for (const auto& row : rows) labels.push_back(std::string("l(") + row.family + "_n)");
      size_t label_width = 0;
      for (const auto& l : labels) label_width = std::max(label_width, l.size());
      std::vector<size_t> width(static_cast<size_t>(max_n) + 1);
      for (int n = 0; n <= max_n; ++n) {
        width[n] = std::to_string(n).size();
        for (size_t r = 0; r < rows.size(); ++r)
          width[n] = std::max(width[n], values[r][n].size());
      }
      auto emit = [&](const std::string& label, auto cell) {
        out << label << std::string(label_width - label.size(), ' ');
        for (int n = 0; n <= max_n; ++n) {
          const std::string v = cell(n);
          out << "  " << std::string(width[n] - v.size(), ' ') << v;
        }
        out << "\n";
      };
      emit("n", [](int n) { return std::to_string(n); });
      for (size_t r = 0; r < rows.size(); ++r)
        emit(labels[r + 1], [&](int n) { return values[r][n]; });
      break;
    }
    case OutputFormat::Csv: {
      out << "family";
      for (int n = 0; n <= max_n; ++n) out << "," << n;
      out << "\n";
      for (size_t r = 0; r < rows.size(); ++r) {
        out << "l(" << rows[r].family << "_n)";
        for (int n = 0; n <= max_n; ++n) out << "," << values[r][n];
        out << "\n";
      }
      break;
    }
    case OutputFormat::Json: {
      nlohmann::json doc = nlohmann::json::array();
      for (size_t r = 0; r < rows.size(); ++r)
        doc.push_back({{"family", rows[r].family}, {"edges", values[r]}});
      out << doc.dump() << "\n";
      break;
    }
  }
  return {out.str(), 0};
}

// ---------------------------------------------------------------------------
// verify: cross-route agreement sweep.

inline CommandResult cmd_verify(const std::string& selector, int max_n,
                                std::vector<std::string> routes, bool force = false,
                                bool inject_fault = false) {
  if (max_n < 0) throw std::invalid_argument("--max-n must be nonnegative");
  if (routes.empty()) routes = {"enum", "formula", "series"};
  for (const auto& r : routes)
    if (r != "enum" && r != "formula" && r != "series" && r != "order")
      throw std::invalid_argument("unknown route '" + r +
                                  "' (enum, formula, series, order)");
  if (routes.size() < 2)
    throw std::invalid_argument("verification needs at least two routes");

  std::vector<PathClass> classes;
  if (selector == "all")
    classes.assign(all_classes().begin(), all_classes().end());
  else
    classes.push_back(parse_class(selector));

  std::string joined;
  for (const auto& r : routes) joined += (joined.empty() ? "" : ",") + r;

  std::ostringstream out;
  for (PathClass c : classes) {
    const ClassSpec& spec = class_spec(c);
    std::optional<TruncatedSeries> series;
    for (int n = 0; n <= max_n; ++n) {
      std::vector<std::pair<std::string, BigInt>> got;
      for (const auto& route : routes) {
        if (route == "formula") {
          BigInt v = edge_count_formula(c, n);
          if (inject_fault) v += 1;
          got.emplace_back(route, std::move(v));
        } else if (route == "enum") {
          got.emplace_back(route, edge_count_enum(spec, n, force));
        } else if (route == "series") {
          if (!series) series = edge_series_closed(c, max_n);
          got.emplace_back(route, rational_to_integer(series->coefficient(n)));
        } else {  // order
          got.emplace_back(route,
                           BigInt(covers_by_order(spec, n, force).edges.size()));
        }
      }
      for (size_t k = 1; k < got.size(); ++k) {
        if (got[k].second != got[0].second) {
          out << spec.code << "  n=" << n << "  " << got[0].first << "="
              << to_decimal(got[0].second) << " " << got[k].first << "="
              << to_decimal(got[k].second) << "  MISMATCH\n";
          return {out.str(), 1};
        }
      }
    }
    out << spec.code << "  n=0.." << max_n << "  " << joined << "  agree\n";
  }
  out << "all routes agree\n";
  return {out.str(), 0};
}

// ---------------------------------------------------------------------------
// series: coefficient dumps.

inline CommandResult cmd_series(const std::string& name, const std::string& class_code,
                                int order, OutputFormat format) {
  if (order < 0) throw std::invalid_argument("-N must be nonnegative");

  auto need_class = [&]() {
    if (class_code.empty())
      throw std::invalid_argument("series '" + name + "' needs --class");
    return parse_class(class_code);
  };

  std::ostringstream out;
  nlohmann::json doc;
  doc["name"] = name;

  auto emit_numeric = [&](const TruncatedSeries& s) {
    std::vector<std::string> coeffs;
    for (int n = 0; n <= order; ++n) coeffs.push_back(to_fraction(s.coefficient(n)));
    switch (format) {
      case OutputFormat::Text:
        for (int n = 0; n <= order; ++n) out << (n ? "," : "") << coeffs[n];
        out << "\n";
        break;
      case OutputFormat::Csv:
        out << "n,coefficient\n";
        for (int n = 0; n <= order; ++n) out << n << "," << coeffs[n] << "\n";
        break;
      case OutputFormat::Json:
        doc["coefficients"] = coeffs;
        out << doc.dump() << "\n";
        break;
    }
  };

  if (name.rfind("base:", 0) == 0) {
    if (name.size() != 6)
      throw std::invalid_argument("base series name must be a single letter (base:C)");
    emit_numeric(base_series(name[5], order));
    return {out.str(), 0};
  }

  const PathClass c = need_class();
  doc["class"] = class_spec(c).code;
  if (name == "edge") {
    emit_numeric(edge_series_closed(c, order));
  } else if (name == "edge-via-delta") {
    emit_numeric(edge_series_via_delta(c, order));
  } else if (name == "delta") {
    const QPolySeries s = class_delta_series(c, order);
    std::vector<std::string> polys;
    for (int n = 0; n <= order; ++n) polys.push_back(s.coefficient(n).str());
    switch (format) {
      case OutputFormat::Text:
        for (const auto& p : polys) out << p << "\n";
        break;
      case OutputFormat::Csv:
        out << "n,polynomial\n";
        for (int n = 0; n <= order; ++n) out << n << "," << polys[n] << "\n";
        break;
      case OutputFormat::Json:
        doc["polynomials"] = polys;
        out << doc.dump() << "\n";
        break;
    }
  } else {
    throw std::invalid_argument("unknown series '" + name +
                                "' (edge, edge-via-delta, delta, base:B|C|T|M|d|r)");
  }
  return {out.str(), 0};
}

// ---------------------------------------------------------------------------
// young: ideal-lattice queries for a partition.

inline CommandResult cmd_young(const std::string& partition_text, bool full) {
  const Partition lambda = Partition::parse(partition_text);
  const BigInt edges = young_edges(lambda);
  std::ostringstream out;
  if (!full) {
    out << to_decimal(edges) << "\n";
  } else {
    nlohmann::json doc;
    doc["partition"] = lambda.str();
    doc["ideal_size"] = to_decimal(ideal_size(lambda));
    doc["edges"] = to_decimal(edges);
    nlohmann::json corners = nlohmann::json::array();
    for (const auto& [i, j] : corner_cells(lambda)) corners.push_back({i, j});
    doc["corner_cells"] = corners;
    out << doc.dump() << "\n";
  }
  return {out.str(), 0};
}

// ---------------------------------------------------------------------------
// index: the Hasse index with its classification.

inline CommandResult cmd_index(const std::string& class_code, long long n, bool asymptotic) {
  const PathClass c = parse_class(class_code);
  if (n < 1) throw std::invalid_argument("-n must be at least 1");
  const Rational idx = hasse_index_exact(c, n);
  const ClassificationReport report = classification_report(c);
  std::ostringstream out;
  out << to_fraction(idx) << " (" << index_category_name(report.category) << ")\n";
  if (asymptotic) {
    out << "index form: " << report.index_form << "\n";
    out << "tamed: " << (report.tamed ? "yes" : "no") << "\n";
  }
  return {out.str(), 0};
}

// ---------------------------------------------------------------------------
// distribution: Δ and ∇ histogram polynomials at one size.

inline CommandResult cmd_distribution(const std::string& class_code, int n, bool force) {
  const PathClass c = parse_class(class_code);
  if (n < 0) throw std::invalid_argument("-n must be nonnegative");
  const ClassSpec& spec = class_spec(c);
  std::ostringstream out;
  out << "delta: " << delta_polynomial_enum(spec, n, force).str() << "\n";
  out << "nabla: " << nabla_polynomial_enum(spec, n, force).str() << "\n";
  return {out.str(), 0};
}

}  // namespace hassepaths
