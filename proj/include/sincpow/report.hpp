#pragma once

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigfloat.hpp"
#include "rational.hpp"

namespace sincpow {

using json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "sincpow-report/1";

enum class CheckStatus { pass, fail, discrepancy };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "reported-discrepancy";
  }
}

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
  double ms = 0;
};

// Floats always travel with their precision so a reader can tell how many of
// the printed digits are meaningful.
inline json json_float(const BigFloat& v, std::size_t digits = 30) {
  return json{{"value", v.to_string(digits)},
              {"precision_bits", static_cast<long>(v.prec())}};
}

inline json json_rational(const Rational& q) { return json(to_string(q)); }

struct Report {
  std::string command;
  json parameters = json::object();
  json results = json::object();
  std::vector<CheckResult> checks;
  double total_ms = 0;

  void add_check(std::string name, CheckStatus status, std::string detail,
                 double ms = 0) {
    checks.push_back({std::move(name), status, std::move(detail), ms});
  }

  CheckStatus aggregate() const {
    CheckStatus agg = CheckStatus::pass;
    for (const auto& c : checks) {
      if (c.status == CheckStatus::fail) return CheckStatus::fail;
      if (c.status == CheckStatus::discrepancy) agg = CheckStatus::discrepancy;
    }
    return agg;
  }

  // 0 all pass, 2 certification failure, 3 discrepancy against the published
  // values (distinct so callers can treat "the artifact found something"
  // apart from "the artifact is broken").
  int exit_code() const {
    switch (aggregate()) {
      case CheckStatus::pass: return 0;
      case CheckStatus::fail: return 2;
      default: return 3;
    }
  }

  json to_json(bool with_timings = true) const {
    json j;
    j["schema"] = report_schema;
    j["command"] = command;
    j["parameters"] = parameters;
    j["results"] = results;
    json cj = json::array();
    for (const auto& c : checks) {
      json e;
      e["name"] = c.name;
      e["status"] = to_string(c.status);
      e["detail"] = c.detail;
      if (with_timings) e["ms"] = c.ms;
      cj.push_back(e);
    }
    j["checks"] = cj;
    if (with_timings) j["total_ms"] = total_ms;
    return j;
  }
};

// ---------------------------------------------------------------------------
// CSV table of exact and asymptotic values. Rationals are written as exact
// "p/q" strings so a parsed table reproduces them bit for bit.

struct TableRow {
  unsigned long n;
  Rational r;
  std::string value;     // decimal of r * pi
  std::string asympt;    // decimal of the order-4 approximation
  std::string residual;  // decimal of n^5 |relative error|
};

inline constexpr const char* table_header = "n,r,value,asympt4,residual_n5";

inline std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << table_header << "\n";
  for (const auto& row : rows)
    out << row.n << ',' << to_string(row.r) << ',' << row.value << ','
        << row.asympt << ',' << row.residual << "\n";
  return out.str();
}

inline std::vector<TableRow> table_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != table_header)
    throw std::invalid_argument("table_from_csv: missing or wrong header");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t pos = line.find(',', start);
      if (pos == std::string::npos) {
        cells.push_back(line.substr(start));
        break;
      }
      cells.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    if (cells.size() != 5)
      throw std::invalid_argument("table_from_csv: expected 5 columns, got line: " + line);
    TableRow row;
    row.n = std::stoul(cells[0]);
    row.r = parse_rational(cells[1]);
    row.value = cells[2];
    row.asympt = cells[3];
    row.residual = cells[4];
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sincpow
