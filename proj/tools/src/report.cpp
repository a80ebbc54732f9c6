#include "spinverlinde_cli/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace spinverlinde::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.advisory; });
}

Json integer_cell(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return Json(value.convert_to<std::int64_t>());
  }
  return Json(value.str());
}

Json to_json(const Report& report) {
  Json out = Json::object();
  out["command"] = report.command;
  out["params"] = report.params;
  out["columns"] = report.columns;
  out["rows"] = Json::array();
  for (const auto& row : report.rows) out["rows"].push_back(row);
  out["checks"] = Json::array();
  for (const auto& c : report.checks) {
    Json j = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (c.advisory) j["advisory"] = true;
    out["checks"].push_back(std::move(j));
  }
  out["ok"] = report.ok();
  return out;
}

Report report_from_json(const Json& json) {
  Report r;
  r.command = json.at("command").get<std::string>();
  r.params = json.at("params");
  if (json.contains("columns")) r.columns = json.at("columns").get<std::vector<std::string>>();
  for (const auto& row : json.at("rows")) r.rows.push_back(row);
  for (const auto& c : json.at("checks")) {
    r.checks.push_back(Check{c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                             c.value("advisory", false), c.value("detail", std::string())});
  }
  return r;
}

namespace {

std::string cell_text(const Json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return cell.get<std::string>();
  return cell.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string emit_csv(const Report& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << csv_escape(report.columns[i]);
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
      const auto it = row.find(report.columns[i]);
      out << (i ? "," : "") << csv_escape(it == row.end() ? std::string() : cell_text(*it));
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_text(const Report& report) {
  std::vector<std::size_t> widths;
  for (const auto& c : report.columns) widths.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : report.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
      const auto it = row.find(report.columns[i]);
      line.push_back(it == row.end() ? std::string() : cell_text(*it));
      widths[i] = std::max(widths[i], line.back().size());
    }
  }
  std::string out;
  auto put_line = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out += fmt::format("{:>{}}", line[i], widths[i]);
      out += i + 1 < line.size() ? "  " : "\n";
    }
  };
  // A check report's rows mirror its checks, so text output lists them once.
  const bool show_table = !report.columns.empty() && report.command != "check";
  if (show_table) {
    put_line(report.columns);
    for (const auto& line : cells) put_line(line);
  }
  if (!report.checks.empty()) {
    if (show_table) out += '\n';
    for (const auto& c : report.checks) {
      const char* status = c.passed ? "PASS" : (c.advisory ? "NOTE" : "FAIL");
      out += fmt::format("[{}] {}", status, c.name);
      if (!c.detail.empty()) out += ": " + c.detail;
      out += '\n';
    }
  }
  out += report.ok() ? "result: ok\n" : "result: FAILED\n";
  return out;
}

}  // namespace

std::string emit(const Report& report, Format format) {
  switch (format) {
    case Format::json:
      return to_json(report).dump(2) + "\n";
    case Format::csv:
      return emit_csv(report);
    case Format::text:
      break;
  }
  return emit_text(report);
}

Report parse(const std::string& json_text) { return report_from_json(Json::parse(json_text)); }

}  // namespace spinverlinde::cli
