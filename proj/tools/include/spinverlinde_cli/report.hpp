#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "spinverlinde/numeric.hpp"

namespace spinverlinde::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(const std::string& name);

struct Check {
  std::string name;
  bool passed = false;
  // Advisory checks are reported but never change the exit status.
  bool advisory = false;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<std::string> columns;
  std::vector<Json> rows;
  std::vector<Check> checks;

  bool ok() const;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Integers that fit in 64 bits become JSON numbers; larger ones are decimal strings.
Json integer_cell(const BigInt& value);

Json to_json(const Report& report);
Report report_from_json(const Json& json);

std::string emit(const Report& report, Format format);
Report parse(const std::string& json_text);

}  // namespace spinverlinde::cli
