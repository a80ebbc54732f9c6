#include "spinverlinde_cli/sweep.hpp"

#include <charconv>

namespace spinverlinde::cli {

namespace {

int parse_int(std::string_view s, const std::string& whole) {
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) throw UsageError("malformed range '" + whole + "'");
  return value;
}

void append_piece(std::string_view piece, int default_step, const std::string& whole, std::vector<int>& out) {
  const auto dots = piece.find("..");
  if (dots == std::string_view::npos) {
    out.push_back(parse_int(piece, whole));
    return;
  }
  std::string_view rest = piece.substr(dots + 2);
  int step = default_step;
  if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
    step = parse_int(rest.substr(colon + 1), whole);
    rest = rest.substr(0, colon);
  }
  const int lo = parse_int(piece.substr(0, dots), whole);
  const int hi = parse_int(rest, whole);
  if (step <= 0 || hi < lo || (hi - lo) % step != 0) {
    throw UsageError("malformed range '" + whole + "' (need lo <= hi with hi - lo a multiple of " +
                     std::to_string(step) + ")");
  }
  for (int v = lo; v <= hi; v += step) out.push_back(v);
}

}  // namespace

std::vector<int> parse_range(const std::string& text, int default_step) {
  std::vector<int> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    append_piece(rest.substr(0, comma), default_step, text, out);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (out.empty()) throw UsageError("empty range '" + text + "'");
  return out;
}

}  // namespace spinverlinde::cli
