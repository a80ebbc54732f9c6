#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinverlinde_cli/report.hpp"
#include "spinverlinde_cli/sweep.hpp"

namespace spinverlinde::cli {

enum class Convention { bm, su2_level_2k_plus_2, su2_level_2k };

Convention parse_convention(const std::string& name);
std::string to_string(Convention convention);

struct SweepConfig {
  std::vector<int> genera;
  std::vector<int> levels;  // SU2 levels for verlinde, p values elsewhere
  std::vector<int> arfs = {0, 1};
  Convention convention = Convention::bm;
  bool allow_genus_one = false;
  int jobs = 1;
  int precision_ceiling = 4096;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

Report cmd_verlinde(const SweepConfig& config);
Report cmd_twisted(const SweepConfig& config);
Report cmd_spin_dims(const SweepConfig& config);

struct LevelsRequest {
  std::optional<std::string> from_lattice;
  long long value = 0;
  std::optional<std::string> to_lattice;
  bool table = false;
};
Report cmd_levels(const LevelsRequest& request);

inline const std::vector<std::string> kSuites = {"f2", "spin", "fusion", "decomp", "projs", "heisenberg", "levels"};

struct CheckConfig {
  std::string suite = "all";
  std::optional<std::vector<int>> genera;
  std::optional<std::vector<int>> ps;
  int jobs = 1;
  int precision_ceiling = 4096;
};
Report cmd_check(const CheckConfig& config);

}  // namespace spinverlinde::cli
