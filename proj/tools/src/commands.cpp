#include "spinverlinde_cli/commands.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <utility>

#include "spinverlinde/errors.hpp"
#include "spinverlinde/fusion.hpp"
#include "spinverlinde/levels.hpp"
#include "spinverlinde/spin_dimensions.hpp"

namespace spinverlinde::cli {

Convention parse_convention(const std::string& name) {
  if (name == "bm") return Convention::bm;
  if (name == "su2-2k+2") return Convention::su2_level_2k_plus_2;
  if (name == "su2-2k") return Convention::su2_level_2k;
  throw UsageError("unknown convention '" + name + "' (expected bm, su2-2k+2 or su2-2k)");
}

std::string to_string(Convention convention) {
  switch (convention) {
    case Convention::su2_level_2k_plus_2:
      return "su2-2k+2";
    case Convention::su2_level_2k:
      return "su2-2k";
    case Convention::bm:
      break;
  }
  return "bm";
}

namespace {

struct Cell {
  int genus;
  int level;
};

std::vector<Cell> grid(const std::vector<int>& genera, const std::vector<int>& levels) {
  std::vector<Cell> out;
  for (int g : genera)
    for (int k : levels) out.push_back({g, k});
  return out;
}

Json sweep_params(const SweepConfig& c, const char* level_key) {
  return Json{{"genus", c.genera}, {level_key, c.levels}, {"jobs", c.jobs}, {"precision_ceiling", c.precision_ceiling}};
}

struct CertifiedRow {
  Json row;
  std::optional<std::string> failure;
};

template <class Exact, class Oracle>
Report certified_sweep(const SweepConfig& config, const char* command, const char* level_key, Exact exact,
                       Oracle oracle) {
  for (int g : config.genera)
    if (g < 1) throw UsageError(fmt::format("genus must be at least 1, got {}", g));
  Report report;
  report.command = command;
  report.params = sweep_params(config, level_key);
  report.columns = {"genus", level_key, "dim", "oracle_width", "precision_bits", "certified"};

  const auto cells = grid(config.genera, config.levels);
  // Argument errors surface before any work is scheduled.
  for (const auto& c : cells) exact(c.genus, c.level, true);

  const fusion::OracleOptions options{128, config.precision_ceiling};
  const auto rows = parallel_map(cells, config.jobs, [&](const Cell& c) {
    const BigInt dim = exact(c.genus, c.level, false);
    CertifiedRow out;
    out.row = Json{{"genus", c.genus}, {level_key, c.level}, {"dim", integer_cell(dim)}};
    try {
      const auto cert = oracle(c.genus, c.level, options);
      out.row["oracle_width"] = fmt::format("{:.3e}", cert.width_estimate());
      out.row["precision_bits"] = cert.precision_bits;
      out.row["certified"] = cert.value == dim;
      if (cert.value != dim) out.failure = fmt::format("oracle gives {} but trace gives {}", cert.value.str(), dim.str());
    } catch (const PrecisionCeilingExceeded& e) {
      out.row["oracle_width"] = nullptr;
      out.row["precision_bits"] = nullptr;
      out.row["certified"] = false;
      out.failure = e.what();
    } catch (const IntegralityError& e) {
      out.row["oracle_width"] = nullptr;
      out.row["precision_bits"] = nullptr;
      out.row["certified"] = false;
      out.failure = e.what();
    }
    return out;
  });

  std::vector<std::string> failures;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    report.rows.push_back(rows[i].row);
    if (rows[i].failure) failures.push_back(fmt::format("({},{}): {}", cells[i].genus, cells[i].level, *rows[i].failure));
  }
  Check check{"every cell certified by the interval oracle", failures.empty(), false, ""};
  check.detail = failures.empty() ? fmt::format("{} cells", rows.size()) : fmt::format("{}", fmt::join(failures, "; "));
  report.checks.push_back(std::move(check));
  return report;
}

}  // namespace

Report cmd_verlinde(const SweepConfig& config) {
  return certified_sweep(
      config, "verlinde", "level",
      [](int g, int k, bool validate_only) -> BigInt {
        if (k < 0) throw UsageError(fmt::format("level must be non-negative, got {}", k));
        return validate_only ? BigInt(0) : fusion::verlinde_dim(g, k);
      },
      [](int g, int k, fusion::OracleOptions o) { return fusion::verlinde_trig_oracle(g, k, o); });
}

Report cmd_twisted(const SweepConfig& config) {
  return certified_sweep(
      config, "twisted", "p",
      [](int g, int p, bool validate_only) -> BigInt {
        if (p < 4 || p % 2 != 0) throw UsageError(fmt::format("p must be even and at least 4, got {}", p));
        return validate_only ? BigInt(0) : fusion::twisted_dim(g, p);
      },
      [](int g, int p, fusion::OracleOptions o) { return fusion::twisted_trig_oracle(g, p, o); });
}

namespace {

dims::CorollaryBinding binding_for(Convention convention, int genus, levels::BmLevel p) {
  const int k = static_cast<int>(p.value()) / 4 - 2;
  switch (convention) {
    case Convention::su2_level_2k_plus_2:
      return dims::literal_binding(genus, k, dims::LineBundleReading::su2_level_2k_plus_2);
    case Convention::su2_level_2k:
      return dims::literal_binding(genus, k, dims::LineBundleReading::su2_level_2k);
    case Convention::bm:
      break;
  }
  return dims::bm_binding(genus, p);
}

struct SpinCellResult {
  std::vector<Json> rows;
  Check check;
};

}  // namespace

Report cmd_spin_dims(const SweepConfig& config) {
  Report report;
  report.command = "spin-dims";
  report.params = sweep_params(config, "p");
  report.params["arf"] = config.arfs;
  report.params["convention"] = to_string(config.convention);
  report.params["allow_genus_one"] = config.allow_genus_one;
  report.columns = {"row", "genus", "p", "arf", "even", "odd", "extrapolated", "convention"};

  for (int eps : config.arfs)
    if (eps != 0 && eps != 1) throw UsageError(fmt::format("arf must be 0 or 1, got {}", eps));
  const auto cells = grid(config.genera, config.levels);
  for (const auto& c : cells) {
    try {
      levels::BmLevel level(c.level);
      dims::SpinDimensionInput{c.genus, spin::ArfInvariant(0), config.allow_genus_one}.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  const auto results = parallel_map(cells, config.jobs, [&](const Cell& c) {
    const levels::BmLevel p(c.level);
    const auto binding = binding_for(config.convention, c.genus, p);
    const auto counts = spin::count_by_arf(c.genus);
    SpinCellResult out;
    BigInt sum_even = 0;
    BigInt sum_odd = 0;
    bool extrapolated = binding.extrapolated || c.genus == 1;
    std::vector<std::string> negatives;
    for (int eps : {0, 1}) {
      const dims::SpinDimensionInput input{c.genus, spin::ArfInvariant(eps), config.allow_genus_one};
      const auto d = dims::corollary_dims(input, binding);
      if (d.even < 0 || d.odd < 0) negatives.push_back(fmt::format("arf {}", eps));
      const BigInt multiplicity(eps == 0 ? counts.even : counts.odd);
      sum_even += multiplicity * d.even;
      sum_odd += multiplicity * d.odd;
      if (std::find(config.arfs.begin(), config.arfs.end(), eps) == config.arfs.end()) continue;
      out.rows.push_back(Json{{"row", "spin"},
                              {"genus", c.genus},
                              {"p", c.level},
                              {"arf", eps},
                              {"even", integer_cell(d.even)},
                              {"odd", integer_cell(d.odd)},
                              {"extrapolated", extrapolated},
                              {"convention", to_string(config.convention)}});
    }
    out.rows.push_back(Json{{"row", "checksum"},
                            {"genus", c.genus},
                            {"p", c.level},
                            {"arf", "all"},
                            {"even", integer_cell(sum_even)},
                            {"odd", integer_cell(sum_odd)},
                            {"extrapolated", extrapolated},
                            {"convention", to_string(config.convention)}});
    const bool ok = sum_even == binding.base_even && sum_odd == binding.base_odd && negatives.empty();
    out.check = Check{fmt::format("sum over spin structures (g={}, p={})", c.genus, c.level), ok, false,
                      fmt::format("even {} vs dim V_p {}; odd {} vs dim V'_p {}", sum_even.str(),
                                  binding.base_even.str(), sum_odd.str(), binding.base_odd.str())};
    if (!negatives.empty()) out.check.detail += fmt::format("; negative dimension at {}", fmt::join(negatives, ", "));
    return out;
  });

  for (const auto& r : results) {
    report.rows.insert(report.rows.end(), r.rows.begin(), r.rows.end());
    report.checks.push_back(r.check);
  }
  return report;
}

namespace {

levels::Lattice parse_lattice(const std::string& name) {
  if (name == "so3") return levels::Lattice::so3;
  if (name == "su2") return levels::Lattice::su2;
  if (name == "bhmv") return levels::Lattice::bhmv;
  if (name == "bm") return levels::Lattice::bm;
  throw UsageError("unknown lattice '" + name + "' (expected so3, su2, bhmv or bm)");
}

// Every conversion goes through the SU2 lattice except the direct SO3 <-> BM pair.
levels::LevelValue convert(const levels::LevelValue& from, levels::Lattice to) {
  using namespace levels;
  if (lattice_of(from) == to) return from;
  if (const auto* so3 = std::get_if<So3Level>(&from); so3 && to == Lattice::bm) return bm_from_so3(*so3);
  if (const auto* bm = std::get_if<BmLevel>(&from); bm && to == Lattice::so3) return so3_from_bm(*bm);

  Su2Level su2(0);
  if (const auto* so3 = std::get_if<So3Level>(&from)) su2 = beta_pullback(*so3);
  if (const auto* s = std::get_if<Su2Level>(&from)) su2 = *s;
  if (const auto* bhmv = std::get_if<BhmvLevel>(&from)) su2 = su2_from_bhmv(*bhmv);
  if (const auto* bm = std::get_if<BmLevel>(&from)) su2 = su2_from_bhmv(as_bhmv(*bm));

  switch (to) {
    case Lattice::su2:
      return su2;
    case Lattice::so3:
      if (su2.value() % 2 != 0) {
        throw LevelError(fmt::format("SU2 level {} is odd and has no SO3 preimage", su2.value()));
      }
      return So3Level(su2.value() / 2);
    case Lattice::bhmv:
      return bhmv_from_su2(su2);
    case Lattice::bm:
      return BmLevel(bhmv_from_su2(su2).value());
  }
  throw LevelError("unreachable lattice");
}

}  // namespace

Report cmd_levels(const LevelsRequest& request) {
  Report report;
  report.command = "levels";
  if (request.table) {
    report.params = Json{{"table", true}};
    report.columns = {"bhmv_mod8", "su2_mod4", "so3_mod2", "structure"};
    const auto table = levels::correspondence_table();
    for (const auto& col : table.columns) {
      Json row{{"bhmv_mod8", col.bhmv_mod8}, {"su2_mod4", col.su2_mod4}};
      row["so3_mod2"] = col.so3_mod2 ? Json(*col.so3_mod2) : Json(nullptr);
      row["structure"] = col.structure ? Json(*col.structure) : Json(nullptr);
      report.rows.push_back(std::move(row));
    }
    for (const auto& f : table.findings) {
      const bool structured = table.columns[f.column].structure.has_value();
      report.checks.push_back(Check{fmt::format("table column {}", f.column + 1), f.consistent, !structured, f.message});
    }
    return report;
  }
  if (!request.from_lattice || !request.to_lattice) {
    throw UsageError("levels needs --table, or one of --so3/--su2/--bhmv/--bm together with --to");
  }
  report.params = Json{{"from", *request.from_lattice}, {"value", request.value}, {"to", *request.to_lattice}};
  report.columns = {"from", "value", "to", "result"};
  const auto target = parse_lattice(*request.to_lattice);
  levels::LevelValue source = levels::make_level(parse_lattice(*request.from_lattice), request.value);
  const auto result = convert(source, target);
  report.rows.push_back(Json{{"from", *request.from_lattice},
                             {"value", request.value},
                             {"to", *request.to_lattice},
                             {"result", levels::value_of(result)}});
  return report;
}

}  // namespace spinverlinde::cli
