#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "spinverlinde/errors.hpp"
#include "spinverlinde/fusion.hpp"
#include "spinverlinde_cli/commands.hpp"

namespace cli = spinverlinde::cli;

namespace {

struct OutputOptions {
  std::string format = "text";
  std::string out;
};

int emit(const cli::Report& report, const OutputOptions& output) {
  const std::string text = cli::emit(report, cli::parse_format(output.format));
  if (output.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(output.out);
    if (!file) throw cli::UsageError("cannot open output file '" + output.out + "'");
    file << text;
  }
  if (!report.ok()) {
    for (const auto& c : report.checks)
      if (!c.passed && !c.advisory) std::cerr << "failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    return cli::kExitFailure;
  }
  return cli::kExitOk;
}

void add_output_flags(CLI::App* cmd, OutputOptions& output) {
  cmd->add_option("--format", output.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", output.out, "Write output to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimensions and identity checks for spin Chern-Simons state spaces"};
  app.require_subcommand(1);

  OutputOptions output;
  std::string genus_text = "2";
  std::string level_text = "0..4";
  std::string p_text = "8..32";
  std::string arf_text = "0,1";
  std::string convention = "bm";
  bool allow_genus_one = false;
  int jobs = 1;
  int ceiling = spinverlinde::fusion::OracleOptions{}.precision_ceiling;

  auto add_common = [&](CLI::App* cmd) {
    add_output_flags(cmd, output);
    cmd->add_option("--jobs", jobs, "Worker threads for sweep cells")->check(CLI::Range(1, 256));
  };
  auto add_ceiling = [&](CLI::App* cmd) {
    cmd->add_option("--precision-ceiling", ceiling, "Maximum MPFR precision in bits for the interval oracle")
        ->envname("SPINVERLINDE_PRECISION_CEILING")
        ->check(CLI::Range(64, 1 << 20));
  };

  auto* verlinde = app.add_subcommand("verlinde", "Verlinde dimensions with certified oracle widths");
  verlinde->add_option("--genus", genus_text, "Genus range, e.g. 2 or 1..6 or 2,4");
  verlinde->add_option("--level", level_text, "SU2 level range");
  add_common(verlinde);
  add_ceiling(verlinde);

  auto* twisted = app.add_subcommand("twisted", "Twisted Verlinde numbers with certified oracle widths");
  twisted->add_option("--genus", genus_text, "Genus range");
  twisted->add_option("--p", p_text, "Even p range; a..b steps by 2 unless a step is given");
  add_common(twisted);
  add_ceiling(twisted);

  auto* spin_dims = app.add_subcommand("spin-dims", "Graded dimensions per Arf invariant with checksum rows");
  spin_dims->add_option("--genus", genus_text, "Genus range");
  spin_dims->add_option("--p", p_text, "p range, multiples of 8; a..b steps by 8");
  spin_dims->add_option("--arf", arf_text, "Arf invariants to list (0, 1 or 0,1)");
  spin_dims->add_option("--convention", convention, "Base binding: bm, su2-2k+2 or su2-2k")
      ->check(CLI::IsMember({"bm", "su2-2k+2", "su2-2k"}));
  spin_dims->add_flag("--allow-genus-one", allow_genus_one, "Include genus one, flagged as extrapolated");
  add_common(spin_dims);

  std::string suite = "all";
  std::string check_genus;
  std::string check_p;
  auto* check = app.add_subcommand("check", "Run identity suites");
  check->add_option("suite", suite, "f2, spin, fusion, decomp, projs, heisenberg, levels or all");
  check->add_option("--genus", check_genus, "Genus range (suite default if omitted)");
  check->add_option("--p", check_p, "p range, multiples of 8 (suite default if omitted)");
  add_common(check);
  add_ceiling(check);

  cli::LevelsRequest levels_request;
  auto* levels = app.add_subcommand("levels", "Convert levels between lattices or print the correspondence table");
  auto* source = levels->add_option_group("source");
  for (const char* lattice : {"so3", "su2", "bhmv", "bm"}) {
    source->add_option_function<long long>(
        std::string("--") + lattice,
        [&levels_request, lattice](long long v) {
          levels_request.from_lattice = lattice;
          levels_request.value = v;
        },
        std::string("Level on the ") + lattice + " lattice");
  }
  source->require_option(0, 1);
  levels->add_option_function<std::string>("--to", [&](const std::string& t) { levels_request.to_lattice = t; },
                                           "Target lattice")
      ->check(CLI::IsMember({"so3", "su2", "bhmv", "bm"}));
  levels->add_flag("--table", levels_request.table, "Print the level correspondence table");
  add_output_flags(levels, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    cli::SweepConfig config;
    config.jobs = jobs;
    config.precision_ceiling = ceiling;
    config.allow_genus_one = allow_genus_one;
    config.convention = cli::parse_convention(convention);

    if (*verlinde) {
      config.genera = cli::parse_range(genus_text);
      config.levels = cli::parse_range(level_text);
      return emit(cli::cmd_verlinde(config), output);
    }
    if (*twisted) {
      config.genera = cli::parse_range(genus_text);
      config.levels = cli::parse_range(p_text, 2);
      return emit(cli::cmd_twisted(config), output);
    }
    if (*spin_dims) {
      config.genera = cli::parse_range(genus_text);
      config.levels = cli::parse_range(p_text, 8);
      config.arfs = cli::parse_range(arf_text);
      return emit(cli::cmd_spin_dims(config), output);
    }
    if (*check) {
      cli::CheckConfig cc;
      cc.suite = suite;
      cc.jobs = jobs;
      cc.precision_ceiling = ceiling;
      if (!check_genus.empty()) cc.genera = cli::parse_range(check_genus);
      if (!check_p.empty()) cc.ps = cli::parse_range(check_p, 8);
      return emit(cli::cmd_check(cc), output);
    }
    return emit(cli::cmd_levels(levels_request), output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitFailure;
  }
}
