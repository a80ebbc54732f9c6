#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <map>

#include "spinverlinde/errors.hpp"
#include "spinverlinde/f2_cohomology.hpp"
#include "spinverlinde/fusion.hpp"
#include "spinverlinde/heisenberg.hpp"
#include "spinverlinde/levels.hpp"
#include "spinverlinde/spin_dimensions.hpp"
#include "spinverlinde/spin_structures.hpp"
#include "spinverlinde_cli/commands.hpp"

namespace spinverlinde::cli {

namespace {

using f2::F2Vector;
using f2::SymplecticSpace;

struct SuiteContext {
  std::vector<int> genera;
  std::vector<int> ps;
  int jobs = 1;
  int precision_ceiling = 4096;
};

using Suite = std::function<std::vector<Check>(const SuiteContext&)>;

Check make_check(std::string name, bool passed, std::string detail = {}) {
  return Check{std::move(name), passed, false, std::move(detail)};
}

// Runs a per-genus body concurrently and flattens the results in genus order.
template <class Fn>
std::vector<Check> per_genus(const SuiteContext& ctx, Fn fn) {
  auto nested = parallel_map(ctx.genera, ctx.jobs, fn);
  std::vector<Check> out;
  for (auto& v : nested) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Check> suite_f2(const SuiteContext& ctx) {
  return per_genus(ctx, [](int g) {
    const SymplecticSpace s(g);
    const auto all = f2::enumerate_vectors(s);
    bool alternating = true;
    bool linear = true;
    bool nondegenerate = true;
    for (const auto& v : all) {
      alternating = alternating && f2::pair(s, v, v) == 0;
      bool witnessed = v.is_zero();
      for (int i = 0; i < s.dimension(); ++i) {
        const F2Vector e(s.dimension(), std::uint64_t{1} << i);
        witnessed = witnessed || f2::pair(s, v, e) == 1;
        for (const auto& w : all) {
          if (f2::pair(s, v + e, w) != (f2::pair(s, v, w) ^ f2::pair(s, e, w))) linear = false;
        }
      }
      nondegenerate = nondegenerate && witnessed;
    }
    bool characters = true;
    std::string bad;
    for (const auto& b : all) {
      const auto expected = b.is_zero() ? s.size() : 0;
      if (f2::character_sum(s, b) != expected) {
        characters = false;
        bad = fmt::format("b = {:#x}", b.bits());
      }
    }
    return std::vector<Check>{
        make_check(fmt::format("pairing alternating (g={})", g), alternating),
        make_check(fmt::format("pairing bilinear (g={})", g), linear),
        make_check(fmt::format("pairing non-degenerate (g={})", g), nondegenerate),
        make_check(fmt::format("character sums vanish off zero (g={})", g), characters, bad),
    };
  });
}

std::vector<Check> suite_spin(const SuiteContext& ctx) {
  return per_genus(ctx, [](int g) {
    const SymplecticSpace s(g);
    const auto all = f2::enumerate_vectors(s);
    const auto refinements = spin::enumerate_refinements(s);
    bool law = true;
    bool arf_agrees = true;
    bool lift_sums = true;
    for (const auto& q : refinements) {
      for (const auto& v : all)
        for (int i = 0; i < s.dimension(); ++i) {
          const F2Vector e(s.dimension(), std::uint64_t{1} << i);
          if (spin::evaluate(q, v + e) != (spin::evaluate(q, v) ^ spin::evaluate(q, e) ^ f2::pair(s, v, e))) law = false;
        }
      arf_agrees = arf_agrees && spin::arf(q) == spin::arf_by_counting(q);
      for (int w2 : {0, 1}) {
        std::int64_t total = 0;
        for (const auto& z : all) total += spin::lift_sign(q, z, w2, 1).value();
        const int sign = (w2 ^ spin::arf(q).value()) ? -1 : 1;
        lift_sums = lift_sums && total == sign * (std::int64_t{1} << g);
      }
    }
    const auto counts = spin::count_by_arf(g);
    const auto enumerated = spin::count_by_arf_enumerated(g);
    return std::vector<Check>{
        make_check(fmt::format("refinement law (g={})", g), law),
        make_check(fmt::format("Arf closed form equals zero count (g={})", g), arf_agrees),
        make_check(fmt::format("Arf counts match enumeration (g={})", g), counts == enumerated,
                   fmt::format("even {} odd {}", enumerated.even, enumerated.odd)),
        make_check(fmt::format("Arf Gauss sum is 2^g (g={})", g),
                   spin::arf_gauss_sum_enumerated(g) == (std::int64_t{1} << g) &&
                       spin::arf_gauss_sum(g) == (std::int64_t{1} << g)),
        make_check(fmt::format("lift-sign sums (g={})", g), lift_sums),
    };
  });
}

std::vector<Check> suite_fusion(const SuiteContext& ctx) {
  struct Cell {
    int g;
    int p;
  };
  std::vector<Cell> cells;
  for (int g : ctx.genera)
    for (int p : ctx.ps) cells.push_back({g, p});
  const fusion::OracleOptions options{128, ctx.precision_ceiling};
  auto out = parallel_map(cells, ctx.jobs, [&](const Cell& c) {
    const int k = c.p / 2 - 2;
    const auto v = fusion::verlinde_dim(c.g, k);
    const auto t = fusion::twisted_dim(c.g, c.p);
    std::string detail;
    bool ok = true;
    try {
      const auto vo = fusion::verlinde_trig_oracle(c.g, k, options);
      const auto to = fusion::twisted_trig_oracle(c.g, c.p, options);
      ok = vo.value == v && to.value == t && v > 0 && t >= 0;
      detail = fmt::format("V = {}, V' = {}", v.str(), t.str());
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    return make_check(fmt::format("trace equals certified oracle (g={}, p={})", c.g, c.p), ok, detail);
  });
  bool genus_one = true;
  for (int k = 0; k <= 64; ++k) genus_one = genus_one && fusion::verlinde_dim(1, k) == k + 1;
  out.push_back(make_check("genus one Verlinde is k+1 for k <= 64", genus_one));
  return out;
}

std::vector<Check> suite_decomp(const SuiteContext& ctx) {
  struct Cell {
    int g;
    int p;
  };
  std::vector<Cell> cells;
  for (int g : ctx.genera)
    for (int p : ctx.ps) cells.push_back({g, p});
  for (const auto& c : cells) levels::BmLevel check_level(c.p);
  auto nested = parallel_map(cells, ctx.jobs, [&](const Cell& c) {
    const levels::BmLevel p(c.p);
    const bool genus_one = c.g == 1;
    const BigInt v = fusion::verlinde_dim(c.g, c.p / 2 - 2);
    const BigInt t = fusion::twisted_dim(c.g, c.p);
    const BigInt lambda = c.p / 4 - 1;
    BigInt sum_even = 0;
    BigInt sum_all = 0;
    bool termwise = true;
    bool integral = true;
    std::map<int, std::pair<BigInt, BigInt>> closed;
    for (int eps : {0, 1}) {
      const dims::SpinDimensionInput input{c.g, spin::ArfInvariant(eps), genus_one};
      closed[eps] = {dims::bm_even_dim(input, p), dims::bm_odd_dim(input, p)};
      integral = integral && closed[eps].first >= 0 && closed[eps].second >= 0;
    }
    for (const auto& sigma : spin::enumerate_refinements(SymplecticSpace(c.g))) {
      const auto& [even, odd] = closed[spin::arf(sigma).value()];
      sum_even += even;
      sum_all += even + odd;
      termwise = termwise && dims::dims_via_traces_termwise(sigma, v, lambda, 0) == even &&
                 dims::dims_via_traces_termwise(sigma, t, lambda, 1) == odd;
    }
    const std::string tag = fmt::format("(g={}, p={}{})", c.g, c.p, genus_one ? ", extrapolated" : "");
    return std::vector<Check>{
        make_check("sum of even parts over spin structures is dim V_p " + tag, sum_even == v,
                   fmt::format("{} vs {}", sum_even.str(), v.str())),
        make_check("sum of all parts is dim V_p + dim V'_p " + tag, sum_all == v + t,
                   fmt::format("{} vs {}", sum_all.str(), BigInt(v + t).str())),
        make_check("termwise trace route equals closed form " + tag, termwise),
        make_check("dimensions are non-negative integers " + tag, integral),
    };
  });
  std::vector<Check> out;
  for (auto& v : nested) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Check> suite_projs(const SuiteContext& ctx) {
  return per_genus(ctx, [](int g) {
    const SymplecticSpace s(g);
    const auto all = f2::enumerate_vectors(s);
    bool idempotent = true;
    bool orthogonal = true;
    for (const auto& sigma : spin::enumerate_refinements(s)) {
      const auto p = heis::projection(sigma);
      idempotent = idempotent && heis::multiply(p, p) == p;
      for (const auto& l : all) {
        if (!l.is_zero()) orthogonal = orthogonal && heis::orthogonality_check(sigma, l);
      }
    }
    return std::vector<Check>{
        make_check(fmt::format("projections idempotent (g={})", g), idempotent),
        make_check(fmt::format("shifted projections orthogonal (g={})", g), orthogonal),
    };
  });
}

std::vector<Check> suite_heisenberg(const SuiteContext& ctx) {
  return per_genus(ctx, [](int g) {
    const heis::HeisenbergGroup group{SymplecticSpace(g)};
    const auto elements = group.elements();
    const std::size_t dim = std::size_t{1} << g;
    std::vector<heis::GaussianMatrix> reps;
    for (const auto& x : elements) reps.push_back(heis::heisenberg_rep(group, x));
    bool homomorphism = true;
    bool commutators = true;
    bool traces = true;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const auto& x = elements[i];
      const auto expected_trace = x.vector.is_zero()
                                      ? heis::GaussianInt::i_power(x.central) * heis::GaussianInt{static_cast<long long>(dim), 0}
                                      : heis::GaussianInt{0, 0};
      traces = traces && reps[i].trace() == expected_trace;
      for (std::size_t j = 0; j < elements.size(); ++j) {
        const auto& y = elements[j];
        homomorphism = homomorphism && reps[i] * reps[j] == heis::heisenberg_rep(group, group.multiply(x, y));
        commutators = commutators && group.commutator(x, y) == group.element(2 * f2::pair(group.space(), x.vector, y.vector), group.space().zero());
      }
    }
    const bool center = heis::heisenberg_rep(group, group.element(1, group.space().zero())) ==
                        heis::scalar_identity(dim, heis::GaussianInt{0, 1});
    return std::vector<Check>{
        make_check(fmt::format("representation is a homomorphism (g={})", g), homomorphism),
        make_check(fmt::format("commutator is (-1)^pairing (g={})", g), commutators),
        make_check(fmt::format("center acts by i (g={})", g), center),
        make_check(fmt::format("character vanishes off the center (g={})", g), traces),
    };
  });
}

std::vector<Check> suite_levels(const SuiteContext&) {
  using namespace levels;
  std::vector<Check> out;
  bool commutes = true;
  for (int m = 1; m <= 50; ++m) {
    const So3Level k(2 * m - 1);
    commutes = commutes && bm_from_so3(k).value() == bhmv_from_su2(beta_pullback(k)).value();
  }
  out.push_back(make_check("SO3 -> BM agrees with SU2 pullback for m <= 50", commutes));
  bool shift = true;
  for (int k = -10; k <= 50; ++k) {
    shift = shift && beta_pullback(metaplectic_shift(So3Level(k))) == metaplectic_shift(beta_pullback(So3Level(k)));
  }
  out.push_back(make_check("metaplectic shift commutes with pullback", shift));
  const auto table = correspondence_table();
  for (const auto& f : table.findings) {
    const bool structured = table.columns[f.column].structure.has_value();
    out.push_back(Check{fmt::format("table column {}", f.column + 1), f.consistent, !structured, f.message});
  }
  return out;
}

struct SuiteSpec {
  Suite run;
  std::vector<int> default_genera;
  std::vector<int> default_ps;
};

const std::map<std::string, SuiteSpec>& registry() {
  static const std::map<std::string, SuiteSpec> suites = {
      {"f2", {suite_f2, {1, 2, 3}, {}}},
      {"spin", {suite_spin, {1, 2, 3, 4}, {}}},
      {"fusion", {suite_fusion, {1, 2, 3, 4, 5, 6}, {8, 16, 24, 32, 40, 48, 56, 64}}},
      {"decomp", {suite_decomp, {2, 3, 4, 5}, {8, 16, 24, 32}}},
      {"projs", {suite_projs, {1, 2, 3}, {}}},
      {"heisenberg", {suite_heisenberg, {1, 2, 3}, {}}},
      {"levels", {suite_levels, {}, {}}},
  };
  return suites;
}

}  // namespace

Report cmd_check(const CheckConfig& config) {
  std::vector<std::string> names;
  if (config.suite == "all") {
    names = kSuites;
  } else if (registry().count(config.suite)) {
    names = {config.suite};
  } else {
    throw UsageError(fmt::format("unknown suite '{}' (expected {} or all)", config.suite, fmt::join(kSuites, ", ")));
  }

  Report report;
  report.command = "check";
  report.params = Json{{"suite", config.suite}, {"jobs", config.jobs}, {"precision_ceiling", config.precision_ceiling}};
  if (config.genera) report.params["genus"] = *config.genera;
  if (config.ps) report.params["p"] = *config.ps;
  report.columns = {"suite", "check", "status", "detail"};

  for (const auto& name : names) {
    const auto& entry = registry().at(name);
    SuiteContext ctx{config.genera.value_or(entry.default_genera), config.ps.value_or(entry.default_ps), config.jobs,
                     config.precision_ceiling};
    for (int g : ctx.genera)
      if (g < 1) throw UsageError(fmt::format("genus must be at least 1, got {}", g));
    std::vector<Check> checks;
    try {
      checks = entry.run(ctx);
    } catch (const IdentityViolation& e) {
      checks = {make_check(name, false, e.what())};
    } catch (const IntegralityError& e) {
      checks = {make_check(name, false, e.what())};
    } catch (const std::length_error& e) {
      throw UsageError(fmt::format("suite {}: {}", name, e.what()));
    } catch (const std::invalid_argument& e) {
      throw UsageError(fmt::format("suite {}: {}", name, e.what()));
    }
    for (auto& c : checks) {
      const char* status = c.passed ? "pass" : (c.advisory ? "note" : "FAIL");
      report.rows.push_back(Json{{"suite", name}, {"check", c.name}, {"status", status}, {"detail", c.detail}});
      c.name = name + ": " + c.name;
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace spinverlinde::cli
