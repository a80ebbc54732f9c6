// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Every expected value is either a frozen literal or recomputed by the
// reference routines in oracles.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spinverlinde/errors.hpp"
#include "spinverlinde/f2_cohomology.hpp"
#include "spinverlinde/fusion.hpp"
#include "spinverlinde/heisenberg.hpp"
#include "spinverlinde/levels.hpp"
#include "spinverlinde/spin_dimensions.hpp"
#include "spinverlinde/spin_structures.hpp"

using namespace spinverlinde;
using f2::SymplecticSpace;
using levels::BmLevel;

namespace {

// Pinned limits. Dimensions are integers, so every comparison is exact.
constexpr double kFastSeconds = 1.0;
constexpr double kDecompositionSeconds = 30.0;
constexpr double kProjectionSeconds = 10.0;
constexpr double kNoLimit = 0.0;
const oracle::Float kFloatOracleSlack("1e-25");
const Rational kMaxCertifiedWidth(1, 2);

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;
  std::function<void(Outcome&)> body;
};

std::string str(const BigInt& v) { return v.str(); }

BigInt nearest_integer(const oracle::Float& x, Outcome& out, const std::string& label) {
  const oracle::Float r = round(x);
  out.require(abs(x - r) < kFloatOracleSlack, label + " float oracle is not near an integer");
  return BigInt(r.convert_to<std::string>());
}

void verlinde_values(Outcome& out) {
  for (int k = 0; k <= 64; ++k) {
    out.require(fusion::verlinde_dim(1, k) == k + 1, "verlinde_dim(1," + std::to_string(k) + ") != k+1");
  }
  const std::vector<std::pair<int, int>> cells = {{2, 1}, {2, 2}, {2, 4}, {2, 6}};
  const std::vector<int> expected = {4, 10, 35, 84};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [g, k] = cells[i];
    const std::string label = "verlinde(" + std::to_string(g) + "," + std::to_string(k) + ")";
    const BigInt trace = fusion::verlinde_dim(g, k);
    const auto cert = fusion::verlinde_trig_oracle(g, k);
    out.require(trace == expected[i], label + " = " + str(trace));
    out.require(cert.value == trace && cert.width() < kMaxCertifiedWidth, label + " oracle disagrees");
    out.require(nearest_integer(oracle::sine_power_sum(g, k + 2, false), out, label) == trace,
                label + " float oracle disagrees");
  }
}

void twisted_values(Outcome& out) {
  const std::vector<std::pair<int, int>> cells = {{2, 8}, {3, 8}, {1, 8}};
  const std::vector<int> expected = {6, 28, 1};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [g, p] = cells[i];
    const std::string label = "twisted(" + std::to_string(g) + "," + std::to_string(p) + ")";
    const BigInt trace = fusion::twisted_dim(g, p);
    const auto cert = fusion::twisted_trig_oracle(g, p);
    out.require(trace == expected[i], label + " = " + str(trace));
    out.require(cert.value == trace && cert.width() < kMaxCertifiedWidth, label + " oracle disagrees");
    out.require(nearest_integer(oracle::sine_power_sum(g, p / 2, true), out, label) == trace,
                label + " float oracle disagrees");
  }
}

void bm_dimensions(Outcome& out) {
  const dims::SpinDimensionInput even{2, spin::ArfInvariant(0)};
  const dims::SpinDimensionInput odd{2, spin::ArfInvariant(1)};
  out.require(bm_even_dim(even, BmLevel(8)) == 1 && bm_odd_dim(even, BmLevel(8)) == 0, "(g=2,p=8,eps=0) != (1,0)");
  out.require(bm_even_dim(odd, BmLevel(8)) == 0 && bm_odd_dim(odd, BmLevel(8)) == 1, "(g=2,p=8,eps=1) != (0,1)");
  out.require(bm_even_dim(even, BmLevel(16)) == 6, "(g=2,p=16,eps=0) even != 6");
}

// Arf of every refinement from the zero-count oracle, indexed by basis bits.
std::vector<int> oracle_arfs(const SymplecticSpace& s) {
  std::vector<int> arfs;
  for (const auto& sigma : spin::enumerate_refinements(s)) arfs.push_back(oracle::arf_by_zeros(sigma.basis_values().coordinates()));
  return arfs;
}

void refinement_identity(Outcome& out) {
  for (int g = 2; g <= 5; ++g) {
    const SymplecticSpace s(g);
    const auto arfs = oracle_arfs(s);
    for (int p = 8; p <= 32; p += 8) {
      BigInt total = 0;
      for (int eps : arfs) total += dims::bm_even_dim({g, spin::ArfInvariant(eps)}, BmLevel(p));
      const std::string label = "(g=" + std::to_string(g) + ", p=" + std::to_string(p) + ")";
      const BigInt expected = nearest_integer(oracle::sine_power_sum(g, p / 2, false), out, label);
      out.require(static_cast<std::int64_t>(arfs.size()) == (std::int64_t{1} << (2 * g)), label + " refinement count");
      out.require(total == expected && fusion::verlinde_dim(g, p / 2 - 2) == expected,
                  label + " sum " + str(total) + " vs " + str(expected));
    }
  }
}

void trace_route(Outcome& out) {
  for (int g = 2; g <= 5; ++g) {
    const SymplecticSpace s(g);
    for (int p = 8; p <= 32; p += 8) {
      const BigInt v = fusion::verlinde_dim(g, p / 2 - 2);
      const BigInt t = fusion::twisted_dim(g, p);
      const BigInt lambda = p / 4 - 1;
      const std::string label = "(g=" + std::to_string(g) + ", p=" + std::to_string(p) + ")";
      for (const auto& sigma : spin::enumerate_refinements(s)) {
        const dims::SpinDimensionInput input{g, spin::arf(sigma)};
        out.require(dims::dims_via_traces_termwise(sigma, v, lambda, 0) == dims::bm_even_dim(input, BmLevel(p)),
                    label + " even part");
        out.require(dims::dims_via_traces_termwise(sigma, t, lambda, 1) == dims::bm_odd_dim(input, BmLevel(p)),
                    label + " odd part");
      }
    }
  }
}

void projections(Outcome& out) {
  for (int g = 1; g <= 3; ++g) {
    const SymplecticSpace s(g);
    const auto shifts = f2::enumerate_vectors(s);
    for (const auto& sigma : spin::enumerate_refinements(s)) {
      const auto p = heis::projection(sigma);
      out.require(p.coefficient(s.zero()) == Rational(1, BigInt(1) << (2 * g)), "projection weight");
      out.require(heis::multiply(p, p) == p, "P^2 != P at g=" + std::to_string(g));
      for (const auto& l : shifts) {
        if (l.is_zero()) continue;
        // P_{sigma+l} expressed over sigma, multiplied by P_sigma.
        const auto moved = heis::rebase(heis::projection(spin::shift(sigma, l)), l);
        out.require(heis::multiply(moved, p).is_zero(), "P_{sigma+l} P_sigma != 0 at g=" + std::to_string(g));
      }
    }
  }
}

void arf_combinatorics(Outcome& out) {
  const std::vector<spin::ArfCounts> frozen = {{3, 1}, {10, 6}, {36, 28}, {136, 120}};
  for (int g = 1; g <= 4; ++g) {
    spin::ArfCounts counted;
    for (int eps : oracle_arfs(SymplecticSpace(g))) (eps ? counted.odd : counted.even) += 1;
    const auto& want = frozen[static_cast<std::size_t>(g - 1)];
    out.require(counted == want, "oracle count mismatch at g=" + std::to_string(g));
    out.require(spin::count_by_arf(g) == want && spin::count_by_arf_enumerated(g) == want,
                "library count mismatch at g=" + std::to_string(g));
    out.require(want.even - want.odd == (std::int64_t{1} << g), "frozen counts");
    out.require(spin::arf_gauss_sum(g) == (std::int64_t{1} << g) && spin::arf_gauss_sum_enumerated(g) == (std::int64_t{1} << g),
                "Gauss sum at g=" + std::to_string(g));
  }
}

void character_sums(Outcome& out) {
  for (int g = 1; g <= 3; ++g) {
    const SymplecticSpace s(g);
    for (const auto& b : f2::enumerate_vectors(s)) {
      const std::int64_t expected = b.is_zero() ? s.size() : 0;
      out.require(oracle::character_sum(b.coordinates()) == expected, "oracle character sum");
      out.require(f2::character_sum(s, b) == expected, "character sum at g=" + std::to_string(g));
    }
  }
}

void level_correspondences(Outcome& out) {
  using namespace levels;
  for (int m = 1; m <= 50; ++m) {
    const So3Level k(2 * m - 1);
    out.require(bm_from_so3(k).value() == 8 * m, "bm_from_so3 at m=" + std::to_string(m));
    out.require(bhmv_from_su2(beta_pullback(k)).value() == 8 * m, "pullback route at m=" + std::to_string(m));
  }
  const auto table = correspondence_table();
  const std::vector<CorrespondenceColumn> verbatim = {
      {0, 2, 1, std::string("spin structure")},
      {4, 0, 0, std::string("Z/2-bundle")},
      {2, 1, std::nullopt, std::nullopt},
      {6, 3, std::nullopt, std::nullopt},
  };
  out.require(table.columns == verbatim, "table differs from the printed table");
  for (const auto& f : table.findings) {
    const auto& col = table.columns[f.column];
    // Recompute p = 2(k+2) mod 8 from the SU2 residue and the SO3 pullback independently.
    const int p_mod8 = (2 * (col.su2_mod4 + 2)) % 8;
    bool consistent = p_mod8 == col.bhmv_mod8;
    if (col.so3_mod2) consistent = consistent && (2 * *col.so3_mod2) % 4 == col.su2_mod4;
    out.require(consistent == f.consistent, "table finding disagrees for column " + std::to_string(f.column + 1));
    if (col.structure) out.require(f.consistent, "structured column " + std::to_string(f.column + 1) + " inconsistent");
    if (!f.consistent && !col.structure && out.passed) {
      out.detail += (out.detail.empty() ? "" : "; ") + std::string("note: column ") + std::to_string(f.column + 1) +
                    " lists BHMV " + std::to_string(col.bhmv_mod8) + " but p = 2(k+2) gives " + std::to_string(p_mod8);
    }
  }
}

void heisenberg_model(Outcome& out) {
  for (int g = 1; g <= 3; ++g) {
    const heis::HeisenbergGroup group{SymplecticSpace(g)};
    const auto elements = group.elements();
    const long long dim = 1LL << g;
    out.require(static_cast<std::int64_t>(elements.size()) == 4 * (std::int64_t{1} << (2 * g)), "group order");
    std::vector<heis::GaussianMatrix> reps;
    for (const auto& x : elements) reps.push_back(heis::heisenberg_rep(group, x));
    const auto id = heis::scalar_identity(static_cast<std::size_t>(dim), {1, 0});
    out.require(heis::heisenberg_rep(group, group.element(1, group.space().zero())) ==
                    heis::scalar_identity(static_cast<std::size_t>(dim), {0, 1}),
                "center does not act by i");
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const auto& x = elements[i];
      const auto tr = reps[i].trace();
      if (x.vector.is_zero()) {
        out.require(x.central != 0 || tr == heis::GaussianInt{dim, 0}, "identity trace != 2^g");
      } else {
        out.require(tr == heis::GaussianInt{0, 0}, "trace off the center != 0");
      }
      for (std::size_t j = 0; j < elements.size(); ++j) {
        const auto& y = elements[j];
        out.require(reps[i] * reps[j] == heis::heisenberg_rep(group, group.multiply(x, y)), "not a homomorphism");
        if (x.central == 0 && y.central == 0) {
          const int sign = oracle::pairing(x.vector.coordinates(), y.vector.coordinates()) ? -1 : 1;
          const auto comm = reps[i] * reps[j] * heis::heisenberg_rep(group, group.inverse(x)) *
                            heis::heisenberg_rep(group, group.inverse(y));
          out.require(comm == heis::scalar_identity(static_cast<std::size_t>(dim), {sign, 0}), "commutator sign");
        }
      }
    }
    out.require(reps.front() == id, "identity element");
  }
}

void integrality_sweep(Outcome& out) {
  for (int g = 1; g <= 6; ++g) {
    for (int p = 8; p <= 64; p += 8) {
      const std::string label = "(g=" + std::to_string(g) + ", p=" + std::to_string(p) + ")";
      out.require(fusion::verlinde_dim(g, p / 2 - 2) > 0 && fusion::twisted_dim(g, p) >= 0, label + " base dims");
      for (int eps : {0, 1}) {
        const dims::SpinDimensionInput input{g, spin::ArfInvariant(eps), g == 1};
        try {
          const auto d = dims::corollary_dims(input, dims::bm_binding(g, BmLevel(p)));
          out.require(d.even >= 0 && d.odd >= 0, label + " negative dimension");
          out.require(d.even == dims::bm_even_dim(input, BmLevel(p)) && d.odd == dims::bm_odd_dim(input, BmLevel(p)),
                      label + " routes disagree");
        } catch (const IntegralityError& e) {
          out.require(false, label + ": " + e.what());
        }
      }
    }
  }
  // A convention that breaks integrality must abort and say which convention it was.
  bool aborted = false;
  try {
    dims::corollary_dims({2, spin::ArfInvariant(0)},
                         dims::literal_binding(2, 2, dims::LineBundleReading::su2_level_2k));
  } catch (const IntegralityError& e) {
    aborted = std::string(e.what()).find("SU2 level 2k") != std::string::npos;
  }
  out.require(aborted, "non-integral convention did not abort with a named diagnostic");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Verlinde values, trace equals certified oracle", kFastSeconds, verlinde_values},
      {2, "twisted Verlinde values, trace equals certified oracle", kFastSeconds, twisted_values},
      {3, "graded spin dimensions at g=2", kNoLimit, bm_dimensions},
      {4, "even parts summed over all spin structures give dim V_p", kDecompositionSeconds, refinement_identity},
      {5, "termwise trace route equals closed form", kNoLimit, trace_route},
      {6, "projection idempotence and orthogonality for g <= 3", kProjectionSeconds, projections},
      {7, "Arf counts and Gauss sums for g <= 4", kNoLimit, arf_combinatorics},
      {8, "character sums for g <= 3", kNoLimit, character_sums},
      {9, "level correspondences and table", kNoLimit, level_correspondences},
      {10, "Heisenberg representation for g <= 3", kNoLimit, heisenberg_model},
      {11, "integrality sweep g <= 6, p <= 64", kNoLimit, integrality_sweep},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds >= c.time_limit) {
      out.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit) + " s");
    }
    failures += out.passed ? 0 : 1;
    std::printf("[%s] criterion %2d: %s (%.3f s)%s%s\n", out.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
