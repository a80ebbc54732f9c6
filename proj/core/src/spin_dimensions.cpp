#include "spinverlinde/spin_dimensions.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "spinverlinde/errors.hpp"
#include "spinverlinde/fusion.hpp"

namespace spinverlinde::dims {

namespace {

std::string str(const BigInt& x) { return x.str(); }

/// (-1)^eps 2^g - 1
BigInt arf_weight(int genus, spin::ArfInvariant arf) {
  const BigInt two_g = pow2(static_cast<unsigned>(genus));
  return (arf.is_odd() ? BigInt(-two_g) : two_g) - 1;
}

BigInt exact_quotient(const BigInt& numerator, int genus, const std::string& what,
                      const std::string& convention) {
  const BigInt denominator = pow2(static_cast<unsigned>(2 * genus));
  if (numerator % denominator != 0 || numerator < 0) {
    throw IntegralityError(fmt::format("{}: {}/2^{} = {}/{} is not a non-negative integer [convention: {}]",
                                       what, str(numerator), 2 * genus, str(numerator),
                                       str(denominator), convention));
  }
  return numerator / denominator;
}

void require_w2(int w2) {
  if (w2 != 0 && w2 != 1) throw std::invalid_argument(fmt::format("w2 must be 0 or 1, got {}", w2));
}

}  // namespace

void SpinDimensionInput::validate() const {
  if (genus < 1) throw std::invalid_argument(fmt::format("genus must be >= 1, got {}", genus));
  if (genus == 1 && !allow_genus_one) {
    throw std::invalid_argument("genus 1 is an extrapolation; set allow_genus_one to compute it");
  }
}

CorollaryBinding bm_binding(int genus, levels::BmLevel p) {
  const int pv = static_cast<int>(p.value());
  return CorollaryBinding{fusion::verlinde_dim(genus, pv / 2 - 2), fusion::twisted_dim(genus, pv),
                          BigInt(pv / 4), kBmConvention, false};
}

CorollaryBinding literal_binding(int genus, int even_so3_level, LineBundleReading reading) {
  if (even_so3_level < 0 || even_so3_level % 2 != 0) {
    throw LevelError(
        fmt::format("corollary needs an even SO3 level k >= 0, got {}", even_so3_level));
  }
  const int k = even_so3_level;
  const int su2 = reading == LineBundleReading::su2_level_2k_plus_2 ? 2 * k + 2 : 2 * k;
  const int p = 2 * (su2 + 2);
  CorollaryBinding b;
  b.base_even = fusion::verlinde_dim(genus, su2);
  b.base_odd = fusion::twisted_dim(genus, p);
  b.correction_base = k + 2;
  b.convention = fmt::format("corollary literal: L_(2k+2) read as SU2 level {} (k = {}), correction base k+2",
                             reading == LineBundleReading::su2_level_2k_plus_2 ? "2k+2" : "2k", k);
  b.extrapolated = true;
  return b;
}

GradedDimension corollary_dims(const SpinDimensionInput& input, const CorollaryBinding& binding) {
  input.validate();
  const int g = input.genus;
  const BigInt correction =
      arf_weight(g, input.arf) * ipow(binding.correction_base, static_cast<unsigned>(g - 1));
  const std::string where = fmt::format("corollary (g={}, eps={})", g, input.arf.value());
  return GradedDimension{
      exact_quotient(binding.base_even + correction, g, where + " even part", binding.convention),
      exact_quotient(binding.base_odd - correction, g, where + " odd part", binding.convention)};
}

BigInt bm_even_dim(const SpinDimensionInput& input, levels::BmLevel p) {
  input.validate();
  const int g = input.genus;
  const CorollaryBinding b = bm_binding(g, p);
  const BigInt numerator =
      b.base_even + ipow(b.correction_base, static_cast<unsigned>(g - 1)) * arf_weight(g, input.arf);
  return exact_quotient(numerator, g,
                        fmt::format("bm_even_dim(g={}, p={}, eps={})", g, p.value(), input.arf.value()),
                        kBmConvention);
}

BigInt bm_odd_dim(const SpinDimensionInput& input, levels::BmLevel p) {
  input.validate();
  const int g = input.genus;
  const CorollaryBinding b = bm_binding(g, p);
  const BigInt numerator =
      b.base_odd - ipow(b.correction_base, static_cast<unsigned>(g - 1)) * arf_weight(g, input.arf);
  return exact_quotient(numerator, g,
                        fmt::format("bm_odd_dim(g={}, p={}, eps={})", g, p.value(), input.arf.value()),
                        kBmConvention);
}

GradedDimension spin_cs_dims(const SpinDimensionInput& input, int m) {
  if (m < 1) throw LevelError(fmt::format("m must be >= 1, got {}", m));
  const levels::BmLevel p = levels::bm_from_so3(levels::So3Level(2 * m - 1));
  GradedDimension out;
  // The w2 = 0 sector carries the even grading and w2 = 1 the odd one.
  for (int w2 : {0, 1}) {
    BigInt d = w2 == 0 ? bm_even_dim(input, p) : bm_odd_dim(input, p);
    (levels::grading_parity(w2) == levels::Parity::even ? out.even : out.odd) = std::move(d);
  }
  return out;
}

BigInt dims_via_traces(const SpinDimensionInput& input, const BigInt& base_dim,
                       const BigInt& lambda_rho, int w2) {
  input.validate();
  require_w2(w2);
  const int g = input.genus;
  BigInt correction =
      arf_weight(g, input.arf) * ipow(BigInt(lambda_rho + 1), static_cast<unsigned>(g - 1));
  if (w2 == 1) correction = -correction;
  return exact_quotient(base_dim + correction, g,
                        fmt::format("dims_via_traces(g={}, eps={}, base={}, lambda={}, w2={})", g,
                                    input.arf.value(), str(base_dim), str(lambda_rho), w2),
                        "trace average with Tr[Z] = lift_sign * (lambda+1)^(g-1)");
}

BigInt dims_via_traces_termwise(const spin::QuadraticRefinement& sigma, const BigInt& base_dim,
                                const BigInt& lambda_rho, int w2, int cap) {
  require_w2(w2);
  const auto& space = sigma.space();
  const int g = space.genus();
  BigInt sign_sum = 0;
  for (const auto& z : f2::enumerate_vectors(space, cap)) {
    if (z.is_zero()) continue;
    sign_sum += spin::lift_sign(sigma, z, w2, 1).value();
  }
  const BigInt numerator =
      base_dim + ipow(BigInt(lambda_rho + 1), static_cast<unsigned>(g - 1)) * sign_sum;
  return exact_quotient(numerator, g,
                        fmt::format("termwise trace (g={}, base={}, lambda={}, w2={})", g,
                                    str(base_dim), str(lambda_rho), w2),
                        "trace average with Tr[Z] = lift_sign * (lambda+1)^(g-1)");
}

BigInt sum_over_spin(int genus, levels::BmLevel p, bool allow_genus_one) {
  const auto counts = spin::count_by_arf(genus);
  const SpinDimensionInput even{genus, spin::ArfInvariant(0), allow_genus_one};
  const SpinDimensionInput odd{genus, spin::ArfInvariant(1), allow_genus_one};
  const BigInt total = BigInt(counts.even) * bm_even_dim(even, p) + BigInt(counts.odd) * bm_even_dim(odd, p);
  const BigInt expected = fusion::verlinde_dim(genus, static_cast<int>(p.value()) / 2 - 2);
  if (total != expected) {
    throw IdentityViolation(fmt::format("sum over spin structures at (g={}, p={}) is {}, dim V_p is {}",
                                        genus, p.value(), str(total), str(expected)));
  }
  return total;
}

BigInt total_over_spin(int genus, levels::BmLevel p, bool allow_genus_one) {
  const auto counts = spin::count_by_arf(genus);
  BigInt total = 0;
  for (int eps : {0, 1}) {
    const SpinDimensionInput in{genus, spin::ArfInvariant(eps), allow_genus_one};
    const BigInt multiplicity(eps == 0 ? counts.even : counts.odd);
    total += multiplicity * (bm_even_dim(in, p) + bm_odd_dim(in, p));
  }
  const int pv = static_cast<int>(p.value());
  const BigInt expected = fusion::verlinde_dim(genus, pv / 2 - 2) + fusion::twisted_dim(genus, pv);
  if (total != expected) {
    throw IdentityViolation(fmt::format("graded total over spin structures at (g={}, p={}) is {}, expected {}",
                                        genus, p.value(), str(total), str(expected)));
  }
  return total;
}

}  // namespace spinverlinde::dims
