#pragma once

// Spin-refined dimension formulas for a closed genus-g spin surface.
//
// The level convention throughout is the BM one: p = 8m, and the unrefined
// spaces are dim V_p = verlinde_dim(g, p/2 - 2), dim V'_p = twisted_dim(g, p).
// Every formula divides by 2^{2g}; a remainder or a negative result is a
// hard IntegralityError, never rounded.

#include <string>

#include "spinverlinde/levels.hpp"
#include "spinverlinde/numeric.hpp"
#include "spinverlinde/spin_structures.hpp"

namespace spinverlinde::dims {

/// Name of the default level convention, quoted in integrality diagnostics.
inline constexpr const char* kBmConvention =
    "BM: p = 8m, dim V_p = verlinde(g, p/2-2), dim V'_p = twisted(g, p), correction base p/4";

struct SpinDimensionInput {
  int genus = 2;
  spin::ArfInvariant arf;
  /// Genus one lies outside the range where the moduli arguments apply;
  /// it is computed only when explicitly requested and labeled extrapolated.
  bool allow_genus_one = false;

  /// Throws std::invalid_argument for genus < 1, or genus 1 without the flag.
  void validate() const;
  bool extrapolated() const { return genus == 1; }
};

struct GradedDimension {
  BigInt even;
  BigInt odd;
  friend bool operator==(const GradedDimension&, const GradedDimension&) = default;
};

/// dim V^s_{p,0} = 2^{-2g} (dim V_p + (p/4)^{g-1} ((-1)^eps 2^g - 1)).
BigInt bm_even_dim(const SpinDimensionInput& input, levels::BmLevel p);

/// dim V^s_{p,1} = 2^{-2g} (dim V'_p - (p/4)^{g-1} ((-1)^eps 2^g - 1)).
BigInt bm_odd_dim(const SpinDimensionInput& input, levels::BmLevel p);

/// Graded dimension of the spin Chern-Simons Hilbert space at SO3 level
/// 2m - 1, i.e. p = 8m. The w2 = 0 component is even and w2 = 1 is odd.
GradedDimension spin_cs_dims(const SpinDimensionInput& input, int m);

/// Explicit bases for the Hilbert-space corollary: the section-space
/// dimensions of the two moduli components and the correction base c.
struct CorollaryBinding {
  BigInt base_even;
  BigInt base_odd;
  BigInt correction_base;
  std::string convention;
  /// True for any binding other than the BM one.
  bool extrapolated = false;
};

/// Default binding: bases dim V_p, dim V'_p and c = p/4.
CorollaryBinding bm_binding(int genus, levels::BmLevel p);

/// Literal readings of the corollary at even SO3 level k (shifted level k+1)
/// with c = k + 2. `su2_level` chooses whether the base line bundle L_{2k+2}
/// is read as Verlinde level 2k + 2 (agrees with BM at p = 4(k+2)) or 2k.
enum class LineBundleReading { su2_level_2k_plus_2, su2_level_2k };
CorollaryBinding literal_binding(int genus, int even_so3_level, LineBundleReading reading);

/// even = 2^{-2g}(base_even + ((-1)^eps 2^g - 1) c^{g-1}),
/// odd  = 2^{-2g}(base_odd  - ((-1)^eps 2^g - 1) c^{g-1}).
GradedDimension corollary_dims(const SpinDimensionInput& input, const CorollaryBinding& binding);

/// Closed form of the trace of P_sigma:
/// 2^{-2g}(base_dim + (-1)^{w2} ((-1)^eps 2^g - 1) (lambda + 1)^{g-1}).
BigInt dims_via_traces(const SpinDimensionInput& input, const BigInt& base_dim,
                       const BigInt& lambda_rho, int w2);

/// The same trace summed term by term: 2^{-2g}(base_dim + (lambda + 1)^{g-1}
/// sum_{Z != 0} lift_sign(sigma, Z, w2, 1)). Walks all of H^1, so genus is
/// bounded by `cap`.
BigInt dims_via_traces_termwise(const spin::QuadraticRefinement& sigma, const BigInt& base_dim,
                                const BigInt& lambda_rho, int w2,
                                int cap = f2::kDefaultEnumerationCap);

/// Sum of bm_even_dim over all 2^{2g} spin structures, grouped by Arf
/// invariant. Throws IdentityViolation unless it equals dim V_p.
BigInt sum_over_spin(int genus, levels::BmLevel p, bool allow_genus_one = false);

/// Sum of bm_even_dim + bm_odd_dim over all spin structures. Throws
/// IdentityViolation unless it equals dim V_p + dim V'_p.
BigInt total_over_spin(int genus, levels::BmLevel p, bool allow_genus_one = false);

}  // namespace spinverlinde::dims
