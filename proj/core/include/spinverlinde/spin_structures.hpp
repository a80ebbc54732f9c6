#pragma once

// Spin structures on a closed surface, modeled as quadratic refinements of
// the mod-2 intersection pairing, together with their Arf invariants and the
// sign rules for lifted mod-2 actions.

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "spinverlinde/f2_cohomology.hpp"

namespace spinverlinde::spin {

/// Z/2 value of the Arf invariant.
class ArfInvariant {
 public:
  constexpr ArfInvariant() = default;
  /// Throws std::invalid_argument unless value is 0 or 1.
  explicit ArfInvariant(int value);

  constexpr int value() const { return value_; }
  constexpr bool is_odd() const { return value_ == 1; }
  friend constexpr bool operator==(ArfInvariant, ArfInvariant) = default;

 private:
  int value_ = 0;
};

/// A multiplicative sign, +1 or -1.
class Sign {
 public:
  constexpr Sign() = default;
  /// (-1)^bit.
  static constexpr Sign from_parity(int bit) { return Sign((bit & 1) ? -1 : 1); }

  constexpr int value() const { return value_; }
  friend constexpr Sign operator*(Sign lhs, Sign rhs) { return Sign(lhs.value_ * rhs.value_); }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  constexpr explicit Sign(int v) : value_(v) {}
  int value_ = 1;
};

/// q : F2^{2g} -> F2 with q(v + w) = q(v) + q(w) + <v, w>, stored by its
/// values on the standard basis.
class QuadraticRefinement {
 public:
  /// basis_values.coordinate(i) is q on the i-th basis vector.
  QuadraticRefinement(f2::SymplecticSpace space, f2::F2Vector basis_values);
  /// Values listed in basis order a1, b1, a2, b2, ...
  QuadraticRefinement(f2::SymplecticSpace space, const std::vector<int>& basis_values);
  QuadraticRefinement(f2::SymplecticSpace space, std::initializer_list<int> basis_values)
      : QuadraticRefinement(std::move(space), std::vector<int>(basis_values)) {}

  /// The refinement vanishing on every basis vector.
  static QuadraticRefinement trivial(f2::SymplecticSpace space);

  const f2::SymplecticSpace& space() const { return space_; }
  const f2::F2Vector& basis_values() const { return basis_values_; }

  friend bool operator==(const QuadraticRefinement&, const QuadraticRefinement&) = default;

 private:
  f2::SymplecticSpace space_;
  f2::F2Vector basis_values_;
};

/// q(v).
int evaluate(const QuadraticRefinement& q, const f2::F2Vector& v);

/// The refinement q + <l, .>, i.e. the spin structure moved by l.
QuadraticRefinement shift(const QuadraticRefinement& q, const f2::F2Vector& l);

/// Closed form sum_j q(a_j) q(b_j).
ArfInvariant arf(const QuadraticRefinement& q);

/// Majority-value definition: 0 iff q vanishes on 2^{2g-1} + 2^{g-1} vectors.
/// Walks every vector, so genus is bounded by `cap`.
ArfInvariant arf_by_counting(const QuadraticRefinement& q, int cap = f2::kDefaultEnumerationCap);

/// All 2^{2g} refinements, ordered like f2::enumerate_vectors on basis values.
std::vector<QuadraticRefinement> enumerate_refinements(const f2::SymplecticSpace& space,
                                                       int cap = f2::kDefaultEnumerationCap);

struct ArfCounts {
  std::int64_t even = 0;
  std::int64_t odd = 0;
  friend bool operator==(const ArfCounts&, const ArfCounts&) = default;
};

/// (2^{2g-1} + 2^{g-1}, 2^{2g-1} - 2^{g-1}).
ArfCounts count_by_arf(int genus);
/// Same counts obtained by classifying every refinement.
ArfCounts count_by_arf_enumerated(int genus, int cap = f2::kDefaultEnumerationCap);

/// Sum over all refinements of (-1)^{Arf}; equals 2^g.
std::int64_t arf_gauss_sum(int genus);
std::int64_t arf_gauss_sum_enumerated(int genus, int cap = f2::kDefaultEnumerationCap);

/// Sign of the 3-manifold action: (-1)^{w2 cup l}, given the evaluated pairing.
Sign q3_sign(int w2_pairing_value);

/// Sign by which [Z] acts on the Pfaffian line over a fixed point:
/// (-1)^{w2_bundle + w2_rho * (Arf(sigma + Z) - Arf(sigma))}, exponent mod 2.
Sign lift_sign(const QuadraticRefinement& sigma, const f2::F2Vector& z, int w2_bundle, int w2_rho);

}  // namespace spinverlinde::spin
