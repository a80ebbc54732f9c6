#pragma once

// Two finite models of the mod-2 symmetry acting on the Verlinde spaces.
//
// TwistedAlgebraElement: rational combinations of symbols [Z]_sigma,
// Z in H^1(Y; Z/2), multiplied by [Z'][Z] = [Z' + Z] and re-expressed
// under sigma -> sigma + l by [Z]_{sigma+l} = (-1)^{<Z,l>} [Z]_sigma. This
// is where the projections P_sigma live.
//
// HeisenbergGroup: the Z/4 central extension of H^1(Y; Z/2) with
// (t, v)(t', v') = (t + t' + 2 beta(v, v'), v + v'),
// beta(v, w) = sum_j b_j(v) a_j(w). Since beta(v, w) + beta(w, v) = <v, w>,
// commutators are (-1)^{<v, w>}. Its Schrodinger representation on
// functions F2^g -> C sends (t, v) to i^t X(a(v)) Z(b(v)).

#include <complex>
#include <cstdint>
#include <vector>

#include "spinverlinde/f2_cohomology.hpp"
#include "spinverlinde/fusion.hpp"
#include "spinverlinde/numeric.hpp"
#include "spinverlinde/spin_structures.hpp"

namespace spinverlinde::heis {

/// Largest genus for which the algebra stores dense coefficient arrays.
inline constexpr int kAlgebraGenusCap = 8;
/// Default cap for the 2^g x 2^g representation matrices.
inline constexpr int kDefaultRepresentationCap = 10;

class TwistedAlgebraElement {
 public:
  /// The zero element over reference spin structure sigma.
  explicit TwistedAlgebraElement(spin::QuadraticRefinement sigma);

  /// The symbol [Z]_sigma with coefficient 1.
  static TwistedAlgebraElement basis(const spin::QuadraticRefinement& sigma, const f2::F2Vector& z);
  /// [0]_sigma, the unit.
  static TwistedAlgebraElement unit(const spin::QuadraticRefinement& sigma);

  const spin::QuadraticRefinement& reference_spin() const { return sigma_; }
  const f2::SymplecticSpace& space() const { return sigma_.space(); }

  const Rational& coefficient(const f2::F2Vector& z) const;
  void set_coefficient(const f2::F2Vector& z, Rational value);
  /// Number of symbols with a non-zero coefficient.
  std::size_t support_size() const;
  bool is_zero() const;

  TwistedAlgebraElement& operator+=(const TwistedAlgebraElement& other);
  TwistedAlgebraElement& operator*=(const Rational& scalar);

  friend TwistedAlgebraElement operator+(TwistedAlgebraElement lhs, const TwistedAlgebraElement& rhs) {
    return lhs += rhs;
  }
  friend TwistedAlgebraElement operator*(TwistedAlgebraElement lhs, const Rational& scalar) {
    return lhs *= scalar;
  }
  friend bool operator==(const TwistedAlgebraElement&, const TwistedAlgebraElement&) = default;

  /// Dense coefficients indexed by the packed bits of Z.
  const std::vector<Rational>& coefficients() const { return coefficients_; }

 private:
  spin::QuadraticRefinement sigma_;
  std::vector<Rational> coefficients_;
};

/// Convolution over F2^{2g}; throws std::invalid_argument on mismatched
/// reference spin structures.
TwistedAlgebraElement multiply(const TwistedAlgebraElement& x, const TwistedAlgebraElement& y);

/// Takes x written over sigma + l (x.reference_spin() == sigma + l) and
/// rewrites it over sigma: coefficient at Z gains (-1)^{<Z, l>}.
TwistedAlgebraElement rebase(const TwistedAlgebraElement& x, const f2::F2Vector& l);

/// P_sigma = 2^{-2g} sum_Z [Z]_sigma.
TwistedAlgebraElement projection(const spin::QuadraticRefinement& sigma);

/// True iff P_{sigma+l} P_sigma vanishes identically. Throws
/// std::invalid_argument for l = 0.
bool orthogonality_check(const spin::QuadraticRefinement& sigma, const f2::F2Vector& l);

/// Linear functional tr[0] = base_dim, tr[Z] = lift_sign(sigma, Z, w2, 1) (lambda+1)^{g-1}.
Rational trace_functional(const TwistedAlgebraElement& x, const BigInt& base_dim,
                          const BigInt& lambda_rho, int w2);

/// Element of the Heisenberg group: central part in Z/4 and a vector.
struct HeisenbergElement {
  int central = 0;
  f2::F2Vector vector;
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

class HeisenbergGroup {
 public:
  explicit HeisenbergGroup(f2::SymplecticSpace space);

  const f2::SymplecticSpace& space() const { return space_; }
  /// 4 * 2^{2g}.
  std::int64_t order() const { return 4 * space_.size(); }

  HeisenbergElement identity() const;
  HeisenbergElement element(int central, const f2::F2Vector& v) const;
  HeisenbergElement multiply(const HeisenbergElement& x, const HeisenbergElement& y) const;
  HeisenbergElement inverse(const HeisenbergElement& x) const;
  HeisenbergElement commutator(const HeisenbergElement& x, const HeisenbergElement& y) const;
  bool is_central(const HeisenbergElement& x) const { return x.vector.is_zero(); }
  /// The asymmetric half of the pairing used as the extension cocycle.
  int cocycle(const f2::F2Vector& v, const f2::F2Vector& w) const;

  /// Every element, central part varying fastest. Genus bounded by `cap`.
  std::vector<HeisenbergElement> elements(int cap = f2::kDefaultEnumerationCap) const;

 private:
  f2::SymplecticSpace space_;
};

/// Exact Gaussian integer.
struct GaussianInt {
  long long re = 0;
  long long im = 0;

  friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianInt& operator+=(GaussianInt b) { return *this = *this + b; }
  friend bool operator==(GaussianInt, GaussianInt) = default;
  friend bool operator==(GaussianInt a, int b) { return a.re == b && a.im == 0; }
  /// i^t.
  static GaussianInt i_power(int t);
};

using GaussianMatrix = fusion::Matrix<GaussianInt>;

/// i^t X(a(v)) Z(b(v)) on C[F2^g]: the column for basis state x has the
/// single entry i^t (-1)^{b(v).x} in row x + a(v).
GaussianMatrix heisenberg_rep(const HeisenbergGroup& group, const HeisenbergElement& h,
                              int cap = kDefaultRepresentationCap);

GaussianMatrix scalar_identity(std::size_t n, GaussianInt scalar);

}  // namespace spinverlinde::heis
