#include "interval.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace spinverlinde::detail {

namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~Real() { mpfr_clear(value_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

/// Exact conversion of a finite MPFR value to a rational.
Rational to_rational(const Real& x) {
  if (mpfr_zero_p(x.get())) return Rational(0);
  mpz_t mantissa;
  mpz_init(mantissa);
  const mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa, x.get());
  BigInt m(mantissa);
  mpz_clear(mantissa);
  if (exponent >= 0) return Rational(m << static_cast<unsigned>(exponent));
  return Rational(m, pow2(static_cast<unsigned>(-exponent)));
}

/// Lower and upper bounds of one positive quantity.
struct Bounds {
  Real lo;
  Real hi;
  explicit Bounds(mpfr_prec_t precision) : lo(precision), hi(precision) {}
};

}  // namespace

RationalEnclosure enclose_sine_power_sum(int genus, int n, bool alternating, int precision_bits) {
  if (genus < 1 || n < 2 || precision_bits < 2) {
    throw std::invalid_argument("enclose_sine_power_sum: bad arguments");
  }
  const auto precision = static_cast<mpfr_prec_t>(precision_bits);
  const auto exponent = static_cast<unsigned long>(genus - 1);

  Bounds pi(precision);
  mpfr_const_pi(pi.lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi.hi.get(), MPFR_RNDU);
  Real half_pi_lo(precision);
  mpfr_div_ui(half_pi_lo.get(), pi.lo.get(), 2, MPFR_RNDD);

  // (n/2)^{g-1}
  Bounds scale(precision);
  mpfr_set_ui(scale.lo.get(), static_cast<unsigned long>(n), MPFR_RNDD);
  mpfr_div_ui(scale.lo.get(), scale.lo.get(), 2, MPFR_RNDD);
  mpfr_pow_ui(scale.lo.get(), scale.lo.get(), exponent, MPFR_RNDD);
  mpfr_set_ui(scale.hi.get(), static_cast<unsigned long>(n), MPFR_RNDU);
  mpfr_div_ui(scale.hi.get(), scale.hi.get(), 2, MPFR_RNDU);
  mpfr_pow_ui(scale.hi.get(), scale.hi.get(), exponent, MPFR_RNDU);

  Bounds total(precision);
  mpfr_set_zero(total.lo.get(), 1);
  mpfr_set_zero(total.hi.get(), 1);

  Bounds angle(precision);
  Bounds sine(precision);
  Bounds term(precision);
  Real one(precision);
  mpfr_set_ui(one.get(), 1, MPFR_RNDN);

  for (int j = 1; j < n; ++j) {
    // sin(pi j/n) = sin(pi m/n) with m/n <= 1/2, where sine is increasing.
    const int m = std::min(j, n - j);
    if (2 * m == n) {
      mpfr_set_ui(sine.lo.get(), 1, MPFR_RNDN);
      mpfr_set_ui(sine.hi.get(), 1, MPFR_RNDN);
    } else {
      mpfr_mul_ui(angle.lo.get(), pi.lo.get(), static_cast<unsigned long>(m), MPFR_RNDD);
      mpfr_div_ui(angle.lo.get(), angle.lo.get(), static_cast<unsigned long>(n), MPFR_RNDD);
      mpfr_mul_ui(angle.hi.get(), pi.hi.get(), static_cast<unsigned long>(m), MPFR_RNDU);
      mpfr_div_ui(angle.hi.get(), angle.hi.get(), static_cast<unsigned long>(n), MPFR_RNDU);
      mpfr_sin(sine.lo.get(), angle.lo.get(), MPFR_RNDD);
      if (mpfr_less_p(angle.hi.get(), half_pi_lo.get())) {
        mpfr_sin(sine.hi.get(), angle.hi.get(), MPFR_RNDU);
      } else {
        mpfr_set_ui(sine.hi.get(), 1, MPFR_RNDN);
      }
      if (mpfr_sgn(sine.lo.get()) <= 0) {
        throw std::runtime_error("sine enclosure touches zero; precision too low");
      }
    }

    // sin^{2-2g} = (1/sin^2)^{g-1}; all quantities positive, so bounds swap
    // exactly once at the reciprocal.
    mpfr_sqr(term.lo.get(), sine.hi.get(), MPFR_RNDU);
    mpfr_div(term.lo.get(), one.get(), term.lo.get(), MPFR_RNDD);
    mpfr_pow_ui(term.lo.get(), term.lo.get(), exponent, MPFR_RNDD);
    mpfr_mul(term.lo.get(), term.lo.get(), scale.lo.get(), MPFR_RNDD);

    mpfr_sqr(term.hi.get(), sine.lo.get(), MPFR_RNDD);
    mpfr_div(term.hi.get(), one.get(), term.hi.get(), MPFR_RNDU);
    mpfr_pow_ui(term.hi.get(), term.hi.get(), exponent, MPFR_RNDU);
    mpfr_mul(term.hi.get(), term.hi.get(), scale.hi.get(), MPFR_RNDU);

    const bool negative = alternating && (j % 2 == 0);
    if (negative) {
      mpfr_sub(total.lo.get(), total.lo.get(), term.hi.get(), MPFR_RNDD);
      mpfr_sub(total.hi.get(), total.hi.get(), term.lo.get(), MPFR_RNDU);
    } else {
      mpfr_add(total.lo.get(), total.lo.get(), term.lo.get(), MPFR_RNDD);
      mpfr_add(total.hi.get(), total.hi.get(), term.hi.get(), MPFR_RNDU);
    }
  }

  return RationalEnclosure{to_rational(total.lo), to_rational(total.hi)};
}

}  // namespace spinverlinde::detail
