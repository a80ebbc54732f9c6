#include "spinverlinde/heisenberg.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "spinverlinde/errors.hpp"

namespace spinverlinde::heis {

namespace {

int mod4(int t) { return ((t % 4) + 4) % 4; }

void require_same_spin(const TwistedAlgebraElement& x, const TwistedAlgebraElement& y) {
  if (!(x.reference_spin() == y.reference_spin())) {
    throw std::invalid_argument("algebra elements are written over different spin structures");
  }
}

}  // namespace

TwistedAlgebraElement::TwistedAlgebraElement(spin::QuadraticRefinement sigma) : sigma_(std::move(sigma)) {
  if (sigma_.space().genus() > kAlgebraGenusCap) {
    throw CapExceeded(fmt::format("twisted algebra at genus {} exceeds cap {}", sigma_.space().genus(),
                                  kAlgebraGenusCap));
  }
  coefficients_.assign(static_cast<std::size_t>(sigma_.space().size()), Rational(0));
}

TwistedAlgebraElement TwistedAlgebraElement::basis(const spin::QuadraticRefinement& sigma,
                                                   const f2::F2Vector& z) {
  TwistedAlgebraElement x(sigma);
  x.set_coefficient(z, Rational(1));
  return x;
}

TwistedAlgebraElement TwistedAlgebraElement::unit(const spin::QuadraticRefinement& sigma) {
  return basis(sigma, sigma.space().zero());
}

const Rational& TwistedAlgebraElement::coefficient(const f2::F2Vector& z) const {
  space().require_member(z);
  return coefficients_[z.bits()];
}

void TwistedAlgebraElement::set_coefficient(const f2::F2Vector& z, Rational value) {
  space().require_member(z);
  coefficients_[z.bits()] = std::move(value);
}

std::size_t TwistedAlgebraElement::support_size() const {
  std::size_t n = 0;
  for (const auto& c : coefficients_) n += (c != 0) ? 1 : 0;
  return n;
}

bool TwistedAlgebraElement::is_zero() const { return support_size() == 0; }

TwistedAlgebraElement& TwistedAlgebraElement::operator+=(const TwistedAlgebraElement& other) {
  require_same_spin(*this, other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

TwistedAlgebraElement& TwistedAlgebraElement::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

TwistedAlgebraElement multiply(const TwistedAlgebraElement& x, const TwistedAlgebraElement& y) {
  require_same_spin(x, y);
  TwistedAlgebraElement out(x.reference_spin());
  const auto& xc = x.coefficients();
  const auto& yc = y.coefficients();
  std::vector<Rational> acc(xc.size(), Rational(0));
  for (std::size_t zx = 0; zx < xc.size(); ++zx) {
    if (xc[zx] == 0) continue;
    for (std::size_t zy = 0; zy < yc.size(); ++zy) {
      if (yc[zy] == 0) continue;
      acc[zx ^ zy] += xc[zx] * yc[zy];
    }
  }
  const auto& space = x.space();
  for (std::size_t z = 0; z < acc.size(); ++z) out.set_coefficient(space.vector(z), std::move(acc[z]));
  return out;
}

TwistedAlgebraElement rebase(const TwistedAlgebraElement& x, const f2::F2Vector& l) {
  const auto& space = x.space();
  space.require_member(l);
  TwistedAlgebraElement out(spin::shift(x.reference_spin(), l));
  for (std::uint64_t z = 0; z < static_cast<std::uint64_t>(space.size()); ++z) {
    const Rational& c = x.coefficients()[z];
    if (c == 0) continue;
    out.set_coefficient(space.vector(z), f2::detail::pair_bits(z, l.bits()) ? Rational(-c) : c);
  }
  return out;
}

TwistedAlgebraElement projection(const spin::QuadraticRefinement& sigma) {
  const auto& space = sigma.space();
  TwistedAlgebraElement p(sigma);
  const Rational weight(1, pow2(static_cast<unsigned>(space.dimension())));
  for (std::uint64_t z = 0; z < static_cast<std::uint64_t>(space.size()); ++z) {
    p.set_coefficient(space.vector(z), weight);
  }
  return p;
}

bool orthogonality_check(const spin::QuadraticRefinement& sigma, const f2::F2Vector& l) {
  sigma.space().require_member(l);
  if (l.is_zero()) throw std::invalid_argument("orthogonality_check needs a non-zero shift");
  const TwistedAlgebraElement shifted = rebase(projection(spin::shift(sigma, l)), l);
  return multiply(shifted, projection(sigma)).is_zero();
}

Rational trace_functional(const TwistedAlgebraElement& x, const BigInt& base_dim,
                          const BigInt& lambda_rho, int w2) {
  const auto& sigma = x.reference_spin();
  const auto& space = sigma.space();
  const BigInt fixed_trace = ipow(BigInt(lambda_rho + 1), static_cast<unsigned>(space.genus() - 1));
  Rational total(0);
  for (std::uint64_t z = 0; z < static_cast<std::uint64_t>(space.size()); ++z) {
    const Rational& c = x.coefficients()[z];
    if (c == 0) continue;
    if (z == 0) {
      total += c * Rational(base_dim);
    } else {
      const int sign = spin::lift_sign(sigma, space.vector(z), w2, 1).value();
      total += c * Rational(sign * fixed_trace);
    }
  }
  return total;
}

HeisenbergGroup::HeisenbergGroup(f2::SymplecticSpace space) : space_(space) {}

HeisenbergElement HeisenbergGroup::identity() const { return {0, space_.zero()}; }

HeisenbergElement HeisenbergGroup::element(int central, const f2::F2Vector& v) const {
  space_.require_member(v);
  return {mod4(central), v};
}

int HeisenbergGroup::cocycle(const f2::F2Vector& v, const f2::F2Vector& w) const {
  space_.require_member(v);
  space_.require_member(w);
  return f2::detail::parity(f2::detail::b_part(v.bits()) & f2::detail::a_part(w.bits()));
}

HeisenbergElement HeisenbergGroup::multiply(const HeisenbergElement& x, const HeisenbergElement& y) const {
  return {mod4(x.central + y.central + 2 * cocycle(x.vector, y.vector)), x.vector + y.vector};
}

HeisenbergElement HeisenbergGroup::inverse(const HeisenbergElement& x) const {
  // (t, v)(t', v) = (t + t' + 2 beta(v, v), 0)
  return {mod4(-x.central - 2 * cocycle(x.vector, x.vector)), x.vector};
}

HeisenbergElement HeisenbergGroup::commutator(const HeisenbergElement& x, const HeisenbergElement& y) const {
  return multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
}

std::vector<HeisenbergElement> HeisenbergGroup::elements(int cap) const {
  std::vector<HeisenbergElement> out;
  for (const auto& v : f2::enumerate_vectors(space_, cap))
    for (int t = 0; t < 4; ++t) out.push_back({t, v});
  return out;
}

GaussianInt GaussianInt::i_power(int t) {
  switch (mod4(t)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussianMatrix scalar_identity(std::size_t n, GaussianInt scalar) {
  GaussianMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar;
  return m;
}

GaussianMatrix heisenberg_rep(const HeisenbergGroup& group, const HeisenbergElement& h, int cap) {
  const auto& space = group.space();
  if (space.genus() > cap) {
    throw CapExceeded(fmt::format("representation at genus {} exceeds cap {}", space.genus(), cap));
  }
  space.require_member(h.vector);
  const int g = space.genus();
  const std::size_t n = std::size_t{1} << g;
  // Compress the a- and b-coordinates of v into g-bit words.
  std::uint64_t shift_by = 0;
  std::uint64_t phase_by = 0;
  for (int j = 0; j < g; ++j) {
    shift_by |= static_cast<std::uint64_t>(h.vector.coordinate(2 * j)) << j;
    phase_by |= static_cast<std::uint64_t>(h.vector.coordinate(2 * j + 1)) << j;
  }
  const GaussianInt scalar = GaussianInt::i_power(h.central);
  const GaussianInt minus_scalar = scalar * GaussianInt{-1, 0};
  GaussianMatrix m(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const bool negative = f2::detail::parity(phase_by & x) != 0;
    m(x ^ shift_by, x) = negative ? minus_scalar : scalar;
  }
  return m;
}

}  // namespace spinverlinde::heis
