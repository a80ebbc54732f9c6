#include "spinverlinde/fusion.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "interval.hpp"
#include "spinverlinde/errors.hpp"

namespace spinverlinde::fusion {

namespace {

bool admissible(int level, int a, int b, int c) {
  return c >= std::abs(a - b) && c <= std::min(a + b, 2 * level - a - b) && (a + b + c) % 2 == 0;
}

void require_genus(int genus) {
  if (genus < 1) throw std::invalid_argument(fmt::format("genus must be >= 1, got {}", genus));
}

int level_from_p(int p) {
  if (p < 4 || p % 2 != 0) {
    throw std::invalid_argument(fmt::format("twisted dimension needs even p >= 4, got {}", p));
  }
  return p / 2 - 2;
}

BigInt ceil_of(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;  // truncates toward zero
  if (q * den < num) ++q;
  return q;
}

CertifiedInteger certify(int genus, int n, bool alternating, OracleOptions options,
                         const std::string& label) {
  if (options.precision_bits < 64) {
    throw std::invalid_argument(
        fmt::format("oracle precision must be >= 64 bits, got {}", options.precision_bits));
  }
  const Rational half(1, 2);
  for (int bits = options.precision_bits; bits <= options.precision_ceiling; bits *= 2) {
    const auto enclosure = detail::enclose_sine_power_sum(genus, n, alternating, bits);
    if (enclosure.upper - enclosure.lower >= half) continue;
    const BigInt candidate = ceil_of(enclosure.lower);
    if (Rational(candidate) > enclosure.upper) {
      throw IntegralityError(fmt::format("{}: enclosure at {} bits contains no integer", label, bits));
    }
    return CertifiedInteger{candidate, enclosure.lower, enclosure.upper, bits};
  }
  throw PrecisionCeilingExceeded(fmt::format(
      "{}: enclosure still wider than 1/2 at the {}-bit ceiling", label, options.precision_ceiling));
}

}  // namespace

FusionRing::FusionRing(int level) : level_(level) {
  if (level < 0) throw std::invalid_argument(fmt::format("fusion level must be >= 0, got {}", level));
  const auto n = static_cast<std::size_t>(level + 1);
  matrices_.reserve(n);
  for (int a = 0; a <= level; ++a) {
    IntMatrix m(n);
    for (int b = 0; b <= level; ++b)
      for (int c = 0; c <= level; ++c)
        m(static_cast<std::size_t>(b), static_cast<std::size_t>(c)) = admissible(level, a, b, c) ? 1 : 0;
    matrices_.push_back(std::move(m));
  }
}

int FusionRing::multiplicity(int a, int b, int c) const {
  return matrix(a)(static_cast<std::size_t>(b), static_cast<std::size_t>(c));
}

FusionRing fusion_matrices(int level) { return FusionRing(level); }

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j);
  return out;
}

HandleElement::HandleElement(const FusionRing& ring) : h_(ring.rank()) {
  for (std::size_t a = 0; a < ring.rank(); ++a) {
    const IntMatrix& n = ring.matrix(static_cast<int>(a));
    // (N_a N_a^T)_{ij} = sum_l N_a(i,l) N_a(j,l)
    for (std::size_t i = 0; i < n.size(); ++i)
      for (std::size_t j = 0; j < n.size(); ++j) {
        int s = 0;
        for (std::size_t l = 0; l < n.size(); ++l) s += n(i, l) * n(j, l);
        h_(i, j) += s;
      }
  }
}

BigMatrix HandleElement::power(unsigned exponent) const {
  BigMatrix result = BigMatrix::identity(h_.size());
  BigMatrix base = h_;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BigInt verlinde_dim(int genus, int level) {
  require_genus(genus);
  const FusionRing ring(level);
  return HandleElement(ring).power(static_cast<unsigned>(genus - 1)).trace();
}

BigInt twisted_dim(int genus, int p) {
  require_genus(genus);
  const FusionRing ring(level_from_p(p));
  const BigMatrix hp = HandleElement(ring).power(static_cast<unsigned>(genus - 1));
  return trace_of_product(to_big(ring.simple_current()), hp);
}

CertifiedInteger verlinde_trig_oracle(int genus, int level, OracleOptions options) {
  require_genus(genus);
  if (level < 0) throw std::invalid_argument(fmt::format("level must be >= 0, got {}", level));
  return certify(genus, level + 2, false, options,
                 fmt::format("Verlinde sum (g={}, k={})", genus, level));
}

CertifiedInteger twisted_trig_oracle(int genus, int p, OracleOptions options) {
  require_genus(genus);
  level_from_p(p);
  return certify(genus, p / 2, true, options, fmt::format("twisted Verlinde sum (g={}, p={})", genus, p));
}

}  // namespace spinverlinde::fusion
