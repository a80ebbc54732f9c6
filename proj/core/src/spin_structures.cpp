#include "spinverlinde/spin_structures.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "spinverlinde/errors.hpp"

namespace spinverlinde::spin {

namespace {
int require_bit(int value, const char* what) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument(fmt::format("{} must be 0 or 1, got {}", what, value));
  }
  return value;
}
}  // namespace

ArfInvariant::ArfInvariant(int value) : value_(require_bit(value, "Arf invariant")) {}

QuadraticRefinement::QuadraticRefinement(f2::SymplecticSpace space, f2::F2Vector basis_values)
    : space_(space), basis_values_(basis_values) {
  space_.require_member(basis_values_);
}

QuadraticRefinement::QuadraticRefinement(f2::SymplecticSpace space,
                                         const std::vector<int>& basis_values)
    : QuadraticRefinement(space, space.from_coordinates(basis_values)) {}

QuadraticRefinement QuadraticRefinement::trivial(f2::SymplecticSpace space) {
  return QuadraticRefinement(space, space.zero());
}

int evaluate(const QuadraticRefinement& q, const f2::F2Vector& v) {
  q.space().require_member(v);
  // Linear part from the basis values, plus the cross terms <a_j, b_j> = 1
  // for every handle where v has both coordinates set.
  const std::uint64_t bits = v.bits();
  return f2::detail::parity(bits & q.basis_values().bits()) ^
         f2::detail::parity(f2::detail::a_part(bits) & f2::detail::b_part(bits));
}

QuadraticRefinement shift(const QuadraticRefinement& q, const f2::F2Vector& l) {
  q.space().require_member(l);
  // <l, a_j> = l(b_j) and <l, b_j> = l(a_j).
  const std::uint64_t delta = f2::detail::swap_handles(l.bits());
  return QuadraticRefinement(q.space(), q.space().vector(q.basis_values().bits() ^ delta));
}

ArfInvariant arf(const QuadraticRefinement& q) {
  const std::uint64_t values = q.basis_values().bits();
  return ArfInvariant(f2::detail::parity(f2::detail::a_part(values) & f2::detail::b_part(values)));
}

ArfInvariant arf_by_counting(const QuadraticRefinement& q, int cap) {
  const auto& space = q.space();
  if (space.genus() > cap) {
    throw CapExceeded(fmt::format("Arf by counting at genus {} exceeds cap {}", space.genus(), cap));
  }
  std::int64_t zeros = 0;
  for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(space.size()); ++v) {
    if (evaluate(q, space.vector(v)) == 0) ++zeros;
  }
  const int g = space.genus();
  const std::int64_t even_count = (std::int64_t{1} << (2 * g - 1)) + (std::int64_t{1} << (g - 1));
  const std::int64_t odd_count = (std::int64_t{1} << (2 * g - 1)) - (std::int64_t{1} << (g - 1));
  if (zeros == even_count) return ArfInvariant(0);
  if (zeros == odd_count) return ArfInvariant(1);
  throw IdentityViolation(fmt::format(
      "refinement at genus {} has {} zeros, neither {} nor {}", g, zeros, even_count, odd_count));
}

std::vector<QuadraticRefinement> enumerate_refinements(const f2::SymplecticSpace& space, int cap) {
  std::vector<QuadraticRefinement> out;
  const auto values = f2::enumerate_vectors(space, cap);
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(space, v);
  return out;
}

ArfCounts count_by_arf(int genus) {
  const f2::SymplecticSpace space(genus);
  const std::int64_t half = std::int64_t{1} << (space.dimension() - 1);
  const std::int64_t correction = std::int64_t{1} << (space.genus() - 1);
  return ArfCounts{half + correction, half - correction};
}

ArfCounts count_by_arf_enumerated(int genus, int cap) {
  ArfCounts counts;
  for (const auto& q : enumerate_refinements(f2::SymplecticSpace(genus), cap)) {
    (arf_by_counting(q, cap).is_odd() ? counts.odd : counts.even) += 1;
  }
  return counts;
}

std::int64_t arf_gauss_sum(int genus) {
  const f2::SymplecticSpace space(genus);
  return std::int64_t{1} << space.genus();
}

std::int64_t arf_gauss_sum_enumerated(int genus, int cap) {
  std::int64_t total = 0;
  for (const auto& q : enumerate_refinements(f2::SymplecticSpace(genus), cap)) {
    total += arf_by_counting(q, cap).is_odd() ? -1 : 1;
  }
  return total;
}

Sign q3_sign(int w2_pairing_value) {
  return Sign::from_parity(require_bit(w2_pairing_value, "w2 cup l"));
}

Sign lift_sign(const QuadraticRefinement& sigma, const f2::F2Vector& z, int w2_bundle,
               int w2_rho) {
  require_bit(w2_bundle, "w2 of the bundle");
  require_bit(w2_rho, "w2 of the representation");
  const int index_change = arf(shift(sigma, z)).value() ^ arf(sigma).value();
  return Sign::from_parity(w2_bundle ^ (w2_rho & index_change));
}

}  // namespace spinverlinde::spin
