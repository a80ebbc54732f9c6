#include "spinverlinde/f2_cohomology.hpp"

#include <fmt/format.h>

#include "spinverlinde/errors.hpp"

namespace spinverlinde::f2 {

namespace {
std::uint64_t low_mask(int dimension) {
  return dimension >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dimension) - 1;
}
}  // namespace

F2Vector::F2Vector(int dimension, std::uint64_t bits) : dimension_(dimension), bits_(bits) {
  if (dimension < 0 || dimension > 2 * kMaxGenus) {
    throw DimensionMismatch(fmt::format("F2 vector dimension {} out of range", dimension));
  }
  if ((bits & ~low_mask(dimension)) != 0) {
    throw DimensionMismatch(
        fmt::format("bits {:#x} exceed vector dimension {}", bits, dimension));
  }
}

int F2Vector::coordinate(int i) const {
  if (i < 0 || i >= dimension_) {
    throw DimensionMismatch(fmt::format("coordinate {} of a {}-dimensional vector", i, dimension_));
  }
  return static_cast<int>((bits_ >> i) & 1U);
}

std::vector<int> F2Vector::coordinates() const {
  std::vector<int> out(static_cast<std::size_t>(dimension_));
  for (int i = 0; i < dimension_; ++i) out[static_cast<std::size_t>(i)] = coordinate(i);
  return out;
}

F2Vector& F2Vector::operator+=(const F2Vector& other) {
  if (other.dimension_ != dimension_) {
    throw DimensionMismatch(
        fmt::format("adding vectors of dimension {} and {}", dimension_, other.dimension_));
  }
  bits_ ^= other.bits_;
  return *this;
}

SymplecticSpace::SymplecticSpace(int genus) : genus_(genus) {
  if (genus < 1 || genus > kMaxGenus) {
    throw std::invalid_argument(
        fmt::format("genus must lie in [1, {}], got {}", kMaxGenus, genus));
  }
}

F2Vector SymplecticSpace::a(int j) const {
  if (j < 0 || j >= genus_) throw std::out_of_range(fmt::format("handle index {}", j));
  return F2Vector(dimension(), std::uint64_t{1} << (2 * j));
}

F2Vector SymplecticSpace::b(int j) const {
  if (j < 0 || j >= genus_) throw std::out_of_range(fmt::format("handle index {}", j));
  return F2Vector(dimension(), std::uint64_t{1} << (2 * j + 1));
}

F2Vector SymplecticSpace::from_coordinates(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) != dimension()) {
    throw DimensionMismatch(
        fmt::format("{} coordinates given for a {}-dimensional space", coords.size(), dimension()));
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0 && coords[i] != 1) {
      throw std::invalid_argument(fmt::format("coordinate {} is {}, not a bit", i, coords[i]));
    }
    bits |= static_cast<std::uint64_t>(coords[i]) << i;
  }
  return F2Vector(dimension(), bits);
}

void SymplecticSpace::require_member(const F2Vector& v) const {
  if (v.dimension() != dimension()) {
    throw DimensionMismatch(fmt::format("vector of dimension {} in a genus-{} space (dimension {})",
                                        v.dimension(), genus_, dimension()));
  }
}

int pair(const SymplecticSpace& space, const F2Vector& v, const F2Vector& w) {
  space.require_member(v);
  space.require_member(w);
  return detail::pair_bits(v.bits(), w.bits());
}

std::vector<F2Vector> enumerate_vectors(const SymplecticSpace& space, int cap) {
  if (space.genus() > cap) {
    throw CapExceeded(
        fmt::format("enumeration of genus {} exceeds cap {}", space.genus(), cap));
  }
  const int n = space.dimension();
  std::vector<F2Vector> out;
  out.reserve(static_cast<std::size_t>(space.size()));
  for (std::uint64_t counter = 0; counter < static_cast<std::uint64_t>(space.size()); ++counter) {
    // The counter's most significant bit is coordinate 0.
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) bits |= ((counter >> (n - 1 - i)) & 1U) << i;
    out.emplace_back(n, bits);
  }
  return out;
}

std::int64_t character_sum(const SymplecticSpace& space, const F2Vector& b) {
  space.require_member(b);
  // l -> <b, l> is a linear functional; it is onto F2 unless b = 0.
  return b.is_zero() ? space.size() : 0;
}

}  // namespace spinverlinde::f2
