#pragma once

// Symplectic linear algebra over F2 for the first mod-2 cohomology of a
// closed genus-g surface.
//
// Coordinates are ordered a1, b1, a2, b2, ..., ag, bg and stored one per bit:
// coordinate i lives in bit i, so a_j is bit 2j and b_j is bit 2j+1 (0-based
// handle index j). The pairing is <a_j, b_j> = 1 with every other basis
// pairing zero.

#include <bit>
#include <cstdint>
#include <vector>

namespace spinverlinde::f2 {

/// Largest supported genus; 2g coordinates must fit a 64-bit word and
/// 2^{2g} must fit a signed 64-bit count.
inline constexpr int kMaxGenus = 31;

/// Default cap on genus for any routine that walks all 2^{2g} vectors.
inline constexpr int kDefaultEnumerationCap = 6;

class F2Vector {
 public:
  F2Vector() = default;
  /// `bits` must not set any coordinate at or above `dimension`.
  explicit F2Vector(int dimension, std::uint64_t bits);

  static F2Vector zero(int dimension) { return F2Vector(dimension, 0); }

  int dimension() const { return dimension_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  int coordinate(int i) const;
  std::vector<int> coordinates() const;

  F2Vector& operator+=(const F2Vector& other);
  friend F2Vector operator+(F2Vector lhs, const F2Vector& rhs) { return lhs += rhs; }
  friend bool operator==(const F2Vector&, const F2Vector&) = default;

 private:
  int dimension_ = 0;
  std::uint64_t bits_ = 0;
};

class SymplecticSpace {
 public:
  explicit SymplecticSpace(int genus);

  int genus() const { return genus_; }
  int dimension() const { return 2 * genus_; }
  /// Number of vectors, 2^{2g}.
  std::int64_t size() const { return std::int64_t{1} << dimension(); }

  /// Basis vector a_j, 0 <= j < g.
  F2Vector a(int j) const;
  /// Basis vector b_j, 0 <= j < g.
  F2Vector b(int j) const;
  F2Vector zero() const { return F2Vector::zero(dimension()); }
  /// Vector with the given raw coordinate bits.
  F2Vector vector(std::uint64_t bits) const { return F2Vector(dimension(), bits); }
  /// Builds a vector from explicit 0/1 coordinates (length 2g).
  F2Vector from_coordinates(const std::vector<int>& coords) const;

  /// Throws DimensionMismatch unless v belongs to this space.
  void require_member(const F2Vector& v) const;

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

 private:
  int genus_;
};

namespace detail {
inline constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;

inline std::uint64_t a_part(std::uint64_t v) { return v & kEvenBits; }
inline std::uint64_t b_part(std::uint64_t v) { return (v >> 1) & kEvenBits; }
inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }
/// Raw symplectic pairing on packed coordinates.
inline int pair_bits(std::uint64_t v, std::uint64_t w) {
  return parity((a_part(v) & b_part(w)) ^ (b_part(v) & a_part(w)));
}
/// Exchanges a_j and b_j coordinates in every handle.
inline std::uint64_t swap_handles(std::uint64_t v) {
  return (a_part(v) << 1) | b_part(v);
}
}  // namespace detail

/// Symplectic pairing <v, w> in {0, 1}.
int pair(const SymplecticSpace& space, const F2Vector& v, const F2Vector& w);

/// All 2^{2g} vectors in lexicographic order of their coordinate tuples
/// (a1 most significant). Throws CapExceeded when genus > cap.
std::vector<F2Vector> enumerate_vectors(const SymplecticSpace& space,
                                        int cap = kDefaultEnumerationCap);

/// Sum over all l of (-1)^{<b, l>}: 2^{2g} when b = 0 and 0 otherwise.
std::int64_t character_sum(const SymplecticSpace& space, const F2Vector& b);

}  // namespace spinverlinde::f2
