#pragma once

// Exact evaluation of the genus-g Verlinde numbers and their alternating
// (twisted) analogue as traces in the SU(2) level-k fusion ring, plus an
// interval-arithmetic evaluation of the trigonometric sums that certifies
// them independently.
//
//   dim V(g, k)   = trace(H^{g-1})
//   dim V'(g, p)  = trace(N_k H^{g-1}),  k = p/2 - 2
//
// where H = sum_a N_a N_a^T is the handle element and N_k is the simple
// current. On the S-matrix eigenbasis H acts by S_{0j}^{-2} and N_k by
// (-1)^{j+1}, which is where both identities come from.

#include <cstddef>
#include <string>
#include <vector>

#include "spinverlinde/numeric.hpp"

namespace spinverlinde::fusion {

/// Dense square matrix, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& lhs, const Matrix<T>& rhs) {
  const std::size_t n = lhs.size();
  Matrix<T> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const T& a = lhs(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(l, j);
    }
  }
  return out;
}

template <class T>
Matrix<T> operator+(Matrix<T> lhs, const Matrix<T>& rhs) {
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < lhs.size(); ++j) lhs(i, j) += rhs(i, j);
  return lhs;
}

/// trace(lhs * rhs) without forming the product.
template <class T>
T trace_of_product(const Matrix<T>& lhs, const Matrix<T>& rhs) {
  T t(0);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      if (lhs(i, j) == 0) continue;
      t += lhs(i, j) * rhs(j, i);
    }
  return t;
}

using IntMatrix = Matrix<int>;
using BigMatrix = Matrix<BigInt>;

/// Truncated SU(2) fusion rules at level k: labels 0..k, and
/// a x b = sum of c with |a-b| <= c <= min(a+b, 2k-a-b), c = a+b mod 2.
class FusionRing {
 public:
  explicit FusionRing(int level);

  int level() const { return level_; }
  std::size_t rank() const { return matrices_.size(); }
  /// N_a with (N_a)_{bc} = multiplicity of c in a x b.
  const IntMatrix& matrix(int a) const { return matrices_.at(static_cast<std::size_t>(a)); }
  int multiplicity(int a, int b, int c) const;
  /// The simple current N_k.
  const IntMatrix& simple_current() const { return matrices_.back(); }

 private:
  int level_;
  std::vector<IntMatrix> matrices_;
};

FusionRing fusion_matrices(int level);

/// H = sum_a N_a N_a^T over arbitrary-precision integers.
class HandleElement {
 public:
  explicit HandleElement(const FusionRing& ring);

  const BigMatrix& matrix() const { return h_; }
  /// H^e by repeated squaring.
  BigMatrix power(unsigned exponent) const;

 private:
  BigMatrix h_;
};

BigMatrix to_big(const IntMatrix& m);

/// Verlinde dimension at genus g >= 1 and SU(2) level k >= 0.
BigInt verlinde_dim(int genus, int level);

/// Alternating-sign Verlinde number at genus g >= 1 for even p >= 4.
BigInt twisted_dim(int genus, int p);

/// Interval evaluation settings. Precision doubles from `precision_bits`
/// until the enclosure is narrower than 1/2 or `precision_ceiling` is passed.
struct OracleOptions {
  int precision_bits = 128;
  int precision_ceiling = 4096;
};

/// An integer together with the rational enclosure that pinned it down.
struct CertifiedInteger {
  BigInt value;
  Rational lower;
  Rational upper;
  int precision_bits = 0;

  Rational width() const { return upper - lower; }
  double width_estimate() const { return width().convert_to<double>(); }
};

/// ((k+2)/2)^{g-1} sum_{j=1}^{k+1} sin(pi j/(k+2))^{2-2g}, certified.
CertifiedInteger verlinde_trig_oracle(int genus, int level, OracleOptions options = {});

/// (p/4)^{g-1} sum_{j=1}^{p/2-1} (-1)^{j+1} sin(2 pi j/p)^{2-2g}, certified.
CertifiedInteger twisted_trig_oracle(int genus, int p, OracleOptions options = {});

}  // namespace spinverlinde::fusion
