#pragma once

// Truncated formal power series in a central parameter t. The cap is part
// of the value: coefficients above it are unknown, reading them throws, and
// binary operations keep the smaller cap.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dendra/scalar.hpp"

namespace dendra {

template <class V>
class Series {
 public:
  using value_type = V;

  /// The zero series known up to order cap.
  explicit Series(int cap) : coeffs_(checked_size(cap)), cap_(cap) {}

  /// Coefficients c_0, c_1, ...; entries above cap are dropped, missing ones
  /// are zero.
  Series(std::vector<V> coeffs, int cap) : coeffs_(std::move(coeffs)), cap_(cap) {
    coeffs_.resize(checked_size(cap));
  }

  int cap() const { return cap_; }

  const V& operator[](int n) const {
    if (n < 0 || n > cap_) {
      throw std::out_of_range("series coefficient " + std::to_string(n) +
                              " beyond cap " + std::to_string(cap_));
    }
    return coeffs_[static_cast<std::size_t>(n)];
  }

  const std::vector<V>& coefficients() const { return coeffs_; }

  Series with_coefficient(int n, V value) const {
    Series out = *this;
    out.coeffs_.at(static_cast<std::size_t>(n)) = std::move(value);
    return out;
  }

  /// Same coefficients, lower cap.
  Series truncated(int cap) const {
    if (cap > cap_) throw std::out_of_range("cannot raise the cap of a series");
    return Series(std::vector<V>(coeffs_.begin(), coeffs_.begin() + cap + 1), cap);
  }

  /// Multiplication by t: the cap grows by one.
  Series shifted() const {
    std::vector<V> c;
    c.reserve(coeffs_.size() + 1);
    c.emplace_back();
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Series(std::move(c), cap_ + 1);
  }

  /// The grading operator t d/dt: c_n -> n c_n.
  Series grading() const {
    Series out = *this;
    for (int n = 0; n <= cap_; ++n) out.coeffs_[n] = Scalar(n) * coeffs_[n];
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    const int cap = std::min(a.cap_, b.cap_);
    std::vector<V> c(static_cast<std::size_t>(cap + 1));
    for (int n = 0; n <= cap; ++n) {
      c[n] = a.coeffs_[n];
      c[n] += b.coeffs_[n];
    }
    return Series(std::move(c), cap);
  }
  friend Series operator-(const Series& a, const Series& b) {
    const int cap = std::min(a.cap_, b.cap_);
    std::vector<V> c(static_cast<std::size_t>(cap + 1));
    for (int n = 0; n <= cap; ++n) {
      c[n] = a.coeffs_[n];
      c[n] -= b.coeffs_[n];
    }
    return Series(std::move(c), cap);
  }
  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator-=(const Series& b) { return *this = *this - b; }
  friend Series operator*(const Scalar& s, const Series& a) {
    Series out = a;
    for (auto& c : out.coeffs_) c = s * c;
    return out;
  }
  /// Equal caps and equal coefficients.
  friend bool operator==(const Series& a, const Series& b) {
    return a.cap_ == b.cap_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static std::size_t checked_size(int cap) {
    if (cap < 0) throw std::invalid_argument("series cap must be >= 0");
    return static_cast<std::size_t>(cap) + 1;
  }

  std::vector<V> coeffs_;
  int cap_;
};

/// Cauchy product truncated at the smaller cap. `mul` is the bilinear
/// product on coefficients.
template <class V, class Mul>
Series<V> series_mul(const Series<V>& f, const Series<V>& g, Mul&& mul) {
  const int cap = std::min(f.cap(), g.cap());
  std::vector<V> c(static_cast<std::size_t>(cap + 1));
  for (int n = 0; n <= cap; ++n) {
    for (int p = 0; p <= n; ++p) {
      c[n] += mul(f[p], g[n - p]);
    }
  }
  return Series<V>(std::move(c), cap);
}

}  // namespace dendra
