#pragma once

// Exact carrier algebras for the Rota-Baxter backends:
//   Poly    - univariate polynomials with rational coefficients,
//   SeqMat  - functions {1..N} -> k x k rational matrices, pointwise product,
//   PolyMat - k x k matrices of polynomials, matrix product.
// A default-constructed SeqMat or PolyMat is the zero of every shape;
// combining two nonzero values of different shapes throws ShapeMismatch.

#include <string>
#include <vector>

#include "dendra/scalar.hpp"

namespace dendra {

class Poly {
 public:
  Poly() = default;
  /// Coefficients of x^0, x^1, ...; trailing zeros are trimmed.
  explicit Poly(std::vector<Scalar> coeffs);
  static Poly constant(const Scalar& c) { return Poly({c}); }
  static Poly monomial(int degree, const Scalar& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(int d) const;
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Antiderivative vanishing at 0.
  Poly integral() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

std::string to_string(const Poly& p);

class SeqMat {
 public:
  SeqMat() = default;
  /// values[n-1] is the k x k matrix at time n, row-major.
  SeqMat(int horizon, int k, std::vector<Scalar> values);
  static SeqMat filled(int horizon, int k, const Scalar& c);
  static SeqMat elementary(int horizon, int k, int time, int row, int col);

  bool is_shapeless_zero() const { return values_.empty(); }
  bool is_zero() const;
  int horizon() const { return horizon_; }
  int size() const { return k_; }
  /// 1-based time, 0-based row/col.
  Scalar at(int time, int row, int col) const;

  /// Pointwise matrix product.
  friend SeqMat pointwise_product(const SeqMat& a, const SeqMat& b);
  /// theta * sum_{m < n} f(m).
  friend SeqMat partial_sum(const SeqMat& f, const Scalar& theta);

  SeqMat& operator+=(const SeqMat& o);
  SeqMat& operator-=(const SeqMat& o);
  friend SeqMat operator+(SeqMat a, const SeqMat& b) { return a += b; }
  friend SeqMat operator-(SeqMat a, const SeqMat& b) { return a -= b; }
  friend SeqMat operator-(SeqMat a) { return Scalar(-1) * a; }
  friend SeqMat operator*(const Scalar& c, SeqMat a);
  friend bool operator==(const SeqMat& a, const SeqMat& b);

 private:
  void adopt_shape(const SeqMat& o);
  int horizon_ = 0;
  int k_ = 0;
  std::vector<Scalar> values_;
};

std::string to_string(const SeqMat& f);

class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(int k, std::vector<Poly> entries);
  static PolyMat elementary(int k, int row, int col, const Poly& p);

  bool is_shapeless_zero() const { return entries_.empty(); }
  bool is_zero() const;
  int size() const { return k_; }
  const Poly& at(int row, int col) const { return entries_[static_cast<std::size_t>(row * k_ + col)]; }
  int degree() const;

  friend PolyMat matrix_product(const PolyMat& a, const PolyMat& b);
  /// Entrywise integral from 0.
  friend PolyMat integral(const PolyMat& a);

  PolyMat& operator+=(const PolyMat& o);
  PolyMat& operator-=(const PolyMat& o);
  friend PolyMat operator+(PolyMat a, const PolyMat& b) { return a += b; }
  friend PolyMat operator-(PolyMat a, const PolyMat& b) { return a -= b; }
  friend PolyMat operator-(PolyMat a) { return Scalar(-1) * a; }
  friend PolyMat operator*(const Scalar& c, PolyMat a);
  friend bool operator==(const PolyMat& a, const PolyMat& b);

 private:
  void adopt_shape(const PolyMat& o);
  int k_ = 0;
  std::vector<Poly> entries_;
};

std::string to_string(const PolyMat& m);

}  // namespace dendra
