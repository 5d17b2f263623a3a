#include "dendra/structures/carriers.hpp"

#include <algorithm>
#include <stdexcept>

#include "dendra/errors.hpp"

namespace dendra {

// ---- Poly ------------------------------------------------------------------

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int degree, const Scalar& c) {
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar Poly::coeff(int d) const {
  return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : Scalar(0);
}

Poly Poly::integral() const {
  if (is_zero()) return {};
  std::vector<Scalar> v(coeffs_.size() + 1);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) v[d + 1] = coeffs_[d] / Scalar(static_cast<long>(d) + 1);
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Scalar& c, const Poly& a) {
  if (c == 0) return {};
  Poly out = a;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Scalar c = p.coeff(d);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Scalar mag = negative ? Scalar(-c) : c;
    out += first ? (negative ? "−" : "") : (negative ? " − " : " + ");
    first = false;
    if (d == 0 || mag != 1) out += to_string(mag);
    if (d >= 1 && mag != 1) out += "·";
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

// ---- SeqMat ----------------------------------------------------------------

SeqMat::SeqMat(int horizon, int k, std::vector<Scalar> values)
    : horizon_(horizon), k_(k), values_(std::move(values)) {
  if (horizon < 1 || k < 1) throw std::invalid_argument("SeqMat needs N >= 1 and k >= 1");
  if (values_.size() != static_cast<std::size_t>(horizon * k * k)) {
    throw std::invalid_argument("SeqMat value count does not match N*k*k");
  }
}

SeqMat SeqMat::filled(int horizon, int k, const Scalar& c) {
  return SeqMat(horizon, k, std::vector<Scalar>(static_cast<std::size_t>(horizon * k * k), c));
}

SeqMat SeqMat::elementary(int horizon, int k, int time, int row, int col) {
  SeqMat out = filled(horizon, k, 0);
  out.values_[static_cast<std::size_t>((time - 1) * k * k + row * k + col)] = 1;
  return out;
}

bool SeqMat::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Scalar& x) { return x == 0; });
}

Scalar SeqMat::at(int time, int row, int col) const {
  if (values_.empty()) return 0;
  return values_[static_cast<std::size_t>((time - 1) * k_ * k_ + row * k_ + col)];
}

void SeqMat::adopt_shape(const SeqMat& o) {
  if (o.values_.empty()) return;
  if (values_.empty()) {
    horizon_ = o.horizon_;
    k_ = o.k_;
    values_.assign(o.values_.size(), Scalar(0));
  } else if (horizon_ != o.horizon_ || k_ != o.k_) {
    throw ShapeMismatch("SeqMat N=" + std::to_string(horizon_) + ",k=" + std::to_string(k_) + " vs N=" +
                        std::to_string(o.horizon_) + ",k=" + std::to_string(o.k_));
  }
}

SeqMat& SeqMat::operator+=(const SeqMat& o) {
  adopt_shape(o);
  for (std::size_t i = 0; i < o.values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

SeqMat& SeqMat::operator-=(const SeqMat& o) {
  adopt_shape(o);
  for (std::size_t i = 0; i < o.values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

SeqMat operator*(const Scalar& c, SeqMat a) {
  for (auto& x : a.values_) x *= c;
  return a;
}

bool operator==(const SeqMat& a, const SeqMat& b) {
  if (a.values_.empty()) return b.is_zero();
  if (b.values_.empty()) return a.is_zero();
  return a.horizon_ == b.horizon_ && a.k_ == b.k_ && a.values_ == b.values_;
}

SeqMat pointwise_product(const SeqMat& a, const SeqMat& b) {
  if (a.values_.empty() || b.values_.empty()) return {};
  if (a.horizon_ != b.horizon_ || a.k_ != b.k_) throw ShapeMismatch("SeqMat product of different shapes");
  const int k = a.k_;
  SeqMat out = SeqMat::filled(a.horizon_, k, 0);
  for (int t = 0; t < a.horizon_; ++t) {
    const std::size_t base = static_cast<std::size_t>(t * k * k);
    for (int i = 0; i < k; ++i) {
      for (int l = 0; l < k; ++l) {
        const Scalar& x = a.values_[base + i * k + l];
        if (x == 0) continue;
        for (int j = 0; j < k; ++j) out.values_[base + i * k + j] += x * b.values_[base + l * k + j];
      }
    }
  }
  return out;
}

SeqMat partial_sum(const SeqMat& f, const Scalar& theta) {
  if (f.values_.empty()) return {};
  const std::size_t block = static_cast<std::size_t>(f.k_ * f.k_);
  SeqMat out = SeqMat::filled(f.horizon_, f.k_, 0);
  for (int t = 1; t < f.horizon_; ++t) {
    for (std::size_t e = 0; e < block; ++e) {
      out.values_[t * block + e] = out.values_[(t - 1) * block + e] + f.values_[(t - 1) * block + e];
    }
  }
  if (theta != 1) {
    for (auto& x : out.values_) x *= theta;
  }
  return out;
}

std::string to_string(const SeqMat& f) {
  if (f.is_shapeless_zero()) return "0";
  std::string out = "(";
  for (int t = 1; t <= f.horizon(); ++t) {
    if (t > 1) out += "; ";
    if (f.size() == 1) {
      out += to_string(f.at(t, 0, 0));
      continue;
    }
    out += "[";
    for (int i = 0; i < f.size(); ++i) {
      if (i) out += " | ";
      for (int j = 0; j < f.size(); ++j) {
        if (j) out += " ";
        out += to_string(f.at(t, i, j));
      }
    }
    out += "]";
  }
  return out + ")";
}

// ---- PolyMat ---------------------------------------------------------------

PolyMat::PolyMat(int k, std::vector<Poly> entries) : k_(k), entries_(std::move(entries)) {
  if (k < 1) throw std::invalid_argument("PolyMat needs k >= 1");
  if (entries_.size() != static_cast<std::size_t>(k * k)) throw std::invalid_argument("PolyMat needs k*k entries");
}

PolyMat PolyMat::elementary(int k, int row, int col, const Poly& p) {
  std::vector<Poly> e(static_cast<std::size_t>(k * k));
  e[static_cast<std::size_t>(row * k + col)] = p;
  return PolyMat(k, std::move(e));
}

bool PolyMat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

int PolyMat::degree() const {
  int d = -1;
  for (const auto& p : entries_) d = std::max(d, p.degree());
  return d;
}

void PolyMat::adopt_shape(const PolyMat& o) {
  if (o.entries_.empty()) return;
  if (entries_.empty()) {
    k_ = o.k_;
    entries_.assign(o.entries_.size(), Poly{});
  } else if (k_ != o.k_) {
    throw ShapeMismatch("PolyMat k=" + std::to_string(k_) + " vs k=" + std::to_string(o.k_));
  }
}

PolyMat& PolyMat::operator+=(const PolyMat& o) {
  adopt_shape(o);
  for (std::size_t i = 0; i < o.entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

PolyMat& PolyMat::operator-=(const PolyMat& o) {
  adopt_shape(o);
  for (std::size_t i = 0; i < o.entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

PolyMat operator*(const Scalar& c, PolyMat a) {
  for (auto& p : a.entries_) p = c * p;
  return a;
}

bool operator==(const PolyMat& a, const PolyMat& b) {
  if (a.entries_.empty()) return b.is_zero();
  if (b.entries_.empty()) return a.is_zero();
  return a.k_ == b.k_ && a.entries_ == b.entries_;
}

PolyMat matrix_product(const PolyMat& a, const PolyMat& b) {
  if (a.entries_.empty() || b.entries_.empty()) return {};
  if (a.k_ != b.k_) throw ShapeMismatch("PolyMat product of different sizes");
  const int k = a.k_;
  std::vector<Poly> e(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int l = 0; l < k; ++l) {
      const Poly& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (int j = 0; j < k; ++j) e[static_cast<std::size_t>(i * k + j)] += x * b.at(l, j);
    }
  }
  return PolyMat(k, std::move(e));
}

PolyMat integral(const PolyMat& a) {
  if (a.entries_.empty()) return {};
  std::vector<Poly> e;
  e.reserve(a.entries_.size());
  for (const auto& p : a.entries_) e.push_back(p.integral());
  return PolyMat(a.k_, std::move(e));
}

std::string to_string(const PolyMat& m) {
  if (m.is_shapeless_zero()) return "0";
  std::string out = "[";
  for (int i = 0; i < m.size(); ++i) {
    if (i) out += " | ";
    for (int j = 0; j < m.size(); ++j) {
      if (j) out += ", ";
      out += to_string(m.at(i, j));
    }
  }
  return out + "]";
}

}  // namespace dendra
