#pragma once

// Sparse formal linear combinations over an ordered basis. The term map
// never stores a zero coefficient, so equal elements have equal maps and
// iteration follows the key order.

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "dendra/scalar.hpp"

namespace dendra {

template <class Key>
class Elem {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Scalar>;

  Elem() = default;
  explicit Elem(Key key, Scalar coeff = 1) { add_term(std::move(key), coeff); }

  static Elem zero() { return Elem{}; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Accumulates c * key; drops the entry when it cancels.
  void add_term(const Key& key, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const Elem& other, const Scalar& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other.terms_) add_term(k, Scalar(v * c));
  }

  void remove_term(const Key& key) { terms_.erase(key); }

  Elem& operator+=(const Elem& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  Elem& operator-=(const Elem& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, Scalar(-v));
    return *this;
  }
  Elem& operator*=(const Scalar& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
  }

  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator-(Elem a) { return a *= Scalar(-1); }
  friend Elem operator*(const Scalar& c, Elem a) { return a *= c; }
  friend Elem operator*(Elem a, const Scalar& c) { return a *= c; }
  friend bool operator==(const Elem& a, const Elem& b) { return a.terms_ == b.terms_; }

  /// Linear extension of a key-level map f: Key -> Elem<Key2>.
  template <class F>
  auto map_linear(F&& f) const {
    using Out = decltype(f(std::declval<const Key&>()));
    Out out;
    for (const auto& [k, v] : terms_) out.add_scaled(f(k), v);
    return out;
  }

 private:
  map_type terms_;
};

/// Bilinear extension of a key-level product: sum over term pairs of
/// ca * cb * f(ka, kb). f returns Elem<Key>.
template <class Key, class F>
Elem<Key> bilinear(const Elem<Key>& a, const Elem<Key>& b, F&& f) {
  Elem<Key> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      out.add_scaled(f(ka, kb), Scalar(ca * cb));
    }
  }
  return out;
}

namespace detail {

template <class Key>
void render_term(std::string& out, bool first, const Key& key, const Scalar& c) {
  const bool negative = c < 0;
  const Scalar magnitude = negative ? Scalar(-c) : c;
  if (first) {
    if (negative) out += "−";
  } else {
    out += negative ? " − " : " + ";
  }
  const std::string key_text = render_key(key);
  if (key_text == "1") {
    out += to_string(magnitude);
  } else if (magnitude == 1) {
    out += key_text;
  } else {
    out += to_string(magnitude);
    out += "·";
    out += key_text;
  }
}

}  // namespace detail

/// Terms in key order joined by " + " / " − ", coefficients as "p/q·"
/// (omitted when +-1). The zero element renders as "0".
template <class Key>
std::string to_string(const Elem<Key>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    detail::render_term(out, first, k, c);
    first = false;
  }
  return out;
}

/// As to_string, but at most max_terms terms followed by " + k more".
template <class Key>
std::string render_truncated(const Elem<Key>& x, std::size_t max_terms) {
  if (x.size() <= max_terms) return to_string(x);
  std::string out;
  std::size_t shown = 0;
  for (const auto& [k, c] : x) {
    if (shown == max_terms) break;
    detail::render_term(out, shown == 0, k, c);
    ++shown;
  }
  out += " + " + std::to_string(x.size() - max_terms) + " more";
  return out;
}

}  // namespace dendra
