#pragma once

// Rota-Baxter algebras of weight theta,
//     R(a)R(b) = R(R(a)b + aR(b) + theta ab),
// and the two dendriform structures they induce:
//     plain:  a < b = aR(b) + theta ab,   a > b = R(a)b
//     primed: a < b = aR(b),              a > b = R(a)b + theta ab
// Both share a * b = aR(b) + R(a)b + theta ab, and R(a * b) = R(a)R(b).
// Carriers are extended by a formal unit, since the carrier's own identity
// is not a dendriform unit.

#include <concepts>
#include <random>
#include <string>
#include <vector>

#include "dendra/dendriform.hpp"
#include "dendra/errors.hpp"
#include "dendra/structures/carriers.hpp"
#include "dendra/structures/keyed.hpp"

namespace dendra {

template <class A>
concept RotaBaxterAlgebra = requires(const A& alg, const typename A::carrier_type& x, std::mt19937_64& rng, int d) {
  typename A::carrier_type;
  { alg.name() } -> std::convertible_to<std::string>;
  { alg.theta() } -> std::convertible_to<Scalar>;
  { alg.mul(x, x) } -> std::same_as<typename A::carrier_type>;
  { alg.R(x) } -> std::same_as<typename A::carrier_type>;
  { alg.graded_basis(d) } -> std::same_as<std::vector<Graded<typename A::carrier_type>>>;
  { alg.random(rng) } -> std::same_as<typename A::carrier_type>;
  { alg.commutative() } -> std::same_as<bool>;
};

/// Carrier value plus a coefficient on the adjoined unit.
template <class C>
struct Augmented {
  Scalar unit = 0;
  C body{};

  Augmented& operator+=(const Augmented& o) {
    unit += o.unit;
    body += o.body;
    return *this;
  }
  Augmented& operator-=(const Augmented& o) {
    unit -= o.unit;
    body -= o.body;
    return *this;
  }
  friend Augmented operator+(Augmented a, const Augmented& b) { return a += b; }
  friend Augmented operator-(Augmented a, const Augmented& b) { return a -= b; }
  friend Augmented operator-(Augmented a) { return Scalar(-1) * a; }
  friend Augmented operator*(const Scalar& c, Augmented a) {
    a.unit *= c;
    a.body = c * a.body;
    return a;
  }
  friend bool operator==(const Augmented& a, const Augmented& b) { return a.unit == b.unit && a.body == b.body; }
};

template <class C>
Augmented<C> lift(C body) {
  return Augmented<C>{0, std::move(body)};
}

template <class C>
std::string to_string(const Augmented<C>& a) {
  if (a.unit == 0) return to_string(a.body);
  std::string out = to_string(a.unit) + "·1";
  if (!(a.body == C{})) out += " + " + to_string(a.body);
  return out;
}

/// Functions {1..N} -> k x k matrices with R f(n) = theta * sum_{m<n} f(m).
class SeqMatAlgebra {
 public:
  using carrier_type = SeqMat;

  SeqMatAlgebra(int horizon, int k, Scalar theta);

  std::string name() const;
  const Scalar& theta() const { return theta_; }
  int horizon() const { return horizon_; }
  int size() const { return k_; }
  bool commutative() const { return k_ == 1; }

  SeqMat mul(const SeqMat& a, const SeqMat& b) const { return pointwise_product(a, b); }
  SeqMat R(const SeqMat& a) const { return partial_sum(a, theta_); }

  /// Elementary functions e_{n,i,j}, each of degree 1.
  std::vector<Graded<SeqMat>> graded_basis(int max_degree) const;
  SeqMat random(std::mt19937_64& rng) const;

 private:
  int horizon_;
  int k_;
  Scalar theta_;
};

/// k x k polynomial matrices, matrix product, R = entrywise integration
/// from 0 (weight 0).
class PolyMatAlgebra {
 public:
  using carrier_type = PolyMat;

  explicit PolyMatAlgebra(int k);

  std::string name() const;
  Scalar theta() const { return 0; }
  int size() const { return k_; }
  bool commutative() const { return k_ == 1; }

  PolyMat mul(const PolyMat& a, const PolyMat& b) const { return matrix_product(a, b); }
  PolyMat R(const PolyMat& a) const { return integral(a); }

  /// E_ij x^d with degree d + 1 <= max_degree.
  std::vector<Graded<PolyMat>> graded_basis(int max_degree) const;
  /// Entries of polynomial degree <= 1.
  PolyMat random(std::mt19937_64& rng) const;

 private:
  int k_;
};

/// The companion operator R~ = -theta id - R, again of weight theta.
template <RotaBaxterAlgebra A>
class TildeOperator {
 public:
  using carrier_type = typename A::carrier_type;

  explicit TildeOperator(A base) : base_(std::move(base)) {}

  std::string name() const { return "tilde(" + base_.name() + ")"; }
  Scalar theta() const { return base_.theta(); }
  bool commutative() const { return base_.commutative(); }
  carrier_type mul(const carrier_type& a, const carrier_type& b) const { return base_.mul(a, b); }
  carrier_type R(const carrier_type& a) const {
    carrier_type out = Scalar(-base_.theta()) * a;
    out -= base_.R(a);
    return out;
  }
  std::vector<Graded<carrier_type>> graded_basis(int d) const { return base_.graded_basis(d); }
  carrier_type random(std::mt19937_64& rng) const { return base_.random(rng); }

 private:
  A base_;
};

/// R(a)R(b) = R(R(a)b + aR(b) + theta ab) on one pair.
template <RotaBaxterAlgebra A>
bool rota_baxter_holds(const A& alg, const typename A::carrier_type& a, const typename A::carrier_type& b) {
  using C = typename A::carrier_type;
  const C Ra = alg.R(a);
  const C Rb = alg.R(b);
  C inner = alg.mul(Ra, b);
  inner += alg.mul(a, Rb);
  inner += Scalar(alg.theta()) * alg.mul(a, b);
  return alg.mul(Ra, Rb) == alg.R(inner);
}

/// The weight relation on all basis pairs up to max_degree and on
/// `random_pairs` seeded random pairs.
template <RotaBaxterAlgebra A>
Verdict check_rota_baxter(const A& alg, int max_degree, int random_pairs, std::uint64_t seed) {
  using C = typename A::carrier_type;
  Verdict v;
  const auto basis = alg.graded_basis(max_degree);
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      expect_true(v, "Rota-Baxter relation on basis pair", rota_baxter_holds(alg, a.value, b.value),
                  to_string(a.value) + " , " + to_string(b.value));
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_pairs; ++i) {
    const C a = alg.random(rng);
    const C b = alg.random(rng);
    expect_true(v, "Rota-Baxter relation on random pair", rota_baxter_holds(alg, a, b),
                to_string(a) + " , " + to_string(b));
  }
  return v;
}

enum class RBVariant { plain, primed };

template <RotaBaxterAlgebra A>
class RBDendriform {
 public:
  using carrier_type = typename A::carrier_type;
  using value_type = Augmented<carrier_type>;

  /// Throws RBWeightCheckFailure when the weight relation fails on the
  /// registration sample.
  RBDendriform(A algebra, RBVariant variant) : alg_(std::move(algebra)), variant_(variant) {
    const Verdict v = check_rota_baxter(alg_, 3, 8, 0x5eed);
    if (!v.passed()) {
      throw RBWeightCheckFailure(alg_.name() + ": " + (v.failure ? v.failure->lhs : std::string()));
    }
  }

  const A& algebra() const { return alg_; }
  RBVariant variant() const { return variant_; }
  std::string name() const { return alg_.name() + (variant_ == RBVariant::primed ? ",primed" : ""); }

  value_type unit() const { return value_type{1, carrier_type{}}; }
  Scalar unit_coeff(const value_type& a) const { return a.unit; }
  value_type strip_unit(const value_type& a) const { return value_type{0, a.body}; }

  value_type prec(const value_type& a, const value_type& b) const {
    carrier_type out = alg_.mul(a.body, alg_.R(b.body));
    if (variant_ == RBVariant::plain) out += Scalar(alg_.theta()) * alg_.mul(a.body, b.body);
    return lift(std::move(out));
  }
  value_type succ(const value_type& a, const value_type& b) const {
    carrier_type out = alg_.mul(alg_.R(a.body), b.body);
    if (variant_ == RBVariant::primed) out += Scalar(alg_.theta()) * alg_.mul(a.body, b.body);
    return lift(std::move(out));
  }

  /// R extended to the augmented algebra on unit-free values.
  value_type R(const value_type& a) const {
    require_unit_free(*this, a, "R");
    return lift(alg_.R(a.body));
  }

  std::vector<Graded<value_type>> basis(int max_degree) const {
    std::vector<Graded<value_type>> out;
    for (auto& g : alg_.graded_basis(max_degree)) out.push_back({lift(std::move(g.value)), g.degree});
    return out;
  }
  value_type random_element(std::mt19937_64& rng, int) const { return lift(alg_.random(rng)); }

 private:
  A alg_;
  RBVariant variant_;
};

using SeqMatRB = RBDendriform<SeqMatAlgebra>;
using PolyMatRB = RBDendriform<PolyMatAlgebra>;

}  // namespace dendra
