#pragma once

// The dendriform interface and everything derived from the two half
// products: the associative product, both pre-Lie products, the Lie
// bracket, power sums, iterated pre-Lie words and the opposite structure.
//
// A structure supplies prec/succ as bilinear maps on unit-free elements
// together with access to the unit component. The free functions below
// extend them by the unit conventions
//     a < 1 = a = 1 > a,   1 < a = 0 = a > 1,
// and reject the undefined 1 < 1 and 1 > 1.

#include <concepts>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dendra/errors.hpp"
#include "dendra/scalar.hpp"
#include "dendra/verdict.hpp"

namespace dendra {

template <class S>
concept DendriformStructure = requires(const S& s, const typename S::value_type& a) {
  typename S::value_type;
  { s.name() } -> std::convertible_to<std::string>;
  { s.unit() } -> std::same_as<typename S::value_type>;
  { s.unit_coeff(a) } -> std::same_as<Scalar>;
  { s.strip_unit(a) } -> std::same_as<typename S::value_type>;
  { s.prec(a, a) } -> std::same_as<typename S::value_type>;
  { s.succ(a, a) } -> std::same_as<typename S::value_type>;
};

template <class S>
using value_t = typename S::value_type;

/// A basis (or sample) element tagged with its degree for bounded sweeps.
template <class V>
struct Graded {
  V value;
  int degree;
};

/// Structures that can enumerate a basis up to a degree bound.
template <class S>
concept EnumerableStructure = DendriformStructure<S> && requires(const S& s, int d) {
  { s.basis(d) } -> std::same_as<std::vector<Graded<typename S::value_type>>>;
};

/// Structures that can draw random unit-free elements.
template <class S>
concept SampledStructure = DendriformStructure<S> && requires(const S& s, std::mt19937_64& rng, int d) {
  { s.random_element(rng, d) } -> std::same_as<typename S::value_type>;
};

template <DendriformStructure S>
void require_unit_free(const S& s, const value_t<S>& a, const char* op) {
  if (s.unit_coeff(a) != 0) throw UnitMisuse(std::string(op) + " needs unit-free arguments");
}

template <DendriformStructure S>
value_t<S> prec(const S& s, const value_t<S>& a, const value_t<S>& b) {
  const Scalar ua = s.unit_coeff(a);
  const Scalar ub = s.unit_coeff(b);
  if (ua != 0 && ub != 0) throw UnitMisuse("1 ≺ 1 is undefined");
  if (ua != 0) return s.prec(s.strip_unit(a), b);
  if (ub != 0) {
    value_t<S> out = s.prec(a, s.strip_unit(b));
    out += ub * a;
    return out;
  }
  return s.prec(a, b);
}

template <DendriformStructure S>
value_t<S> succ(const S& s, const value_t<S>& a, const value_t<S>& b) {
  const Scalar ua = s.unit_coeff(a);
  const Scalar ub = s.unit_coeff(b);
  if (ua != 0 && ub != 0) throw UnitMisuse("1 ≻ 1 is undefined");
  if (ub != 0) return s.succ(a, s.strip_unit(b));
  if (ua != 0) {
    value_t<S> out = s.succ(s.strip_unit(a), b);
    out += ua * b;
    return out;
  }
  return s.succ(a, b);
}

/// a * b = a < b + a > b, extended unitally: 1 * a = a * 1 = a.
template <DendriformStructure S>
value_t<S> assoc(const S& s, const value_t<S>& a, const value_t<S>& b) {
  const Scalar ua = s.unit_coeff(a);
  const Scalar ub = s.unit_coeff(b);
  if (ua == 0 && ub == 0) {
    value_t<S> out = s.prec(a, b);
    out += s.succ(a, b);
    return out;
  }
  const value_t<S> a0 = ua == 0 ? a : s.strip_unit(a);
  const value_t<S> b0 = ub == 0 ? b : s.strip_unit(b);
  value_t<S> out = s.prec(a0, b0);
  out += s.succ(a0, b0);
  if (ua != 0) out += ua * b0;
  if (ub != 0) out += ub * a0;
  if (ua != 0 && ub != 0) out += Scalar(ua * ub) * s.unit();
  return out;
}

/// a |> b = a > b - b < a (left pre-Lie).
template <DendriformStructure S>
value_t<S> prelie_left(const S& s, const value_t<S>& a, const value_t<S>& b) {
  require_unit_free(s, a, "prelie_left");
  require_unit_free(s, b, "prelie_left");
  value_t<S> out = s.succ(a, b);
  out -= s.prec(b, a);
  return out;
}

/// a <| b = a < b - b > a (right pre-Lie).
template <DendriformStructure S>
value_t<S> prelie_right(const S& s, const value_t<S>& a, const value_t<S>& b) {
  require_unit_free(s, a, "prelie_right");
  require_unit_free(s, b, "prelie_right");
  value_t<S> out = s.prec(a, b);
  out -= s.succ(b, a);
  return out;
}

/// [a, b] = a * b - b * a.
template <DendriformStructure S>
value_t<S> lie_bracket(const S& s, const value_t<S>& a, const value_t<S>& b) {
  require_unit_free(s, a, "lie_bracket");
  require_unit_free(s, b, "lie_bracket");
  value_t<S> out = assoc(s, a, b);
  out -= assoc(s, b, a);
  return out;
}

/// w_<^(0..n)(a): w^(0) = 1, w^(k) = a < w^(k-1).
template <DendriformStructure S>
std::vector<value_t<S>> power_sums_left(const S& s, const value_t<S>& a, int n) {
  if (n < 0) throw std::invalid_argument("power sum order must be >= 0");
  require_unit_free(s, a, "w_left");
  std::vector<value_t<S>> w{s.unit()};
  for (int k = 1; k <= n; ++k) w.push_back(prec(s, a, w.back()));
  return w;
}

/// w_>^(0..n)(a): w^(0) = 1, w^(k) = w^(k-1) > a.
template <DendriformStructure S>
std::vector<value_t<S>> power_sums_right(const S& s, const value_t<S>& a, int n) {
  if (n < 0) throw std::invalid_argument("power sum order must be >= 0");
  require_unit_free(s, a, "w_right");
  std::vector<value_t<S>> w{s.unit()};
  for (int k = 1; k <= n; ++k) w.push_back(succ(s, w.back(), a));
  return w;
}

template <DendriformStructure S>
value_t<S> w_left(const S& s, const value_t<S>& a, int n) {
  return power_sums_left(s, a, n).back();
}

template <DendriformStructure S>
value_t<S> w_right(const S& s, const value_t<S>& a, int n) {
  return power_sums_right(s, a, n).back();
}

/// l(a_1, ..., a_n) = (...((a_1 |> a_2) |> a_3) ...) |> a_n.
template <DendriformStructure S>
value_t<S> ell(const S& s, std::span<const value_t<S>> args) {
  if (args.empty()) throw EmptyArgumentList("ell");
  require_unit_free(s, args[0], "ell");
  value_t<S> acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = prelie_left(s, acc, args[i]);
  return acc;
}

/// r(a_1, ..., a_n) = a_1 <| (a_2 <| (... (a_{n-1} <| a_n)...)).
template <DendriformStructure S>
value_t<S> r(const S& s, std::span<const value_t<S>> args) {
  if (args.empty()) throw EmptyArgumentList("r");
  require_unit_free(s, args.back(), "r");
  value_t<S> acc = args.back();
  for (std::size_t i = args.size() - 1; i-- > 0;) acc = prelie_right(s, args[i], acc);
  return acc;
}

/// l^(1..n)(a), index 0 unused (zero).
template <DendriformStructure S>
std::vector<value_t<S>> ell_powers(const S& s, const value_t<S>& a, int n) {
  if (n < 1) throw EmptyArgumentList("ell power needs n >= 1");
  require_unit_free(s, a, "ell");
  std::vector<value_t<S>> out(static_cast<std::size_t>(n) + 1);
  out[1] = a;
  for (int k = 2; k <= n; ++k) out[k] = prelie_left(s, out[k - 1], a);
  return out;
}

/// r^(1..n)(a), index 0 unused (zero).
template <DendriformStructure S>
std::vector<value_t<S>> r_powers(const S& s, const value_t<S>& a, int n) {
  if (n < 1) throw EmptyArgumentList("r power needs n >= 1");
  require_unit_free(s, a, "r");
  std::vector<value_t<S>> out(static_cast<std::size_t>(n) + 1);
  out[1] = a;
  for (int k = 2; k <= n; ++k) out[k] = prelie_right(s, a, out[k - 1]);
  return out;
}

template <DendriformStructure S>
value_t<S> ell_power(const S& s, const value_t<S>& a, int n) {
  return ell_powers(s, a, n).back();
}

template <DendriformStructure S>
value_t<S> r_power(const S& s, const value_t<S>& a, int n) {
  return r_powers(s, a, n).back();
}

/// The opposite structure: a <= b := -(b > a), a >= b := -(b < a).
/// Its associative product is a (*) b = -(b * a); the pre-Lie products are
/// those of the base structure.
template <DendriformStructure S>
class Opposite {
 public:
  using value_type = value_t<S>;

  explicit Opposite(S base) : base_(std::move(base)) {}

  const S& base() const { return base_; }
  std::string name() const { return "op(" + std::string(base_.name()) + ")"; }
  value_type unit() const { return base_.unit(); }
  Scalar unit_coeff(const value_type& a) const { return base_.unit_coeff(a); }
  value_type strip_unit(const value_type& a) const { return base_.strip_unit(a); }

  value_type prec(const value_type& a, const value_type& b) const {
    value_type out = base_.succ(b, a);
    return Scalar(-1) * out;
  }
  value_type succ(const value_type& a, const value_type& b) const {
    value_type out = base_.prec(b, a);
    return Scalar(-1) * out;
  }

  std::vector<Graded<value_type>> basis(int max_degree) const
    requires EnumerableStructure<S>
  {
    return base_.basis(max_degree);
  }

  value_type random_element(std::mt19937_64& rng, int max_degree) const
    requires SampledStructure<S>
  {
    return base_.random_element(rng, max_degree);
  }

 private:
  S base_;
};

template <DendriformStructure S>
Opposite<S> opposite(const S& s) {
  return Opposite<S>(s);
}

/// Exhaustive check of the three dendriform axioms on all basis triples of
/// total degree <= max_degree, plus the unit conventions on every basis
/// element.
template <DendriformStructure S>
Verdict check_axioms(const S& s, const std::vector<Graded<value_t<S>>>& basis, int max_degree) {
  Verdict v;
  const value_t<S> one = s.unit();
  for (const auto& g : basis) {
    const auto& a = g.value;
    expect_equal(v, "a ≺ 1 = a", prec(s, a, one), a);
    expect_equal(v, "1 ≻ a = a", succ(s, one, a), a);
    expect_equal(v, "1 ≺ a = 0", prec(s, one, a), value_t<S>{});
    expect_equal(v, "a ≻ 1 = 0", succ(s, a, one), value_t<S>{});
  }
  for (const auto& ga : basis) {
    for (const auto& gb : basis) {
      if (ga.degree + gb.degree >= max_degree) continue;
      const auto ab_prec = s.prec(ga.value, gb.value);
      const auto ab_succ = s.succ(ga.value, gb.value);
      for (const auto& gc : basis) {
        if (ga.degree + gb.degree + gc.degree > max_degree) continue;
        const auto& a = ga.value;
        const auto& b = gb.value;
        const auto& c = gc.value;
        expect_equal(v, "axiom (a≺b)≺c = a≺(b*c)", s.prec(ab_prec, c), s.prec(a, assoc(s, b, c)));
        expect_equal(v, "axiom (a≻b)≺c = a≻(b≺c)", s.prec(ab_succ, c), s.succ(a, s.prec(b, c)));
        expect_equal(v, "axiom a≻(b≻c) = (a*b)≻c", s.succ(a, s.succ(b, c)), s.succ(assoc(s, a, b), c));
        if (v.failure) return v;
      }
    }
  }
  return v;
}

template <EnumerableStructure S>
Verdict check_axioms(const S& s, int max_degree) {
  return check_axioms(s, s.basis(max_degree), max_degree);
}

/// Registration self-test: throws StructureValidationError when an axiom
/// fails up to the degree bound.
template <EnumerableStructure S>
const S& validate_structure(const S& s, int max_degree) {
  const Verdict v = check_axioms(s, max_degree);
  if (!v.passed()) {
    throw StructureValidationError(std::string(s.name()) + ": " +
                                   (v.failure ? v.failure->label + " lhs=" + v.failure->lhs + " rhs=" +
                                                    v.failure->rhs
                                              : std::string("no checks ran")));
  }
  return s;
}

/// Left and right pre-Lie laws and the three expressions of the Lie
/// bracket on one triple of unit-free elements.
template <DendriformStructure S>
Verdict check_prelie_laws(const S& s, const value_t<S>& a, const value_t<S>& b, const value_t<S>& c) {
  Verdict v;
  auto L = [&](const value_t<S>& x, const value_t<S>& y) { return prelie_left(s, x, y); };
  auto R = [&](const value_t<S>& x, const value_t<S>& y) { return prelie_right(s, x, y); };
  expect_equal(v, "left pre-Lie law", L(L(a, b), c) - L(a, L(b, c)), L(L(b, a), c) - L(b, L(a, c)));
  expect_equal(v, "right pre-Lie law", R(R(a, b), c) - R(a, R(b, c)), R(R(a, c), b) - R(a, R(c, b)));
  const auto bracket = lie_bracket(s, a, b);
  expect_equal(v, "[a,b] via ▷", bracket, L(a, b) - L(b, a));
  expect_equal(v, "[a,b] via ◁", bracket, R(a, b) - R(b, a));
  expect_equal(v, "a ◁ b = −(b ▷ a)", R(a, b), Scalar(-1) * L(b, a));
  return v;
}

}  // namespace dendra
