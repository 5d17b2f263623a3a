#pragma once

// Exponential and logarithm for the associative product on truncated
// series, Bernoulli numbers, and the Magnus recursion for
// Omega(t) = log*(Y(t)), Y(t) = sum t^n w_>^(n)(a):
//   Omega' = L + sum_{k>0} (-1)^k B_k / k! ad(Omega)^k (L),
//   L(t) = sum_{n>0} l^(n)(a) t^(n-1).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dendra/dendriform.hpp"
#include "dendra/errors.hpp"
#include "dendra/hopf.hpp"
#include "dendra/series.hpp"

namespace dendra {

/// B_0 .. B_n with B_1 = -1/2 (Akiyama-Tanigawa).
std::vector<Scalar> bernoulli_table(int n);

template <DendriformStructure S>
Series<value_t<S>> star_mul(const S& s, const Series<value_t<S>>& f, const Series<value_t<S>>& g) {
  return series_mul(f, g, [&s](const value_t<S>& x, const value_t<S>& y) { return assoc(s, x, y); });
}

template <DendriformStructure S>
Series<value_t<S>> unit_series(const S& s, int cap) {
  return Series<value_t<S>>(std::vector<value_t<S>>{s.unit()}, cap);
}

/// sum_{k >= 0} x^{*k} / k!. Throws NormalizationError unless x has zero
/// constant term.
template <DendriformStructure S>
Series<value_t<S>> star_exp(const S& s, const Series<value_t<S>>& x) {
  using V = value_t<S>;
  if (!(x[0] == V{})) throw NormalizationError("exp needs a series without constant term");
  Series<V> term = unit_series(s, x.cap());
  Series<V> out = term;
  for (int k = 1; k <= x.cap(); ++k) {
    term = Scalar(1, k) * star_mul(s, term, x);
    out = out + term;
  }
  return out;
}

/// sum_{k >= 1} (-1)^(k+1) (y - 1)^{*k} / k. Throws NormalizationError
/// unless the constant term of y is the unit.
template <DendriformStructure S>
Series<value_t<S>> star_log(const S& s, const Series<value_t<S>>& y) {
  using V = value_t<S>;
  if (!(y[0] == s.unit())) throw NormalizationError("log needs constant term 1");
  const Series<V> z = y - unit_series(s, y.cap());
  Series<V> power = z;
  Series<V> out = z;
  for (int k = 2; k <= y.cap(); ++k) {
    power = star_mul(s, power, z);
    out = out + Scalar(sign_power(k + 1), k) * power;
  }
  return out;
}

/// The inverse of y for *, constant term 1 required.
template <DendriformStructure S>
Series<value_t<S>> star_inverse(const S& s, const Series<value_t<S>>& y) {
  using V = value_t<S>;
  if (!(y[0] == s.unit())) throw NormalizationError("inverse needs constant term 1");
  std::vector<V> inv(static_cast<std::size_t>(y.cap()) + 1);
  inv[0] = s.unit();
  for (int n = 1; n <= y.cap(); ++n) {
    V acc;
    for (int p = 0; p < n; ++p) acc += assoc(s, inv[p], y[n - p]);
    inv[n] = Scalar(-1) * acc;
  }
  return Series<V>(std::move(inv), y.cap());
}

/// Y(t) = sum_{n <= cap} t^n w_>^(n)(a).
template <DendriformStructure S>
Series<value_t<S>> power_sum_series(const S& s, const value_t<S>& a, int cap) {
  return Series<value_t<S>>(power_sums_right(s, a, cap), cap);
}

/// L(t) = sum_{n=1..cap} l^(n)(a) t^(n-1), known to order cap - 1.
template <DendriformStructure S>
Series<value_t<S>> lhat(const S& s, const value_t<S>& a, int cap) {
  if (cap < 1) throw std::invalid_argument("lhat needs cap >= 1");
  auto ells = ell_powers(s, a, cap);
  ells.erase(ells.begin());
  return Series<value_t<S>>(std::move(ells), cap - 1);
}

/// Omega(t) to order cap, solved degree by degree. The coefficient of
/// t^n only reads Omega^(1..n-1); reading an unset coefficient throws.
template <DendriformStructure S>
Series<value_t<S>> magnus_omega(const S& s, const value_t<S>& a, int cap) {
  using V = value_t<S>;
  if (cap < 1) throw std::invalid_argument("magnus_omega needs cap >= 1");
  const auto L = lhat(s, a, cap);
  const auto B = bernoulli_table(cap);
  std::vector<std::optional<V>> omega(static_cast<std::size_t>(cap) + 1);
  omega[0] = V{};
  auto known = [&](int i) -> const V& {
    if (!omega[static_cast<std::size_t>(i)]) {
      throw std::logic_error("Magnus recursion read Omega^(" + std::to_string(i) + ") before it was set");
    }
    return *omega[static_cast<std::size_t>(i)];
  };
  for (int n = 1; n <= cap; ++n) {
    const int top = n - 1;
    // term[j] = coefficient of t^j in ad(Omega)^k (L), j <= top.
    std::vector<V> term(static_cast<std::size_t>(top) + 1);
    for (int j = 0; j <= top; ++j) term[j] = L[j];
    V derivative = term[top];
    for (int k = 1; k <= top; ++k) {
      std::vector<V> next(static_cast<std::size_t>(top) + 1);
      for (int j = 1; j <= top; ++j) {
        for (int i = 1; i <= j; ++i) {
          const V& o = known(i);
          const V& x = term[j - i];
          if (o == V{} || x == V{}) continue;
          next[j] += assoc(s, o, x);
          next[j] -= assoc(s, x, o);
        }
      }
      term = std::move(next);
      if (B[k] != 0) derivative += Scalar(sign_power(k) * B[k] / factorial(k)) * term[top];
    }
    omega[static_cast<std::size_t>(n)] = Scalar(1, n) * derivative;
  }
  std::vector<V> out;
  for (int n = 0; n <= cap; ++n) out.push_back(known(n));
  return Series<V>(std::move(out), cap);
}

/// Omega^(1..3) against l^(1)(a), l^(2)(a)/2 and
/// l^(3)(a)/3 + [l^(1)(a), l^(2)(a)]/12 (as far as cap allows), the bracket
/// in its *, |> and <| forms, exp*(Omega) = Y, and log*(Y) = Omega.
template <DendriformStructure S>
Verdict check_magnus(const S& s, const value_t<S>& a, int cap) {
  using V = value_t<S>;
  Verdict v;
  const auto omega = magnus_omega(s, a, cap);
  const auto ells = ell_powers(s, a, std::max(cap, 3));
  expect_equal(v, "Ω^(1) = ℓ^(1)(a)", omega[1], ells[1]);
  if (cap >= 2) expect_equal(v, "Ω^(2) = ½ℓ^(2)(a)", omega[2], Scalar(1, 2) * ells[2]);
  if (cap >= 3) {
    const V bracket = lie_bracket(s, ells[1], ells[2]);
    expect_equal(v, "[ℓ1,ℓ2] via * equals the ▷ form", bracket,
                 prelie_left(s, ells[1], ells[2]) - prelie_left(s, ells[2], ells[1]));
    expect_equal(v, "[ℓ1,ℓ2] via * equals the ◁ form", bracket,
                 prelie_right(s, ells[1], ells[2]) - prelie_right(s, ells[2], ells[1]));
    expect_equal(v, "Ω^(3) = ⅓ℓ^(3)(a) + 1/12[ℓ^(1)(a),ℓ^(2)(a)]", omega[3],
                 Scalar(1, 3) * ells[3] + Scalar(1, 12) * bracket);
  }
  const auto y = power_sum_series(s, a, cap);
  expect_equal(v, "exp*(Ω) = Y", star_exp(s, omega), y);
  expect_equal(v, "log*(Y) = Ω", star_log(s, y), omega);
  return v;
}

/// t Y' = Y * (t L) and Y^{-1} * (t Y') = sum t^n l^(n)(a), coefficient
/// by coefficient up to cap.
template <DendriformStructure S>
Verdict dynkin_ode_check(const S& s, const value_t<S>& a, int cap) {
  using V = value_t<S>;
  if (cap < 1) throw std::invalid_argument("dynkin_ode_check needs cap >= 1");
  Verdict v;
  const auto y = power_sum_series(s, a, cap);
  const auto tl = lhat(s, a, cap).shifted();
  const auto ty = y.grading();
  expect_equal(v, "t·dY/dt = Y * (t·L̂)", ty, star_mul(s, y, tl));
  expect_equal(v, "D(Y) = Y^{-1} * (t·dY/dt) = t·L̂", star_mul(s, star_inverse(s, y), ty), tl);
  std::vector<V> dy(static_cast<std::size_t>(cap) + 1);
  for (int n = 1; n <= cap; ++n) dy[n] = dynkin_w(s, a, n);
  expect_equal(v, "D(Y) from the w-subalgebra Hopf data = t·L̂", Series<V>(std::move(dy), cap), tl);
  return v;
}

}  // namespace dendra
