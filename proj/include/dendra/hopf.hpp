#pragma once

// The Dynkin operator on T(X), the Hopf data of the subalgebra generated by
// the right power sums w^(n) = w_>^(n)(a), the inverse map Gamma from
// primitive to group-like series, and the composition expansions of the
// power sums in terms of iterated pre-Lie products.

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dendra/dendriform.hpp"
#include "dendra/series.hpp"
#include "dendra/structures/mr.hpp"
#include "dendra/structures/words.hpp"
#include "dendra/tensor.hpp"

namespace dendra {

// ---- Dynkin operator on T(X) ----------------------------------------------

/// D(y1...yn) = [...[[y1, y2], y3]..., yn]. Throws EmptyWord on the empty
/// word.
WordElem dynkin_word(const Word& w);
/// Linear extension of dynkin_word.
WordElem dynkin(const WordElem& x);

// ---- Compositions ---------------------------------------------------------

using Composition = std::vector<int>;

/// All compositions of n >= 1 in lexicographic order.
std::vector<Composition> compositions(int n);

/// 1 / (i1 (i1 + i2) ... (i1 + ... + ik)).
Scalar composition_weight(const Composition& c);

// ---- Hopf data of the w-subalgebra ---------------------------------------

/// The tensor w^(left) (x) w^(right) of two power sums; w^(0) is the unit.
struct WTensor {
  int left = 0;
  int right = 0;
  friend auto operator<=>(const WTensor&, const WTensor&) = default;
};

/// "w(2)⊗w(1)", with w(0) rendered as 1.
std::string render_key(const WTensor& t);

using WTensorElem = Elem<WTensor>;

/// Delta(w^(n)) = sum_{m=0..n} w^(m) (x) w^(n-m). Throws
/// std::invalid_argument for n < 0.
WTensorElem w_coproduct(int n);

/// The factor swap applied to every term.
WTensorElem swap_factors(const WTensorElem& x);

/// S(w_>^(n)(a)) = (-1)^n w_<^(n)(a).
template <DendriformStructure S>
value_t<S> w_antipode(const S& s, const value_t<S>& a, int n) {
  if (n < 0) throw std::invalid_argument("antipode order must be >= 0");
  return Scalar(sign_power(n)) * w_left(s, a, n);
}

/// The recursion S(w^(n)) = -a < S(w^(n-1)) and the antipode axiom
/// sum_p S(w^(p)) * w^(n-p) = 0 for 1 <= m <= n.
template <DendriformStructure S>
Verdict check_w_antipode(const S& s, const value_t<S>& a, int n) {
  Verdict v;
  const auto right = power_sums_right(s, a, n);
  std::vector<value_t<S>> anti;
  for (int m = 0; m <= n; ++m) anti.push_back(w_antipode(s, a, m));
  for (int m = 1; m <= n; ++m) {
    expect_equal(v, "S(w^(n)) = −a ≺ S(w^(n−1))", anti[m], Scalar(-1) * prec(s, a, anti[m - 1]));
    value_t<S> conv;
    for (const auto& [t, c] : w_coproduct(m)) conv += Scalar(c) * assoc(s, anti[t.left], right[t.right]);
    expect_equal(v, "Σ S(w^(p)) * w^(n−p) = 0", conv, value_t<S>{});
  }
  return v;
}

/// (S star N)(w_>^(n)(a)) evaluated from the coproduct, the antipode and
/// the grading of the w-subalgebra.
template <DendriformStructure S>
value_t<S> dynkin_w(const S& s, const value_t<S>& a, int n) {
  if (n < 1) throw std::invalid_argument("dynkin_w needs n >= 1");
  const auto right = power_sums_right(s, a, n);
  std::vector<value_t<S>> anti;
  for (int m = 0; m <= n; ++m) anti.push_back(w_antipode(s, a, m));
  value_t<S> out;
  for (const auto& [t, c] : w_coproduct(n)) {
    if (t.right == 0) continue;
    out += Scalar(c * t.right) * assoc(s, anti[t.left], right[t.right]);
  }
  return out;
}

/// D(w^(m)) = l^(m)(a) for 1 <= m <= n, with the antipode checks.
template <DendriformStructure S>
Verdict check_lemma_dynkin(const S& s, const value_t<S>& a, int n) {
  Verdict v = check_w_antipode(s, a, n);
  const auto ells = ell_powers(s, a, n);
  for (int m = 1; m <= n; ++m) {
    expect_equal(v, "D(w_≻^(n)(a)) = ℓ^(n)(a)", dynkin_w(s, a, m), ells[m]);
    expect_equal(v, "Δ(w^(n)) is cocommutative", swap_factors(w_coproduct(m)), w_coproduct(m));
  }
  return v;
}

// ---- Gamma and the composition expansions ---------------------------------

/// Gamma(h)_n = sum over compositions of n of h_i1 * ... * h_ik times
/// composition_weight, for 1 <= n <= cap; Gamma(h)_0 = unit. Throws
/// BoundExceeded when cap exceeds the cap of h.
template <DendriformStructure S>
Series<value_t<S>> gamma(const S& s, const Series<value_t<S>>& h, int cap) {
  if (cap > h.cap()) {
    throw BoundExceeded("gamma to order " + std::to_string(cap) + " from input known to order " +
                        std::to_string(h.cap()));
  }
  std::vector<value_t<S>> out(static_cast<std::size_t>(cap) + 1);
  out[0] = s.unit();
  for (int n = 1; n <= cap; ++n) {
    for (const auto& comp : compositions(n)) {
      value_t<S> prod = h[comp[0]];
      for (std::size_t j = 1; j < comp.size() && !(prod == value_t<S>{}); ++j) prod = assoc(s, prod, h[comp[j]]);
      out[n] += composition_weight(comp) * prod;
    }
  }
  return Series<value_t<S>>(std::move(out), cap);
}

template <DendriformStructure S>
Series<value_t<S>> gamma(const S& s, const Series<value_t<S>>& h) {
  return gamma(s, h, h.cap());
}

/// sum over compositions of n of l^(i1)(a) * ... * l^(ik)(a), weighted.
template <DendriformStructure S>
value_t<S> theorem33_rhs_right(const S& s, const value_t<S>& a, int n) {
  if (n < 1) throw std::invalid_argument("theorem33 expansion needs n >= 1");
  const auto ells = ell_powers(s, a, n);
  value_t<S> out;
  for (const auto& comp : compositions(n)) {
    value_t<S> prod = ells[comp[0]];
    for (std::size_t j = 1; j < comp.size() && !(prod == value_t<S>{}); ++j) prod = assoc(s, prod, ells[comp[j]]);
    out += composition_weight(comp) * prod;
  }
  return out;
}

/// sum over compositions of n of r^(ik)(a) * ... * r^(i1)(a), weighted.
template <DendriformStructure S>
value_t<S> theorem33_rhs_left(const S& s, const value_t<S>& a, int n) {
  if (n < 1) throw std::invalid_argument("theorem33 expansion needs n >= 1");
  const auto rs = r_powers(s, a, n);
  value_t<S> out;
  for (const auto& comp : compositions(n)) {
    value_t<S> prod = rs[comp.back()];
    for (std::size_t j = comp.size() - 1; j-- > 0 && !(prod == value_t<S>{});) prod = assoc(s, prod, rs[comp[j]]);
    out += composition_weight(comp) * prod;
  }
  return out;
}

/// For 1 <= m <= n: both expansions against the power sums, the opposite
/// structure transform relating them, and w_<(a) = -w_>=(-a).
template <DendriformStructure S>
Verdict check_theorem33(const S& s, const value_t<S>& a, int n) {
  Verdict v;
  const auto op = opposite(s);
  const value_t<S> minus_a = Scalar(-1) * a;
  const auto left = power_sums_left(s, a, n);
  const auto right = power_sums_right(s, a, n);
  const auto op_right = power_sums_right(op, minus_a, n);
  for (int m = 1; m <= n; ++m) {
    const auto rhs_left = theorem33_rhs_left(s, a, m);
    expect_equal(v, "w_≻^(n)(a) = Σ ℓ^(i1)*⋯*ℓ^(ik)/(i1(i1+i2)⋯)", right[m], theorem33_rhs_right(s, a, m));
    expect_equal(v, "w_≺^(n)(a) = Σ r^(ik)*⋯*r^(i1)/(i1(i1+i2)⋯)", left[m], rhs_left);
    expect_equal(v, "w_≺^(n)(a) = −w_⪰^(n)(−a)", left[m], Scalar(-1) * op_right[m]);
    expect_equal(v, "left expansion = −(right expansion in the opposite structure at −a)", rhs_left,
                 Scalar(-1) * theorem33_rhs_right(op, minus_a, m));
  }
  return v;
}

/// Gamma(D(Y)) = Y up to cap, where Y = sum t^n w_>^(n)(a) and D(Y) has
/// coefficients dynkin_w.
template <DendriformStructure S>
Verdict check_gamma_inverts_dynkin(const S& s, const value_t<S>& a, int cap) {
  Verdict v;
  std::vector<value_t<S>> dy(static_cast<std::size_t>(cap) + 1);
  for (int n = 1; n <= cap; ++n) dy[n] = dynkin_w(s, a, n);
  const Series<value_t<S>> y(power_sums_right(s, a, cap), cap);
  expect_equal(v, "Γ(D(Y)) = Y", gamma(s, Series<value_t<S>>(std::move(dy), cap)), y);
  return v;
}

template <class V>
std::string to_string(const Series<V>& f) {
  std::string out;
  for (int n = 0; n <= f.cap(); ++n) {
    if (f[n] == V{}) continue;
    if (!out.empty()) out += " + ";
    out += "t^" + std::to_string(n) + "·(" + to_string(f[n]) + ")";
  }
  return out.empty() ? "0" : out + " + O(t^" + std::to_string(f.cap() + 1) + ")";
}

// ---- Convolution on End(T(X)) ---------------------------------------------

/// A linear endomorphism of T(X), given by its values on words.
class GradedEndo {
 public:
  using WordMap = std::function<WordElem(const Word&)>;

  explicit GradedEndo(WordMap f) : f_(std::move(f)) {}

  WordElem operator()(const Word& w) const { return f_(w); }
  WordElem operator()(const WordElem& x) const { return x.map_linear(f_); }

  static GradedEndo identity();
  /// eta o epsilon: the unit of the convolution product.
  static GradedEndo counit_unit();
  /// D o p_n: the Dynkin operator on words of length n, zero elsewhere.
  static GradedEndo dynkin_component(int n);
  static GradedEndo dynkin_operator();

  friend GradedEndo operator+(const GradedEndo& f, const GradedEndo& g);
  friend GradedEndo operator*(const Scalar& c, const GradedEndo& f);

 private:
  WordMap f_;
};

/// (f star g)(w) = sum over the unshuffle coproduct of w of f(u) g(v),
/// the cocommutative coproduct of T(X).
GradedEndo convolve(const GradedEndo& f, const GradedEndo& g);

/// sum over compositions of n of (D_i1 star ... star D_ik)(x1...xn),
/// weighted by composition_weight.
WordElem dynkin_convolution_expansion(int n);

/// x1...xn = dynkin_convolution_expansion(n).
bool convolution_identity_check(int n);

/// Ordered set partitions (J1, ..., Jk) of {1..n} with |Jl| = comp[l].
std::vector<std::vector<std::vector<int>>> ordered_set_partitions(const Composition& comp);

/// sum over compositions and ordered set partitions of
/// D(J1) ... D(Jk) / (i1 (i1 + i2) ...), each D(J) on increasing letters.
WordElem max_ordered_partition_expansion(int n);

/// The MAX identities for a = x1 + ... + xm, 1 <= m <= n: w_>^(m)(a) =
/// x1...xm, the multilinear part of l^(i)(a) is the sum of D(J) over
/// i-subsets J, the multilinear part of the composition expansion is
/// x1...xm, and the ordered set partition sum is x1...xm.
Verdict check_max_multilinear(int n);

/// D star-composition identity on x1...xm for 1 <= m <= n, and the
/// convolution unit law on all words of length <= n over {1,2}.
Verdict check_convolution(int n);

// ---- Malvenuto-Reutenauer ------------------------------------------------

/// The iterated bracket [1,[2,...[n-1,n]...]] on letters, read as
/// permutations, then inverted.
PermElem mr_inverted_bracket(int n);

}  // namespace dendra
