#pragma once

// The symmetrized half-product identities specialized to a Rota-Baxter
// algebra (A, R) of weight theta:
//   sum_s R(... R(R(a_s1) a_s2) ...) a_sn = sum_s T_s   (plain structure)
//   sum_s a_s1 R(a_s2 ... R(a_s(n-1) R(a_sn)) ...) = sum_s U'_s   (primed)
// R applied to both sides, and for commutative carriers the classical
// Spitzer form
//   sum_s R(R(... R(a_s1) ...) a_sn)
//     = sum over set partitions pi of prod_{B in pi} (|B|-1)! R((-theta)^(|B|-1) prod_{i in B} a_i).

#include <span>
#include <vector>

#include "dendra/lyndon.hpp"
#include "dendra/structures/rota_baxter.hpp"

namespace dendra {

/// R(... R(R(a_s1) a_s2) ...) a_sn, computed in the carrier.
template <RotaBaxterAlgebra A>
typename A::carrier_type rb_left_nested(const A& alg, const Permutation& sigma,
                                        std::span<const typename A::carrier_type> args) {
  auto arg = [&](int i) -> const auto& { return args[static_cast<std::size_t>(sigma.at(i) - 1)]; };
  auto acc = arg(1);
  for (int i = 2; i <= sigma.size(); ++i) acc = alg.mul(alg.R(acc), arg(i));
  return acc;
}

/// a_s1 R(a_s2 R(... R(a_sn))), computed in the carrier.
template <RotaBaxterAlgebra A>
typename A::carrier_type rb_right_nested(const A& alg, const Permutation& sigma,
                                         std::span<const typename A::carrier_type> args) {
  auto arg = [&](int i) -> const auto& { return args[static_cast<std::size_t>(sigma.at(i) - 1)]; };
  const int n = sigma.size();
  auto acc = arg(n);
  for (int i = n - 1; i >= 1; --i) acc = alg.mul(arg(i), alg.R(acc));
  return acc;
}

template <class C>
std::vector<Augmented<C>> lift_all(std::span<const C> args) {
  std::vector<Augmented<C>> out;
  for (const auto& a : args) out.push_back(lift(a));
  return out;
}

/// Both carrier-level identities, and the pre-Lie products of the plain
/// and primed structures against [R(a), b] - theta ba and
/// [a, R(b)] - theta ba on every argument pair.
template <RotaBaxterAlgebra A>
Verdict check_rb_corollary(const A& alg, std::span<const typename A::carrier_type> args, int jobs = 1) {
  using C = typename A::carrier_type;
  using V = Augmented<C>;
  const int n = static_cast<int>(args.size());
  const RBDendriform<A> plain(alg, RBVariant::plain);
  const RBDendriform<A> primed(alg, RBVariant::primed);
  const auto lifted = lift_all(args);
  const std::span<const V> xs(lifted);
  Verdict v;
  const V lhs1 = lift(sum_over_permutations<C>(n, jobs, [&](const Permutation& p) { return rb_left_nested(alg, p, args); }));
  const V rhs1 = sum_over_permutations<V>(n, jobs, [&](const Permutation& p) { return t_sigma(plain, p, xs); });
  expect_equal(v, "Σ_σ R(⋯R(R(a_σ1)a_σ2)⋯)a_σn = Σ_σ T_σ", lhs1, rhs1);
  const V lhs2 = lift(sum_over_permutations<C>(n, jobs, [&](const Permutation& p) { return rb_right_nested(alg, p, args); }));
  const V rhs2 = sum_over_permutations<V>(n, jobs, [&](const Permutation& p) { return u_sigma(primed, p, xs); });
  expect_equal(v, "Σ_σ a_σ1 R(a_σ2 ⋯ R(a_σn)) = Σ_σ U′_σ", lhs2, rhs2);
  const Scalar theta = alg.theta();
  for (const auto& a : args) {
    for (const auto& b : args) {
      C expected = alg.mul(alg.R(a), b);
      expected -= alg.mul(b, alg.R(a));
      expected -= theta * alg.mul(b, a);
      expect_equal(v, "a ▷ b = [R(a),b] − θba", prelie_left(plain, lift(a), lift(b)), lift(expected));
      C expected_right = alg.mul(a, alg.R(b));
      expected_right -= alg.mul(alg.R(b), a);
      expected_right -= theta * alg.mul(b, a);
      expect_equal(v, "a ◁′ b = [a,R(b)] − θba", prelie_right(primed, lift(a), lift(b)), lift(expected_right));
    }
  }
  return v;
}

/// R applied to both sides of both identities; with a commutative
/// carrier also the classical Spitzer form over set partitions.
template <RotaBaxterAlgebra A>
Verdict check_rb_spitzer(const A& alg, std::span<const typename A::carrier_type> args, int jobs = 1) {
  using C = typename A::carrier_type;
  using V = Augmented<C>;
  const int n = static_cast<int>(args.size());
  const RBDendriform<A> plain(alg, RBVariant::plain);
  const RBDendriform<A> primed(alg, RBVariant::primed);
  const auto lifted = lift_all(args);
  const std::span<const V> xs(lifted);
  Verdict v;
  const C lhs1 = sum_over_permutations<C>(n, jobs, [&](const Permutation& p) { return alg.R(rb_left_nested(alg, p, args)); });
  const V rhs1 = sum_over_permutations<V>(n, jobs, [&](const Permutation& p) { return t_sigma(plain, p, xs); });
  expect_equal(v, "Σ_σ R(R(⋯R(a_σ1)⋯)a_σn) = R(Σ_σ T_σ)", lhs1, alg.R(rhs1.body));
  const C lhs2 = sum_over_permutations<C>(n, jobs, [&](const Permutation& p) { return alg.R(rb_right_nested(alg, p, args)); });
  const V rhs2 = sum_over_permutations<V>(n, jobs, [&](const Permutation& p) { return u_sigma(primed, p, xs); });
  expect_equal(v, "Σ_σ R(a_σ1 R(⋯R(a_σn))) = R(Σ_σ U′_σ)", lhs2, alg.R(rhs2.body));
  if (alg.commutative()) {
    const Scalar minus_theta = -alg.theta();
    C classical;
    for (const auto& blocks : set_partitions(n)) {
      C term;
      bool first = true;
      for (const auto& block : blocks) {
        C prod = args[static_cast<std::size_t>(block[0] - 1)];
        Scalar scale = factorial(static_cast<int>(block.size()) - 1);
        for (std::size_t j = 1; j < block.size(); ++j) {
          prod = alg.mul(prod, args[static_cast<std::size_t>(block[j] - 1)]);
          scale *= minus_theta;
        }
        const C factor = alg.R(scale * prod);
        term = first ? factor : alg.mul(term, factor);
        first = false;
      }
      classical += term;
    }
    expect_equal(v, "classical Spitzer: Σ_σ R(⋯R(a_σ1)⋯a_σn) = Σ_π Π_B (|B|−1)! R((−θ)^(|B|−1) Π_{i∈B} a_i)", lhs1,
                 classical);
  }
  return v;
}

}  // namespace dendra
