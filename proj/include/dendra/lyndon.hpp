#pragma once

// Lyndon combinatorics of permutations: the running-max and running-min
// statistics, the block products T_sigma and U_sigma, the symmetrized
// half-product identities summed over S_n, Lyn(beta) and the induced
// expansion of x1...xn, and the census of Lyndon sequences.

#include <algorithm>
#include <future>
#include <map>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "dendra/dendriform.hpp"
#include "dendra/errors.hpp"
#include "dendra/hopf.hpp"
#include "dendra/permutation.hpp"
#include "dendra/structures/words.hpp"

namespace dendra {

using Blocks = std::vector<std::vector<int>>;

struct LyndonProfile {
  Permutation sigma;
  /// k in E iff sigma_{k+1} exceeds sigma_1..sigma_k; subset of 1..n-1.
  std::vector<int> E;
  /// l in F iff sigma_l is below sigma_{l+1}..sigma_n; subset of 1..n-1.
  std::vector<int> F;
  /// Values of sigma cut after each element of E (resp. F).
  Blocks blocksE;
  Blocks blocksF;
  /// Block lengths of blocksE.
  Composition lyndon_seq;
};

LyndonProfile profile(const Permutation& sigma);

/// "(32|6145|7)" for E and "(3261||4||5||7)" for F.
std::string render_bars(const LyndonProfile& p);

// ---- Lyndon words ---------------------------------------------------------

/// Strictly smaller than each proper right factor under `order`.
bool is_lyndon(const Word& w, LetterOrder order);

/// The Chen-Fox-Lyndon factorization w = l1 ... lk with l1 >= ... >= lk
/// (Duval's algorithm). The empty word has the empty factorization.
std::vector<Word> cfl_factorize(const Word& w, LetterOrder order);

// ---- Block products -------------------------------------------------------

namespace detail {

template <DendriformStructure S>
std::vector<value_t<S>> pick(std::span<const value_t<S>> args, const std::vector<int>& indices) {
  std::vector<value_t<S>> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(args[static_cast<std::size_t>(i - 1)]);
  return out;
}

template <DendriformStructure S>
void require_arity(std::span<const value_t<S>> args, const Permutation& sigma) {
  if (static_cast<int>(args.size()) != sigma.size()) {
    throw std::invalid_argument("permutation size " + std::to_string(sigma.size()) + " but " +
                                std::to_string(args.size()) + " arguments");
  }
}

}  // namespace detail

/// l-products of the E-blocks joined by *.
template <DendriformStructure S>
value_t<S> t_sigma(const S& s, const Permutation& sigma, std::span<const value_t<S>> args) {
  detail::require_arity<S>(args, sigma);
  const LyndonProfile p = profile(sigma);
  value_t<S> out = s.unit();
  for (const auto& block : p.blocksE) {
    const auto picked = detail::pick<S>(args, block);
    out = assoc(s, out, ell(s, std::span<const value_t<S>>(picked)));
  }
  return out;
}

/// r-products of the F-blocks joined by *.
template <DendriformStructure S>
value_t<S> u_sigma(const S& s, const Permutation& sigma, std::span<const value_t<S>> args) {
  detail::require_arity<S>(args, sigma);
  const LyndonProfile p = profile(sigma);
  value_t<S> out = s.unit();
  for (const auto& block : p.blocksF) {
    const auto picked = detail::pick<S>(args, block);
    out = assoc(s, out, r(s, std::span<const value_t<S>>(picked)));
  }
  return out;
}

/// (...(a_s1 > a_s2) > ...) > a_sn.
template <DendriformStructure S>
value_t<S> left_nested_succ(const S& s, const Permutation& sigma, std::span<const value_t<S>> args) {
  detail::require_arity<S>(args, sigma);
  value_t<S> acc = args[static_cast<std::size_t>(sigma.at(1) - 1)];
  for (int i = 2; i <= sigma.size(); ++i) acc = succ(s, acc, args[static_cast<std::size_t>(sigma.at(i) - 1)]);
  return acc;
}

/// a_s1 < (... (a_s(n-1) < a_sn)...).
template <DendriformStructure S>
value_t<S> right_nested_prec(const S& s, const Permutation& sigma, std::span<const value_t<S>> args) {
  detail::require_arity<S>(args, sigma);
  const int n = sigma.size();
  value_t<S> acc = args[static_cast<std::size_t>(sigma.at(n) - 1)];
  for (int i = n - 1; i >= 1; --i) acc = prec(s, args[static_cast<std::size_t>(sigma.at(i) - 1)], acc);
  return acc;
}

/// Sums f(sigma) over S_n, splitting the permutations across `jobs`
/// workers. Partial sums are exact, so the result does not depend on the
/// split.
template <class V, class F>
V sum_over_permutations(int n, int jobs, F&& f) {
  const auto perms = all_permutations(n);
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, perms.size());
  auto partial = [&](std::size_t w) {
    V acc{};
    for (std::size_t i = w; i < perms.size(); i += workers) acc += f(perms[i]);
    return acc;
  };
  if (workers == 1) return partial(0);
  std::vector<std::future<V>> futures;
  for (std::size_t w = 0; w < workers; ++w) futures.push_back(std::async(std::launch::async, partial, w));
  V total{};
  for (auto& fu : futures) total += fu.get();
  return total;
}

struct Theorem51Options {
  int bound = 7;
  int jobs = 1;
};

/// sum_sigma (...(a_s1 > a_s2)...) > a_sn = sum_sigma T_sigma and
/// sum_sigma a_s1 < (... < a_sn) = sum_sigma U_sigma, each by full
/// expansion over S_n. Exactly two checks. Throws BoundExceeded when n is
/// above the bound.
template <DendriformStructure S>
Verdict theorem51_check(const S& s, std::span<const value_t<S>> args, Theorem51Options opt = {}) {
  const int n = static_cast<int>(args.size());
  if (n < 1) throw EmptyArgumentList("theorem51 needs at least one argument");
  if (n > opt.bound) {
    throw BoundExceeded("n = " + std::to_string(n) + " above the bound " + std::to_string(opt.bound));
  }
  using V = value_t<S>;
  Verdict v;
  expect_equal(v, "Σ_σ (⋯(a_σ1 ≻ a_σ2) ≻ ⋯) ≻ a_σn = Σ_σ T_σ",
               sum_over_permutations<V>(n, opt.jobs, [&](const Permutation& p) { return left_nested_succ(s, p, args); }),
               sum_over_permutations<V>(n, opt.jobs, [&](const Permutation& p) { return t_sigma(s, p, args); }));
  expect_equal(v, "Σ_σ a_σ1 ≺ (⋯ ≺ a_σn) = Σ_σ U_σ",
               sum_over_permutations<V>(n, opt.jobs, [&](const Permutation& p) { return right_nested_prec(s, p, args); }),
               sum_over_permutations<V>(n, opt.jobs, [&](const Permutation& p) { return u_sigma(s, p, args); }));
  return v;
}

/// (omega sigma omega)(i) = n + 1 - sigma(n + 1 - i).
Permutation conjugate_by_reversal(const Permutation& sigma);

/// U_sigma(a1..an) = (-1)^(n-1) T^op_{omega sigma omega}(an..a1) for every
/// sigma in S_n, T^op computed in the opposite structure.
template <DendriformStructure S>
Verdict check_ut_duality(const S& s, std::span<const value_t<S>> args) {
  Verdict v;
  const int n = static_cast<int>(args.size());
  const auto op = opposite(s);
  std::vector<value_t<S>> reversed(args.rbegin(), args.rend());
  for (const auto& sigma : all_permutations(n)) {
    expect_equal(v, "U_σ(a1,…,an) = (−1)^(n−1) T^⪰_{ωσω}(an,…,a1)", u_sigma(s, sigma, args),
                 Scalar(sign_power(n - 1)) *
                     t_sigma(op, conjugate_by_reversal(sigma), std::span<const value_t<S>>(reversed)));
  }
  return v;
}

/// sum_sigma T_sigma and sum_sigma U_sigma are unchanged when the
/// arguments are permuted, for every permutation of the arguments.
template <DendriformStructure S>
Verdict check_rhs_symmetry(const S& s, std::span<const value_t<S>> args) {
  Verdict v;
  using V = value_t<S>;
  const int n = static_cast<int>(args.size());
  auto sums = [&](std::span<const V> xs) {
    return std::pair{sum_over_permutations<V>(n, 1, [&](const Permutation& p) { return t_sigma(s, p, xs); }),
                     sum_over_permutations<V>(n, 1, [&](const Permutation& p) { return u_sigma(s, p, xs); })};
  };
  const auto base = sums(args);
  for (const auto& tau : all_permutations(n)) {
    const auto permuted = detail::pick<S>(args, tau.image());
    const auto moved = sums(std::span<const V>(permuted));
    expect_equal(v, "Σ_σ T_σ symmetric in its arguments", moved.first, base.first);
    expect_equal(v, "Σ_σ U_σ symmetric in its arguments", moved.second, base.second);
  }
  return v;
}

// ---- Lyn(beta) and the induced expansions ---------------------------------

/// sigma such that beta o sigma increases inside every block of the
/// decreasing-order Lyndon factorization of sigma.
std::vector<Permutation> lyn_set(const Permutation& beta);

/// The letters x_{beta(sigma(j))} of each block, one word per block.
std::vector<Word> pbw_blocks(const Permutation& beta, const Permutation& sigma);

/// sum over Lyn(beta) of D(beta(l1)) ... D(beta(lk)).
WordElem pbw_expansion(const Permutation& beta);

/// "[x2,x3]x1"-style rendering of one product of Dynkin brackets.
std::string render_bracket_product(const std::vector<Word>& blocks);

/// All set partitions of {1..n}, blocks increasing, blocks listed by
/// increasing minimum.
std::vector<Blocks> set_partitions(int n);

/// The expansion for beta = omega read as a sum over set partitions of
/// {1..n}: each block contributes D of its increasing letters, and blocks
/// appear in order of decreasing minimum. The all-singleton partition
/// gives x_n ... x_1.
WordElem dynkid_expansion(int n);

/// Same terms as dynkid_expansion, one bracket product per set partition,
/// in the order the blocks are multiplied.
std::vector<std::vector<Word>> dynkid_terms(int n);

// ---- Census ---------------------------------------------------------------

struct CensusRow {
  Composition composition;
  long count = 0;
  Scalar expected;
};

struct Census {
  int n = 0;
  std::vector<CensusRow> rows;
  long total = 0;
  bool consistent() const;
};

/// Groups S_n by Lyndon sequence and compares each count to
/// n! / (i1 (i1 + i2) ... (i1 + ... + ik)). Rows follow the lexicographic
/// order of compositions. Throws BoundExceeded for n above `bound`.
Census lyndon_census(int n, int bound = 8, int jobs = 1);

}  // namespace dendra
