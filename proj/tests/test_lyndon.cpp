#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "bracket_display.hpp"
#include "dendra/errors.hpp"
#include "dendra/lyndon.hpp"
#include "dendra/structures/mr.hpp"
#include "dendra/structures/trees.hpp"
#include "dendra/structures/words.hpp"

using namespace dendra;
using dendra::testing::display_terms;
using dendra::testing::read_bracket_monomial;
using dendra::testing::read_bracket_sum;

namespace {

bool less_in(Letter a, Letter b, LetterOrder order) { return order == LetterOrder::increasing ? a < b : a > b; }

bool lex_less(const std::vector<Letter>& u, const std::vector<Letter>& v, LetterOrder order) {
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(),
                                      [&](Letter a, Letter b) { return less_in(a, b, order); });
}

bool lyndon_by_suffixes(const std::vector<Letter>& w, LetterOrder order) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!lex_less(w, std::vector<Letter>(w.begin() + static_cast<long>(i), w.end()), order)) return false;
  }
  return true;
}

// The unique factorization into Lyndon words in non-increasing order, found
// by trying every cut pattern.
std::vector<Word> cfl_by_search(const std::vector<Letter>& w, LetterOrder order) {
  const std::size_t n = w.size();
  for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<std::vector<Letter>> parts(1);
    for (std::size_t i = 0; i < n; ++i) {
      parts.back().push_back(w[i]);
      if (i + 1 < n && ((cuts >> i) & 1u)) parts.emplace_back();
    }
    bool ok = std::all_of(parts.begin(), parts.end(), [&](const auto& p) { return lyndon_by_suffixes(p, order); });
    for (std::size_t i = 1; ok && i < parts.size(); ++i) ok = !lex_less(parts[i - 1], parts[i], order);
    if (ok) {
      std::vector<Word> out;
      for (auto& p : parts) out.emplace_back(p);
      return out;
    }
  }
  return {};
}

// Lengths of the runs started by left-to-right maxima.
Composition running_max_runs(const Permutation& s) {
  Composition out;
  int best = 0;
  for (int i = 1; i <= s.size(); ++i) {
    if (s.at(i) > best) {
      best = s.at(i);
      out.push_back(0);
    }
    ++out.back();
  }
  return out;
}

std::vector<WordElem> letters(int n) {
  std::vector<WordElem> out;
  for (int i = 1; i <= n; ++i) out.push_back(letter(i));
  return out;
}

}  // namespace

TEST_CASE("running-max and running-min statistics of 3261457") {
  const LyndonProfile p = profile(parse_permutation("3261457"));
  CHECK(p.E == std::vector<int>{2, 6});
  CHECK(p.F == std::vector<int>{4, 5, 6});
  CHECK(p.blocksE == Blocks{{3, 2}, {6, 1, 4, 5}, {7}});
  CHECK(p.blocksF == Blocks{{3, 2, 6, 1}, {4}, {5}, {7}});
  CHECK(p.lyndon_seq == Composition{2, 4, 1});
  CHECK(render_bars(p) == "(32|6145|7) (3261||4||5||7)");
}

TEST_CASE("statistics of the identity and the reversal") {
  for (int n = 1; n <= 6; ++n) {
    const LyndonProfile id = profile(Permutation::identity(n));
    CHECK(id.E.size() == static_cast<std::size_t>(n - 1));
    CHECK(id.lyndon_seq == Composition(static_cast<std::size_t>(n), 1));
    const LyndonProfile rev = profile(Permutation::reversal(n));
    CHECK(rev.E.empty());
    CHECK(rev.lyndon_seq == Composition{n});
    for (int k : id.E) CHECK((k >= 1 && k <= n - 1));
  }
}

TEST_CASE("Lyndon words and Duval factorization against exhaustive search") {
  for (const auto order : {LetterOrder::increasing, LetterOrder::decreasing}) {
    for (const auto& w : words_up_to(3, 6)) {
      if (w.empty()) continue;
      CHECK(is_lyndon(w, order) == lyndon_by_suffixes(w.letters(), order));
      CHECK(cfl_factorize(w, order) == cfl_by_search(w.letters(), order));
    }
  }
  CHECK(cfl_factorize(Word{}, LetterOrder::increasing).empty());
  CHECK(cfl_factorize(Word{3, 2, 6, 1, 4, 5, 7}, LetterOrder::decreasing) ==
        std::vector<Word>{Word{3, 2}, Word{6, 1, 4, 5}, Word{7}});
}

TEST_CASE("E-blocks are the decreasing-order Lyndon factorization") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : all_permutations(n)) {
      const auto factors = cfl_by_search(s.image(), LetterOrder::decreasing);
      Blocks expected;
      for (const auto& f : factors) expected.push_back(f.letters());
      CHECK(profile(s).blocksE == expected);
      CHECK(profile(s).lyndon_seq == running_max_runs(s));
    }
  }
}

TEST_CASE("block products of 3261457 in the shuffle structure") {
  const ShuffleStructure s(7);
  const auto a = letters(7);
  const std::span<const WordElem> args(a);
  const Permutation sigma = parse_permutation("3261457");
  const auto L = [&](const WordElem& x, const WordElem& y) { return prelie_left(s, x, y); };
  const auto Rr = [&](const WordElem& x, const WordElem& y) { return prelie_right(s, x, y); };
  const auto M = [&](const WordElem& x, const WordElem& y) { return assoc(s, x, y); };
  CHECK(t_sigma(s, sigma, args) == M(M(L(a[2], a[1]), L(L(L(a[5], a[0]), a[3]), a[4])), a[6]));
  CHECK(u_sigma(s, sigma, args) == M(M(M(Rr(a[2], Rr(a[1], Rr(a[5], a[0]))), a[3]), a[4]), a[6]));
}

TEST_CASE("two arguments: a1 > a2 + a2 > a1 = a1 * a2 + a2 |> a1") {
  const MalvenutoReutenauer s;
  const std::vector<PermElem> a{perm_elem(Permutation{1}), perm_elem(Permutation{2, 1})};
  const std::span<const PermElem> args(a);
  CHECK(t_sigma(s, Permutation{1, 2}, args) == assoc(s, a[0], a[1]));
  CHECK(t_sigma(s, Permutation{2, 1}, args) == prelie_left(s, a[1], a[0]));
  CHECK(succ(s, a[0], a[1]) + succ(s, a[1], a[0]) == assoc(s, a[0], a[1]) + prelie_left(s, a[1], a[0]));
  CHECK(theorem51_check(s, args).passed());
  CHECK_THROWS_AS(t_sigma(s, Permutation{1, 2, 3}, args), std::invalid_argument);
  const std::vector<PermElem> with_unit{s.unit(), a[0]};
  CHECK_THROWS_AS(t_sigma(s, Permutation{2, 1}, std::span<const PermElem>(with_unit)), UnitMisuse);
}

TEST_CASE("symmetrized half products over S_n") {
  const MalvenutoReutenauer mr;
  const FreeDendriform fr;
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 5; ++n) {
    std::vector<PermElem> pa;
    std::vector<TreeElem> ta;
    const int degree = n <= 3 ? 2 : 1;
    for (int i = 0; i < n; ++i) {
      pa.push_back(mr.random_element(rng, degree));
      ta.push_back(fr.random_element(rng, degree));
    }
    const Verdict v = theorem51_check(mr, std::span<const PermElem>(pa), {7, 2});
    CHECK(v.passed());
    CHECK(v.checks == 2);
    CHECK(theorem51_check(fr, std::span<const TreeElem>(ta)).passed());
  }
  const auto x = letters(8);
  CHECK_THROWS_AS(theorem51_check(ShuffleStructure(), std::span<const WordElem>(x)), BoundExceeded);
  CHECK_THROWS_AS(theorem51_check(ShuffleStructure(), std::span<const WordElem>()), EmptyArgumentList);
}

TEST_CASE("sums over S_n do not depend on the number of workers") {
  const MalvenutoReutenauer mr;
  const std::vector<PermElem> a{perm_elem(Permutation{1}), perm_elem(Permutation{1, 2}), perm_elem(Permutation{2, 1}),
                                perm_elem(Permutation{1})};
  const std::span<const PermElem> args(a);
  const auto f = [&](const Permutation& p) { return t_sigma(mr, p, args); };
  const PermElem one = sum_over_permutations<PermElem>(4, 1, f);
  for (int jobs : {2, 3, 7, 100}) CHECK(sum_over_permutations<PermElem>(4, jobs, f) == one);
}

TEST_CASE("MAX: the symmetrized left-nested sum collapses to x1...xn") {
  const MaxStructure s(5);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& beta : all_permutations(n)) {
      std::vector<WordElem> a;
      for (int i = 1; i <= n; ++i) a.push_back(letter(beta.at(i)));
      const std::span<const WordElem> args(a);
      WordElem lhs;
      for (const auto& sigma : all_permutations(n)) lhs += left_nested_succ(s, sigma, args);
      std::vector<Letter> id;
      for (int i = 1; i <= n; ++i) id.push_back(i);
      CHECK(lhs == word_elem(Word(id)));
    }
  }
}

TEST_CASE("right-hand sides are symmetric and the U/T duality holds") {
  const MalvenutoReutenauer mr;
  std::mt19937_64 rng(4);
  std::vector<PermElem> a;
  for (int i = 0; i < 4; ++i) a.push_back(mr.random_element(rng, 2));
  CHECK(check_rhs_symmetry(mr, std::span<const PermElem>(a)).passed());
  CHECK(check_ut_duality(mr, std::span<const PermElem>(a)).passed());
  CHECK(conjugate_by_reversal(Permutation{2, 3, 1}) == Permutation{3, 1, 2});
}

TEST_CASE("Lyn(beta) contains the identity and yields x1...xn") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Letter> id;
    for (int i = 1; i <= n; ++i) id.push_back(i);
    for (const auto& beta : all_permutations(n)) {
      const auto lyn = lyn_set(beta);
      CHECK(std::find(lyn.begin(), lyn.end(), Permutation::identity(n)) != lyn.end());
      CHECK(pbw_expansion(beta) == word_elem(Word(id)));
    }
    CHECK(lyn_set(Permutation::identity(n)) == std::vector<Permutation>{Permutation::identity(n)});
  }
}

TEST_CASE("bracket expansion of x1x2x3 over Lyn(321)") {
  const std::string display = "x3x2x1 + [x2,x3]x1 + x2[x1,x3] + x3[x1,x2] + [[x1,x2],x3]";
  const Permutation omega = Permutation::reversal(3);
  std::set<std::string> rendered;
  for (const auto& sigma : lyn_set(omega)) rendered.insert(render_bracket_product(pbw_blocks(omega, sigma)));
  const auto terms = display_terms(display);
  CHECK(rendered == std::set<std::string>(terms.begin(), terms.end()));
  CHECK(read_bracket_sum(display) == word_elem(Word{1, 2, 3}));
}

TEST_CASE("bracket expansion of x1x2x3x4 has fifteen terms") {
  const Permutation omega = Permutation::reversal(4);
  std::set<std::string> rendered;
  for (const auto& sigma : lyn_set(omega)) rendered.insert(render_bracket_product(pbw_blocks(omega, sigma)));
  CHECK(rendered.size() == 15);
  CHECK(rendered.count("[x2,x3][x1,x4]") == 1);
  WordElem sum;
  for (const auto& t : rendered) sum += read_bracket_monomial(t);
  CHECK(sum == word_elem(Word{1, 2, 3, 4}));
  // Without [x2,x3][x1,x4] the fourteen remaining terms fall short by it.
  CHECK(sum - read_bracket_monomial("[x2,x3][x1,x4]") != word_elem(Word{1, 2, 3, 4}));
}

TEST_CASE("set partitions with blocks by decreasing minimum give the same expansion") {
  const long bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) {
    CHECK(static_cast<long>(set_partitions(n).size()) == bell[n]);
    CHECK(static_cast<long>(dynkid_terms(n).size()) == bell[n]);
  }
  for (int n = 1; n <= 5; ++n) CHECK(dynkid_expansion(n) == pbw_expansion(Permutation::reversal(n)));
  for (int n = 1; n <= 4; ++n) {
    const Permutation omega = Permutation::reversal(n);
    std::set<std::string> from_lyn;
    for (const auto& sigma : lyn_set(omega)) from_lyn.insert(render_bracket_product(pbw_blocks(omega, sigma)));
    std::set<std::string> from_partitions;
    for (const auto& t : dynkid_terms(n)) from_partitions.insert(render_bracket_product(t));
    CHECK(from_lyn == from_partitions);
  }
}

TEST_CASE("census of Lyndon sequences") {
  const Census c3 = lyndon_census(3);
  REQUIRE(c3.rows.size() == 4);
  const std::map<Composition, long> expected{{{1, 1, 1}, 1}, {{2, 1}, 1}, {{1, 2}, 2}, {{3}, 2}};
  for (const auto& row : c3.rows) {
    CHECK(row.count == expected.at(row.composition));
    CHECK(Scalar(row.count) == row.expected);
  }
  CHECK(c3.total == 6);
  CHECK(c3.consistent());
  for (int n = 1; n <= 6; ++n) {
    std::map<Composition, long> counts;
    for (const auto& s : all_permutations(n)) ++counts[running_max_runs(s)];
    const Census c = lyndon_census(n, 8, 3);
    for (const auto& row : c.rows) CHECK(row.count == counts[row.composition]);
    CHECK(counts[{n}] * n == static_cast<long>(factorial(n).get_num().get_si()));
    CHECK(c.consistent());
  }
  CHECK_THROWS_AS(lyndon_census(9), BoundExceeded);
}
