#include <doctest.h>

#include <random>
#include <set>

#include "dendra/elem.hpp"
#include "dendra/errors.hpp"
#include "dendra/permutation.hpp"
#include "dendra/scalar.hpp"
#include "dendra/series.hpp"
#include "dendra/structures/words.hpp"
#include "dendra/tensor.hpp"
#include "dendra/verdict.hpp"

using namespace dendra;

TEST_CASE("scalars parse and render as reduced fractions") {
  CHECK(to_string(parse_scalar("4/6")) == "2/3");
  CHECK(to_string(parse_scalar("-3")) == "-3");
  CHECK(to_string(parse_scalar("+0/5")) == "0");
  CHECK(parse_scalar("-1/2") == make_scalar(-1, 2));
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(8) == 40320);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, 5) == 0);
  CHECK(sign_power(3) == -1);
  CHECK(sign_power(0) == 1);
}

TEST_CASE("words concatenate and order by length first") {
  const Word u{1, 2};
  const Word v{3};
  CHECK(u + v == Word{1, 2, 3});
  CHECK(v < u);
  CHECK(Word{1, 3} > Word{1, 2});
  CHECK(render_key(Word{1, 2, 1}) == "x1.x2.x1");
  CHECK(render_key(Word{}) == "1");
  CHECK(is_multilinear(Word{2, 1, 3}));
  CHECK_FALSE(is_multilinear(Word{2, 1, 2}));
}

TEST_CASE("sparse linear combinations cancel exactly") {
  const WordElem a = letter(1) + Scalar(2) * word_elem(Word{2, 1});
  const WordElem b = a - a;
  CHECK(b.is_zero());
  CHECK(to_string(b) == "0");
  CHECK((Scalar(0) * a).is_zero());
  CHECK(a.coeff(Word{2, 1}) == 2);
  CHECK(a.coeff(Word{2}) == 0);
  WordElem c = a;
  c.add_term(Word{1}, -1);
  CHECK(c.size() == 1);
}

TEST_CASE("rendering omits unit coefficients and uses the minus sign") {
  WordElem x = letter(1);
  x.add_term(Word{1, 2}, make_scalar(-2, 3));
  x.add_term(Word{2, 1}, -1);
  x.add_term(Word{}, 3);
  CHECK(to_string(x) == "3 + x1 − 2/3·x1.x2 − x2.x1");
  CHECK(to_string(-letter(2)) == "−x2");
}

TEST_CASE("rendering truncates long elements") {
  WordElem x;
  for (int i = 1; i <= 25; ++i) x += letter(i);
  const std::string text = render_truncated(x, kReportTermLimit);
  CHECK(text.ends_with(" + 5 more"));
  CHECK(render_truncated(letter(1), 20) == "x1");
}

TEST_CASE("parser round-trips rendered elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    WordElem x = random_word_elem(rng, 3, 4);
    x.add_term(Word{}, random_scalar(rng));
    CHECK(parse_word_elem(to_string(x)) == x);
  }
  CHECK(parse_word_elem("x1 + 2·x2.x1") == letter(1) + Scalar(2) * word_elem(Word{2, 1}));
  CHECK(parse_word_elem("-1/2*x3 - x1.x1") == make_scalar(-1, 2) * letter(3) - word_elem(Word{1, 1}));
  CHECK(parse_word_elem("1") == word_elem(Word{}));
  CHECK_THROWS_AS(parse_word_elem("x1 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word_elem("y2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word_elem(""), std::invalid_argument);
}

TEST_CASE("concatenation and commutator") {
  const WordElem a = letter(1) + letter(2);
  CHECK(concat(a, letter(3)) == word_elem(Word{1, 3}) + word_elem(Word{2, 3}));
  CHECK(commutator(letter(1), letter(2)) == word_elem(Word{1, 2}) - word_elem(Word{2, 1}));
  CHECK(commutator(a, a).is_zero());
  CHECK(multilinear_part(concat(a, a)) == word_elem(Word{1, 2}) + word_elem(Word{2, 1}));
}

TEST_CASE("permutations validate, invert and parse") {
  CHECK_THROWS_AS(Permutation({1, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidPermutation);
  const Permutation s{3, 1, 2};
  CHECK(s.inverse() == Permutation{2, 3, 1});
  CHECK(s.compose(s.inverse()) == Permutation::identity(3));
  CHECK(Permutation::reversal(4) == Permutation{4, 3, 2, 1});
  CHECK(parse_permutation("3261457") == Permutation{3, 2, 6, 1, 4, 5, 7});
  CHECK(parse_permutation("10,2,3,4,5,6,7,8,9,1").at(1) == 10);
  CHECK_THROWS_AS(parse_permutation("3 3"), InvalidPermutation);
  CHECK(render_key(Permutation{1, 3, 2}) == "(1,3,2)");
  CHECK(render_key(Permutation{}) == "1");
}

TEST_CASE("all_permutations enumerates S_n lexicographically") {
  for (int n = 0; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    CHECK(Scalar(static_cast<long>(perms.size())) == factorial(n));
    CHECK(std::is_sorted(perms.begin(), perms.end()));
    CHECK(std::set<Permutation>(perms.begin(), perms.end()).size() == perms.size());
  }
}

TEST_CASE("series keep their cap and refuse to read beyond it") {
  const Series<WordElem> f({WordElem{}, letter(1), letter(2)}, 2);
  CHECK_THROWS_AS(f[3], std::out_of_range);
  CHECK(f.shifted().cap() == 3);
  CHECK(f.shifted()[2] == letter(1));
  CHECK(f.grading()[2] == Scalar(2) * letter(2));
  const Series<WordElem> g({letter(3)}, 1);
  CHECK((f + g).cap() == 1);
  CHECK_FALSE(f == f.truncated(1));
  CHECK_THROWS_AS(Series<WordElem>(-1), std::invalid_argument);
  const auto h = series_mul(f, f, [](const WordElem& x, const WordElem& y) { return concat(x, y); });
  CHECK(h[2] == word_elem(Word{1, 1}));
}

TEST_CASE("verdicts keep the first counterexample with its difference") {
  Verdict v;
  CHECK(expect_equal(v, "same", letter(1), letter(1)));
  CHECK_FALSE(expect_equal(v, "first", letter(1), letter(2)));
  CHECK_FALSE(expect_equal(v, "second", letter(3), letter(2)));
  CHECK(v.checks == 3);
  REQUIRE(v.failure);
  CHECK(v.failure->label == "first");
  CHECK(v.failure->diff == "x1 − x2");
  CHECK_FALSE(v.passed());
  CHECK_FALSE(Verdict{}.passed());
}
