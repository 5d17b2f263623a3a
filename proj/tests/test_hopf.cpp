#include <doctest.h>

#include "dendra/errors.hpp"
#include "dendra/hopf.hpp"
#include "dendra/structures/mr.hpp"
#include "dendra/structures/rota_baxter.hpp"
#include "dendra/structures/trees.hpp"
#include "dendra/structures/words.hpp"
#include "dendra/tensor.hpp"

using namespace dendra;

namespace {

WordElem bracket_fold(const Word& w) {
  WordElem acc = letter(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) acc = commutator(acc, letter(w[i]));
  return acc;
}

Word identity_word(int n) {
  std::vector<Letter> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return Word(v);
}

// Convolution through the deconcatenation coproduct, for comparison.
GradedEndo deconcatenation_convolve(const GradedEndo& f, const GradedEndo& g) {
  return GradedEndo([f, g](const Word& w) {
    WordElem out;
    for (std::size_t i = 0; i <= w.size(); ++i) out += concat(f(w.slice(0, i)), g(w.slice(i, w.size() - i)));
    return out;
  });
}

}  // namespace

TEST_CASE("Dynkin operator is the left-to-right iterated bracket") {
  CHECK(dynkin_word(Word{1}) == letter(1));
  CHECK(dynkin_word(Word{1, 2}) == word_elem(Word{1, 2}) - word_elem(Word{2, 1}));
  for (const auto& w : words_up_to(3, 4)) {
    if (w.empty()) continue;
    CHECK(dynkin_word(w) == bracket_fold(w));
  }
  CHECK_THROWS_AS(dynkin_word(Word{}), EmptyWord);
  CHECK(dynkin(word_elem(Word{1, 1})).is_zero());
}

TEST_CASE("D o D = n D on words of length n <= 5") {
  for (const auto& w : words_up_to(3, 5)) {
    if (w.empty()) continue;
    const WordElem d = dynkin_word(w);
    CHECK(dynkin(d) == Scalar(static_cast<long>(w.size())) * d);
  }
}

TEST_CASE("coproduct of the power sums") {
  CHECK(w_coproduct(1) == WTensorElem(WTensor{1, 0}) + WTensorElem(WTensor{0, 1}));
  CHECK(w_coproduct(2) == WTensorElem(WTensor{2, 0}) + WTensorElem(WTensor{0, 2}) + WTensorElem(WTensor{1, 1}));
  for (int n = 0; n <= 6; ++n) {
    CHECK(swap_factors(w_coproduct(n)) == w_coproduct(n));
    CHECK(w_coproduct(n).size() == static_cast<std::size_t>(n + 1));
  }
  CHECK(render_key(WTensor{2, 0}) == "w(2)⊗1");
  CHECK_THROWS_AS(w_coproduct(-1), std::invalid_argument);
}

TEST_CASE("antipode of the power sums") {
  const ShuffleStructure s;
  const WordElem a = letter(1);
  CHECK(w_antipode(s, a, 0) == s.unit());
  CHECK(w_antipode(s, a, 1) == -a);
  for (int n = 1; n <= 5; ++n) {
    CHECK(check_w_antipode(s, a, n).passed());
    WordElem sum;
    for (int p = 0; p <= n; ++p) sum += assoc(s, w_antipode(s, a, p), w_right(s, a, n - p));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("D of the right power sums equals the left-nested pre-Lie powers") {
  const MalvenutoReutenauer mr;
  const PermElem one = perm_elem(Permutation{1});
  CHECK(dynkin_w(mr, one, 1) == one);
  CHECK(dynkin_w(mr, one, 2) == prelie_left(mr, one, one));
  const FreeDendriform fr;
  const MaxStructure mx(3);
  const SeqMatRB rb(SeqMatAlgebra(4, 2, make_scalar(2, 3)), RBVariant::plain);
  std::mt19937_64 rng(5);
  const auto b = rb.random_element(rng, 1);
  for (int n = 1; n <= 5; ++n) {
    CHECK(dynkin_w(mr, one, n) == ell_power(mr, one, n));
    CHECK(dynkin_w(fr, fr.generator(), n) == ell_power(fr, fr.generator(), n));
    CHECK(dynkin_w(mx, letter(1) + letter(2), n) == ell_power(mx, letter(1) + letter(2), n));
    CHECK(dynkin_w(rb, b, n) == ell_power(rb, b, n));
  }
  CHECK(check_lemma_dynkin(mr, one, 5).passed());
  CHECK_THROWS_AS(dynkin_w(mr, one, 0), std::invalid_argument);
}

TEST_CASE("compositions in lexicographic order with their weights") {
  const auto c = compositions(3);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == Composition{1, 1, 1});
  CHECK(c[1] == Composition{1, 2});
  CHECK(c[2] == Composition{2, 1});
  CHECK(c[3] == Composition{3});
  CHECK(composition_weight({1, 2}) == make_scalar(1, 3));
  CHECK(composition_weight({2, 1}) == make_scalar(1, 6));
  for (int n = 1; n <= 8; ++n) CHECK(compositions(n).size() == (1u << (n - 1)));
}

TEST_CASE("Gamma on explicit series") {
  const MaxStructure s(3);
  const Series<WordElem> h1({WordElem{}, letter(1)}, 4);
  const auto g = gamma(s, h1);
  for (int n = 1; n <= 4; ++n) {
    CHECK(g[n] == Scalar(1) / factorial(n) * word_elem(Word(std::vector<Letter>(static_cast<std::size_t>(n), 1))));
  }
  const Series<WordElem> h({WordElem{}, letter(1), letter(2)}, 2);
  CHECK(gamma(s, h)[2] == make_scalar(1, 2) * letter(2) + make_scalar(1, 2) * word_elem(Word{1, 1}));
  CHECK_THROWS_AS(gamma(s, h, 3), BoundExceeded);
  CHECK(check_gamma_inverts_dynkin(ShuffleStructure(), letter(1), 5).passed());
  CHECK(check_gamma_inverts_dynkin(MalvenutoReutenauer(), perm_elem(Permutation{1}), 5).passed());
}

TEST_CASE("power sums as composition sums") {
  const ShuffleStructure sh;
  const WordElem a = letter(1) + letter(2);
  CHECK(theorem33_rhs_right(sh, a, 2) ==
        make_scalar(1, 2) * ell_power(sh, a, 2) + make_scalar(1, 2) * assoc(sh, a, a));
  CHECK(theorem33_rhs_right(sh, a, 2) == w_right(sh, a, 2));
  const MalvenutoReutenauer mr;
  const FreeDendriform fr;
  for (int n = 1; n <= 6; ++n) {
    CHECK(check_theorem33(mr, perm_elem(Permutation{1}), n).passed());
    CHECK(check_theorem33(fr, fr.generator(), n).passed());
  }
  CHECK(check_theorem33(MaxStructure(3), letter(1) + letter(2) + letter(3), 6).passed());
}

TEST_CASE("MAX multilinear identity over ordered set partitions") {
  CHECK(ordered_set_partitions({1, 2}).size() == 3);
  CHECK(ordered_set_partitions({2, 2}).size() == 6);
  CHECK(ordered_set_partitions({2, 1, 1}).size() == 12);
  for (int n = 1; n <= 5; ++n) CHECK(max_ordered_partition_expansion(n) == word_elem(identity_word(n)));
  CHECK(check_max_multilinear(5).passed());
}

TEST_CASE("convolution identity with the unshuffle coproduct") {
  const GradedEndo d1 = GradedEndo::dynkin_component(1);
  const GradedEndo d2 = GradedEndo::dynkin_component(2);
  const GradedEndo lhs = make_scalar(1, 2) * d2 + make_scalar(1, 2) * convolve(d1, d1);
  CHECK(lhs(Word{1, 2}) == word_elem(Word{1, 2}));
  for (int n = 1; n <= 5; ++n) {
    CHECK(dynkin_convolution_expansion(n) == word_elem(identity_word(n)));
    CHECK(convolution_identity_check(n));
  }
  CHECK(check_convolution(5).passed());
}

TEST_CASE("the deconcatenation coproduct does not give the identity") {
  const GradedEndo d1 = GradedEndo::dynkin_component(1);
  const GradedEndo d2 = GradedEndo::dynkin_component(2);
  const GradedEndo lhs = make_scalar(1, 2) * d2 + make_scalar(1, 2) * deconcatenation_convolve(d1, d1);
  CHECK(lhs(Word{1, 2}) == word_elem(Word{1, 2}) - make_scalar(1, 2) * word_elem(Word{2, 1}));
}

TEST_CASE("convolution unit") {
  const GradedEndo d = GradedEndo::dynkin_operator();
  const GradedEndo e = GradedEndo::counit_unit();
  for (const auto& w : words_up_to(2, 4)) {
    CHECK(convolve(d, e)(w) == d(w));
    CHECK(convolve(e, d)(w) == d(w));
    CHECK(convolve(GradedEndo::identity(), e)(w) == word_elem(w));
  }
}

TEST_CASE("MR: right-nested powers of (1) are the inverted iterated bracket") {
  const MalvenutoReutenauer mr;
  const PermElem one = perm_elem(Permutation{1});
  CHECK(mr_inverted_bracket(2) == perm_elem(Permutation{1, 2}) - perm_elem(Permutation{2, 1}));
  for (int n = 1; n <= 5; ++n) CHECK(r_power(mr, one, n) == mr_inverted_bracket(n));
}

TEST_CASE("series rendering") {
  const Series<WordElem> f({WordElem{}, letter(1), WordElem{}}, 2);
  CHECK(to_string(f) == "t^1·(x1) + O(t^3)");
  CHECK(to_string(Series<WordElem>(1)) == "0");
}
