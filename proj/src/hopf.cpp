#include "dendra/hopf.hpp"

#include <numeric>

#include "dendra/errors.hpp"

namespace dendra {

WordElem dynkin_word(const Word& w) {
  if (w.empty()) throw EmptyWord("the Dynkin operator is not defined on the empty word");
  WordElem acc = letter(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) acc = commutator(acc, letter(w[i]));
  return acc;
}

WordElem dynkin(const WordElem& x) { return x.map_linear(dynkin_word); }

std::vector<Composition> compositions(int n) {
  if (n < 1) throw std::invalid_argument("compositions need n >= 1");
  std::vector<Composition> out;
  Composition current;
  std::function<void(int)> extend = [&](int rest) {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      current.push_back(part);
      extend(rest - part);
      current.pop_back();
    }
  };
  extend(n);
  return out;
}

Scalar composition_weight(const Composition& c) {
  mpz_class denom = 1;
  int partial = 0;
  for (int part : c) {
    partial += part;
    denom *= partial;
  }
  return Scalar(mpz_class(1), denom);
}

std::string render_key(const WTensor& t) {
  auto factor = [](int m) { return m == 0 ? std::string("1") : "w(" + std::to_string(m) + ")"; };
  return factor(t.left) + "⊗" + factor(t.right);
}

WTensorElem w_coproduct(int n) {
  if (n < 0) throw std::invalid_argument("coproduct order must be >= 0");
  WTensorElem out;
  for (int m = 0; m <= n; ++m) out.add_term(WTensor{m, n - m}, 1);
  return out;
}

WTensorElem swap_factors(const WTensorElem& x) {
  WTensorElem out;
  for (const auto& [t, c] : x) out.add_term(WTensor{t.right, t.left}, c);
  return out;
}

// ---- GradedEndo -------------------------------------------------------------

GradedEndo GradedEndo::identity() {
  return GradedEndo([](const Word& w) { return word_elem(w); });
}

GradedEndo GradedEndo::counit_unit() {
  return GradedEndo([](const Word& w) { return w.empty() ? word_elem(Word{}) : WordElem{}; });
}

GradedEndo GradedEndo::dynkin_component(int n) {
  return GradedEndo([n](const Word& w) {
    return static_cast<int>(w.size()) == n && n > 0 ? dynkin_word(w) : WordElem{};
  });
}

GradedEndo GradedEndo::dynkin_operator() {
  return GradedEndo([](const Word& w) { return w.empty() ? WordElem{} : dynkin_word(w); });
}

GradedEndo operator+(const GradedEndo& f, const GradedEndo& g) {
  return GradedEndo([f, g](const Word& w) { return f(w) + g(w); });
}

GradedEndo operator*(const Scalar& c, const GradedEndo& f) {
  return GradedEndo([c, f](const Word& w) { return c * f(w); });
}

GradedEndo convolve(const GradedEndo& f, const GradedEndo& g) {
  return GradedEndo([f, g](const Word& w) {
    const std::size_t n = w.size();
    WordElem out;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      std::vector<Letter> u;
      std::vector<Letter> v;
      for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1UL ? u : v).push_back(w[i]);
      const WordElem fu = f(Word(std::move(u)));
      if (fu.is_zero()) continue;
      out += concat(fu, g(Word(std::move(v))));
    }
    return out;
  });
}

namespace {

Word first_letters(int n) {
  std::vector<Letter> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Word(std::move(v));
}

}  // namespace

WordElem dynkin_convolution_expansion(int n) {
  const Word w = first_letters(n);
  WordElem out;
  for (const auto& comp : compositions(n)) {
    GradedEndo f = GradedEndo::dynkin_component(comp[0]);
    for (std::size_t j = 1; j < comp.size(); ++j) f = convolve(f, GradedEndo::dynkin_component(comp[j]));
    out.add_scaled(f(w), composition_weight(comp));
  }
  return out;
}

bool convolution_identity_check(int n) { return dynkin_convolution_expansion(n) == word_elem(first_letters(n)); }

std::vector<std::vector<std::vector<int>>> ordered_set_partitions(const Composition& comp) {
  const int n = std::accumulate(comp.begin(), comp.end(), 0);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks(comp.size());
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  // Assign elements 1..n in order to blocks with remaining capacity.
  std::function<void(int)> place = [&](int x) {
    if (x > n) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < comp.size(); ++b) {
      if (static_cast<int>(blocks[b].size()) == comp[b]) continue;
      blocks[b].push_back(x);
      place(x + 1);
      blocks[b].pop_back();
    }
  };
  place(1);
  return out;
}

WordElem max_ordered_partition_expansion(int n) {
  WordElem out;
  for (const auto& comp : compositions(n)) {
    const Scalar weight = composition_weight(comp);
    for (const auto& blocks : ordered_set_partitions(comp)) {
      WordElem prod = word_elem(Word{});
      for (const auto& block : blocks) prod = concat(prod, dynkin_word(Word(block)));
      out.add_scaled(prod, weight);
    }
  }
  return out;
}

Verdict check_max_multilinear(int n) {
  Verdict v;
  for (int m = 1; m <= n; ++m) {
    const MaxStructure s(m);
    WordElem a;
    for (int i = 1; i <= m; ++i) a += letter(i);
    const WordElem target = word_elem(first_letters(m));
    expect_equal(v, "MAX: w_≻^(n)(x1+⋯+xn) = x1⋯xn", w_right(s, a, m), target);
    const auto ells = ell_powers(s, a, m);
    for (int i = 1; i <= m; ++i) {
      WordElem subsets;
      for (const auto& blocks : ordered_set_partitions({i, m - i})) subsets += dynkin_word(Word(blocks[0]));
      expect_equal(v, "MAX: mℓ^(i)(a) = Σ_{|J|=i} D(J)", multilinear_part(ells[i]), subsets);
    }
    expect_equal(v, "MAX: multilinear part of Σ ℓ^(i1)*⋯*ℓ^(ik)/(i1(i1+i2)⋯) = x1⋯xn",
                 multilinear_part(theorem33_rhs_right(s, a, m)), target);
    expect_equal(v, "x1⋯xn = Σ D(J1)⋯D(Jk)/(i1(i1+i2)⋯) over ordered set partitions",
                 max_ordered_partition_expansion(m), target);
  }
  return v;
}

Verdict check_convolution(int n) {
  Verdict v;
  for (int m = 1; m <= n; ++m) {
    expect_equal(v, "x1⋯xn = Σ (D_i1 ⋆ ⋯ ⋆ D_ik)(x1⋯xn)/(i1(i1+i2)⋯)", dynkin_convolution_expansion(m),
                 word_elem(first_letters(m)));
  }
  const GradedEndo d = GradedEndo::dynkin_operator();
  const GradedEndo left = convolve(d, GradedEndo::counit_unit());
  const GradedEndo right = convolve(GradedEndo::counit_unit(), d);
  for (const auto& w : words_up_to(2, n)) {
    expect_equal(v, "f ⋆ ηε = f", left(w), d(w));
    expect_equal(v, "ηε ⋆ f = f", right(w), d(w));
  }
  return v;
}

PermElem mr_inverted_bracket(int n) {
  if (n < 1) throw std::invalid_argument("bracket needs n >= 1");
  WordElem acc = letter(n);
  for (int i = n - 1; i >= 1; --i) acc = commutator(letter(i), acc);
  PermElem out;
  for (const auto& [w, c] : acc) out.add_term(Permutation(w.letters()).inverse(), c);
  return out;
}

}  // namespace dendra
