#include "dendra/structures/words.hpp"

#include <algorithm>

#include "dendra/structures/ree.hpp"

namespace dendra {

std::vector<Word> words_up_to(int alphabet_size, int max_length) {
  std::vector<Word> out;
  std::vector<std::vector<Letter>> layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (Letter l = 1; l <= alphabet_size; ++l) {
        auto v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    }
    for (const auto& w : next) out.emplace_back(w);
    layer = std::move(next);
  }
  return out;
}

WordElem random_word_elem(std::mt19937_64& rng, int alphabet_size, int max_length) {
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> length(1, std::max(1, max_length));
  std::uniform_int_distribution<Letter> letter(1, alphabet_size);
  WordElem out;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<Letter> w(static_cast<std::size_t>(length(rng)));
    for (auto& l : w) l = letter(rng);
    out.add_term(Word(std::move(w)), random_scalar(rng));
  }
  if (out.is_zero()) out.add_term(Word{1}, 1);
  return out;
}

namespace {

std::vector<Graded<WordElem>> word_basis(int alphabet_size, int max_degree) {
  std::vector<Graded<WordElem>> out;
  for (auto& w : words_up_to(alphabet_size, max_degree)) {
    const int d = static_cast<int>(w.size());
    out.push_back({WordElem(std::move(w)), d});
  }
  return out;
}

template <class WordProduct>
WordElem word_bilinear(const WordElem& a, const WordElem& b, WordProduct&& product) {
  WordElem out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      product(u, v, Scalar(cu * cv), out);
    }
  }
  return out;
}

}  // namespace

WordElem ShuffleStructure::prec(const WordElem& a, const WordElem& b) const {
  return word_bilinear(a, b, [](const Word& u, const Word& v, const Scalar& c, WordElem& out) {
    std::vector<int> prefix;
    auto emit = [&](const std::vector<int>& w) { out.add_term(Word(w), c); };
    detail::ree_prec(prefix, u.letters(), v.letters(), emit);
  });
}

WordElem ShuffleStructure::succ(const WordElem& a, const WordElem& b) const {
  return word_bilinear(a, b, [](const Word& u, const Word& v, const Scalar& c, WordElem& out) {
    std::vector<int> prefix;
    auto emit = [&](const std::vector<int>& w) { out.add_term(Word(w), c); };
    detail::ree_succ(prefix, u.letters(), v.letters(), emit);
  });
}

std::vector<Graded<WordElem>> ShuffleStructure::basis(int max_degree) const {
  return word_basis(alphabet_size_, max_degree);
}

Letter MaxStructure::max_letter(const Word& w) const {
  Letter best = w.front();
  for (Letter l : w) {
    if (below(best, l)) best = l;
  }
  return best;
}

WordElem MaxStructure::prec(const WordElem& a, const WordElem& b) const {
  return word_bilinear(a, b, [this](const Word& u, const Word& v, const Scalar& c, WordElem& out) {
    if (!below(max_letter(u), max_letter(v))) out.add_term(u + v, c);
  });
}

WordElem MaxStructure::succ(const WordElem& a, const WordElem& b) const {
  return word_bilinear(a, b, [this](const Word& u, const Word& v, const Scalar& c, WordElem& out) {
    if (below(max_letter(u), max_letter(v))) out.add_term(u + v, c);
  });
}

std::vector<Graded<WordElem>> MaxStructure::basis(int max_degree) const {
  return word_basis(alphabet_size_, max_degree);
}

}  // namespace dendra
