#pragma once

// Dendriform structures on the tensor algebra T(X) over the ordered
// alphabet X = {x_1, ..., x_m}: the shuffle structure (Ree's splitting of
// the shuffle product) and the MAX structure (splitting of concatenation
// by the largest letter).

#include <random>
#include <string>
#include <vector>

#include "dendra/dendriform.hpp"
#include "dendra/structures/keyed.hpp"
#include "dendra/tensor.hpp"

namespace dendra {

enum class LetterOrder { increasing, decreasing };

/// All words of length 1..max_length over {1..alphabet_size}, in key order.
std::vector<Word> words_up_to(int alphabet_size, int max_length);

/// A random unit-free combination of up to three words of length
/// 1..max_length.
WordElem random_word_elem(std::mt19937_64& rng, int alphabet_size, int max_length);

class ShuffleStructure : public KeyedUnit<Word> {
 public:
  explicit ShuffleStructure(int alphabet_size = 3) : alphabet_size_(alphabet_size) {}

  std::string name() const { return "shuffle"; }
  int alphabet_size() const { return alphabet_size_; }

  WordElem prec(const WordElem& a, const WordElem& b) const;
  WordElem succ(const WordElem& a, const WordElem& b) const;

  std::vector<Graded<WordElem>> basis(int max_degree) const;
  WordElem random_element(std::mt19937_64& rng, int max_degree) const {
    return random_word_elem(rng, alphabet_size_, max_degree);
  }

 private:
  int alphabet_size_;
};

/// u > v = uv if max(u) < max(v), else 0; u < v = uv if max(u) >= max(v),
/// else 0. The comparison follows `order`: decreasing reverses the
/// alphabet, so the "largest" letter of a word is its smallest index.
class MaxStructure : public KeyedUnit<Word> {
 public:
  explicit MaxStructure(int alphabet_size = 3, LetterOrder order = LetterOrder::increasing)
      : alphabet_size_(alphabet_size), order_(order) {}

  std::string name() const { return order_ == LetterOrder::increasing ? "max" : "max-rev"; }
  int alphabet_size() const { return alphabet_size_; }
  LetterOrder order() const { return order_; }

  /// Largest letter of a nonempty word under the registered order.
  Letter max_letter(const Word& w) const;
  /// a strictly below b in the registered order.
  bool below(Letter a, Letter b) const { return order_ == LetterOrder::increasing ? a < b : a > b; }

  WordElem prec(const WordElem& a, const WordElem& b) const;
  WordElem succ(const WordElem& a, const WordElem& b) const;

  std::vector<Graded<WordElem>> basis(int max_degree) const;
  WordElem random_element(std::mt19937_64& rng, int max_degree) const {
    return random_word_elem(rng, alphabet_size_, max_degree);
  }

 private:
  int alphabet_size_;
  LetterOrder order_;
};

}  // namespace dendra
