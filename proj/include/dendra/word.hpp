#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace dendra {

using Letter = int;

/// A finite sequence of positive letter indices. The empty word is the unit
/// of the tensor algebra. Ordered length-first, then lexicographically.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Subword of letters [first, first + count).
  Word slice(std::size_t first, std::size_t count) const;

  friend Word operator+(const Word& u, const Word& v);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& u, const Word& v);

 private:
  std::vector<Letter> letters_;
};

/// "x1.x2.x1"; the empty word renders as "1".
std::string render_key(const Word& w);

/// True when no letter occurs twice.
bool is_multilinear(const Word& w);

}  // namespace dendra
