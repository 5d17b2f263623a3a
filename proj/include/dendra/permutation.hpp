#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "dendra/word.hpp"

namespace dendra {

/// A bijection of {1..n} in one-line notation (sigma_1, ..., sigma_n).
/// n = 0 is the empty permutation, the unit of the Malvenuto-Reutenauer
/// algebra. Ordered like words: length first, then lexicographically.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless the image covers {1..n} exactly.
  explicit Permutation(std::vector<int> image);
  Permutation(std::initializer_list<int> image);

  static Permutation identity(int n);
  /// omega = (n, n-1, ..., 1).
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(image_.size()); }
  bool empty() const { return image_.empty(); }
  /// 1-based: at(1) = sigma_1.
  int at(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Word as_word() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}
  friend Permutation permutation_unchecked(std::vector<int> image);

  std::vector<int> image_;
};

/// For internal producers that construct images which are bijections by
/// construction (shifted shuffles).
Permutation permutation_unchecked(std::vector<int> image);

/// "(1,3,2)"; the empty permutation renders as "1".
std::string render_key(const Permutation& p);

/// Parses one-line notation: "3261457", "3,2,6,1" or "3 2 6 1". Single
/// digits may be run together only when n <= 9.
Permutation parse_permutation(std::string_view text);

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace dendra
