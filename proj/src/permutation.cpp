#include "dendra/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "dendra/errors.hpp"

namespace dendra {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n) throw InvalidPermutation("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[v]) throw InvalidPermutation("value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> image) : Permutation(std::vector<int>(image)) {}

Permutation permutation_unchecked(std::vector<int> image) {
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return permutation_unchecked(std::move(v));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return permutation_unchecked(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= size(); ++i) inv[at(i) - 1] = i;
  return permutation_unchecked(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw InvalidPermutation("composing permutations of different sizes");
  std::vector<int> out(image_.size());
  for (int i = 1; i <= size(); ++i) out[i - 1] = at(other.at(i));
  return permutation_unchecked(std::move(out));
}

Word Permutation::as_word() const { return Word(image_); }

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.image_.size() <=> b.image_.size(); c != 0) return c;
  return a.image_ <=> b.image_;
}

std::string render_key(const Permutation& p) {
  if (p.empty()) return "1";
  std::string out = "(";
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p.at(i));
  }
  return out + ")";
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> image;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) {
      image.push_back(std::stoi(digits));
      digits.clear();
    }
  };
  for (char c : text) {
    if (c == '(' || c == ')') continue;
    if (c == ',' || c == ' ') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (separated) {
        digits += c;
      } else {
        image.push_back(c - '0');
      }
    } else {
      throw InvalidPermutation("unexpected character in '" + std::string(text) + "'");
    }
  }
  flush();
  return Permutation(std::move(image));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(permutation_unchecked(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace dendra
