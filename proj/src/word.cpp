#include "dendra/word.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dendra {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (l <= 0) throw std::invalid_argument("word letters must be positive");
  }
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word Word::slice(std::size_t first, std::size_t count) const {
  Word out;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                      letters_.begin() + static_cast<std::ptrdiff_t>(first + count));
  return out;
}

Word operator+(const Word& u, const Word& v) {
  Word out;
  out.letters_.reserve(u.size() + v.size());
  out.letters_.insert(out.letters_.end(), u.letters_.begin(), u.letters_.end());
  out.letters_.insert(out.letters_.end(), v.letters_.begin(), v.letters_.end());
  return out;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  return u.letters_ <=> v.letters_;
}

std::string render_key(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += 'x';
    out += std::to_string(w[i]);
  }
  return out;
}

bool is_multilinear(const Word& w) {
  std::set<Letter> seen;
  for (Letter l : w) {
    if (!seen.insert(l).second) return false;
  }
  return true;
}

}  // namespace dendra
