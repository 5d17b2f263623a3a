#include "dendra/tensor.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace dendra {

WordElem concat(const WordElem& a, const WordElem& b) {
  return bilinear(a, b, [](const Word& u, const Word& v) { return WordElem(u + v); });
}

WordElem commutator(const WordElem& a, const WordElem& b) { return concat(a, b) - concat(b, a); }

WordElem multilinear_part(const WordElem& x) {
  WordElem out;
  for (const auto& [w, c] : x) {
    if (is_multilinear(w)) out.add_term(w, c);
  }
  return out;
}

namespace {

std::string normalize(std::string_view text) {
  std::string s(text);
  auto replace_all = [&s](const std::string& from, const std::string& to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
      s.replace(pos, from.size(), to);
    }
  };
  replace_all("−", "-");
  replace_all("·", "*");
  return s;
}

class WordElemParser {
 public:
  explicit WordElemParser(std::string text) : s_(std::move(text)) {}

  WordElem parse() {
    skip_ws();
    if (at_end()) fail("empty input");
    WordElem out;
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    add_term(out, sign);
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
      add_term(out, sign);
    }
    return out;
  }

 private:
  void add_term(WordElem& out, int sign) {
    Scalar coeff = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        out.add_term(parse_word(), Scalar(sign * coeff));
      } else {
        out.add_term(Word{}, Scalar(sign * coeff));
      }
      return;
    }
    out.add_term(parse_word(), Scalar(sign * coeff));
  }

  Scalar parse_coefficient() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return parse_scalar(std::string_view(s_).substr(start, pos_ - start));
  }

  Word parse_word() {
    if (!at_end() && peek() == '1') {
      ++pos_;
      return Word{};
    }
    std::vector<Letter> letters;
    while (true) {
      if (at_end() || peek() != 'x') fail("expected a letter 'x<index>'");
      ++pos_;
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("letter without index");
      letters.push_back(std::stoi(s_.substr(start, pos_ - start)));
      if (at_end() || peek() != '.') break;
      ++pos_;
    }
    return Word(std::move(letters));
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse element at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

WordElem parse_word_elem(std::string_view text) {
  return WordElemParser(normalize(text)).parse();
}

}  // namespace dendra
