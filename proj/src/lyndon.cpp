#include "dendra/lyndon.hpp"

#include <functional>

namespace dendra {

namespace {

Blocks cut_after(const Permutation& sigma, const std::vector<int>& cuts) {
  Blocks out;
  std::vector<int> block;
  std::size_t next = 0;
  for (int i = 1; i <= sigma.size(); ++i) {
    block.push_back(sigma.at(i));
    if (next < cuts.size() && cuts[next] == i) {
      out.push_back(std::move(block));
      block.clear();
      ++next;
    }
  }
  if (!block.empty()) out.push_back(std::move(block));
  return out;
}

bool letter_less(Letter a, Letter b, LetterOrder order) { return order == LetterOrder::increasing ? a < b : a > b; }

// Lexicographic comparison of letter ranges under `order`, where a proper
// prefix is smaller.
bool lex_less(std::span<const Letter> u, std::span<const Letter> v, LetterOrder order) {
  const std::size_t m = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (u[i] != v[i]) return letter_less(u[i], v[i], order);
  }
  return u.size() < v.size();
}

}  // namespace

LyndonProfile profile(const Permutation& sigma) {
  LyndonProfile p{sigma, {}, {}, {}, {}, {}};
  const int n = sigma.size();
  int running_max = 0;
  for (int k = 1; k <= n - 1; ++k) {
    running_max = std::max(running_max, sigma.at(k));
    if (sigma.at(k + 1) > running_max) p.E.push_back(k);
  }
  int running_min = n + 1;
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
  for (int l = n; l >= 1; --l) {
    suffix_min[static_cast<std::size_t>(l)] = running_min;
    running_min = std::min(running_min, sigma.at(l));
  }
  for (int l = 1; l <= n - 1; ++l) {
    if (sigma.at(l) < suffix_min[static_cast<std::size_t>(l)]) p.F.push_back(l);
  }
  p.blocksE = cut_after(sigma, p.E);
  p.blocksF = cut_after(sigma, p.F);
  for (const auto& b : p.blocksE) p.lyndon_seq.push_back(static_cast<int>(b.size()));
  return p;
}

std::string render_bars(const LyndonProfile& p) {
  auto render = [](const Blocks& blocks, const std::string& bar) {
    std::string out = "(";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b) out += bar;
      for (std::size_t i = 0; i < blocks[b].size(); ++i) {
        if (i && blocks[b][i] > 9) out += ",";
        out += std::to_string(blocks[b][i]);
      }
    }
    return out + ")";
  };
  return render(p.blocksE, "|") + " " + render(p.blocksF, "||");
}

bool is_lyndon(const Word& w, LetterOrder order) {
  if (w.empty()) return false;
  const std::span<const Letter> all(w.letters());
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!lex_less(all, all.subspan(i), order)) return false;
  }
  return true;
}

std::vector<Word> cfl_factorize(const Word& w, LetterOrder order) {
  std::vector<Word> out;
  const auto& s = w.letters();
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && (s[k] == s[j] || letter_less(s[k], s[j], order))) {
      k = s[k] == s[j] ? k + 1 : i;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.slice(i, j - k));
      i += j - k;
    }
  }
  return out;
}

Permutation conjugate_by_reversal(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = n + 1 - sigma.at(n + 1 - i);
  return permutation_unchecked(std::move(img));
}

std::vector<Permutation> lyn_set(const Permutation& beta) {
  std::vector<Permutation> out;
  for (auto& sigma : all_permutations(beta.size())) {
    bool ok = true;
    for (const auto& block : profile(sigma).blocksE) {
      for (std::size_t i = 1; i < block.size() && ok; ++i) ok = beta.at(block[i - 1]) < beta.at(block[i]);
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(sigma));
  }
  return out;
}

std::vector<Word> pbw_blocks(const Permutation& beta, const Permutation& sigma) {
  std::vector<Word> out;
  for (const auto& block : profile(sigma).blocksE) {
    std::vector<Letter> letters;
    for (int i : block) letters.push_back(beta.at(i));
    out.emplace_back(std::move(letters));
  }
  return out;
}

namespace {

WordElem bracket_product(const std::vector<Word>& blocks) {
  WordElem prod = word_elem(Word{});
  for (const auto& b : blocks) prod = concat(prod, dynkin_word(b));
  return prod;
}

std::string render_bracket(const Word& w) {
  std::string acc = "x" + std::to_string(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) acc = "[" + acc + ",x" + std::to_string(w[i]) + "]";
  return acc;
}

}  // namespace

WordElem pbw_expansion(const Permutation& beta) {
  WordElem out;
  for (const auto& sigma : lyn_set(beta)) out += bracket_product(pbw_blocks(beta, sigma));
  return out;
}

std::string render_bracket_product(const std::vector<Word>& blocks) {
  std::string out;
  for (const auto& b : blocks) out += render_bracket(b);
  return out.empty() ? "1" : out;
}

std::vector<Blocks> set_partitions(int n) {
  std::vector<Blocks> out;
  Blocks blocks;
  // Restricted growth: element x joins an existing block or opens a new one.
  std::function<void(int)> place = [&](int x) {
    if (x > n) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(x);
      place(x + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({x});
    place(x + 1);
    blocks.pop_back();
  };
  if (n >= 1) place(1);
  return out;
}

std::vector<std::vector<Word>> dynkid_terms(int n) {
  std::vector<std::vector<Word>> out;
  for (auto blocks : set_partitions(n)) {
    std::sort(blocks.begin(), blocks.end(), [](const auto& u, const auto& v) { return u.front() > v.front(); });
    std::vector<Word> term;
    for (auto& b : blocks) term.emplace_back(std::move(b));
    out.push_back(std::move(term));
  }
  return out;
}

WordElem dynkid_expansion(int n) {
  WordElem out;
  for (const auto& term : dynkid_terms(n)) out += bracket_product(term);
  return out;
}

bool Census::consistent() const {
  for (const auto& row : rows) {
    if (Scalar(row.count) != row.expected) return false;
  }
  return total == factorial(n);
}

Census lyndon_census(int n, int bound, int jobs) {
  if (n < 1) throw std::invalid_argument("census needs n >= 1");
  if (n > bound) throw BoundExceeded("census n = " + std::to_string(n) + " above " + std::to_string(bound));
  using Counts = std::map<Composition, long>;
  struct CountSum {
    Counts counts;
    CountSum& operator+=(const CountSum& o) {
      for (const auto& [k, c] : o.counts) counts[k] += c;
      return *this;
    }
  };
  const CountSum sum = sum_over_permutations<CountSum>(n, jobs, [](const Permutation& sigma) {
    CountSum one;
    one.counts[profile(sigma).lyndon_seq] = 1;
    return one;
  });
  Census census;
  census.n = n;
  const Scalar nfact = factorial(n);
  for (const auto& comp : compositions(n)) {
    auto it = sum.counts.find(comp);
    const long count = it == sum.counts.end() ? 0 : it->second;
    census.rows.push_back({comp, count, Scalar(nfact * composition_weight(comp))});
    census.total += count;
  }
  return census;
}

}  // namespace dendra
