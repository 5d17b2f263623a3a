// Acceptance run: one exact verification per criterion, one line each.
// Usage: acceptance [c1 ... c10]; no argument runs all ten.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "bracket_display.hpp"
#include "dendra/dendriform.hpp"
#include "dendra/hopf.hpp"
#include "dendra/lyndon.hpp"
#include "dendra/structures/mr.hpp"
#include "dendra/structures/words.hpp"
#include "dendra/suites.hpp"

using namespace dendra;

namespace {

const std::vector<std::string> kRotaBaxter = {"rb-seqmat:theta=0", "rb-seqmat:theta=1", "rb-seqmat:theta=-1",
                                              "rb-seqmat:theta=2/3", "rb-polymat"};

std::vector<std::string> every_structure() {
  std::vector<std::string> out = {"shuffle", "max", "mr", "free"};
  out.insert(out.end(), kRotaBaxter.begin(), kRotaBaxter.end());
  return out;
}

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct Outcome {
  Verdict verdict;
  std::string where;

  void absorb(const Verdict& v, const std::string& context) {
    if (!verdict.failure && v.failure) where = context;
    verdict.merge(v);
  }
};

void run(Outcome& o, const std::string& suite, const std::string& structure, SuiteParams p) {
  p.jobs = workers();
  const SuiteReport r = run_suite(suite, parse_structure(structure), p);
  o.absorb(r.verdict, suite + " on " + structure);
}

SuiteParams with_n(int n) {
  SuiteParams p;
  p.n = n;
  return p;
}

SuiteParams with_degree(int d) {
  SuiteParams p;
  p.degree = d;
  return p;
}

Outcome c1() {
  Outcome o;
  for (const auto& s : every_structure()) run(o, "axioms", s, with_degree(5));
  return o;
}

Outcome c2() {
  Outcome o;
  for (const auto& s : every_structure()) run(o, "lemma-dynkin", s, with_degree(5));
  return o;
}

Outcome c3() {
  Outcome o;
  for (const auto& s : every_structure()) {
    for (int n = 1; n <= 6; ++n) run(o, "theorem33", s, with_n(n));
  }
  return o;
}

Outcome c4() {
  Outcome o;
  SuiteParams p;
  p.cap = 6;
  for (const auto& s : every_structure()) run(o, "magnus", s, p);
  return o;
}

Outcome c5() {
  Outcome o;
  for (const std::string s : {"shuffle", "max", "mr", "rb-seqmat:theta=1", "rb-seqmat:theta=2/3", "rb-polymat"}) {
    for (int n = 1; n <= 6; ++n) run(o, "theorem51", s, with_n(n));
  }
  run(o, "theorem51", "shuffle", with_n(7));
  return o;
}

std::set<std::string> rendered_expansion(int n) {
  const Permutation omega = Permutation::reversal(n);
  std::set<std::string> out;
  for (const auto& sigma : lyn_set(omega)) out.insert(render_bracket_product(pbw_blocks(omega, sigma)));
  return out;
}

void compare_display(Outcome& o, int n, std::string display) {
  for (std::size_t at = display.find("x-"); at != std::string::npos; at = display.find("x-")) display.erase(at + 1, 1);
  const auto terms = testing::display_terms(display);
  const std::set<std::string> expected(terms.begin(), terms.end());
  const auto got = rendered_expansion(n);
  Verdict v;
  std::string detail = std::to_string(got.size()) + " computed terms vs " + std::to_string(expected.size()) +
                       " displayed";
  for (const auto& t : got) {
    if (!expected.count(t)) detail += "; computed only: " + t;
  }
  for (const auto& t : expected) {
    if (!got.count(t)) detail += "; displayed only: " + t;
  }
  expect_true(v, "displayed expansion of x1...x" + std::to_string(n) + " over Lyn(ω)", got == expected, detail);
  o.absorb(v, "pbw display n=" + std::to_string(n));
}

Outcome c6() {
  Outcome o;
  compare_display(o, 3, "x3x2x1 + [x2,x3]x1 + x2[x1,x3] + x3[x1,x2] + [[x1,x2],x3]");
  compare_display(o, 4,
                  "x4x3x2x1 + x4x3[x1,x2] + x4[x2,x3]x1 + x4x2[x1,x3] + x4[[x1,x2],x3] + [x3,x4]x2x1"
                  " + [x3,x4][x1,x-2] + x3[x2,x4]x1 + x3x2[x1,x4] + x3[[x1,x2],x4] + [[x2,x3],x4]x1"
                  " + [x2,x4][x1,x3] + x2[[x1,x3],x4] + [[[x1,x2],x3],x4]");
  run(o, "pbw", "shuffle", with_n(5));
  return o;
}

Outcome c7() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) run(o, "census", "shuffle", with_n(n));
  return o;
}

Outcome c8() {
  Outcome o;
  for (const auto& s : kRotaBaxter) {
    for (int n = 1; n <= 5; ++n) {
      run(o, "rb-corollary", s, with_n(n));
      run(o, "rb-spitzer", s, with_n(n));
    }
  }
  for (int n = 1; n <= 5; ++n) run(o, "rb-spitzer", "rb-seqmat:theta=1,k=1", with_n(n));
  return o;
}

Outcome c9() {
  Outcome o;
  Verdict d2;
  for (const auto& w : words_up_to(3, 5)) {
    if (w.empty()) continue;
    const WordElem d = dynkin_word(w);
    expect_equal(d2, "D(D(w)) = n D(w)", dynkin(d), Scalar(static_cast<long>(w.size())) * d);
  }
  o.absorb(d2, "D∘D on words");

  for (const auto& s : every_structure()) run(o, "prelie-laws", s, with_degree(3));

  Verdict sym;
  Verdict dual;
  const ShuffleStructure shuffle;
  const MalvenutoReutenauer mr;
  for (int n = 1; n <= 5; ++n) {
    std::vector<WordElem> xs;
    std::vector<PermElem> ps;
    for (int i = 1; i <= n; ++i) {
      xs.push_back(letter(i));
      ps.push_back(Scalar(i) * perm_elem(Permutation{1}));
    }
    sym.merge(check_rhs_symmetry(shuffle, std::span<const WordElem>(xs)));
    dual.merge(check_ut_duality(shuffle, std::span<const WordElem>(xs)));
    dual.merge(check_ut_duality(mr, std::span<const PermElem>(ps)));
  }
  o.absorb(sym, "S_n symmetry");
  o.absorb(dual, "U/T duality");

  Verdict cfl;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& sigma : all_permutations(n)) {
      Blocks duval;
      for (const auto& f : cfl_factorize(Word(sigma.image()), LetterOrder::decreasing)) duval.push_back(f.letters());
      expect_true(cfl, "blocksE = CFL factorization under decreasing order", profile(sigma).blocksE == duval,
                  render_bars(profile(sigma)));
    }
  }
  o.absorb(cfl, "blocksE vs Duval");
  return o;
}

Outcome c10() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) run(o, "convolution", "shuffle", with_n(n));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"c1", c1}, {"c2", c2}, {"c3", c3}, {"c4", c4}, {"c5", c5},
      {"c6", c6}, {"c7", c7}, {"c8", c8}, {"c9", c9}, {"c10", c10}};
  std::vector<std::string> wanted(argv + 1, argv + argc);
  for (const auto& w : wanted) {
    if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == w; })) {
      std::cerr << "unknown criterion '" << w << "'\n";
      return 2;
    }
  }
  bool all_passed = true;
  for (const auto& [name, fn] : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = fn();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.verdict.passed();
    all_passed = all_passed && ok;
    std::cout << "criterion " << name.substr(1) << ": " << (ok ? "PASS" : "FAIL") << " (" << o.verdict.checks
              << " checks, " << ms << " ms)";
    if (o.verdict.failure) {
      const auto& f = *o.verdict.failure;
      std::cout << " in " << o.where << ": " << f.label;
      if (!f.lhs.empty()) std::cout << " [" << f.lhs << "]";
      if (!f.rhs.empty()) std::cout << " vs [" << f.rhs << "]";
    }
    std::cout << std::endl;
  }
  return all_passed ? 0 : 1;
}
