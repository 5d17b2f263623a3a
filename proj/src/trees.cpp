#include "dendra/structures/trees.hpp"

#include <stdexcept>

namespace dendra {

namespace {

// Length of the subtree code starting at `pos`.
std::size_t subtree_length(const std::string& code, std::size_t pos) {
  int open = 1;
  std::size_t i = pos;
  while (open > 0) {
    if (i >= code.size()) throw std::invalid_argument("truncated tree code");
    open += code[i] == '1' ? 1 : -1;
    ++i;
  }
  return i - pos;
}

}  // namespace

Tree Tree::graft(const Tree& left, const Tree& right) { return Tree("1" + left.code_ + right.code_); }

Tree Tree::from_code(std::string code) {
  if (code.empty() || code.find_first_not_of("01") != std::string::npos) {
    throw std::invalid_argument("tree code must be a nonempty string over {0,1}");
  }
  if (subtree_length(code, 0) != code.size()) throw std::invalid_argument("trailing symbols in tree code");
  return Tree(std::move(code));
}

std::pair<Tree, Tree> Tree::split() const {
  if (is_leaf()) throw std::logic_error("cannot split a leaf");
  const std::size_t left_len = subtree_length(code_, 1);
  return {Tree(code_.substr(1, left_len)), Tree(code_.substr(1 + left_len))};
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (auto c = a.code_.size() <=> b.code_.size(); c != 0) return c;
  return a.code_ <=> b.code_;
}

std::string render_key(const Tree& t) {
  if (t.is_leaf()) return "|";
  auto [l, r] = t.split();
  return "[" + render_key(l) + "," + render_key(r) + "]";
}

std::vector<Tree> trees_of_degree(int n) {
  if (n == 0) return {Tree::leaf()};
  std::vector<Tree> out;
  for (int k = 0; k < n; ++k) {
    const auto lefts = trees_of_degree(k);
    const auto rights = trees_of_degree(n - 1 - k);
    for (const auto& l : lefts) {
      for (const auto& r : rights) out.push_back(Tree::graft(l, r));
    }
  }
  return out;
}

namespace {

TreeElem tree_product(const Tree& x, const Tree& y);

TreeElem tree_prec(const Tree& x, const Tree& y) {
  const auto [xl, xr] = x.split();
  TreeElem out;
  for (const auto& [t, c] : tree_product(xr, y)) out.add_term(Tree::graft(xl, t), c);
  return out;
}

TreeElem tree_succ(const Tree& x, const Tree& y) {
  const auto [yl, yr] = y.split();
  TreeElem out;
  for (const auto& [t, c] : tree_product(x, yl)) out.add_term(Tree::graft(t, yr), c);
  return out;
}

// Unital associative product on trees.
TreeElem tree_product(const Tree& x, const Tree& y) {
  if (x.is_leaf()) return TreeElem(y);
  if (y.is_leaf()) return TreeElem(x);
  TreeElem out = tree_prec(x, y);
  out += tree_succ(x, y);
  return out;
}

}  // namespace

TreeElem FreeDendriform::generator() const { return TreeElem(Tree::graft(Tree::leaf(), Tree::leaf())); }

TreeElem FreeDendriform::prec(const TreeElem& a, const TreeElem& b) const {
  return bilinear(a, b, tree_prec);
}

TreeElem FreeDendriform::succ(const TreeElem& a, const TreeElem& b) const {
  return bilinear(a, b, tree_succ);
}

std::vector<Graded<TreeElem>> FreeDendriform::basis(int max_degree) const {
  std::vector<Graded<TreeElem>> out;
  for (int n = 1; n <= max_degree; ++n) {
    for (auto& t : trees_of_degree(n)) out.push_back({TreeElem(std::move(t)), n});
  }
  return out;
}

TreeElem FreeDendriform::random_element(std::mt19937_64& rng, int max_degree) const {
  const int top = std::max(1, std::min(max_degree, 3));
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> degree(1, top);
  TreeElem out;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    const auto trees = trees_of_degree(degree(rng));
    std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
    out.add_term(trees[pick(rng)], random_scalar(rng));
  }
  if (out.is_zero()) out = generator();
  return out;
}

}  // namespace dendra
