#pragma once

// The free dendriform algebra on one generator, realized on planar binary
// trees. Writing a = a_l v a_r for the grafting of two subtrees on a new
// root:
//   a < b = a_l v (a_r * b),    a > b = (a * b_l) v b_r,
// where * = < + > and the leaf is the unit. The generator is the unique
// tree with one internal vertex.

#include <compare>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dendra/dendriform.hpp"
#include "dendra/structures/keyed.hpp"

namespace dendra {

/// A planar binary tree, stored as its preorder code: '1' for an internal
/// vertex, '0' for a leaf. The default tree is the leaf. Ordered by degree
/// (number of internal vertices), then by code.
class Tree {
 public:
  Tree() : code_("0") {}

  static Tree leaf() { return Tree(); }
  static Tree graft(const Tree& left, const Tree& right);
  /// Throws std::invalid_argument unless `code` is a valid preorder code.
  static Tree from_code(std::string code);

  bool is_leaf() const { return code_.size() == 1; }
  int degree() const { return static_cast<int>((code_.size() - 1) / 2); }
  const std::string& code() const { return code_; }
  /// (left, right) subtrees of a non-leaf tree.
  std::pair<Tree, Tree> split() const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

 private:
  explicit Tree(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

/// "|" for the leaf, "[l,r]" otherwise.
std::string render_key(const Tree& t);

/// All trees with exactly n internal vertices (Catalan(n) of them).
std::vector<Tree> trees_of_degree(int n);

using TreeElem = Elem<Tree>;

class FreeDendriform : public KeyedUnit<Tree> {
 public:
  std::string name() const { return "free"; }

  /// The generator a: one internal vertex.
  TreeElem generator() const;

  TreeElem prec(const TreeElem& a, const TreeElem& b) const;
  TreeElem succ(const TreeElem& a, const TreeElem& b) const;

  std::vector<Graded<TreeElem>> basis(int max_degree) const;
  TreeElem random_element(std::mt19937_64& rng, int max_degree) const;
};

}  // namespace dendra
