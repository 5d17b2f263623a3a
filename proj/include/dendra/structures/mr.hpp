#pragma once

// The Malvenuto-Reutenauer algebra: the direct sum of Q[S_n] over n >= 0
// with the shifted shuffle product, split as
//   s < b = s(1) ((s(2..n)) sh (b + n)),
//   s > b = (b(1) + n) (s sh (b(2..m) + n)).
// The empty permutation is the unit.

#include <random>
#include <string>
#include <vector>

#include "dendra/dendriform.hpp"
#include "dendra/permutation.hpp"
#include "dendra/structures/keyed.hpp"

namespace dendra {

using PermElem = Elem<Permutation>;

inline PermElem perm_elem(Permutation p) { return PermElem(std::move(p)); }

class MalvenutoReutenauer : public KeyedUnit<Permutation> {
 public:
  std::string name() const { return "mr"; }

  PermElem prec(const PermElem& a, const PermElem& b) const;
  PermElem succ(const PermElem& a, const PermElem& b) const;

  /// All permutations of sizes 1..max_degree.
  std::vector<Graded<PermElem>> basis(int max_degree) const;
  /// A combination of up to three permutations of size <= min(max_degree, 3).
  PermElem random_element(std::mt19937_64& rng, int max_degree) const;
};

}  // namespace dendra
