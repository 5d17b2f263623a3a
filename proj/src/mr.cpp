#include "dendra/structures/mr.hpp"

#include <algorithm>

#include "dendra/structures/ree.hpp"

namespace dendra {

namespace {

std::vector<int> shifted(const Permutation& p, int offset) {
  std::vector<int> out = p.image();
  for (int& v : out) v += offset;
  return out;
}

template <class Split>
PermElem shifted_split(const PermElem& a, const PermElem& b, Split split) {
  PermElem out;
  std::vector<int> prefix;
  for (const auto& [s, cs] : a) {
    for (const auto& [t, ct] : b) {
      const Scalar c = cs * ct;
      const std::vector<int> tail = shifted(t, s.size());
      auto emit = [&](const std::vector<int>& w) { out.add_term(permutation_unchecked(w), c); };
      split(prefix, std::span<const int>(s.image()), std::span<const int>(tail), emit);
    }
  }
  return out;
}

}  // namespace

PermElem MalvenutoReutenauer::prec(const PermElem& a, const PermElem& b) const {
  return shifted_split(a, b, [](auto& prefix, auto u, auto v, auto& emit) { detail::ree_prec(prefix, u, v, emit); });
}

PermElem MalvenutoReutenauer::succ(const PermElem& a, const PermElem& b) const {
  return shifted_split(a, b, [](auto& prefix, auto u, auto v, auto& emit) { detail::ree_succ(prefix, u, v, emit); });
}

std::vector<Graded<PermElem>> MalvenutoReutenauer::basis(int max_degree) const {
  std::vector<Graded<PermElem>> out;
  for (int n = 1; n <= max_degree; ++n) {
    for (auto& p : all_permutations(n)) out.push_back({PermElem(std::move(p)), n});
  }
  return out;
}

PermElem MalvenutoReutenauer::random_element(std::mt19937_64& rng, int max_degree) const {
  const int top = std::clamp(max_degree, 1, 3);
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> size(1, top);
  PermElem out;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    std::vector<int> img(static_cast<std::size_t>(size(rng)));
    for (std::size_t j = 0; j < img.size(); ++j) img[j] = static_cast<int>(j) + 1;
    std::shuffle(img.begin(), img.end(), rng);
    out.add_term(permutation_unchecked(std::move(img)), random_scalar(rng));
  }
  if (out.is_zero()) out.add_term(Permutation{1}, 1);
  return out;
}

}  // namespace dendra
