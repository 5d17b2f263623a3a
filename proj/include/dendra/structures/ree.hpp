#pragma once

// Ree's recursive splitting of the shuffle product on letter sequences:
//   u < v = u_1 (u' * v),   u > v = v_1 (u * v'),   * = < + >,
// with the empty sequence as the unit of *.

#include <cstddef>
#include <span>
#include <vector>

namespace dendra::detail {

template <class Emit>
void ree_shuffle(std::vector<int>& prefix, std::span<const int> u, std::span<const int> v, Emit& emit);

template <class Emit>
void ree_prec(std::vector<int>& prefix, std::span<const int> u, std::span<const int> v, Emit& emit) {
  prefix.push_back(u.front());
  ree_shuffle(prefix, u.subspan(1), v, emit);
  prefix.pop_back();
}

template <class Emit>
void ree_succ(std::vector<int>& prefix, std::span<const int> u, std::span<const int> v, Emit& emit) {
  prefix.push_back(v.front());
  ree_shuffle(prefix, u, v.subspan(1), emit);
  prefix.pop_back();
}

template <class Emit>
void ree_shuffle(std::vector<int>& prefix, std::span<const int> u, std::span<const int> v, Emit& emit) {
  if (u.empty() || v.empty()) {
    const std::size_t mark = prefix.size();
    prefix.insert(prefix.end(), u.begin(), u.end());
    prefix.insert(prefix.end(), v.begin(), v.end());
    emit(prefix);
    prefix.resize(mark);
    return;
  }
  ree_prec(prefix, u, v, emit);
  ree_succ(prefix, u, v, emit);
}

}  // namespace dendra::detail
