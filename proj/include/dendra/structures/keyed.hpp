#pragma once

#include <random>

#include "dendra/elem.hpp"
#include "dendra/scalar.hpp"

namespace dendra {

/// Unit handling for structures on Elem<Key> whose unit is the
/// default-constructed key (empty word, empty permutation, leaf).
template <class Key>
struct KeyedUnit {
  using value_type = Elem<Key>;

  value_type unit() const { return value_type(Key{}); }
  Scalar unit_coeff(const value_type& a) const { return a.coeff(Key{}); }
  value_type strip_unit(const value_type& a) const {
    value_type out = a;
    out.remove_term(Key{});
    return out;
  }
};

/// Small nonzero rational in [-4, 4] with denominator in {1, 2, 3}.
inline Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::bernoulli_distribution negative(0.5);
  const long p = num(rng);
  return make_scalar(negative(rng) ? -p : p, den(rng));
}

/// Possibly zero rational, used for dense carrier entries.
inline Scalar random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  return make_scalar(num(rng), den(rng));
}

}  // namespace dendra
