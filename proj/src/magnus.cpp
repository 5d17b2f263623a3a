#include "dendra/magnus.hpp"

namespace dendra {

std::vector<Scalar> bernoulli_table(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_table needs n >= 0");
  std::vector<Scalar> out;
  std::vector<Scalar> row(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    row[static_cast<std::size_t>(m)] = Scalar(1, m + 1);
    for (int j = m; j >= 1; --j) {
      row[static_cast<std::size_t>(j - 1)] = Scalar(j) * (row[static_cast<std::size_t>(j - 1)] - row[static_cast<std::size_t>(j)]);
    }
    out.push_back(row[0]);
  }
  // The recurrence yields B_1 = +1/2; every other term agrees with the
  // convention B_1 = -1/2.
  if (n >= 1) out[1] = Scalar(-1, 2);
  return out;
}

}  // namespace dendra
