#include "dendra/structures/rota_baxter.hpp"

namespace dendra {

SeqMatAlgebra::SeqMatAlgebra(int horizon, int k, Scalar theta) : horizon_(horizon), k_(k), theta_(std::move(theta)) {
  if (horizon < 1 || k < 1) throw std::invalid_argument("rb-seqmat needs N >= 1 and k >= 1");
}

std::string SeqMatAlgebra::name() const {
  return "rb-seqmat:θ=" + to_string(theta_) + ",k=" + std::to_string(k_) + ",N=" + std::to_string(horizon_);
}

std::vector<Graded<SeqMat>> SeqMatAlgebra::graded_basis(int) const {
  std::vector<Graded<SeqMat>> out;
  for (int t = 1; t <= horizon_; ++t) {
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) out.push_back({SeqMat::elementary(horizon_, k_, t, i, j), 1});
    }
  }
  return out;
}

SeqMat SeqMatAlgebra::random(std::mt19937_64& rng) const {
  std::vector<Scalar> v(static_cast<std::size_t>(horizon_ * k_ * k_));
  for (auto& x : v) x = random_entry(rng);
  return SeqMat(horizon_, k_, std::move(v));
}

PolyMatAlgebra::PolyMatAlgebra(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("rb-polymat needs k >= 1");
}

std::string PolyMatAlgebra::name() const { return "rb-polymat:k=" + std::to_string(k_); }

std::vector<Graded<PolyMat>> PolyMatAlgebra::graded_basis(int max_degree) const {
  std::vector<Graded<PolyMat>> out;
  for (int d = 0; d + 1 <= std::max(1, max_degree); ++d) {
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) out.push_back({PolyMat::elementary(k_, i, j, Poly::monomial(d)), d + 1});
    }
  }
  return out;
}

PolyMat PolyMatAlgebra::random(std::mt19937_64& rng) const {
  std::vector<Poly> e(static_cast<std::size_t>(k_ * k_));
  for (auto& p : e) p = Poly({random_entry(rng), random_entry(rng)});
  return PolyMat(k_, std::move(e));
}

}  // namespace dendra
