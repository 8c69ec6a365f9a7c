#pragma once

#include "sflat/polytope.hpp"

#include <cstdint>
#include <random>

namespace sflat {

// Knobs for seeded corpus generation and the probe budgets.
struct RunConfig {
  std::uint64_t seed = 1;
  int count = 200;
  int dim_min = 1, dim_max = 4;
  int pts_min = 2, pts_max = 8;
  int coord_min = -3, coord_max = 3;
  int m_max = 6;
  Int hole_bound = 0;  // 0: auto

  void validate() const;
};

// Deterministic RNG with explicit rejection sampling, so identical seeds
// give identical corpora independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  long long uniform(long long lo, long long hi);  // inclusive

 private:
  std::mt19937_64 eng_;
};

LatticePolytope random_polytope(Rng& rng, const RunConfig& cfg);
std::vector<LatticePolytope> generate_corpus(const RunConfig& cfg);

// Rejection-samples full-dimensional empty simplices in Z^dim.
LatticePolytope random_empty_simplex(Rng& rng, int dim, int coord_min, int coord_max);

}  // namespace sflat
