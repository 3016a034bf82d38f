#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bergepath/hypergraph.hpp"
#include "oracle.hpp"

namespace testing {

inline bergepath::Hypergraph make(int n, int r, const oracle::Edges& edges) {
  return bergepath::Hypergraph::build(n, r, edges);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline const oracle::Edges kStar73{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}};
inline const oracle::Edges kLoosePath73{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}};
inline const oracle::Edges kSunflower63{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}};

}  // namespace testing
