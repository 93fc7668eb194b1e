#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cnp/sortnet.hpp"

namespace cnp::novelty {

// Behavior distance is Euclidean over the per-line swap-count vectors. The
// metric is fixed for a whole run.
inline double distance(const BehaviorVector& a, const BehaviorVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("novelty::distance: behavior vectors differ in length");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

// Sum of distances from member i to every member of the selection pool.
// The i = i term contributes zero.
inline double novelty_score(std::size_t i, const std::vector<BehaviorVector>& pool) {
  double sum = 0.0;
  for (std::size_t j = 0; j < pool.size(); ++j)
    if (j != i) sum += distance(pool[i], pool[j]);
  return sum;
}

// Distance to the nearest other member. A singleton pool has no neighbor and
// is never eligible for removal, hence +infinity.
inline double minimum_novelty(std::size_t i, const std::vector<BehaviorVector>& pool) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < pool.size(); ++j)
    if (j != i) best = std::min(best, distance(pool[i], pool[j]));
  return best;
}

// Two-phase novelty selection. The base selector widens the elite pool by the
// selection multiplier; the pool is sorted by novelty score, the top
// elite_count seed the result set, and every remaining candidate is admitted
// in turn while the member with the lowest minimum novelty (within the current
// result set) is evicted. Min-novelty ties evict the worse fitness key (higher
// is worse), remaining ties the longest-standing member.
//
// base_select(count) must return `count` candidate indices; fitness_keys and
// behaviors are indexed by the same population indices. With multiplier 1 the
// procedure reduces to the base selector; with multiplier 1/elite-fraction the
// pool is the whole population and novelty order alone governs.
template <typename BaseSelector>
std::vector<std::size_t> novelty_select(const std::vector<BehaviorVector>& behaviors,
                                        const std::vector<double>& fitness_keys,
                                        std::size_t elite_count,
                                        std::size_t selection_multiplier,
                                        BaseSelector&& base_select) {
  if (behaviors.size() != fitness_keys.size())
    throw std::invalid_argument("novelty_select: behaviors and fitness keys differ in size");
  if (elite_count == 0) return {};
  const std::size_t pool_size =
      std::min(elite_count * std::max<std::size_t>(selection_multiplier, 1), behaviors.size());
  std::vector<std::size_t> pool = base_select(pool_size);
  if (pool.size() <= elite_count) return pool;

  // Pairwise distances once; everything below works on pool-local indices.
  const std::size_t p = pool.size();
  std::vector<double> dist(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      dist[i * p + j] = dist[j * p + i] = distance(behaviors[pool[i]], behaviors[pool[j]]);

  std::vector<double> score(p, 0.0);
  for (std::size_t i = 0; i < p; ++i)
    score[i] = std::accumulate(dist.data() + i * p, dist.data() + (i + 1) * p, 0.0);
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return score[x] > score[y]; });

  std::vector<std::size_t> result(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(elite_count));
  for (std::size_t t = elite_count; t < p; ++t) {
    result.push_back(order[t]);
    std::size_t victim = 0;
    double victim_min = std::numeric_limits<double>::infinity();
    double victim_key = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < result.size(); ++r) {
      double mn = std::numeric_limits<double>::infinity();
      for (std::size_t s = 0; s < result.size(); ++s)
        if (s != r) mn = std::min(mn, dist[result[r] * p + result[s]]);
      const double key = fitness_keys[pool[result[r]]];
      if (mn < victim_min || (mn == victim_min && key > victim_key)) {
        victim = r;
        victim_min = mn;
        victim_key = key;
      }
    }
    result.erase(result.begin() + static_cast<std::ptrdiff_t>(victim));
  }

  std::vector<std::size_t> out;
  out.reserve(result.size());
  for (const std::size_t local : result) out.push_back(pool[local]);
  return out;
}

}  // namespace cnp::novelty
