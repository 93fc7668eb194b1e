#pragma once

// Test-only oracles and fixtures. Everything here must stay independent of the
// implementation paths it is used to check: scalar evaluation goes through
// apply() one pattern at a time, never through the packed-word evaluator, and
// the front oracle is plain O(N^2) dominance stripping.

#include <cstdint>
#include <vector>

#include "cnp/moea.hpp"
#include "cnp/rng.hpp"
#include "cnp/sortnet.hpp"

namespace testsupport {

// Scalar reference for evaluate(): every zero-one pattern individually.
inline cnp::EvalResult naive_evaluate(const cnp::Network& net) {
  cnp::EvalResult result;
  result.comparators = static_cast<int>(net.comparators.size());
  result.layers = cnp::count_layers(net);
  result.behavior.assign(static_cast<std::size_t>(net.lines), 0);
  const std::uint64_t patterns = std::uint64_t{1} << net.lines;
  std::vector<int> input(static_cast<std::size_t>(net.lines));
  for (std::uint64_t p = 0; p < patterns; ++p) {
    for (int i = 0; i < net.lines; ++i) input[static_cast<std::size_t>(i)] = (p >> i) & 1;
    const auto applied = cnp::apply(net, input);
    bool sorted = true;
    for (int i = 0; i + 1 < net.lines; ++i)
      if (applied.values[static_cast<std::size_t>(i)] > applied.values[static_cast<std::size_t>(i) + 1])
        sorted = false;
    if (!sorted) ++result.mistakes;
    for (int i = 0; i < net.lines; ++i)
      result.behavior[static_cast<std::size_t>(i)] += applied.swap_counts[static_cast<std::size_t>(i)];
  }
  return result;
}

// Brute-force Pareto partition: repeatedly strip the maximal set.
inline std::vector<std::vector<std::size_t>> brute_force_fronts(
    const std::vector<std::vector<double>>& objectives) {
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> remaining(objectives.size());
  for (std::size_t i = 0; i < objectives.size(); ++i) remaining[i] = i;
  while (!remaining.empty()) {
    std::vector<std::size_t> front;
    for (const std::size_t p : remaining) {
      bool dominated = false;
      for (const std::size_t q : remaining)
        if (q != p && cnp::moea::dominates(objectives[q], objectives[p])) {
          dominated = true;
          break;
        }
      if (!dominated) front.push_back(p);
    }
    std::vector<std::size_t> rest;
    for (const std::size_t p : remaining)
      if (std::find(front.begin(), front.end(), p) == front.end()) rest.push_back(p);
    fronts.push_back(std::move(front));
    remaining = std::move(rest);
  }
  return fronts;
}

// The minimal four-line network: three layers, five comparators.
inline cnp::Network four_line_minimal() {
  return {4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {1, 2}}};
}

// Insertion-sort network, valid for any n. Handy as a guaranteed sorter.
inline cnp::Network insertion_network(int lines) {
  cnp::Network net{lines, {}};
  for (int i = 1; i < lines; ++i)
    for (int j = i; j > 0; --j) net.comparators.push_back({j - 1, j});
  return net;
}

}  // namespace testsupport
