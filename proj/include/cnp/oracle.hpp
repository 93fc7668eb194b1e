#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cnp/sortnet.hpp"

namespace cnp::oracle {

// Brute-force validity: runs every permutation of 1..n through the network.
// Deliberately independent of the packed-word evaluation path; the two must
// agree through the zero-one principle.
inline bool permutation_validity(const Network& net) {
  validate(net);
  if (net.lines > 8)
    throw std::invalid_argument("permutation_validity: refusing n=" +
                                std::to_string(net.lines) + " (n! blowup), max is 8");
  std::vector<int> perm(static_cast<std::size_t>(net.lines));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    const auto applied = cnp::apply(net, perm);
    if (!std::is_sorted(applied.values.begin(), applied.values.end())) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

struct MinimalNetwork {
  int comparators = 0;
  int layers = 0;  // best layer count among valid sorters of that size
  Network witness;
};

namespace detail {

// Enumerates sequences of exactly `length` comparators, skipping adjacent
// duplicates (applying the same comparator twice in a row is an identity).
inline void search_sequences(const std::vector<Comparator>& pairs, int length, Network& scratch,
                             std::optional<MinimalNetwork>& best) {
  if (static_cast<int>(scratch.comparators.size()) == length) {
    if (!permutation_validity(scratch)) return;
    const int layers = count_layers(scratch);
    if (!best || layers < best->layers)
      best = MinimalNetwork{length, layers, scratch};
    return;
  }
  for (const Comparator& c : pairs) {
    if (!scratch.comparators.empty() && scratch.comparators.back() == c) continue;
    scratch.comparators.push_back(c);
    search_sequences(pairs, length, scratch, best);
    scratch.comparators.pop_back();
  }
}

}  // namespace detail

// Exhaustive breadth-first search over comparator sequences by length.
// Returns the smallest comparator count admitting a valid sorter, the best
// layer count at that size, and one witness. Empty when nothing valid exists
// within the bound.
inline std::optional<MinimalNetwork> exhaustive_minimal(int lines, int max_comparators) {
  if (lines < 2 || lines > 4)
    throw std::invalid_argument("exhaustive_minimal: lines must be in [2, 4]");
  if (max_comparators < 0 || max_comparators > 6)
    throw std::invalid_argument("exhaustive_minimal: max_comparators must be in [0, 6]");
  std::vector<Comparator> pairs;
  for (int a = 0; a < lines; ++a)
    for (int b = a + 1; b < lines; ++b) pairs.push_back({a, b});
  for (int length = 0; length <= max_comparators; ++length) {
    std::optional<MinimalNetwork> best;
    Network scratch{lines, {}};
    detail::search_sequences(pairs, length, scratch, best);
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace cnp::oracle
