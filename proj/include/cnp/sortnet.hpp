#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnp/rng.hpp"

namespace cnp {

// A comparator network genome: an ordered sequence of two-line comparators.
// Line indices are 0-based, line 0 is the top line. A comparator (a, b) with
// a < b places the smaller value on line a and the larger on line b.

inline constexpr int kMaxComparators = 99;
inline constexpr int kMaxLayers = 99;
inline constexpr int kMaxLines = 24;  // pattern enumeration cost bounds n

struct Comparator {
  int a = 0;
  int b = 0;
  friend bool operator==(const Comparator&, const Comparator&) = default;
  friend auto operator<=>(const Comparator&, const Comparator&) = default;
};

struct Network {
  int lines = 0;
  std::vector<Comparator> comparators;
  friend bool operator==(const Network&, const Network&) = default;
};

// Per-line swap counts accumulated over all 2^n zero-one inputs. A swap
// increments both endpoint lines, so the entries always sum to an even number.
using BehaviorVector = std::vector<std::uint64_t>;

struct EvalResult {
  std::uint64_t mistakes = 0;  // zero-one input patterns left unsorted
  int layers = 0;
  int comparators = 0;
  BehaviorVector behavior;
};

// Throws std::invalid_argument when a type invariant is broken.
inline void validate(const Network& net) {
  if (net.lines < 2 || net.lines > kMaxLines)
    throw std::invalid_argument("network: line count must be in [2, " +
                                std::to_string(kMaxLines) + "], got " +
                                std::to_string(net.lines));
  if (static_cast<int>(net.comparators.size()) > kMaxComparators)
    throw std::invalid_argument("network: more than " +
                                std::to_string(kMaxComparators) + " comparators");
  for (const Comparator& c : net.comparators)
    if (c.a < 0 || c.a >= c.b || c.b >= net.lines)
      throw std::invalid_argument("network: comparator (" + std::to_string(c.a) +
                                  "," + std::to_string(c.b) +
                                  ") out of range for n=" + std::to_string(net.lines));
}

template <typename T>
struct Applied {
  std::vector<T> values;
  std::vector<std::uint32_t> swap_counts;  // per line, for this one input
};

// Runs one input through the network. A comparator (a, b) swaps when
// value(a) > value(b); a swap increments the counts of both lines.
template <typename T>
Applied<T> apply(const Network& net, std::span<const T> input) {
  if (static_cast<int>(input.size()) != net.lines)
    throw std::invalid_argument("apply: input length " + std::to_string(input.size()) +
                                " does not match line count " + std::to_string(net.lines));
  Applied<T> out{std::vector<T>(input.begin(), input.end()),
                 std::vector<std::uint32_t>(input.size(), 0)};
  for (const Comparator& c : net.comparators) {
    if (out.values[c.b] < out.values[c.a]) {
      std::swap(out.values[c.a], out.values[c.b]);
      ++out.swap_counts[c.a];
      ++out.swap_counts[c.b];
    }
  }
  return out;
}

template <typename T>
Applied<T> apply(const Network& net, const std::vector<T>& input) {
  return apply<T>(net, std::span<const T>(input));
}

// Greedy left-to-right layer grouping: a comparator opens a new layer exactly
// when it touches a line already used in the current layer.
inline int count_layers(std::span<const Comparator> comparators, int lines) {
  (void)lines;
  int layers = 0;
  std::uint32_t used = ~std::uint32_t{0};  // forces a new layer on the first comparator
  for (const Comparator& c : comparators) {
    const std::uint32_t mask = (std::uint32_t{1} << c.a) | (std::uint32_t{1} << c.b);
    if (used & mask) {
      ++layers;
      used = 0;
    }
    used |= mask;
  }
  return layers;
}

inline int count_layers(const Network& net) {
  return count_layers(std::span<const Comparator>(net.comparators), net.lines);
}

namespace detail {

// Within a 64-pattern block, line i < 6 cycles with period 2^(i+1).
inline constexpr std::array<std::uint64_t, 6> kLowLineBits = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace detail

// Evaluates the network over all 2^n zero-one inputs, 64 patterns per word.
// On packed words a comparator is min = AND, max = OR; the swap indicator is
// the bit positions where line a carries 1 and line b carries 0. The result is
// bit-identical to running every pattern through apply() one at a time.
inline EvalResult evaluate(const Network& net) {
  validate(net);
  const int n = net.lines;
  EvalResult result;
  result.comparators = static_cast<int>(net.comparators.size());
  result.layers = count_layers(net);
  result.behavior.assign(n, 0);

  const std::uint64_t patterns = std::uint64_t{1} << n;
  const std::uint64_t blocks = (patterns + 63) / 64;
  const std::uint64_t mask =
      patterns >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << patterns) - 1;

  std::array<std::uint64_t, kMaxLines> w{};
  for (std::uint64_t block = 0; block < blocks; ++block) {
    for (int i = 0; i < n; ++i) {
      if (i < 6)
        w[i] = detail::kLowLineBits[i];
      else
        w[i] = (block >> (i - 6)) & 1 ? ~std::uint64_t{0} : 0;
    }
    for (const Comparator& c : net.comparators) {
      const std::uint64_t swaps = w[c.a] & ~w[c.b] & mask;
      if (swaps) {
        const auto count = static_cast<std::uint64_t>(std::popcount(swaps));
        result.behavior[c.a] += count;
        result.behavior[c.b] += count;
      }
      const std::uint64_t lo = w[c.a] & w[c.b];
      w[c.b] |= w[c.a];
      w[c.a] = lo;
    }
    std::uint64_t unsorted = 0;
    for (int i = 0; i + 1 < n; ++i) unsorted |= w[i] & ~w[i + 1];
    result.mistakes += static_cast<std::uint64_t>(std::popcount(unsorted & mask));
  }
  return result;
}

// Uniform over the n(n-1)/2 valid (a < b) pairs.
inline Comparator random_comparator(int lines, Rng& rng) {
  const auto u = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(lines)));
  auto v = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(lines - 1)));
  if (v >= u) ++v;
  return {std::min(u, v), std::max(u, v)};
}

inline Network random_network(int lines, int comparators, Rng& rng) {
  Network net{lines, {}};
  net.comparators.reserve(static_cast<std::size_t>(comparators));
  for (int i = 0; i < comparators; ++i)
    net.comparators.push_back(random_comparator(lines, rng));
  return net;
}

// Inserts a uniformly random comparator at a uniformly random position.
// No-op at the comparator cap, keeping reproduction total.
inline Network mutate_add(const Network& net, Rng& rng) {
  if (static_cast<int>(net.comparators.size()) >= kMaxComparators) return net;
  Network out = net;
  const Comparator c = random_comparator(net.lines, rng);
  const std::uint64_t pos = rng.uniform_index(net.comparators.size() + 1);
  out.comparators.insert(out.comparators.begin() + static_cast<std::ptrdiff_t>(pos), c);
  return out;
}

inline Network mutate_remove(const Network& net, Rng& rng) {
  if (net.comparators.empty()) return net;
  Network out = net;
  const std::uint64_t pos = rng.uniform_index(net.comparators.size());
  out.comparators.erase(out.comparators.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

// Exchanges two distinct positions; no-op below two comparators.
inline Network mutate_swap(const Network& net, Rng& rng) {
  if (net.comparators.size() < 2) return net;
  Network out = net;
  const std::uint64_t i = rng.uniform_index(net.comparators.size());
  std::uint64_t j = rng.uniform_index(net.comparators.size() - 1);
  if (j >= i) ++j;
  std::swap(out.comparators[i], out.comparators[j]);
  return out;
}

// Single-point crossover: a prefix of A, cut at a uniform point, concatenated
// with a suffix of B cut independently. Truncated at the comparator cap.
inline Network crossover(const Network& a, const Network& b, Rng& rng) {
  if (a.lines != b.lines)
    throw std::invalid_argument("crossover: parents have different line counts");
  const std::uint64_t cut_a = rng.uniform_index(a.comparators.size() + 1);
  const std::uint64_t cut_b = rng.uniform_index(b.comparators.size() + 1);
  Network child{a.lines, {}};
  child.comparators.assign(a.comparators.begin(),
                           a.comparators.begin() + static_cast<std::ptrdiff_t>(cut_a));
  child.comparators.insert(child.comparators.end(),
                           b.comparators.begin() + static_cast<std::ptrdiff_t>(cut_b),
                           b.comparators.end());
  if (child.comparators.size() > kMaxComparators)
    child.comparators.resize(kMaxComparators);
  return child;
}

// Text form: "n=<lines>" then one "<a>,<b>" line per comparator in application
// order. Newline-terminated, no trailing blank line.
inline std::string export_network(const Network& net) {
  std::string out = "n=" + std::to_string(net.lines) + "\n";
  for (const Comparator& c : net.comparators)
    out += std::to_string(c.a) + "," + std::to_string(c.b) + "\n";
  return out;
}

inline Network parse_network(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
    throw std::runtime_error("parse_network: expected first line 'n=<lines>'");
  Network net;
  try {
    net.lines = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("parse_network: bad line count '" + line + "'");
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) throw std::runtime_error("parse_network: blank line " + std::to_string(lineno));
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("parse_network: line " + std::to_string(lineno) +
                               " is not '<a>,<b>': '" + line + "'");
    try {
      net.comparators.push_back(
          {std::stoi(line.substr(0, comma)), std::stoi(line.substr(comma + 1))});
    } catch (const std::exception&) {
      throw std::runtime_error("parse_network: bad comparator on line " + std::to_string(lineno));
    }
  }
  validate(net);
  return net;
}

}  // namespace cnp
