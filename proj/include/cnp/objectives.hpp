#pragma once

#include <array>
#include <cstdint>

namespace cnp {

// Coefficients for the composite objective axes. All objectives are minimized;
// the hierarchical weights keep mistakes dominant over layers over comparators
// as long as layer and comparator counts stay below 100 (no folding).
struct ObjectiveParams {
  double alpha1 = 1.0;
  double alpha2 = 10.0;
  double alpha3 = 1.0;
  double alpha4 = 10.0;
  double weight_mistakes = 10000.0;
  double weight_layers = 100.0;
  double weight_comparators = 1.0;
};

struct ObjectiveTriple {
  std::uint64_t mistakes = 0;
  int layers = 0;
  int comparators = 0;
  friend bool operator==(const ObjectiveTriple&, const ObjectiveTriple&) = default;
};

struct CompositeVector {
  double o1 = 0.0;  // hierarchical fitness, replaces the mistake axis
  double o2 = 0.0;  // mistakes + layers
  double o3 = 0.0;  // mistakes + comparators
  std::array<double, 3> as_array() const { return {o1, o2, o3}; }
  friend bool operator==(const CompositeVector&, const CompositeVector&) = default;
};

inline double single_fitness(const ObjectiveTriple& t, const ObjectiveParams& p = {}) {
  return p.weight_mistakes * static_cast<double>(t.mistakes) +
         p.weight_layers * t.layers + p.weight_comparators * t.comparators;
}

inline CompositeVector composite_vector(const ObjectiveTriple& t, const ObjectiveParams& p = {}) {
  const auto m = static_cast<double>(t.mistakes);
  return {single_fitness(t, p), p.alpha1 * m + p.alpha2 * t.layers,
          p.alpha3 * m + p.alpha4 * t.comparators};
}

// Identity embedding for the plain three-objective mode.
inline std::array<double, 3> raw_vector(const ObjectiveTriple& t) {
  return {static_cast<double>(t.mistakes), static_cast<double>(t.layers),
          static_cast<double>(t.comparators)};
}

}  // namespace cnp
