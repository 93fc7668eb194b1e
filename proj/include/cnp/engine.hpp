#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnp/moea.hpp"
#include "cnp/novelty.hpp"
#include "cnp/objectives.hpp"
#include "cnp/rng.hpp"
#include "cnp/sortnet.hpp"

namespace cnp {

enum class Mode { single, nsga2, composite, composite_novelty, pulsation };

inline std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::single: return "single";
    case Mode::nsga2: return "nsga2";
    case Mode::composite: return "composite";
    case Mode::composite_novelty: return "composite-novelty";
    case Mode::pulsation: return "pulsation";
  }
  return "?";
}

inline std::optional<Mode> parse_mode(std::string_view name) {
  for (const Mode m : {Mode::single, Mode::nsga2, Mode::composite, Mode::composite_novelty,
                       Mode::pulsation})
    if (name == to_string(m)) return m;
  return std::nullopt;
}

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int lines = 4;
  std::size_t population_size = 100;
  double elite_fraction = 0.10;
  std::size_t selection_multiplier = 2;
  int pulsation_period = 5;
  int generations = 500;
  Mode mode = Mode::pulsation;
  ObjectiveParams params;
  std::uint64_t seed = 1;
  double p_add = 0.4;
  double p_remove = 0.3;
  double p_swap = 0.3;
  double p_crossover = 0.9;
  int init_comparators_min = -1;  // negative: derive [n, 4n], capped at 99
  int init_comparators_max = -1;
  bool pulse_on_first = false;  // pulsation starts with novelty off by default
  int target_comparators = -1;  // >= 0: stop once best has m = 0 and c <= target

  std::size_t elite_count() const {
    const auto k = static_cast<std::size_t>(
        std::llround(static_cast<double>(population_size) * elite_fraction));
    return std::clamp<std::size_t>(k, 1, population_size);
  }
  int init_min() const {
    return init_comparators_min >= 0 ? init_comparators_min : std::min(lines, kMaxComparators);
  }
  int init_max() const {
    return init_comparators_max >= 0 ? init_comparators_max : std::min(4 * lines, kMaxComparators);
  }

  void validate() const {
    if (lines < 2 || lines > kMaxLines)
      throw ConfigError("lines must be in [2, " + std::to_string(kMaxLines) + "]");
    if (population_size < 1) throw ConfigError("population size must be at least 1");
    if (!(elite_fraction > 0.0) || elite_fraction > 1.0)
      throw ConfigError("elite fraction must be in (0, 1]");
    if (selection_multiplier < 1 ||
        static_cast<double>(selection_multiplier) * elite_fraction > 1.0 + 1e-9) {
      std::ostringstream bound;
      bound << 1.0 / elite_fraction;
      throw ConfigError("selection multiplier must satisfy 1 <= s <= 1/elite-fraction (= " +
                        bound.str() + ")");
    }
    if (pulsation_period < 1) throw ConfigError("pulsation period must be at least 1");
    if (generations < 0) throw ConfigError("generation budget must be non-negative");
    if (p_add < 0 || p_remove < 0 || p_swap < 0 || p_add + p_remove + p_swap <= 0)
      throw ConfigError("mutation operator weights must be non-negative with positive sum");
    if (p_crossover < 0 || p_crossover > 1) throw ConfigError("crossover probability must be in [0, 1]");
    if (init_min() > init_max() || init_max() > kMaxComparators)
      throw ConfigError("initial comparator range must satisfy 0 <= min <= max <= " +
                        std::to_string(kMaxComparators));
    if (params.alpha1 < 0 || params.alpha2 < 0 || params.alpha3 < 0 || params.alpha4 < 0)
      throw ConfigError("alpha coefficients must be non-negative");
    if (params.weight_mistakes <= 0 || params.weight_layers <= 0 || params.weight_comparators <= 0)
      throw ConfigError("hierarchical weights must be strictly positive");
  }
};

struct Individual {
  Network genome;
  EvalResult eval;
  CompositeVector composite;
};

inline Individual make_individual(Network genome, const ObjectiveParams& params) {
  EvalResult eval = evaluate(genome);
  const ObjectiveTriple t{eval.mistakes, eval.layers, eval.comparators};
  return {std::move(genome), std::move(eval), composite_vector(t, params)};
}

struct GenerationRecord {
  int generation = 0;
  bool novelty_active = false;
  ObjectiveTriple best;
  double best_o1 = 0.0;
  double mean_o1 = 0.0;
  std::size_t distinct_behaviors = 0;
  double wall_ms = 0.0;
};

struct RunResult {
  std::vector<Individual> population;
  std::vector<GenerationRecord> records;
  Network best;
  int target_generation = -1;  // first generation meeting the target, -1 if none
  bool converged() const { return target_generation >= 0; }
};

inline std::vector<Individual> init_population(const RunConfig& config, Rng& rng) {
  config.validate();
  std::vector<Individual> population;
  population.reserve(config.population_size);
  const int lo = config.init_min();
  const int hi = config.init_max();
  for (std::size_t i = 0; i < config.population_size; ++i) {
    const int count = lo + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(hi - lo + 1)));
    population.push_back(make_individual(random_network(config.lines, count, rng), config.params));
  }
  return population;
}

// Whether novelty selection is in effect at generation g. Pulsation toggles
// every `period` generations and starts with novelty off unless inverted.
inline bool novelty_active(int generation, Mode mode, int period, bool pulse_on_first = false) {
  switch (mode) {
    case Mode::composite_novelty: return true;
    case Mode::pulsation: {
      const bool odd_phase = (generation / period) % 2 == 1;
      return pulse_on_first ? !odd_phase : odd_phase;
    }
    default: return false;
  }
}

namespace detail {

inline std::size_t best_index(const std::vector<Individual>& population) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i)
    if (population[i].composite.o1 < population[best].composite.o1) best = i;
  return best;
}

// Elite selection for one generation. The champion (lowest o1, lowest index on
// ties) is guaranteed a slot: novelty selection may otherwise evict it from a
// dense behavior cluster, which would break best-fitness monotonicity.
inline std::vector<std::size_t> select_elites(const std::vector<Individual>& population,
                                              const RunConfig& config, bool novelty_on) {
  const std::size_t k = config.elite_count();
  std::vector<std::size_t> elites;
  if (config.mode == Mode::single) {
    elites.resize(population.size());
    std::iota(elites.begin(), elites.end(), std::size_t{0});
    std::stable_sort(elites.begin(), elites.end(), [&](std::size_t x, std::size_t y) {
      return population[x].composite.o1 < population[y].composite.o1;
    });
    elites.resize(k);
  } else {
    std::vector<std::vector<double>> rows;
    rows.reserve(population.size());
    for (const Individual& ind : population) {
      const auto row = config.mode == Mode::nsga2
                           ? raw_vector({ind.eval.mistakes, ind.eval.layers, ind.eval.comparators})
                           : ind.composite.as_array();
      rows.emplace_back(row.begin(), row.end());
    }
    const auto base = [&rows](std::size_t count) { return moea::select_elites(rows, count); };
    if (novelty_on) {
      std::vector<BehaviorVector> behaviors;
      std::vector<double> keys;
      behaviors.reserve(population.size());
      keys.reserve(population.size());
      for (const Individual& ind : population) {
        behaviors.push_back(ind.eval.behavior);
        keys.push_back(ind.composite.o1);
      }
      elites = novelty::novelty_select(behaviors, keys, k, config.selection_multiplier, base);
    } else {
      elites = base(k);
    }
  }

  const std::size_t champion = best_index(population);
  if (std::find(elites.begin(), elites.end(), champion) == elites.end()) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < elites.size(); ++i) {
      if (population[elites[i]].composite.o1 > population[elites[worst]].composite.o1 ||
          (population[elites[i]].composite.o1 == population[elites[worst]].composite.o1 &&
           elites[i] > elites[worst]))
        worst = i;
    }
    elites[worst] = champion;
  }
  std::sort(elites.begin(), elites.end());  // canonical parent order
  return elites;
}

inline GenerationRecord summarize(const std::vector<Individual>& population, int generation,
                                  bool novelty_on, double wall_ms) {
  GenerationRecord rec;
  rec.generation = generation;
  rec.novelty_active = novelty_on;
  const std::size_t best = best_index(population);
  const EvalResult& e = population[best].eval;
  rec.best = {e.mistakes, e.layers, e.comparators};
  rec.best_o1 = population[best].composite.o1;
  double sum = 0.0;
  for (const Individual& ind : population) sum += ind.composite.o1;
  rec.mean_o1 = sum / static_cast<double>(population.size());
  std::set<BehaviorVector> behaviors;
  for (const Individual& ind : population) behaviors.insert(ind.eval.behavior);
  rec.distinct_behaviors = behaviors.size();
  rec.wall_ms = wall_ms;
  return rec;
}

}  // namespace detail

// One generation: select elites under the phase in effect at `generation`,
// carry them over unchanged, and refill with offspring. Each offspring takes
// two uniform parents from the elites, crosses over with probability
// p_crossover (else clones the first parent), then receives exactly one
// mutation drawn from the add/remove/swap weights.
inline std::pair<std::vector<Individual>, GenerationRecord> step(
    const std::vector<Individual>& population, const RunConfig& config, int generation, Rng& rng) {
  const auto start = std::chrono::steady_clock::now();
  const bool novelty_on =
      novelty_active(generation, config.mode, config.pulsation_period, config.pulse_on_first);
  const std::vector<std::size_t> elites = detail::select_elites(population, config, novelty_on);

  std::vector<Individual> next;
  next.reserve(population.size());
  for (const std::size_t idx : elites) next.push_back(population[idx]);
  const double mutation_total = config.p_add + config.p_remove + config.p_swap;
  while (next.size() < population.size()) {
    const Individual& first = population[elites[rng.uniform_index(elites.size())]];
    const Individual& second = population[elites[rng.uniform_index(elites.size())]];
    Network child = rng.bernoulli(config.p_crossover) ? crossover(first.genome, second.genome, rng)
                                                      : first.genome;
    const double pick = rng.uniform_real() * mutation_total;
    if (pick < config.p_add)
      child = mutate_add(child, rng);
    else if (pick < config.p_add + config.p_remove)
      child = mutate_remove(child, rng);
    else
      child = mutate_swap(child, rng);
    next.push_back(make_individual(std::move(child), config.params));
  }

  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  // The record flag reports the regime in effect at its own generation index,
  // mirroring novelty_active(); selection above used the phase at `generation`.
  GenerationRecord rec = detail::summarize(
      next, generation + 1,
      novelty_active(generation + 1, config.mode, config.pulsation_period, config.pulse_on_first),
      wall_ms);
  return {std::move(next), std::move(rec)};
}

inline bool target_reached(const GenerationRecord& rec, const RunConfig& config) {
  return config.target_comparators >= 0 && rec.best.mistakes == 0 &&
         rec.best.comparators <= config.target_comparators;
}

// Full run: deterministic for a fixed config, including the seed. Stops early
// once the configured comparator target is met by a valid network.
inline RunResult run(const RunConfig& config) {
  config.validate();
  if ((config.mode == Mode::composite_novelty || config.mode == Mode::pulsation) &&
      config.selection_multiplier * config.elite_count() > config.population_size)
    std::cerr << "warning: selection pool " << config.selection_multiplier << "x"
              << config.elite_count() << " exceeds population " << config.population_size
              << ", clamping\n";
  Rng rng(config.seed);
  RunResult result;

  const auto start = std::chrono::steady_clock::now();
  result.population = init_population(config, rng);
  const double init_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  result.records.push_back(detail::summarize(
      result.population, 0,
      novelty_active(0, config.mode, config.pulsation_period, config.pulse_on_first), init_ms));

  if (target_reached(result.records.back(), config)) {
    result.target_generation = 0;
  } else {
    for (int g = 0; g < config.generations; ++g) {
      auto [next, rec] = step(result.population, config, g, rng);
      result.population = std::move(next);
      result.records.push_back(rec);
      if (target_reached(rec, config)) {
        result.target_generation = rec.generation;
        break;
      }
    }
  }
  result.best = result.population[detail::best_index(result.population)].genome;
  return result;
}

}  // namespace cnp
