#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace cnp::moea {

// Pareto dominance under minimization: u dominates v when u is nowhere worse
// and strictly better in at least one component.
inline bool dominates(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size())
    throw std::invalid_argument("dominates: objective vectors differ in dimension");
  bool strictly_better = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
    if (u[i] < v[i]) strictly_better = true;
  }
  return strictly_better;
}

// Fast non-dominated sort. Fronts are returned in rank order, each front as
// ascending population indices so replays are order-stable.
inline std::vector<std::vector<std::size_t>> non_dominated_sort(
    const std::vector<std::vector<double>>& objectives) {
  const std::size_t n = objectives.size();
  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<std::size_t> domination_count(n, 0);
  std::vector<std::vector<std::size_t>> fronts;

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (dominates(objectives[p], objectives[q])) {
        dominated_by[p].push_back(q);
        ++domination_count[q];
      } else if (dominates(objectives[q], objectives[p])) {
        dominated_by[q].push_back(p);
        ++domination_count[p];
      }
    }
  }
  std::vector<std::size_t> current;
  for (std::size_t p = 0; p < n; ++p)
    if (domination_count[p] == 0) current.push_back(p);

  while (!current.empty()) {
    fronts.push_back(current);
    std::vector<std::size_t> next;
    for (const std::size_t p : current)
      for (const std::size_t q : dominated_by[p])
        if (--domination_count[q] == 0) next.push_back(q);
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return fronts;
}

// Crowding distance within one front. Boundary members of each objective get
// infinity; fronts of size <= 2 are all-infinite. Gaps are normalized by the
// front's own per-objective range, and a zero range contributes nothing.
inline std::vector<double> crowding_distance(
    const std::vector<std::vector<double>>& front_objectives) {
  const std::size_t n = front_objectives.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> distance(n, 0.0);
  if (n == 0) return distance;
  if (n <= 2) {
    std::fill(distance.begin(), distance.end(), inf);
    return distance;
  }
  const std::size_t dims = front_objectives[0].size();
  std::vector<std::size_t> order(n);
  for (std::size_t m = 0; m < dims; ++m) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      if (front_objectives[x][m] != front_objectives[y][m])
        return front_objectives[x][m] < front_objectives[y][m];
      return x < y;
    });
    distance[order.front()] = inf;
    distance[order.back()] = inf;
    const double range = front_objectives[order.back()][m] - front_objectives[order.front()][m];
    if (range <= 0.0) continue;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (distance[order[i]] == inf) continue;
      distance[order[i]] +=
          (front_objectives[order[i + 1]][m] - front_objectives[order[i - 1]][m]) / range;
    }
  }
  return distance;
}

// Elitist truncation: fill from fronts in rank order, break the last partially
// taken front by descending crowding distance, ties by lower population index.
inline std::vector<std::size_t> select_elites(
    const std::vector<std::vector<double>>& objectives, std::size_t elite_count) {
  if (elite_count > objectives.size())
    throw std::invalid_argument("select_elites: elite count exceeds population size");
  std::vector<std::size_t> selected;
  selected.reserve(elite_count);
  for (const std::vector<std::size_t>& front : non_dominated_sort(objectives)) {
    if (selected.size() + front.size() <= elite_count) {
      selected.insert(selected.end(), front.begin(), front.end());
      if (selected.size() == elite_count) break;
      continue;
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(front.size());
    for (const std::size_t idx : front) rows.push_back(objectives[idx]);
    const std::vector<double> crowd = crowding_distance(rows);
    std::vector<std::size_t> order(front.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      if (crowd[x] != crowd[y]) return crowd[x] > crowd[y];
      return front[x] < front[y];
    });
    for (std::size_t i = 0; selected.size() < elite_count; ++i)
      selected.push_back(front[order[i]]);
    break;
  }
  return selected;
}

}  // namespace cnp::moea
