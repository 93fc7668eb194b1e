#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <limits>
#include <vector>

#include "cnp/moea.hpp"
#include "cnp/rng.hpp"
#include "support.hpp"

namespace moea = cnp::moea;

namespace {

std::vector<std::vector<double>> random_objectives(cnp::Rng& rng, std::size_t count,
                                                   std::size_t dims, std::uint64_t levels) {
  std::vector<std::vector<double>> rows(count, std::vector<double>(dims));
  for (auto& row : rows)
    for (auto& value : row) value = static_cast<double>(rng.uniform_index(levels));
  return rows;
}

}  // namespace

TEST_CASE("dominance is componentwise with one strict improvement") {
  CHECK(moea::dominates(std::vector<double>{1, 2, 3}, std::vector<double>{2, 2, 3}));
  CHECK_FALSE(moea::dominates(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2, 3}));
  CHECK_FALSE(moea::dominates(std::vector<double>{1, 5}, std::vector<double>{2, 4}));
  CHECK_FALSE(moea::dominates(std::vector<double>{2, 4}, std::vector<double>{1, 5}));
  CHECK_THROWS_AS(moea::dominates(std::vector<double>{1}, std::vector<double>{1, 2}),
                  std::invalid_argument);
}

TEST_CASE("non-dominated sort partitions into ranked fronts") {
  SECTION("two comparable points split into two fronts") {
    const std::vector<std::vector<double>> objs{{0, 0}, {1, 1}};
    const auto fronts = moea::non_dominated_sort(objs);
    REQUIRE(fronts.size() == 2);
    CHECK(fronts[0] == std::vector<std::size_t>{0});
    CHECK(fronts[1] == std::vector<std::size_t>{1});
  }
  SECTION("identical vectors form a single front") {
    const std::vector<std::vector<double>> objs{{3, 3}, {3, 3}, {3, 3}};
    const auto fronts = moea::non_dominated_sort(objs);
    REQUIRE(fronts.size() == 1);
    CHECK(fronts[0] == std::vector<std::size_t>{0, 1, 2});
  }
  SECTION("matches the brute-force partition on random instances") {
    cnp::Rng rng(211);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t count = 1 + rng.uniform_index(50);
      const auto objs = random_objectives(rng, count, 3, 6);
      CHECK(moea::non_dominated_sort(objs) == testsupport::brute_force_fronts(objs));
    }
  }
  SECTION("flattened fronts are a permutation of the population") {
    cnp::Rng rng(223);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t count = 1 + rng.uniform_index(40);
      const auto objs = random_objectives(rng, count, 3, 4);
      std::vector<std::size_t> flat;
      for (const auto& front : moea::non_dominated_sort(objs))
        flat.insert(flat.end(), front.begin(), front.end());
      std::sort(flat.begin(), flat.end());
      std::vector<std::size_t> expected(count);
      std::iota(expected.begin(), expected.end(), std::size_t{0});
      CHECK(flat == expected);
    }
  }
}

TEST_CASE("crowding distance") {
  const double inf = std::numeric_limits<double>::infinity();
  SECTION("tiny fronts are all infinite") {
    CHECK(moea::crowding_distance({{1, 2}}) == std::vector<double>{inf});
    CHECK(moea::crowding_distance({{1, 2}, {2, 1}}) == std::vector<double>{inf, inf});
  }
  SECTION("three evenly spaced points: finite middle, infinite ends") {
    const auto d = moea::crowding_distance({{0, 0}, {1, 1}, {2, 2}});
    CHECK(d[0] == inf);
    CHECK(d[2] == inf);
    // Per objective the middle gap is (2 - 0) / (2 - 0); two objectives.
    CHECK(d[1] == 2.0);
  }
  SECTION("a zero-range objective contributes nothing") {
    const auto d = moea::crowding_distance({{0, 5}, {1, 5}, {4, 5}});
    CHECK(d[1] == 1.0);
  }
}

TEST_CASE("elite truncation follows rank then crowding") {
  SECTION("whole population when the quota covers it") {
    const std::vector<std::vector<double>> objs{{0, 1}, {1, 0}, {2, 2}};
    CHECK(moea::select_elites(objs, 3) == std::vector<std::size_t>{0, 1, 2});
  }
  SECTION("single slot goes to the dominating point") {
    const std::vector<std::vector<double>> objs{{0, 0}, {1, 1}};
    CHECK(moea::select_elites(objs, 1) == std::vector<std::size_t>{0});
  }
  SECTION("partial front is broken by crowding distance") {
    // F0 = {0, 1}; F1 = {2, 3, 4} where index 3 sits between the extremes.
    const std::vector<std::vector<double>> objs{
        {0, 1}, {1, 0}, {2, 6}, {3, 5}, {6, 2}};
    const auto selected = moea::select_elites(objs, 3);
    REQUIRE(selected.size() == 3);
    CHECK(std::find(selected.begin(), selected.end(), 0) != selected.end());
    CHECK(std::find(selected.begin(), selected.end(), 1) != selected.end());
    // Index 3 is the only non-boundary member of F1, so it loses to 2 and 4;
    // of those, 2 comes first by the index tie rule after both get infinity.
    CHECK(std::find(selected.begin(), selected.end(), 2) != selected.end());
  }
  SECTION("selection respects the (rank, crowding, index) order") {
    cnp::Rng rng(227);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t count = 2 + rng.uniform_index(40);
      const auto objs = random_objectives(rng, count, 3, 5);
      const std::size_t k = 1 + rng.uniform_index(count);
      const auto selected = moea::select_elites(objs, k);
      REQUIRE(selected.size() == k);

      const auto fronts = moea::non_dominated_sort(objs);
      std::vector<std::size_t> rank(count, 0);
      std::vector<double> crowd(count, 0.0);
      for (std::size_t f = 0; f < fronts.size(); ++f) {
        std::vector<std::vector<double>> rows;
        for (const std::size_t idx : fronts[f]) rows.push_back(objs[idx]);
        const auto d = moea::crowding_distance(rows);
        for (std::size_t i = 0; i < fronts[f].size(); ++i) {
          rank[fronts[f][i]] = f;
          crowd[fronts[f][i]] = d[i];
        }
      }
      std::vector<bool> in(count, false);
      for (const std::size_t idx : selected) in[idx] = true;
      for (std::size_t s = 0; s < count; ++s) {
        if (!in[s]) continue;
        for (std::size_t u = 0; u < count; ++u) {
          if (in[u]) continue;
          const bool s_before_u =
              rank[s] < rank[u] ||
              (rank[s] == rank[u] &&
               (crowd[s] > crowd[u] || (crowd[s] == crowd[u] && s < u)));
          CHECK(s_before_u);
        }
      }
    }
  }
  SECTION("an oversized quota is rejected") {
    CHECK_THROWS_AS(moea::select_elites({{1.0, 2.0}}, 2), std::invalid_argument);
  }
}
