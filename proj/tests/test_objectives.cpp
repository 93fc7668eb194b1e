#include <catch2/catch_amalgamated.hpp>

#include "cnp/objectives.hpp"
#include "cnp/rng.hpp"

using cnp::CompositeVector;
using cnp::ObjectiveParams;
using cnp::ObjectiveTriple;

TEST_CASE("single fitness is the hierarchical combination") {
  CHECK(cnp::single_fitness({0, 3, 5}) == 305.0);
  CHECK(cnp::single_fitness({0, 0, 0}) == 0.0);
  CHECK(cnp::single_fitness({2, 10, 37}) == 21037.0);
}

TEST_CASE("composite vector instantiates the three axes") {
  CHECK(cnp::composite_vector({0, 3, 5}) == CompositeVector{305.0, 30.0, 50.0});
  CHECK(cnp::composite_vector({0, 0, 0}) == CompositeVector{0.0, 0.0, 0.0});
  CHECK(cnp::composite_vector({1, 1, 1}) == CompositeVector{10101.0, 11.0, 11.0});
}

TEST_CASE("raw vector is the identity embedding") {
  CHECK(cnp::raw_vector({0, 3, 5}) == std::array<double, 3>{0.0, 3.0, 5.0});
  CHECK(cnp::raw_vector({1, 0, 0}) == std::array<double, 3>{1.0, 0.0, 0.0});
  CHECK(cnp::raw_vector({7, 7, 7}) == std::array<double, 3>{7.0, 7.0, 7.0});
}

TEST_CASE("hierarchy does not fold below the caps") {
  // With l, c < 100, any extra mistake outweighs the best possible (l, c) and
  // any extra layer outweighs the best possible c.
  cnp::Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t m = rng.uniform_index(50);
    const int l = static_cast<int>(rng.uniform_index(100));
    const int c = static_cast<int>(rng.uniform_index(100));
    const int l2 = static_cast<int>(rng.uniform_index(100));
    const int c2 = static_cast<int>(rng.uniform_index(100));
    CHECK(cnp::single_fitness({m + 1, l2, c2}) > cnp::single_fitness({m, l, c}));
    CHECK(cnp::single_fitness({m, l + 1, c2}) > cnp::single_fitness({m, l, c}));
  }
  // Extreme corner: one extra mistake versus maximal (l, c) below the caps.
  CHECK(cnp::single_fitness({1, 0, 0}) > cnp::single_fitness({0, 99, 99}));
  CHECK(cnp::single_fitness({0, 1, 0}) > cnp::single_fitness({0, 0, 99}));
}

TEST_CASE("o1 orders strictly by mistakes first") {
  // No candidate with mistakes can reach the o1 of a mistake-free one.
  cnp::Rng rng(103);
  for (int trial = 0; trial < 500; ++trial) {
    const ObjectiveTriple correct{0, static_cast<int>(rng.uniform_index(100)),
                                  static_cast<int>(rng.uniform_index(100))};
    const ObjectiveTriple faulty{1 + rng.uniform_index(100),
                                 static_cast<int>(rng.uniform_index(100)),
                                 static_cast<int>(rng.uniform_index(100))};
    CHECK(cnp::composite_vector(faulty).o1 > cnp::composite_vector(correct).o1);
  }
}

TEST_CASE("composite vector is linear in the triple for fixed params") {
  const ObjectiveParams params{2.0, 5.0, 3.0, 7.0, 10000.0, 100.0, 1.0};
  cnp::Rng rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    const ObjectiveTriple a{rng.uniform_index(20), static_cast<int>(rng.uniform_index(40)),
                            static_cast<int>(rng.uniform_index(40))};
    const ObjectiveTriple b{rng.uniform_index(20), static_cast<int>(rng.uniform_index(40)),
                            static_cast<int>(rng.uniform_index(40))};
    const ObjectiveTriple sum{a.mistakes + b.mistakes, a.layers + b.layers,
                              a.comparators + b.comparators};
    const CompositeVector ca = cnp::composite_vector(a, params);
    const CompositeVector cb = cnp::composite_vector(b, params);
    const CompositeVector cs = cnp::composite_vector(sum, params);
    CHECK(cs.o1 == ca.o1 + cb.o1);
    CHECK(cs.o2 == ca.o2 + cb.o2);
    CHECK(cs.o3 == ca.o3 + cb.o3);
  }
}
