#include <doctest.h>

#include <random>

#include "../fixtures.hpp"
#include "../oracle.hpp"
#include "zf/axioms.hpp"
#include "zf/reduction.hpp"

using namespace zf;

TEST_CASE("czf_reduction builds G'") {
  const auto k3 = czf_reduction(complete_graph(3));
  CHECK(k3.transformed.order() == 6);
  CHECK(k3.transformed.size() == 8);

  const auto empty = czf_reduction(build_graph(2, {}));
  CHECK(empty.transformed.order() == 5);
  CHECK(empty.transformed.degree(empty.v_star) == 4);
  CHECK(empty.transformed.size() == 4);

  const auto p3 = czf_reduction(path_graph(3));
  CHECK(p3.transformed.size() == 7);
  CHECK(p3.v_star == 3);
  CHECK(p3.l1 == 4);
  CHECK(p3.l2 == 5);
  for (Vertex v = 0; v < 3; ++v) CHECK(p3.transformed.adjacent(v, p3.v_star));
  CHECK(p3.transformed.degree(p3.l1) == 1);
  CHECK(p3.transformed.degree(p3.l2) == 1);
  const Graph p3_source = path_graph(3);
  for (auto [u, v] : p3_source.edges()) CHECK(p3.transformed.adjacent(u, v));
  CHECK(transformed_bound(3) == 5);
}

TEST_CASE("verify_reduction: K3, P4, C5") {
  const auto k3 = verify_reduction(complete_graph(3));
  CHECK(k3.zf.value == 2);
  CHECK(k3.czf.value == 4);
  CHECK(k3.passed());
  const auto p4 = verify_reduction(path_graph(4));
  CHECK(p4.zf.value == 1);
  CHECK(p4.czf.value == 3);
  CHECK(p4.passed());
  const auto c5 = verify_reduction(cycle_graph(5));
  CHECK(c5.zf.value == 2);
  CHECK(c5.czf.value == 4);
  CHECK(c5.passed());
  CHECK_THROWS_AS(verify_reduction(build_graph(2, {})), PreconditionError);
}

TEST_CASE("every minimal connected forcing set of G' holds v* and a leaf") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = fixtures::random_connected(2 + seed % 5, 0.3, seed);
    const auto inst = czf_reduction(g);
    const SetFamily minimal = enumerate_connected_forcing_sets(inst.transformed, true);
    CHECK(minimal.size() > 0);
    for (const auto& s : minimal.members()) {
      CHECK(contains(s, inst.v_star));
      CHECK((contains(s, inst.l1) || contains(s, inst.l2)));
    }
  }
}

TEST_CASE("equality report: C6, K_{1,4}, paw") {
  const auto c6 = equality_report(cycle_graph(6));
  CHECK(c6.z == 2);
  CHECK(c6.zc == 2);
  CHECK(c6.equal);
  REQUIRE(c6.connected_witness);
  CHECK(c6.connected_witness->size() == 2);

  const auto star = equality_report(star_graph(5));
  CHECK(star.z == 3);
  CHECK(star.zc == 4);
  CHECK_FALSE(star.equal);
  CHECK_FALSE(star.connected_witness);

  const auto paw = equality_report(fixtures::paw());
  CHECK(paw.z == 2);
  CHECK(paw.zc == 2);
  CHECK(paw.equal);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = fixtures::random_connected(2 + seed % 8, 0.2, seed);
    const auto r = equality_report(g);
    CHECK(r.z == oracle::z(g));
    CHECK(r.zc == *oracle::zc(g));
    CHECK(r.equal == (r.z == r.zc));
  }
}

TEST_CASE("set family storage") {
  const SetFamily f(4, {{2, 1}, {1, 2}, {0}, {}});
  CHECK(f.size() == 3);
  CHECK(f.members().front().empty());
  CHECK(f.has_member(VertexSet{1, 2}));
  CHECK(f.in_family(to_mask({1, 2})));
  const SetFamily c = f.with_complemented(true);
  CHECK(c.in_family(to_mask({0, 3})));
  CHECK(c.in_family(f.full_mask()));
  CHECK_FALSE(c.in_family(to_mask({1, 2})));
  CHECK(from_mask(0b1010) == VertexSet{1, 3});
  CHECK_THROWS_AS(SetFamily(2, {{0, 2}}), PreconditionError);
}

TEST_CASE("axioms: star, triangle with two pendants, spider") {
  const auto star = check_axioms(connected_forcing_family(star_graph(4)));
  CHECK(star.m1);
  CHECK(star.m2);
  CHECK(star.m3);
  CHECK(star.matroid());
  CHECK(star.mode == AxiomMode::Exhaustive);

  const Graph tri = fixtures::triangle_two_pendants();
  const auto t = check_axioms(connected_forcing_family(tri));
  CHECK(t.m1);
  CHECK_FALSE(t.m3);
  REQUIRE(t.m3_witness);
  CHECK(t.m3_witness->a == VertexSet{0, 1, 2, 3, 4});
  // complements of the two maximal sets are minimal connected forcing sets
  const VertexSet all{0, 1, 2, 3, 4};
  const VertexSet big_cfs = set_difference(all, t.m3_witness->smaller);
  const VertexSet small_cfs = set_difference(all, t.m3_witness->larger);
  CHECK(big_cfs.size() == 3);
  CHECK(is_subset(VertexSet{0, 1}, big_cfs));
  CHECK(small_cfs.size() == 2);

  const auto spider = check_axioms(connected_forcing_family(spider_graph(3, 2)));
  CHECK(spider.m1);
  CHECK(spider.m3);
  CHECK_FALSE(spider.m2);
  REQUIRE(spider.m2_witness);
  CHECK(is_subset(spider.m2_witness->subset, spider.m2_witness->superset));
  CHECK(spider.greedoid_m1_m3());
  CHECK_FALSE(spider.matroid());
}

TEST_CASE("axioms: caps and sampling") {
  AxiomOptions options;
  options.max_ground = 6;
  CHECK_THROWS_AS(check_axioms(connected_forcing_family(path_graph(7)), options),
                  PreconditionError);
  options.max_ground = 20;
  options.exhaustive_cap = 4;
  options.samples = 20;
  const auto r = check_axioms(connected_forcing_family(cycle_graph(6)), options);
  CHECK(r.mode == AxiomMode::Sampled);
  CHECK(r.sets_checked <= 21);
}

TEST_CASE("check_axioms agrees with the naive checker") {
  std::mt19937_64 rng(7);
  // arbitrary families over up to 6 elements
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const oracle::Mask all = oracle::full(n);
    std::vector<char> table(std::size_t{all} + 1, 0);
    std::vector<VertexSet> members;
    const double density = (trial % 5 + 1) / 6.0;
    for (oracle::Mask s = 0; s <= all; ++s) {
      if (std::bernoulli_distribution(density)(rng)) {
        table[s] = 1;
        members.push_back(oracle::to_set(s));
      }
    }
    // closing downward half of the time exercises the M2-true branch
    if (trial % 2) {
      for (oracle::Mask s = all;; --s) {
        if (table[s]) {
          for (std::size_t v = 0; v < n; ++v) {
            if (s >> v & 1) table[s & ~(oracle::Mask{1} << v)] = 1;
          }
        }
        if (s == 0) break;
      }
      members.clear();
      for (oracle::Mask s = 0; s <= all; ++s) {
        if (table[s]) members.push_back(oracle::to_set(s));
      }
    }
    const auto got = check_axioms(SetFamily(n, members));
    const auto want = oracle::axioms(table, n);
    CHECK(got.m1 == want.m1);
    CHECK(got.m2 == want.m2);
    CHECK(got.m3 == want.m3);
  }
  // complemented forcing families of small graphs
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = fixtures::random_connected(2 + seed % 8, 0.15, seed);
    const auto got = check_axioms(connected_forcing_family(g));
    const auto want = oracle::axioms(oracle::complement_family(g), g.order());
    CHECK(got.m1 == want.m1);
    CHECK(got.m2 == want.m2);
    CHECK(got.m3 == want.m3);
  }
}

TEST_CASE("zero forcing family is upward closed, so its complement is hereditary") {
  const auto r = check_axioms(zero_forcing_family(cycle_graph(5)));
  CHECK(r.m1);
  CHECK(r.m2);
}
