#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "linec4/solver.hpp"

using namespace linec4;

namespace {

// Counts 4-cycles by trying every ordered 4-tuple of distinct vertices; each
// cycle is seen 8 times (4 rotations, 2 directions).
std::size_t brute_cycle_count(const MultiGraph& g) {
  const std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  auto adj = [&](VertexId a, VertexId b) { return g.multiplicity(a, b) > 0; };
  std::size_t count = 0;
  for (auto a : vs) {
    for (auto b : vs) {
      for (auto c : vs) {
        for (auto d : vs) {
          const std::set<VertexId> s{a, b, c, d};
          if (s.size() != 4) continue;
          if (adj(a, b) && adj(b, c) && adj(c, d) && adj(d, a)) ++count;
        }
      }
    }
  }
  return count / 8;
}

MultiGraph random_graph(std::mt19937_64& rng, std::uint32_t n, double p) {
  MultiGraph g;
  std::uniform_real_distribution<double> u(0, 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    g.add_vertex(VertexId::plain(i));
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (u(rng) < p) g.add_edge(VertexId::plain(i), VertexId::plain(j), 1 + rng() % 2);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("candidate enumeration matches brute force") {
  const auto l23 = build_line_graph_kmn(2, 3, 1);
  CHECK(enumerate_candidate_cycles(l23).size() == brute_cycle_count(l23));
  CHECK(enumerate_candidate_cycles(l23).size() == 3);
  CHECK(enumerate_candidate_cycles(build_complete(5, 1)).size() == 15);
  CHECK(enumerate_candidate_cycles(build_complete_bipartite(3, 3, 1)).size() == 9);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiGraph g = random_graph(rng, 4 + trial % 5, 0.6);
    const auto cands = enumerate_candidate_cycles(g);
    CHECK(cands.size() == brute_cycle_count(g));
    CHECK(std::is_sorted(cands.begin(), cands.end()));
    CHECK(std::adjacent_find(cands.begin(), cands.end()) == cands.end());
  }
}

TEST_CASE("solver finds, refutes and runs out of budget") {
  const auto one = find_decomposition(build_line_graph_kmn(2, 2, 1));
  REQUIRE(one.found());
  CHECK(one.decomposition->size() == 1);

  const auto none = prove_nonexistence(build_line_graph_kmn(2, 3, 4));
  CHECK(none.status == SearchOutcome::Status::NoneExists);
  CHECK(!none.filtered);

  const auto filtered = find_decomposition(build_complete(5, 1));
  CHECK(filtered.status == SearchOutcome::Status::NoneExists);
  CHECK(filtered.filtered);

  SearchBudget tiny;
  tiny.node_limit = 1;
  CHECK(find_decomposition(build_line_graph_kmn(3, 3, 2), tiny).status ==
        SearchOutcome::Status::BudgetExceeded);
}

TEST_CASE("solver results verify and are deterministic per seed") {
  const MultiGraph g = build_line_graph_kmn(3, 3, 2);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    SearchBudget b;
    b.order_seed = seed;
    const auto r1 = find_decomposition(g, b);
    const auto r2 = find_decomposition(g, b);
    REQUIRE(r1.found());
    CHECK(verify_decomposition(g, *r1.decomposition).ok());
    CHECK(*r1.decomposition == *r2.decomposition);
  }
}

TEST_CASE("property: planted decompositions are recovered") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t nv = 5 + static_cast<std::uint32_t>(rng() % 4);
    MultiGraph g;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < count; ++k) {
      std::vector<std::uint32_t> vs(nv);
      for (std::uint32_t i = 0; i < nv; ++i) vs[i] = i;
      std::shuffle(vs.begin(), vs.end(), rng);
      g = edge_sum(g, cycle_graph(FourCycle(VertexId::plain(vs[0]), VertexId::plain(vs[1]),
                                             VertexId::plain(vs[2]), VertexId::plain(vs[3]))));
    }
    const auto r = find_decomposition(g);
    REQUIRE(r.found());
    CHECK(r.decomposition->size() == static_cast<std::size_t>(count));
    CHECK(verify_decomposition(g, *r.decomposition).ok());
  }
}

TEST_CASE("property: found and none-exists never both apply") {
  // A graph decomposes iff the solver says so; cross-check small random
  // graphs against the parity filter.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiGraph g = random_graph(rng, 5 + trial % 3, 0.7);
    const auto r = prove_nonexistence(g);
    REQUIRE(r.status != SearchOutcome::Status::BudgetExceeded);
    if (r.found()) {
      CHECK(verify_decomposition(g, *r.decomposition).ok());
      CHECK(g.edge_count() % 4 == 0);
    }
  }
}
