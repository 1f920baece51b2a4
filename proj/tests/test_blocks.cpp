#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "linec4/blocks.hpp"
#include "linec4/errors.hpp"

using namespace linec4;
using namespace linec4::blocks;

namespace {

VertexId P(std::uint32_t i) { return VertexId::plain(i); }

bool is_perfect_matching(const std::vector<PlainEdge>& f, std::uint32_t order) {
  std::vector<int> cover(order, 0);
  for (auto [u, v] : f) {
    if (u >= order || v >= order) return false;
    ++cover[u];
    ++cover[v];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

// Random 2-regular graph on a random subset of 0..n-1, built from cycles of
// length >= 3 whose total edge count makes K_n - F divisible by 4.
std::vector<PlainEdge> random_two_factor(std::mt19937_64& rng, std::uint32_t n) {
  for (;;) {
    std::vector<std::uint32_t> vs(n);
    for (std::uint32_t i = 0; i < n; ++i) vs[i] = i;
    std::shuffle(vs.begin(), vs.end(), rng);
    std::vector<PlainEdge> f;
    std::uint32_t at = 0;
    while (n - at >= 3 && rng() % 3 != 0) {
      const std::uint32_t len = 3 + static_cast<std::uint32_t>(rng() % std::min(5u, n - at - 2));
      for (std::uint32_t k = 0; k < len; ++k) f.emplace_back(vs[at + k], vs[at + (k + 1) % len]);
      at += len;
    }
    if ((n * (n - 1) / 2 - f.size()) % 4 == 0) return f;
  }
}

}  // namespace

TEST_CASE("Walecki cycles partition K_n for odd n <= 15") {
  for (std::uint32_t n = 3; n <= 15; n += 2) {
    const auto cycles = walecki_hamilton(n);
    CHECK(cycles.size() == (n - 1) / 2);
    std::set<PlainEdge> seen;
    for (const auto& c : cycles) {
      REQUIRE(c.size() == n);
      CHECK(std::set<std::uint32_t>(c.begin(), c.end()).size() == n);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(seen.insert(std::minmax(c[k], c[(k + 1) % n])).second);
      }
    }
    CHECK(seen.size() == n * (n - 1) / 2);
  }
  CHECK_THROWS_AS(walecki_hamilton(6), EvenOrderError);
  CHECK_THROWS_AS(walecki_hamilton(1), EvenOrderError);
}

TEST_CASE("minimal multiplicity of lambda K_n") {
  CHECK(minimal_complete_multiplicity(3) == 0);
  CHECK(minimal_complete_multiplicity(4) == 2);
  CHECK(minimal_complete_multiplicity(5) == 2);
  CHECK(minimal_complete_multiplicity(6) == 4);
  CHECK(minimal_complete_multiplicity(7) == 4);
  CHECK(minimal_complete_multiplicity(8) == 2);
  CHECK(minimal_complete_multiplicity(9) == 1);
  CHECK(minimal_complete_multiplicity(11) == 4);
  CHECK(minimal_complete_multiplicity(13) == 2);
}

TEST_CASE("difference families cover every class lambda times") {
  for (auto [n, lambda] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{
           {9, 1}, {17, 1}, {9, 2}, {5, 2}, {5, 4}, {13, 2}, {8, 2}, {12, 2}, {4, 2}}) {
    CAPTURE(n);
    CAPTURE(lambda);
    const auto f = find_difference_family(n, lambda);
    REQUIRE(f.has_value());
    for (const auto& [cls, count] : difference_class_counts(*f)) {
      CAPTURE(cls);
      CHECK(count == lambda);
    }
    const Decomposition d = develop(*f);
    CHECK(verify_decomposition(build_complete(n, lambda), d).ok());
    CHECK(d.size() * 4 == lambda * n * (n - 1) / 2);
  }
  CHECK(!find_difference_family(6, 1).has_value());
}

TEST_CASE("lambda K_n blocks") {
  CHECK(c4_of_lambda_complete(5, 2).size() == 5);
  CHECK(c4_of_lambda_complete(4, 4).size() == 6);
  for (std::uint32_t n = 4; n <= 20; ++n) {
    for (std::uint64_t lambda = 1; lambda <= 8; ++lambda) {
      const bool ok = lambda * (n - 1) % 2 == 0 && lambda * n * (n - 1) / 2 % 4 == 0;
      if (ok) {
        CHECK(verify_decomposition(build_complete(n, lambda), c4_of_lambda_complete(n, lambda))
                  .ok());
      } else {
        CHECK_THROWS_AS(c4_of_lambda_complete(n, lambda), InfeasibleBlockError);
      }
    }
  }
}

TEST_CASE("K_n minus a 2-factor") {
  BlockCache cache;
  std::mt19937_64 rng(5);
  for (std::uint32_t n : {7u, 9u, 11u, 13u}) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto f = random_two_factor(rng, n);
      MultiGraph target = build_complete(n, 1);
      EdgeMultiset removed;
      for (auto [u, v] : f) removed[make_edge(P(u), P(v))] += 1;
      target = remove_edges(target, removed);
      CHECK(verify_decomposition(target, c4_of_complete_minus_2factor(n, f, 1, cache)).ok());
    }
  }
  const std::vector<PlainEdge> triangle{{0, 1}, {1, 2}, {2, 0}};
  // K_5 minus a triangle has 7 edges, and its edge {3,4} lies on no 4-cycle.
  CHECK_THROWS_AS(c4_of_complete_minus_2factor(5, triangle, 1, cache), InfeasibleBlockError);
  CHECK_THROWS(c4_of_complete_minus_2factor(5, triangle, 4, cache));
  CHECK(c4_of_complete_minus_2factor(7, triangle, 2, cache).size() == 9);
  CHECK_THROWS_AS(c4_of_complete_minus_2factor(9, {{0, 1}, {1, 2}}, 1, cache),
                  InfeasibleBlockError);
  CHECK_THROWS_AS(c4_of_complete_minus_2factor(19, triangle, 1, cache), BudgetExceededError);
}

TEST_CASE("four 1-factors with a decomposable apex join") {
  BlockCache cache;
  for (std::uint32_t x : {1u, 2u}) {
    const OneFactorSet s = sehgal_one_factors(x, cache);
    CHECK(s.host_order == 8 * x);
    std::set<PlainEdge> used;
    for (const auto& f : s.factors) {
      CHECK(is_perfect_matching(f, 8 * x));
      for (auto [u, v] : f) CHECK(used.insert(std::minmax(u, v)).second);
    }
    CHECK(verify_decomposition(apex_residual_graph(s), s.residual_apex_decomposition).ok());
  }
  CHECK_THROWS_AS(sehgal_one_factors(3, cache), BudgetExceededError);
}

TEST_CASE("lambda K_{m,n} blocks") {
  for (std::uint32_t m = 2; m <= 8; ++m) {
    for (std::uint32_t n = 2; n <= 8; ++n) {
      CHECK(verify_decomposition(build_complete_bipartite(m, n, 4), torus_bipartite(m, n)).ok());
      for (std::uint64_t lambda = 1; lambda <= 8; ++lambda) {
        const bool ok = lambda % 2 == 1   ? m % 2 == 0 && n % 2 == 0
                        : lambda % 4 == 2 ? (m * n) % 2 == 0
                                          : true;
        if (ok) {
          CHECK(verify_decomposition(build_complete_bipartite(m, n, lambda),
                                     c4_of_lambda_complete_bipartite(m, n, lambda))
                    .ok());
        } else {
          CHECK_THROWS_AS(c4_of_lambda_complete_bipartite(m, n, lambda), InfeasibleBlockError);
        }
      }
    }
  }
}

TEST_CASE("even-even grid") {
  for (std::uint32_t m = 2; m <= 12; m += 2) {
    for (std::uint32_t n = 2; n <= 12; n += 2) {
      const Decomposition d = c4_of_even_even_product(m, n);
      CHECK(verify_decomposition(build_line_graph_kmn(m, n, 1), d).ok());
      CHECK(d.size() * 8 == m * n * (m + n - 2));
    }
  }
  CHECK(c4_of_even_even_product(4, 2).size() == 4);
  CHECK(c4_of_even_even_product(6, 8).size() == 72);
  CHECK_THROWS_AS(c4_of_even_even_product(3, 4), InfeasibleBlockError);
}

TEST_CASE("block cache persists, re-verifies and evicts corrupt entries") {
  const auto path = std::filesystem::temp_directory_path() / "linec4_test_cache.json";
  std::filesystem::remove(path);
  const std::vector<PlainEdge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  Decomposition first;
  {
    BlockCache cache(path);
    first = c4_of_complete_minus_2factor(7, c5, 1, cache);
    CHECK(cache.size() == 1);
  }
  REQUIRE(std::filesystem::exists(path));
  {
    BlockCache reloaded(path);
    CHECK(reloaded.size() == 1);
    CHECK(c4_of_complete_minus_2factor(7, c5, 1, reloaded) == first);
  }

  // Corrupt every stored cycle list; the block must still come back valid.
  nlohmann::json doc;
  {
    std::ifstream in(path);
    doc = nlohmann::json::parse(in);
  }
  for (auto& [key, entry] : doc["entries"].items()) {
    entry["cycles"] = nlohmann::json::array({nlohmann::json::array({0, 1, 2, 3})});
  }
  {
    std::ofstream out(path);
    out << doc.dump();
  }
  {
    BlockCache corrupt(path);
    const Decomposition again = c4_of_complete_minus_2factor(7, c5, 1, corrupt);
    CHECK(again == first);
  }
  {
    BlockCache healed(path);
    CHECK(c4_of_complete_minus_2factor(7, c5, 1, healed) == first);
  }
  std::filesystem::remove(path);
}

TEST_CASE("cycle encoding round trip") {
  Decomposition d;
  d.add(FourCycle(VertexId::pair(0, 0), VertexId::pair(0, 1), VertexId::pair(1, 1),
                  VertexId::pair(1, 0)));
  d.add(FourCycle(P(0), P(3), P(1), P(2)));
  CHECK(decode_cycles(encode_cycles(d)) == d);
  CHECK_THROWS_AS(decode_cycles(nlohmann::json::array({nlohmann::json::array({0, 0, 1, 2})})),
                  DocumentError);
  CHECK_THROWS_AS(decode_cycles(nlohmann::json::object()), DocumentError);
}
