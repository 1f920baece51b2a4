#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "linec4/errors.hpp"
#include "linec4/pipeline.hpp"

using namespace linec4;
using namespace linec4::pipeline;

namespace {

VertexId Q(std::uint32_t r, std::uint32_t c) { return VertexId::pair(r, c); }

bool decomposes(const Decomposition& d, std::uint64_t m, std::uint64_t n, std::uint64_t lambda) {
  return verify_decomposition(
             build_line_graph_kmn(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(n),
                                  lambda),
             d)
      .ok();
}

// Expected size from the edge count alone: lambda mn(m+n-2)/8.
std::size_t cycles_for(std::uint64_t m, std::uint64_t n, std::uint64_t lambda) {
  return lambda * m * n * (m + n - 2) / 8;
}

std::size_t occurrences(const Decomposition& d, const FourCycle& c) {
  return static_cast<std::size_t>(std::count(d.cycles.begin(), d.cycles.end(), c));
}

// A decomposition of mu K_n placed in a single row or column of the grid.
Decomposition in_row(const Decomposition& k, std::uint32_t row) {
  return relabel(k, [row](VertexId v) { return Q(row, v.index()); });
}
Decomposition in_column(const Decomposition& k, std::uint32_t col) {
  return relabel(k, [col](VertexId v) { return Q(v.index(), col); });
}

}  // namespace

TEST_CASE("Hamilton products decompose 2L(K_{n,n})") {
  for (std::uint32_t n : {3u, 5u, 7u, 9u}) {
    const Decomposition d = hamilton_product(n);
    CHECK(d.size() == n * n * (n - 1) / 2);
    CHECK(decomposes(d, n, n, 2));
  }
  CHECK_THROWS_AS(hamilton_product(4), EvenOrderError);
}

TEST_CASE("fixed base grids") {
  const Decomposition g34 = grid_3x4_twofold();
  CHECK(g34.size() == 15);
  CHECK(decomposes(g34, 3, 4, 2));
  CHECK(occurrences(g34, FourCycle(Q(0, 0), Q(0, 1), Q(1, 1), Q(1, 0))) >= 1);

  CHECK(grid_3x7_twofold().size() == 42);
  CHECK(decomposes(grid_3x7_twofold(), 3, 7, 2));

  const Decomposition g35 = grid_3x5_fourfold();
  CHECK(g35.size() == 45);
  CHECK(decomposes(g35, 3, 5, 4));
  // Each unit square between rows 0 and 1 appears twice.
  for (std::uint32_t i = 0; i < 5; ++i) {
    const std::uint32_t j = (i + 1) % 5;
    CHECK(occurrences(g35, FourCycle(Q(0, i), Q(0, j), Q(1, j), Q(1, i))) == 2);
  }

  CHECK(grid_2xn_eightfold(5).size() == 50);
  CHECK(grid_2xn_eightfold(7).size() == 98);
  CHECK(decomposes(grid_2xn_eightfold(9), 2, 9, 8));
  CHECK_THROWS_AS(grid_2xn_eightfold(6), EvenOrValueError);
  CHECK_THROWS_AS(grid_2xn_eightfold(3), EvenOrValueError);

  CHECK(grid_3x6_fourfold().size() == 63);
  CHECK(decomposes(grid_3x6_fourfold(), 3, 6, 4));
  CHECK(grid_3x9_fourfold().size() == 135);
  CHECK(decomposes(grid_3x9_fourfold(), 3, 9, 4));
}

TEST_CASE("adding rows four at a time") {
  const Decomposition g34 = grid_3x4_twofold();
  const Decomposition a1 = add_rows_by_four(g34, {3, 4, 2}, 1);
  CHECK(a1.size() == 63);
  CHECK(decomposes(a1, 7, 4, 2));
  const Decomposition a2 = add_rows_by_four(g34, {3, 4, 2}, 2);
  CHECK(a2.size() == 143);
  CHECK(decomposes(a2, 11, 4, 2));

  const Decomposition row = in_row(blocks::c4_of_lambda_complete(4, 2), 0);
  const Decomposition from_row = add_rows_by_four(row, {1, 4, 2}, 1);
  CHECK(from_row.size() == cycles_for(5, 4, 2));
  CHECK(decomposes(from_row, 5, 4, 2));

  const Decomposition g35 = add_rows_by_four(grid_3x5_fourfold(), {3, 5, 4}, 1);
  CHECK(g35.size() == 175);
  CHECK(decomposes(g35, 7, 5, 4));

  CHECK_THROWS_AS(add_rows_by_four(g34, {3, 4, 1}, 1), PreconditionError);
  CHECK_THROWS_AS(add_rows_by_four(grid_3x7_twofold(), {3, 7, 2}, 1), PreconditionError);
  CHECK_THROWS_AS(add_rows_by_four(g34, {3, 5, 2}, 1), PreconditionError);
}

TEST_CASE("adding rows eight at a time") {
  const Decomposition l33 = hamilton_product(3);
  const Decomposition e1 = add_rows_by_eight(l33, {3, 3, 2}, 1);
  CHECK(e1.size() == 99);
  CHECK(decomposes(e1, 11, 3, 2));

  const Decomposition row = in_row(blocks::c4_of_lambda_complete(5, 2), 0);
  const Decomposition from_row = add_rows_by_eight(row, {1, 5, 2}, 1);
  CHECK(from_row.size() == 135);
  CHECK(decomposes(from_row, 9, 5, 2));

  const Decomposition g35 = add_rows_by_eight(grid_3x5_fourfold(), {3, 5, 4}, 1);
  CHECK(g35.size() == 385);
  CHECK(decomposes(g35, 11, 5, 4));

  const Decomposition col = in_column(blocks::c4_of_lambda_complete(5, 4), 0);
  const Decomposition from_col = add_rows_by_eight(col, {5, 1, 4}, 1);
  CHECK(from_col.size() == 78);
  CHECK(decomposes(from_col, 13, 1, 4));

  const Decomposition two = add_rows_by_eight(l33, {3, 3, 2}, 2);
  CHECK(two.size() == cycles_for(19, 3, 2));
  CHECK(decomposes(two, 19, 3, 2));

  CHECK_THROWS_AS(add_rows_by_eight(l33, {3, 3, 2}, 3), BudgetExceededError);
  CHECK_THROWS_AS(add_rows_by_eight(grid_3x4_twofold(), {3, 4, 2}, 1), PreconditionError);
  CHECK_THROWS_AS(add_rows_by_eight(l33, {3, 3, 4}, 1), PreconditionError);
}

TEST_CASE("leave lengths") {
  CHECK(leave_length(1) == 0);
  CHECK(leave_length(3) == 3);
  CHECK(leave_length(5) == 6);
  CHECK(leave_length(7) == 5);
  CHECK(leave_length(9) == 0);
  CHECK(leave_length(15) == 5);
}

TEST_CASE("property: mixed layers use grid edges once and leave regular columns") {
  for (std::uint32_t a : {1u, 2u}) {
    const blocks::OneFactorSet f = blocks::sehgal_one_factors(a);
    for (std::uint32_t n : {3u, 5u, 7u, 11u, 13u}) {
      CAPTURE(a);
      CAPTURE(n);
      const std::uint32_t m = 3;
      const MixedLayer layer = mixed_layer(m, n, f);
      std::set<Edge> used;
      for (const auto& c : layer.cycles) {
        for (int k = 0; k < 4; ++k) {
          const VertexId u = c[k], v = c[(k + 1) % 4];
          CHECK((u.row() == v.row()) != (u.col() == v.col()));
          CHECK(u.row() >= m - 1);
          CHECK(u.row() < m + 8 * a);
          CHECK(used.insert(make_edge(u, v)).second);
        }
      }
      REQUIRE(layer.residual.size() == n);
      for (const auto& col : layer.residual) {
        std::map<std::uint32_t, int> deg;
        for (auto [u, v] : col) {
          CHECK(u < 8 * a);
          CHECK(v < 8 * a);
          ++deg[u];
          ++deg[v];
        }
        if (deg.empty()) continue;
        const int d0 = deg.begin()->second;
        CHECK(d0 % 2 == 0);
        for (const auto& [vertex, d] : deg) CHECK(d == d0);
      }
    }
  }
}

TEST_CASE("plans for reference parameters") {
  const RecursionPlan p1132 = plan({11, 3, 2});
  CHECK(p1132.base.m == 3);
  CHECK(p1132.base.n == 3);
  CHECK(p1132.base_multiplicity == 2);
  REQUIRE(p1132.steps.size() == 1);
  CHECK(p1132.steps[0] == PlanStep{PlanStep::Kind::AddEightToM, 1});

  CHECK(plan({3, 4, 2}).steps.empty());
  CHECK(plan({3, 4, 2}).base_kind == BaseKind::Grid3x4);
  const RecursionPlan p346 = plan({3, 4, 6});
  REQUIRE(p346.steps.size() == 1);
  CHECK(p346.steps[0] == PlanStep{PlanStep::Kind::Replicate, 3});
  CHECK(!p346.summary().empty());

  CHECK_THROWS_AS(plan({3, 7, 1}), NotFeasibleError);
  CHECK_THROWS_AS(plan({1, 3, 1}), OutOfTheoremScope);
}

TEST_CASE("property: plans replay to their parameters and constructions verify") {
  for (std::uint64_t m = 1; m <= 13; ++m) {
    for (std::uint64_t n = 1; n <= 13; ++n) {
      if (m * n < 4) continue;
      for (std::uint64_t l = 1; l <= 8; ++l) {
        const Params p{m, n, l};
        if (!decide(p).feasible) continue;
        CAPTURE(to_string(p));
        const RecursionPlan pl = plan(p);
        const Params r = pl.replay();
        CHECK(r.m == m);
        CHECK(r.n == n);
        CHECK(r.lambda == l);
        CHECK(l % pl.base_multiplicity == 0);
        if (m <= 7 && n <= 7) {
          const Decomposition d = execute(pl);
          CHECK(d.size() == expected_cycle_count(p));
          CHECK(decomposes(d, m, n, l));
        }
      }
    }
  }
}

TEST_CASE("transposed parameters give transposed graphs") {
  for (const Params p : {Params{4, 3, 2}, Params{5, 2, 8}, Params{7, 5, 4}, Params{3, 11, 2}}) {
    CAPTURE(to_string(p));
    const Decomposition d = construct(p);
    const Decomposition t = relabel(d, transpose);
    CHECK(decomposes(t, p.n, p.m, p.lambda));
  }
}

TEST_CASE("small and repeated constructions") {
  const Decomposition one = construct({2, 2, 1});
  REQUIRE(one.size() == 1);
  CHECK(decomposes(one, 2, 2, 1));

  const Decomposition twice = construct({4, 4, 2});
  CHECK(decomposes(twice, 4, 4, 2));
  CHECK(construct({5, 7, 4}) == construct({5, 7, 4}));
  CHECK_THROWS_AS(construct({2, 3, 8}), NotFeasibleError);
}
