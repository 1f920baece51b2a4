#include "linec4/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "linec4/errors.hpp"

namespace linec4::pipeline {

namespace {

using blocks::PlainEdge;

VertexId at(std::uint32_t r, std::uint32_t c) { return VertexId::pair(r, c); }

FourCycle cyc(std::pair<std::uint32_t, std::uint32_t> a, std::pair<std::uint32_t, std::uint32_t> b,
              std::pair<std::uint32_t, std::uint32_t> c, std::pair<std::uint32_t, std::uint32_t> d) {
  return FourCycle(at(a.first, a.second), at(b.first, b.second), at(c.first, c.second),
                   at(d.first, d.second));
}

void check(const Decomposition& d, const Params& p, const std::string& what) {
  const auto g = build_line_graph_kmn(static_cast<std::uint32_t>(p.m),
                                      static_cast<std::uint32_t>(p.n), p.lambda);
  const VerifyReport r = verify_decomposition(g, d);
  if (!r.ok()) throw InternalVerificationError(what + " " + to_string(p) + ": " + r.describe());
}

/// Sends Plain(k) to image[k].
Decomposition place(const Decomposition& d, const std::vector<VertexId>& image) {
  return relabel(d, [&](VertexId v) { return image.at(v.index()); });
}

Decomposition shift_columns(const Decomposition& d, std::uint32_t offset) {
  return relabel(d, [&](VertexId v) { return at(v.row(), v.col() + offset); });
}

std::vector<VertexId> row_vertices(std::uint32_t r, std::uint32_t c0, std::uint32_t count) {
  std::vector<VertexId> out;
  for (std::uint32_t c = c0; c < c0 + count; ++c) out.push_back(at(r, c));
  return out;
}

std::vector<VertexId> column_vertices(std::uint32_t c, const std::vector<std::uint32_t>& rows) {
  std::vector<VertexId> out;
  for (std::uint32_t r : rows) out.push_back(at(r, c));
  return out;
}

std::vector<std::uint32_t> range(std::uint32_t from, std::uint32_t count) {
  std::vector<std::uint32_t> out(count);
  for (std::uint32_t k = 0; k < count; ++k) out[k] = from + k;
  return out;
}

std::vector<VertexId> concat(std::vector<VertexId> a, const std::vector<VertexId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// lambda K_{|A|,|B|} inside row r, between column blocks [a0, a0+na) and
/// [b0, b0+nb).
Decomposition row_bipartite(std::uint32_t r, std::uint32_t a0, std::uint32_t na, std::uint32_t b0,
                            std::uint32_t nb, std::uint64_t lambda) {
  return place(blocks::c4_of_lambda_complete_bipartite(na, nb, lambda),
               concat(row_vertices(r, a0, na), row_vertices(r, b0, nb)));
}

/// Hamilton cycle as arcs, read from its smallest vertex towards the smaller
/// of its two neighbours.
std::vector<std::pair<std::uint32_t, std::uint32_t>> oriented_arcs(
    const std::vector<std::uint32_t>& cycle) {
  const std::size_t len = cycle.size();
  const std::size_t p =
      static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const bool forward = cycle[(p + 1) % len] < cycle[(p + len - 1) % len];
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t i = forward ? (p + k) % len : (p + len - k) % len;
    const std::size_t j = forward ? (i + 1) % len : (i + len - 1) % len;
    arcs.emplace_back(cycle[i], cycle[j]);
  }
  return arcs;
}

}  // namespace

// ---- base grids -------------------------------------------------------------

Decomposition hamilton_product(std::uint32_t n) {
  const auto ham = blocks::walecki_hamilton(n);  // throws EvenOrderError
  Decomposition d;
  for (const auto& h : ham) {
    const auto arcs = oriented_arcs(h);
    for (auto [a, b] : arcs) {
      for (auto [x, y] : arcs) {
        d.add(FourCycle(at(a, x), at(b, x), at(b, y), at(a, y)));
      }
    }
  }
  check(d, {n, n, 2}, "Hamilton product");
  return d;
}

Decomposition grid_3x4_twofold() {
  Decomposition d;
  for (const FourCycle& c : {
           cyc({0, 0}, {0, 1}, {1, 1}, {1, 0}), cyc({0, 0}, {0, 2}, {1, 2}, {1, 0}),
           cyc({0, 2}, {0, 3}, {1, 3}, {1, 2}), cyc({0, 1}, {0, 3}, {1, 3}, {1, 1}),
           cyc({1, 0}, {1, 2}, {2, 2}, {2, 0}), cyc({1, 0}, {1, 3}, {2, 3}, {2, 0}),
           cyc({1, 1}, {1, 2}, {2, 2}, {2, 1}), cyc({1, 1}, {1, 3}, {2, 3}, {2, 1}),
           cyc({0, 0}, {0, 1}, {2, 1}, {2, 0}), cyc({0, 0}, {0, 3}, {2, 3}, {2, 0}),
           cyc({0, 1}, {0, 2}, {2, 2}, {2, 1}), cyc({0, 2}, {0, 3}, {2, 3}, {2, 2}),
           cyc({0, 0}, {0, 2}, {0, 1}, {0, 3}), cyc({1, 0}, {1, 1}, {1, 2}, {1, 3}),
           cyc({2, 0}, {2, 1}, {2, 3}, {2, 2}),
       }) {
    d.add(c);
  }
  check(d, {3, 4, 2}, "3x4 grid");
  return d;
}

Decomposition grid_3x7_twofold() {
  Decomposition d = grid_3x4_twofold();
  d.append(shift_columns(hamilton_product(3), 4));
  for (std::uint32_t r = 0; r < 3; ++r) d.append(row_bipartite(r, 0, 4, 4, 3, 2));
  check(d, {3, 7, 2}, "3x7 grid");
  return d;
}

Decomposition grid_3x5_fourfold() {
  Decomposition d;
  for (std::uint32_t i = 0; i < 5; ++i) {
    const std::uint32_t i1 = (i + 1) % 5;
    const std::uint32_t i2 = (i + 2) % 5;
    for (int copy = 0; copy < 2; ++copy) {
      d.add(cyc({0, i}, {0, i1}, {1, i1}, {1, i}));
      d.add(cyc({1, i}, {1, i2}, {2, i2}, {2, i}));
    }
    d.add(cyc({0, i}, {0, i1}, {2, i1}, {2, i}));
    d.add(cyc({0, i}, {0, i2}, {2, i2}, {2, i}));
  }
  // Leave of row 0 is K_5 plus a doubled pentagram.
  const std::vector<std::array<std::uint32_t, 4>> top{
      {0, 2, 4, 1}, {1, 3, 0, 2}, {2, 4, 1, 3}, {0, 2, 4, 3}, {0, 3, 1, 4}};
  for (const auto& q : top) d.add(cyc({0, q[0]}, {0, q[1]}, {0, q[2]}, {0, q[3]}));
  // Row 2 leaves the same graph under x -> 2x.
  for (const auto& q : top) {
    d.add(cyc({2, 2 * q[0] % 5}, {2, 2 * q[1] % 5}, {2, 2 * q[2] % 5}, {2, 2 * q[3] % 5}));
  }
  d.append(place(blocks::c4_of_lambda_complete(5, 2), row_vertices(1, 0, 5)));
  check(d, {3, 5, 4}, "3x5 grid");
  return d;
}

Decomposition grid_2xn_eightfold(std::uint32_t n) {
  if (n % 2 == 0 || n < 5) {
    throw EvenOrValueError("8L(K_{2,n}) needs odd n >= 5, got " + std::to_string(n));
  }
  Decomposition d;
  if (n == 5) {
    for (std::uint32_t i = 0; i < 5; ++i) {
      for (int copy = 0; copy < 2; ++copy) {
        d.add(cyc({0, i}, {0, (i + 1) % 5}, {1, (i + 1) % 5}, {1, i}));
        d.add(cyc({0, i}, {0, (i + 2) % 5}, {1, (i + 2) % 5}, {1, i}));
      }
    }
    const Decomposition six = blocks::c4_of_lambda_complete(5, 6);
    for (std::uint32_t r = 0; r < 2; ++r) d.append(place(six, row_vertices(r, 0, 5)));
  } else {
    d = grid_2xn_eightfold(5);
    d.append(shift_columns(replicate(blocks::c4_of_even_even_product(2, n - 5), 8), 5));
    for (std::uint32_t r = 0; r < 2; ++r) d.append(row_bipartite(r, 0, 5, 5, n - 5, 8));
  }
  check(d, {2, n, 8}, "2xn grid");
  return d;
}

Decomposition grid_3x6_fourfold() {
  const Decomposition square = replicate(hamilton_product(3), 2);
  Decomposition d = square;
  d.append(shift_columns(square, 3));
  for (std::uint32_t r = 0; r < 3; ++r) d.append(row_bipartite(r, 0, 3, 3, 3, 4));
  check(d, {3, 6, 4}, "3x6 grid");
  return d;
}

Decomposition grid_3x9_fourfold() {
  Decomposition d = replicate(hamilton_product(3), 2);
  d.append(shift_columns(grid_3x6_fourfold(), 3));
  for (std::uint32_t r = 0; r < 3; ++r) d.append(row_bipartite(r, 0, 3, 3, 6, 4));
  check(d, {3, 9, 4}, "3x9 grid");
  return d;
}

// ---- row extensions ---------------------------------------------------------

Decomposition add_rows_by_four(const Decomposition& base, const Params& bp, std::uint32_t a) {
  const auto m = static_cast<std::uint32_t>(bp.m);
  const auto n = static_cast<std::uint32_t>(bp.n);
  const std::uint64_t lambda = bp.lambda;
  if (a == 0) throw PreconditionError("a must be positive");
  if (lambda != 2 && lambda != 4) throw PreconditionError("lambda must be 2 or 4");
  if (n < 4) throw PreconditionError("at least 4 columns are needed");
  if (lambda == 2 && n % 4 != 0) {
    throw PreconditionError("for lambda = 2 the column count must be 0 mod 4");
  }
  if (!verify_decomposition(build_line_graph_kmn(m, n, lambda), base).ok()) {
    throw PreconditionError("base does not decompose lambda L(K_{m,n}) for " + to_string(bp));
  }

  const std::uint32_t fresh = 4 * a;
  Decomposition d = base;
  const Decomposition row_clique = blocks::c4_of_lambda_complete(n, lambda);
  for (std::uint32_t r = m; r < m + fresh; ++r) d.append(place(row_clique, row_vertices(r, 0, n)));

  if (m == 1) {
    const Decomposition col_clique = blocks::c4_of_lambda_complete(fresh + 1, lambda);
    for (std::uint32_t c = 0; c < n; ++c) {
      d.append(place(col_clique, column_vertices(c, range(0, fresh + 1))));
    }
  } else {
    const Decomposition col_clique = blocks::c4_of_lambda_complete(fresh, lambda);
    const Decomposition cross = blocks::c4_of_lambda_complete_bipartite(fresh, m, lambda);
    for (std::uint32_t c = 0; c < n; ++c) {
      const auto fresh_col = column_vertices(c, range(m, fresh));
      d.append(place(col_clique, fresh_col));
      d.append(place(cross, concat(fresh_col, column_vertices(c, range(0, m)))));
    }
  }
  check(d, {m + fresh, n, lambda}, "four-row extension");
  return d;
}

std::uint32_t leave_length(std::uint32_t n) {
  switch (n % 8) {
    case 1: return 0;
    case 3: return 3;
    case 5: return 6;
    case 7: return 5;
    default: throw PreconditionError("leave length needs odd n, got " + std::to_string(n));
  }
}

MixedLayer mixed_layer(std::uint32_t m, std::uint32_t n, const blocks::OneFactorSet& factors) {
  if (n % 2 == 0 || n == 1) throw PreconditionError("mixed layer needs odd n >= 3");
  // Coloured edges (c1, c2, factor) of the leave in each new row.
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>> coloured;
  if (n == 5) {
    // Two triangles through the last column, four colours.
    coloured = {{1, 2, 0}, {3, 4, 0}, {0, 3, 1}, {2, 4, 1}, {1, 4, 2}, {0, 4, 3}};
  } else {
    const std::uint32_t l = leave_length(n);
    for (std::uint32_t j = 0; j < l; ++j) {
      std::size_t colour = 0;
      if (l == 6) {
        colour = j % 2;
      } else {
        colour = j + 1 == l ? 2 : j % 2;
      }
      coloured.emplace_back(j, (j + 1) % l, colour);
    }
  }

  MixedLayer layer;
  layer.residual.assign(n, {});
  for (auto [c1, c2, k] : coloured) {
    for (auto [i, i2] : factors.factors[k]) {
      layer.cycles.emplace_back(at(m + i, c1), at(m + i, c2), at(m + i2, c2), at(m + i2, c1));
      layer.residual[c1].emplace_back(i, i2);
      layer.residual[c2].emplace_back(i, i2);
    }
  }
  return layer;
}

namespace {

bool is_regular(const std::vector<PlainEdge>& edges, std::uint32_t order, std::uint32_t degree) {
  std::vector<std::uint32_t> deg(order, 0);
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) return false;
    ++deg[u];
    ++deg[v];
  }
  return std::all_of(deg.begin(), deg.end(), [&](std::uint32_t x) { return x == degree; });
}

}  // namespace

Decomposition add_rows_by_eight(const Decomposition& base, const Params& bp, std::uint32_t a) {
  const auto m = static_cast<std::uint32_t>(bp.m);
  const auto n = static_cast<std::uint32_t>(bp.n);
  const std::uint64_t lambda = bp.lambda;
  if (a == 0) throw PreconditionError("a must be positive");
  if (m % 2 == 0 || n % 2 == 0) throw PreconditionError("eight-row extension needs m, n odd");
  if (std::uint64_t(m) * n < 4) throw PreconditionError("eight-row extension needs mn >= 4");
  if (!verify_decomposition(build_line_graph_kmn(m, n, lambda), base).ok()) {
    throw PreconditionError("base does not decompose lambda L(K_{m,n}) for " + to_string(bp));
  }
  const blocks::OneFactorSet factors = blocks::sehgal_one_factors(a);
  const std::uint32_t fresh = 8 * a;
  const std::uint32_t apex_row = m - 1;

  // Column j clique on the last old row and the new rows: Plain(0) is the
  // old row, Plain(k) the k-th new row.
  auto clique_image = [&](std::uint32_t c) {
    std::vector<std::uint32_t> rows{apex_row};
    for (std::uint32_t k = 0; k < fresh; ++k) rows.push_back(m + k);
    return column_vertices(c, rows);
  };

  Decomposition d = base;
  if (n == 1) {
    d.append(place(blocks::c4_of_lambda_complete(fresh + 1, lambda), clique_image(0)));
  } else {
    const MixedLayer layer = mixed_layer(m, n, factors);
    Decomposition mixed;
    mixed.cycles = layer.cycles;
    d.append(replicate(mixed, lambda));

    // What the leave cycle does not use in each new row.
    Decomposition row_rest;
    if (n == 5) {
      Decomposition quad;
      quad.add(FourCycle(VertexId::plain(0), VertexId::plain(1), VertexId::plain(3),
                         VertexId::plain(2)));
      row_rest = replicate(quad, lambda);
    } else if (n != 3) {
      const std::uint32_t l = leave_length(n);
      if (l == 0) {
        row_rest = blocks::c4_of_lambda_complete(n, lambda);
      } else {
        std::vector<PlainEdge> leave;
        for (std::uint32_t j = 0; j < l; ++j) leave.emplace_back(j, (j + 1) % l);
        row_rest = blocks::c4_of_complete_minus_2factor(n, leave, lambda);
      }
    }
    for (std::uint32_t k = 0; k < fresh; ++k) d.append(place(row_rest, row_vertices(m + k, 0, n)));

    for (std::uint32_t c = 0; c < n; ++c) {
      const auto& res = layer.residual[c];
      if (res.empty()) {
        d.append(place(blocks::c4_of_lambda_complete(fresh + 1, lambda), clique_image(c)));
      } else if (n == 5 && c == 4) {
        if (!is_regular(res, fresh, 4)) {
          throw InternalVerificationError("apex column residual is not 4-regular");
        }
        // The apex block puts its apex last; the clique image puts it first.
        auto image = clique_image(c);
        std::rotate(image.begin(), image.begin() + 1, image.end());
        d.append(place(replicate(factors.residual_apex_decomposition, lambda), image));
      } else {
        if (!is_regular(res, fresh, 2)) {
          throw InternalVerificationError("column residual is not a 2-factor");
        }
        std::vector<PlainEdge> shifted;
        for (auto [u, v] : res) shifted.emplace_back(u + 1, v + 1);
        d.append(place(blocks::c4_of_complete_minus_2factor(fresh + 1, shifted, lambda),
                       clique_image(c)));
      }
    }
  }

  if (m > 1) {
    const Decomposition cross = blocks::c4_of_lambda_complete_bipartite(m - 1, fresh, lambda);
    for (std::uint32_t c = 0; c < n; ++c) {
      d.append(place(cross, concat(column_vertices(c, range(0, m - 1)),
                                   column_vertices(c, range(m, fresh)))));
    }
  }
  check(d, {m + fresh, n, lambda}, "eight-row extension");
  return d;
}

// ---- dispatch ---------------------------------------------------------------

std::string_view to_string(BaseKind k) {
  switch (k) {
    case BaseKind::EvenEvenGrid: return "even-even-grid";
    case BaseKind::CompleteRow: return "complete-row";
    case BaseKind::HamiltonProduct: return "hamilton-product";
    case BaseKind::Grid3x4: return "grid-3x4";
    case BaseKind::Grid3x7: return "grid-3x7";
    case BaseKind::Grid3x5: return "grid-3x5";
    case BaseKind::Grid3x6: return "grid-3x6";
    case BaseKind::Grid3x9: return "grid-3x9";
    case BaseKind::Grid2xOdd: return "grid-2xodd";
    case BaseKind::SolverSeed: return "solver-seed";
  }
  return "?";
}

std::string to_string(const PlanStep& s) {
  switch (s.kind) {
    case PlanStep::Kind::AddFourToM: return "AddFourToM(" + std::to_string(s.value) + ")";
    case PlanStep::Kind::AddEightToM: return "AddEightToM(" + std::to_string(s.value) + ")";
    case PlanStep::Kind::Transpose: return "Transpose";
    case PlanStep::Kind::Replicate: return "Replicate(" + std::to_string(s.value) + ")";
    case PlanStep::Kind::ColumnExtend: return "ColumnExtend(" + std::to_string(s.value) + ")";
  }
  return "?";
}

Params RecursionPlan::replay() const {
  Params p = base;
  for (const auto& s : steps) {
    switch (s.kind) {
      case PlanStep::Kind::AddFourToM: p.m += 4 * s.value; break;
      case PlanStep::Kind::AddEightToM: p.m += 8 * s.value; break;
      case PlanStep::Kind::Transpose: p = p.swapped(); break;
      case PlanStep::Kind::Replicate: p.lambda *= s.value; break;
      case PlanStep::Kind::ColumnExtend: p.n += 4 * s.value; break;
    }
  }
  return p;
}

std::string RecursionPlan::summary() const {
  std::ostringstream out;
  out << "case " << to_string(case_tag) << ", mu " << base_multiplicity << "; base "
      << to_string(base_kind) << " " << to_string(base);
  for (const auto& s : steps) out << " -> " << to_string(s);
  return out.str();
}

namespace {

using Kind = PlanStep::Kind;

void add_eights(std::vector<PlanStep>& steps, std::uint64_t from, std::uint64_t to) {
  std::uint64_t blocks8 = (to - from) / 8;
  while (blocks8 > 0) {
    const std::uint64_t a = std::min<std::uint64_t>(blocks8, 2);
    steps.push_back({Kind::AddEightToM, a});
    blocks8 -= a;
  }
}

void drop_double_transposes(std::vector<PlanStep>& steps) {
  std::vector<PlanStep> out;
  for (const auto& s : steps) {
    if (s.kind == Kind::Transpose && !out.empty() && out.back().kind == Kind::Transpose) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  steps = std::move(out);
}

}  // namespace

RecursionPlan plan(const Params& p) {
  const Verdict v = decide(p);
  if (!v.feasible) throw NotFeasibleError("no C4-decomposition exists for " + to_string(p));
  RecursionPlan r;
  r.case_tag = *v.case_tag;
  r.base_multiplicity = *v.base_multiplicity;
  const std::uint64_t mu = r.base_multiplicity;
  std::vector<PlanStep>& steps = r.steps;

  // Rows and columns of the orientation the plan builds in; a final
  // Transpose is added when it differs from (p.m, p.n).
  std::uint64_t rows = p.m;
  std::uint64_t cols = p.n;

  switch (r.case_tag) {
    case CaseTag::EvenEven:
      r.base = {p.m, p.n, 1};
      r.base_kind = BaseKind::EvenEvenGrid;
      break;

    case CaseTag::Mixed_m_eq_2: {
      const std::uint64_t odd = p.m % 2 == 1 ? p.m : p.n;
      rows = 2;
      cols = odd;
      r.base = {2, odd, 8};
      r.base_kind = BaseKind::Grid2xOdd;
      break;
    }

    case CaseTag::Mixed_mod4_0:
    case CaseTag::Mixed_mod4_2: {
      const std::uint64_t even = p.m % 2 == 0 ? p.m : p.n;
      const std::uint64_t odd = p.m % 2 == 0 ? p.n : p.m;
      rows = odd;
      cols = even;
      const bool zero = r.case_tag == CaseTag::Mixed_mod4_0;
      if (odd % 4 == 1) {
        r.base = {1, even, mu};
        r.base_kind = BaseKind::CompleteRow;
        if (odd > 1) steps.push_back({Kind::AddFourToM, (odd - 1) / 4});
      } else {
        const std::uint64_t width = zero ? 4 : 6;
        r.base = {3, width, mu};
        r.base_kind = zero ? BaseKind::Grid3x4 : BaseKind::Grid3x6;
        if (odd > 3) steps.push_back({Kind::AddFourToM, (odd - 3) / 4});
        if (even > width) steps.push_back({Kind::ColumnExtend, (even - width) / 4});
      }
      break;
    }

    case CaseTag::OddOdd_2_1:
    case CaseTag::OddOdd_2_2:
    case CaseTag::OddOdd_2_3: {
      const std::uint64_t r1 = p.m % 8;
      const std::uint64_t r2 = p.n % 8;
      if (r1 == 1 || r2 == 1) {
        // Grow the side that is 1 mod 8 from a single row (or from 9 rows
        // when the other side is 3).
        std::uint64_t grown = 0;
        std::uint64_t other = 0;
        if (r1 == 1 && r2 == 1) {
          grown = std::min(p.m, p.n);
          other = std::max(p.m, p.n);
        } else {
          grown = r1 == 1 ? p.m : p.n;
          other = r1 == 1 ? p.n : p.m;
        }
        rows = grown;
        cols = other;
        if (other == 3) {
          r.base = {3, 9, mu};
          r.base_kind = BaseKind::Grid3x9;
          steps.push_back({Kind::Transpose, 0});
          add_eights(steps, 9, grown);
        } else {
          r.base = {1, other, mu};
          r.base_kind = BaseKind::CompleteRow;
          add_eights(steps, 1, grown);
        }
      } else {
        // Seed on the residues, rows carrying the smaller residue.
        const bool keep = r1 <= r2;
        rows = keep ? p.m : p.n;
        cols = keep ? p.n : p.m;
        const std::uint64_t lo = std::min(r1, r2);
        const std::uint64_t hi = std::max(r1, r2);
        std::uint64_t seed_rows = 0;
        std::uint64_t seed_cols = 0;
        if (lo == 5 && hi == 7) {
          r.base = {1, 7, mu};
          r.base_kind = BaseKind::CompleteRow;
          steps.push_back({Kind::AddFourToM, 1});
          seed_rows = 5;
          seed_cols = 7;
        } else {
          seed_rows = lo;
          seed_cols = hi;
          r.base = {lo, hi, mu};
          if (lo == hi && lo != 5) {
            r.base_kind = BaseKind::HamiltonProduct;
          } else if (lo == 3 && hi == 7) {
            r.base_kind = BaseKind::Grid3x7;
          } else if (lo == 3 && hi == 5) {
            r.base_kind = BaseKind::Grid3x5;
          } else {
            r.base_kind = BaseKind::SolverSeed;  // 5 x 5 at lambda = 1
          }
        }
        add_eights(steps, seed_rows, rows);
        if (cols > seed_cols) {
          steps.push_back({Kind::Transpose, 0});
          add_eights(steps, seed_cols, cols);
          steps.push_back({Kind::Transpose, 0});
        }
      }
      break;
    }
  }

  if (rows != p.m || cols != p.n) steps.push_back({Kind::Transpose, 0});
  if (p.lambda / mu > 1) steps.push_back({Kind::Replicate, p.lambda / mu});
  drop_double_transposes(steps);

  if (r.replay() != p) {
    throw InternalVerificationError("plan for " + to_string(p) + " replays to " +
                                    to_string(r.replay()));
  }
  return r;
}

namespace {

Decomposition build_base(BaseKind kind, const Params& b) {
  const auto m = static_cast<std::uint32_t>(b.m);
  const auto n = static_cast<std::uint32_t>(b.n);
  switch (kind) {
    case BaseKind::EvenEvenGrid: return blocks::c4_of_even_even_product(m, n);
    case BaseKind::CompleteRow:
      return place(blocks::c4_of_lambda_complete(n, b.lambda), row_vertices(0, 0, n));
    case BaseKind::HamiltonProduct: return hamilton_product(m);
    case BaseKind::Grid3x4: return grid_3x4_twofold();
    case BaseKind::Grid3x7: return grid_3x7_twofold();
    case BaseKind::Grid3x5: return grid_3x5_fourfold();
    case BaseKind::Grid3x6: return grid_3x6_fourfold();
    case BaseKind::Grid3x9: return grid_3x9_fourfold();
    case BaseKind::Grid2xOdd: return grid_2xn_eightfold(n);
    case BaseKind::SolverSeed: return blocks::solver_seed_line_graph(m, n, b.lambda);
  }
  throw InternalVerificationError("unknown base kind");
}

}  // namespace

Decomposition execute(const RecursionPlan& pl) {
  Params cur = pl.base;
  Decomposition d = build_base(pl.base_kind, cur);
  for (const auto& s : pl.steps) {
    switch (s.kind) {
      case Kind::AddFourToM:
        d = add_rows_by_four(d, cur, static_cast<std::uint32_t>(s.value));
        cur.m += 4 * s.value;
        break;
      case Kind::AddEightToM:
        d = add_rows_by_eight(d, cur, static_cast<std::uint32_t>(s.value));
        cur.m += 8 * s.value;
        break;
      case Kind::Transpose:
        d = relabel(d, transpose);
        cur = cur.swapped();
        break;
      case Kind::Replicate:
        d = replicate(d, s.value);
        cur.lambda *= s.value;
        break;
      case Kind::ColumnExtend: {
        // lambda L(K_{m,c+4}) = lambda L(K_{m,c}) + lambda L(K_{m,4}) + a
        // lambda K_{c,4} in every row.
        const Decomposition strip = construct({cur.m, 4, cur.lambda});
        const auto m = static_cast<std::uint32_t>(cur.m);
        for (std::uint64_t k = 0; k < s.value; ++k) {
          const auto c = static_cast<std::uint32_t>(cur.n);
          d.append(shift_columns(strip, c));
          for (std::uint32_t r = 0; r < m; ++r) d.append(row_bipartite(r, 0, c, c, 4, cur.lambda));
          cur.n += 4;
        }
        check(d, cur, "column extension");
        break;
      }
    }
  }
  check(d, cur, "construction");
  return d;
}

Decomposition construct(const Params& p) {
  Decomposition d = execute(plan(p));
  if (d.size() != expected_cycle_count(p)) {
    throw InternalVerificationError("construction for " + to_string(p) + " has " +
                                    std::to_string(d.size()) + " cycles");
  }
  return d;
}

}  // namespace linec4::pipeline
