#pragma once

// Constructive side of the characterization: explicit base decompositions
// for small grids, the two row-extension recursions, and the dispatch that
// assembles a verified decomposition of lambda L(K_{m,n}) for every feasible
// (m, n, lambda).
//
// Grid vertices are Pair(row, col) with 0-based coordinates; rows index the
// m side and columns the n side. Every function verifies its result against
// the graph it claims to decompose and throws InternalVerificationError
// otherwise.

#include <cstdint>
#include <string>
#include <vector>

#include "linec4/blocks.hpp"
#include "linec4/feasibility.hpp"
#include "linec4/multigraph.hpp"

namespace linec4::pipeline {

// ---- base grids -------------------------------------------------------------

/// 2L(K_{n,n}) from products of oriented Hamilton cycles; n^2(n-1)/2 cycles.
/// Throws EvenOrderError for even n or n < 3.
Decomposition hamilton_product(std::uint32_t n);

/// 2L(K_{3,4}): 15 explicit cycles.
Decomposition grid_3x4_twofold();
/// 2L(K_{3,7}) = 2L(K_{3,4}) + 2L(K_{3,3}) + a 2K_{4,3} in every row.
Decomposition grid_3x7_twofold();
/// 4L(K_{3,5}): 30 rotational cycles plus decompositions of the row leaves.
Decomposition grid_3x5_fourfold();
/// 8L(K_{2,n}) for odd n >= 5. Throws EvenOrValueError otherwise.
Decomposition grid_2xn_eightfold(std::uint32_t n);
/// 4L(K_{3,6}) = two 4L(K_{3,3}) + a 4K_{3,3} in every row.
Decomposition grid_3x6_fourfold();
/// 4L(K_{3,9}) = 4L(K_{3,3}) + 4L(K_{3,6}) + a 4K_{3,6} in every row.
Decomposition grid_3x9_fourfold();

// ---- row extensions ---------------------------------------------------------

/// Given a decomposition of lambda L(K_{m,n}) (lambda in {2, 4}; n >= 4 and,
/// for lambda = 2, n = 0 mod 4), returns one of lambda L(K_{m+4a,n}). The new
/// rows are m..m+4a-1. Throws PreconditionError.
Decomposition add_rows_by_four(const Decomposition& base, const Params& base_params,
                               std::uint32_t a);

/// Given a decomposition of lambda L(K_{m,n}) with m, n odd and mn >= 4,
/// returns one of lambda L(K_{m+8a,n}). Supported for a <= 2; larger a raises
/// BudgetExceededError. Throws PreconditionError.
Decomposition add_rows_by_eight(const Decomposition& base, const Params& base_params,
                                std::uint32_t a);

/// Length l of the leave cycle cut from each new row when adding rows by
/// eight: 0, 3, 6, 5 for n = 1, 3, 5, 7 (mod 8).
std::uint32_t leave_length(std::uint32_t n);

/// The mixed 4-cycles pairing new rows across the 1-factors (one copy), and
/// what they leave behind in each column: residual[j] holds the vertical
/// edges of column j among the new rows, as indices 0..8a-1 into those rows.
struct MixedLayer {
  std::vector<FourCycle> cycles;
  std::vector<std::vector<blocks::PlainEdge>> residual;
};

/// Mixed layer for adding 8a rows under m existing rows to an n-column grid
/// (n odd, n != 1), using `factors` on the new rows.
MixedLayer mixed_layer(std::uint32_t m, std::uint32_t n, const blocks::OneFactorSet& factors);

// ---- dispatch ---------------------------------------------------------------

enum class BaseKind {
  EvenEvenGrid,     // K_m x K_n, lambda = 1
  CompleteRow,      // (1, n): mu K_n in a single row
  HamiltonProduct,  // 2L(K_{n,n}), n = 3 or 7
  Grid3x4,
  Grid3x7,
  Grid3x5,
  Grid3x6,
  Grid3x9,
  Grid2xOdd,  // 8L(K_{2,n})
  SolverSeed,
};

std::string_view to_string(BaseKind k);

struct PlanStep {
  enum class Kind { AddFourToM, AddEightToM, Transpose, Replicate, ColumnExtend };
  Kind kind;
  /// a for the row extensions, t for Replicate, k (4k new columns) for
  /// ColumnExtend; unused for Transpose.
  std::uint64_t value = 0;

  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

std::string to_string(const PlanStep& s);

struct RecursionPlan {
  Params base;
  BaseKind base_kind = BaseKind::EvenEvenGrid;
  std::vector<PlanStep> steps;
  CaseTag case_tag = CaseTag::EvenEven;
  std::uint64_t base_multiplicity = 1;

  /// Parameters reached by applying the steps to `base`.
  Params replay() const;
  std::string summary() const;
};

/// Throws NotFeasibleError (or OutOfTheoremScope) for infeasible parameters.
RecursionPlan plan(const Params& p);

/// Builds the base and runs every step of the plan, verifying as it goes.
Decomposition execute(const RecursionPlan& plan);

/// execute(plan(p)); the result has exactly expected_cycle_count(p) cycles.
Decomposition construct(const Params& p);

}  // namespace linec4::pipeline
