#pragma once

// Building blocks for the recursive constructions: Hamilton and 4-cycle
// decompositions of complete graphs, complete bipartite multigraphs, the
// even-by-even grid, and the four 1-factors with a decomposable apex join.
//
// Every function verifies its result against the graph it claims to
// decompose before returning; a mismatch raises InternalVerificationError.
// Blocks without a closed form here (K_n minus a 2-factor, the apex join)
// come from the exact solver and are memoised in a BlockCache.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "linec4/block_cache.hpp"
#include "linec4/multigraph.hpp"

namespace linec4::blocks {

using PlainEdge = std::pair<std::uint32_t, std::uint32_t>;

/// (n-1)/2 edge-disjoint Hamilton cycles of K_n on Plain(0..n-1), each as a
/// vertex sequence. Throws EvenOrderError for even n or n < 3.
std::vector<std::vector<std::uint32_t>> walecki_hamilton(std::uint32_t n);

/// Base 4-cycles developed over Z_modulus. For even orders the extra vertex
/// `modulus` is the fixed point infinity.
struct DifferenceFamily {
  std::uint32_t order = 0;
  std::uint32_t modulus = 0;
  bool has_infinity = false;
  std::uint64_t lambda = 0;
  std::vector<std::array<std::uint32_t, 4>> base_cycles;
};

/// Smallest lambda for which lambda K_n has a C4-decomposition (0 if none
/// up to 8, i.e. n < 4).
std::uint64_t minimal_complete_multiplicity(std::uint32_t n);

/// nullopt when the bounded base-block search finds nothing.
std::optional<DifferenceFamily> find_difference_family(std::uint32_t n, std::uint64_t lambda);

/// Times each difference class is hit by the base cycles. Key 0 counts
/// edges to infinity; key d >= 1 counts the class {d, modulus - d}.
std::map<std::uint32_t, std::uint64_t> difference_class_counts(const DifferenceFamily& f);

Decomposition develop(const DifferenceFamily& f);

/// lambda K_n. Requires lambda(n-1) even and 4 | lambda n(n-1)/2, n >= 4;
/// otherwise InfeasibleBlockError.
Decomposition c4_of_lambda_complete(std::uint32_t n, std::uint64_t lambda,
                                    BlockCache& cache = default_cache());

/// lambda (K_n - E(F)) for a 2-regular F on a subset of Plain(0..n-1).
/// Supported for n <= 17; larger orders raise BudgetExceededError.
Decomposition c4_of_complete_minus_2factor(std::uint32_t n, const std::vector<PlainEdge>& f,
                                           std::uint64_t lambda = 1,
                                           BlockCache& cache = default_cache());

struct OneFactorSet {
  std::uint32_t host_order = 0;  // 8x
  std::array<std::vector<PlainEdge>, 4> factors;
  /// Decomposes (K_{8x} - F) joined to the apex Plain(8x).
  Decomposition residual_apex_decomposition;
};

/// Four edge-disjoint 1-factors of K_{8x} whose complement joined to an apex
/// is C4-decomposable. Supported for x <= 2.
OneFactorSet sehgal_one_factors(std::uint32_t x, BlockCache& cache = default_cache());

/// K_{8x} - F joined to Plain(8x), the graph the apex decomposition covers.
MultiGraph apex_residual_graph(const OneFactorSet& s);

/// lambda K_{m,n} with X = Plain(0..m-1), Y = Plain(m..m+n-1).
Decomposition c4_of_lambda_complete_bipartite(std::uint32_t m, std::uint32_t n,
                                              std::uint64_t lambda);

/// The family (a, x, a+1, x+1) over Z_m x Z_n, which covers 4K_{m,n}.
Decomposition torus_bipartite(std::uint32_t m, std::uint32_t n);

/// K_m x K_n (lambda = 1) for even m, n, on Pair(i, j) labels.
Decomposition c4_of_even_even_product(std::uint32_t m, std::uint32_t n);

/// Cached solver run for L(K_{m,n}) at multiplicity lambda. Used for seeds
/// that no recursion reaches (the 5 x 5 grid at lambda = 1).
Decomposition solver_seed_line_graph(std::uint32_t m, std::uint32_t n, std::uint64_t lambda,
                                     BlockCache& cache = default_cache());

}  // namespace linec4::blocks
