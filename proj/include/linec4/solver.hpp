#pragma once

// Exact C4-decomposition search over arbitrary multigraphs. Parallel edges
// are interchangeable: a cycle consumes one unit of multiplicity from each
// of its four edges, so the search is a multiset exact cover.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "linec4/multigraph.hpp"

namespace linec4 {

enum class SearchMode { FindOne, ProveNone };

struct SearchBudget {
  std::uint64_t node_limit = 100'000'000;
  std::chrono::milliseconds time_limit{60'000};
  SearchMode mode = SearchMode::FindOne;
  /// When set, candidate cycles are tried in a seeded pseudo-random order
  /// instead of canonical order. Outcomes stay deterministic per seed.
  std::optional<std::uint64_t> order_seed;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  std::size_t candidates = 0;
};

struct SearchOutcome {
  enum class Status { Found, NoneExists, BudgetExceeded };

  Status status = Status::NoneExists;
  std::optional<Decomposition> decomposition;  // set iff Found
  SearchStats stats;
  /// True when NoneExists came from the degree / edge-count filter.
  bool filtered = false;

  bool found() const { return status == Status::Found; }
};

const char* to_string(SearchOutcome::Status s);

/// All 4-cycles whose four boundary pairs are present in g, canonical and
/// sorted.
std::vector<FourCycle> enumerate_candidate_cycles(const MultiGraph& g);

SearchOutcome find_decomposition(const MultiGraph& g, const SearchBudget& budget = {});

/// Same search run to exhaustion; NoneExists is only reported after the
/// whole branch tree has been explored.
SearchOutcome prove_nonexistence(const MultiGraph& g, SearchBudget budget = {});

}  // namespace linec4
