#pragma once

// JSON interchange format for decompositions of lambda L(K_{m,n}).
//
//   {
//     "format_version": "1",
//     "graph": "lambda-line-graph-kmn",
//     "params": {"m": 3, "n": 4, "lambda": 2},
//     "meta": {"cycle_count": 15, "plan": "..."},
//     "cycles": [
//       [[0,0],[0,1],[1,1],[1,0]],
//       ...
//     ]
//   }
//
// Vertices are [row, col] pairs. Output is byte-stable: fixed key order, one
// cycle per line, cycles in canonical rotation.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "linec4/feasibility.hpp"
#include "linec4/multigraph.hpp"

namespace linec4 {

inline constexpr std::string_view kDocumentFormatVersion = "1";
inline constexpr std::string_view kDocumentGraph = "lambda-line-graph-kmn";

struct DecompositionDocument {
  Params params;
  std::string plan;
  /// Cycles as listed. Kept raw so a cycle with a repeated vertex can be
  /// reported by the verifier instead of failing the parse.
  std::vector<std::array<VertexId, 4>> cycles;
  /// meta.cycle_count as written.
  std::uint64_t declared_cycle_count = 0;
};

DecompositionDocument make_document(const Params& p, const Decomposition& d, std::string plan);

std::string write_document(const DecompositionDocument& doc);

/// Throws DocumentError on malformed JSON, an unknown format version or
/// graph, or a structurally invalid cycle list.
DecompositionDocument parse_document(std::string_view text);

}  // namespace linec4
