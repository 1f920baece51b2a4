#pragma once

// Multigraph kernel: vertex labels, edge multisets, 4-cycles and the
// decomposition checker everything else is validated against.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace linec4 {

/// A vertex label. Plain(k) names the k-th vertex of a building-block graph
/// (K_n, K_{m,n}, ...); Pair(i, j) names the edge {x_i, y_j} of K_{m,n}, i.e.
/// the vertex in row i and column j of the grid K_m x K_n.
///
/// Ordering: Plain before Pair, Plain by index, Pair lexicographically.
class VertexId {
 public:
  enum class Kind : std::uint8_t { Plain = 0, Pair = 1 };

  constexpr VertexId() = default;

  static constexpr VertexId plain(std::uint32_t index) { return VertexId(Kind::Plain, index, 0); }
  static constexpr VertexId pair(std::uint32_t row, std::uint32_t col) {
    return VertexId(Kind::Pair, row, col);
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_pair() const { return kind_ == Kind::Pair; }
  constexpr std::uint32_t index() const { return a_; }
  constexpr std::uint32_t row() const { return a_; }
  constexpr std::uint32_t col() const { return b_; }

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;

  std::string to_string() const;

 private:
  constexpr VertexId(Kind kind, std::uint32_t a, std::uint32_t b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_ = Kind::Plain;
  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

/// Unordered vertex pair stored as (min, max).
using Edge = std::pair<VertexId, VertexId>;

/// Throws InvalidCycleError when u == v (loops are not representable).
Edge make_edge(VertexId u, VertexId v);

std::string to_string(const Edge& e);

/// Edge multiset: pair -> positive count. Zero counts are never stored.
using EdgeMultiset = std::map<Edge, std::uint64_t>;

class MultiGraph {
 public:
  MultiGraph() = default;

  void add_vertex(VertexId v) { vertices_.insert(v); }
  /// Adds `count` parallel copies of uv; both endpoints join the vertex set.
  void add_edge(VertexId u, VertexId v, std::uint64_t count = 1);

  bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  std::uint64_t multiplicity(VertexId u, VertexId v) const;

  const std::set<VertexId>& vertices() const { return vertices_; }
  const EdgeMultiset& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  /// Number of edges counted with multiplicity.
  std::uint64_t edge_count() const;
  std::uint64_t degree(VertexId v) const;
  std::map<VertexId, std::uint64_t> degrees() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  friend MultiGraph remove_edges(const MultiGraph&, const EdgeMultiset&);

  std::set<VertexId> vertices_;
  EdgeMultiset edges_;
};

/// A 4-cycle (v1, v2, v3, v4) kept in canonical rotation: v1 is the minimum
/// vertex and v2 < v4.
class FourCycle {
 public:
  /// Vertices in cyclic order; throws InvalidCycleError unless all distinct.
  FourCycle(VertexId a, VertexId b, VertexId c, VertexId d);

  const std::array<VertexId, 4>& vertices() const { return v_; }
  const VertexId& operator[](std::size_t i) const { return v_[i]; }
  /// {v1v2, v2v3, v3v4, v4v1}, each normalized.
  std::array<Edge, 4> edges() const;

  friend auto operator<=>(const FourCycle&, const FourCycle&) = default;

  std::string to_string() const;

 private:
  std::array<VertexId, 4> v_;
};

struct Decomposition {
  std::vector<FourCycle> cycles;

  std::size_t size() const { return cycles.size(); }
  bool empty() const { return cycles.empty(); }
  void append(const Decomposition& other);
  void add(const FourCycle& c) { cycles.push_back(c); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// The whole cycle list repeated `times` times.
Decomposition replicate(const Decomposition& d, std::uint64_t times);

/// Multiset sum of all cycle edges.
EdgeMultiset edge_multiset(const Decomposition& d);

/// Number of edges of the cycle whose endpoints are Pair labels sharing the
/// row coordinate. Always 0, 2 or 4 for a 4-cycle in a grid graph.
int horizontal_edge_count(const FourCycle& c);

struct VerifyReport {
  enum class Status { Ok, BadCycle, MissingEdge, ExcessEdge };

  Status status = Status::Ok;
  std::optional<std::size_t> cycle_index;  // offending cycle, when there is one
  std::optional<Edge> edge;
  std::uint64_t expected = 0;  // multiplicity in the target
  std::uint64_t actual = 0;    // multiplicity covered by the cycles
  std::string detail;

  bool ok() const { return status == Status::Ok; }
  std::string describe() const;
};

// Builders.
MultiGraph build_complete(std::uint32_t n, std::uint64_t lambda);
/// X = Plain(0..m-1), Y = Plain(m..m+n-1).
MultiGraph build_complete_bipartite(std::uint32_t m, std::uint32_t n, std::uint64_t lambda);
/// lambda-fold L(K_{m,n}) = K_m x K_n on Pair(i, j) labels.
MultiGraph build_line_graph_kmn(std::uint32_t m, std::uint32_t n, std::uint64_t lambda);

// Decomposition algebra.
MultiGraph edge_sum(const MultiGraph& g1, const MultiGraph& g2);
MultiGraph edge_sum(const MultiGraph& g, const EdgeMultiset& edges);
/// Throws UnderflowError if a removal exceeds the available multiplicity.
MultiGraph remove_edges(const MultiGraph& g, const EdgeMultiset& edges);
/// Throws UnknownVertexError if `s` is not a subset of the vertex set.
MultiGraph induced_subgraph(const MultiGraph& g, const std::set<VertexId>& s);

using VertexMap = std::function<VertexId(VertexId)>;

/// Throws NonInjectiveError if `f` identifies two vertices of g.
MultiGraph relabel(const MultiGraph& g, const VertexMap& f);
Decomposition relabel(const Decomposition& d, const VertexMap& f);
/// Pair(i, j) -> Pair(j, i); Plain labels are left alone.
VertexId transpose(VertexId v);

/// Throws DuplicateVertexError if the apex already belongs to g.
MultiGraph join_with_apex(const MultiGraph& g, VertexId apex, std::uint64_t lambda);

/// Graph formed by the edges of a single cycle.
MultiGraph cycle_graph(const FourCycle& c);

VerifyReport verify_decomposition(const MultiGraph& g, const Decomposition& d);

}  // namespace linec4
