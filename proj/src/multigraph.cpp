#include "linec4/multigraph.hpp"

#include <algorithm>
#include <sstream>

#include "linec4/errors.hpp"

namespace linec4 {

std::string VertexId::to_string() const {
  std::ostringstream os;
  if (is_pair()) {
    os << '(' << a_ << ',' << b_ << ')';
  } else {
    os << a_;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.to_string(); }

Edge make_edge(VertexId u, VertexId v) {
  if (u == v) throw InvalidCycleError("loop at vertex " + u.to_string());
  return u < v ? Edge{u, v} : Edge{v, u};
}

std::string to_string(const Edge& e) {
  return "{" + e.first.to_string() + "," + e.second.to_string() + "}";
}

void MultiGraph::add_edge(VertexId u, VertexId v, std::uint64_t count) {
  Edge e = make_edge(u, v);
  vertices_.insert(u);
  vertices_.insert(v);
  if (count == 0) return;
  edges_[e] += count;
}

std::uint64_t MultiGraph::multiplicity(VertexId u, VertexId v) const {
  if (u == v) return 0;
  auto it = edges_.find(make_edge(u, v));
  return it == edges_.end() ? 0 : it->second;
}

std::uint64_t MultiGraph::edge_count() const {
  std::uint64_t total = 0;
  for (const auto& [e, c] : edges_) total += c;
  return total;
}

std::uint64_t MultiGraph::degree(VertexId v) const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : edges_) {
    if (e.first == v || e.second == v) d += c;
  }
  return d;
}

std::map<VertexId, std::uint64_t> MultiGraph::degrees() const {
  std::map<VertexId, std::uint64_t> out;
  for (const auto& v : vertices_) out[v] = 0;
  for (const auto& [e, c] : edges_) {
    out[e.first] += c;
    out[e.second] += c;
  }
  return out;
}

FourCycle::FourCycle(VertexId a, VertexId b, VertexId c, VertexId d) {
  std::array<VertexId, 4> raw{a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (raw[i] == raw[j]) {
        throw InvalidCycleError("4-cycle repeats vertex " + raw[i].to_string());
      }
    }
  }
  auto start = static_cast<std::size_t>(std::min_element(raw.begin(), raw.end()) - raw.begin());
  const VertexId& next = raw[(start + 1) % 4];
  const VertexId& prev = raw[(start + 3) % 4];
  if (next < prev) {
    for (std::size_t i = 0; i < 4; ++i) v_[i] = raw[(start + i) % 4];
  } else {
    for (std::size_t i = 0; i < 4; ++i) v_[i] = raw[(start + 4 - i) % 4];
  }
}

std::array<Edge, 4> FourCycle::edges() const {
  return {make_edge(v_[0], v_[1]), make_edge(v_[1], v_[2]), make_edge(v_[2], v_[3]),
          make_edge(v_[3], v_[0])};
}

std::string FourCycle::to_string() const {
  return "(" + v_[0].to_string() + "," + v_[1].to_string() + "," + v_[2].to_string() + "," +
         v_[3].to_string() + ")";
}

void Decomposition::append(const Decomposition& other) {
  cycles.insert(cycles.end(), other.cycles.begin(), other.cycles.end());
}

Decomposition replicate(const Decomposition& d, std::uint64_t times) {
  Decomposition out;
  out.cycles.reserve(d.cycles.size() * times);
  for (std::uint64_t t = 0; t < times; ++t) out.append(d);
  return out;
}

EdgeMultiset edge_multiset(const Decomposition& d) {
  EdgeMultiset out;
  for (const auto& c : d.cycles) {
    for (const auto& e : c.edges()) ++out[e];
  }
  return out;
}

int horizontal_edge_count(const FourCycle& c) {
  int count = 0;
  for (const auto& [u, v] : c.edges()) {
    if (u.is_pair() && v.is_pair() && u.row() == v.row()) ++count;
  }
  return count;
}

std::string VerifyReport::describe() const {
  std::ostringstream os;
  switch (status) {
    case Status::Ok:
      return "OK";
    case Status::BadCycle:
      os << "bad cycle";
      break;
    case Status::MissingEdge:
      os << "missing edge";
      break;
    case Status::ExcessEdge:
      os << "excess edge";
      break;
  }
  if (edge) os << ' ' << to_string(*edge);
  if (status == Status::MissingEdge || status == Status::ExcessEdge) {
    os << ": target multiplicity " << expected << ", covered " << actual;
  }
  if (cycle_index) os << " (cycle #" << *cycle_index << ")";
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

MultiGraph build_complete(std::uint32_t n, std::uint64_t lambda) {
  MultiGraph g;
  for (std::uint32_t i = 0; i < n; ++i) g.add_vertex(VertexId::plain(i));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      g.add_edge(VertexId::plain(i), VertexId::plain(j), lambda);
    }
  }
  return g;
}

MultiGraph build_complete_bipartite(std::uint32_t m, std::uint32_t n, std::uint64_t lambda) {
  MultiGraph g;
  for (std::uint32_t i = 0; i < m + n; ++i) g.add_vertex(VertexId::plain(i));
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      g.add_edge(VertexId::plain(i), VertexId::plain(m + j), lambda);
    }
  }
  return g;
}

MultiGraph build_line_graph_kmn(std::uint32_t m, std::uint32_t n, std::uint64_t lambda) {
  MultiGraph g;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) g.add_vertex(VertexId::pair(i, j));
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t k = j + 1; k < n; ++k) {
        g.add_edge(VertexId::pair(i, j), VertexId::pair(i, k), lambda);
      }
      for (std::uint32_t r = i + 1; r < m; ++r) {
        g.add_edge(VertexId::pair(i, j), VertexId::pair(r, j), lambda);
      }
    }
  }
  return g;
}

MultiGraph edge_sum(const MultiGraph& g1, const MultiGraph& g2) {
  MultiGraph out = g1;
  for (const auto& v : g2.vertices()) out.add_vertex(v);
  for (const auto& [e, c] : g2.edges()) out.add_edge(e.first, e.second, c);
  return out;
}

MultiGraph edge_sum(const MultiGraph& g, const EdgeMultiset& edges) {
  MultiGraph out = g;
  for (const auto& [e, c] : edges) out.add_edge(e.first, e.second, c);
  return out;
}

MultiGraph remove_edges(const MultiGraph& g, const EdgeMultiset& edges) {
  MultiGraph out = g;
  for (const auto& [e, c] : edges) {
    if (c == 0) continue;
    auto it = out.edges_.find(e);
    std::uint64_t have = it == out.edges_.end() ? 0 : it->second;
    if (have < c) {
      throw UnderflowError("cannot remove " + std::to_string(c) + " copies of " + to_string(e) +
                           " (multiplicity " + std::to_string(have) + ")");
    }
    if (have == c) {
      out.edges_.erase(it);
    } else {
      it->second -= c;
    }
  }
  return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::set<VertexId>& s) {
  MultiGraph out;
  for (const auto& v : s) {
    if (!g.has_vertex(v)) throw UnknownVertexError("vertex " + v.to_string() + " not in graph");
    out.add_vertex(v);
  }
  for (const auto& [e, c] : g.edges()) {
    if (s.contains(e.first) && s.contains(e.second)) out.add_edge(e.first, e.second, c);
  }
  return out;
}

MultiGraph relabel(const MultiGraph& g, const VertexMap& f) {
  std::map<VertexId, VertexId> image;
  std::set<VertexId> seen;
  for (const auto& v : g.vertices()) {
    VertexId w = f(v);
    if (!seen.insert(w).second) {
      throw NonInjectiveError("relabel maps two vertices onto " + w.to_string());
    }
    image.emplace(v, w);
  }
  MultiGraph out;
  for (const auto& [v, w] : image) out.add_vertex(w);
  for (const auto& [e, c] : g.edges()) out.add_edge(image.at(e.first), image.at(e.second), c);
  return out;
}

Decomposition relabel(const Decomposition& d, const VertexMap& f) {
  Decomposition out;
  out.cycles.reserve(d.cycles.size());
  for (const auto& c : d.cycles) {
    try {
      out.add(FourCycle(f(c[0]), f(c[1]), f(c[2]), f(c[3])));
    } catch (const InvalidCycleError&) {
      throw NonInjectiveError("relabel collapses cycle " + c.to_string());
    }
  }
  return out;
}

VertexId transpose(VertexId v) {
  return v.is_pair() ? VertexId::pair(v.col(), v.row()) : v;
}

MultiGraph join_with_apex(const MultiGraph& g, VertexId apex, std::uint64_t lambda) {
  if (g.has_vertex(apex)) {
    throw DuplicateVertexError("apex " + apex.to_string() + " already in graph");
  }
  MultiGraph out = g;
  out.add_vertex(apex);
  for (const auto& v : g.vertices()) out.add_edge(apex, v, lambda);
  return out;
}

MultiGraph cycle_graph(const FourCycle& c) {
  MultiGraph g;
  for (const auto& [u, v] : c.edges()) g.add_edge(u, v);
  return g;
}

VerifyReport verify_decomposition(const MultiGraph& g, const Decomposition& d) {
  VerifyReport report;
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    for (const auto& v : d.cycles[i].vertices()) {
      if (!g.has_vertex(v)) {
        report.status = VerifyReport::Status::BadCycle;
        report.cycle_index = i;
        report.detail = "vertex " + v.to_string() + " is not in the target graph";
        return report;
      }
    }
  }

  EdgeMultiset covered = edge_multiset(d);
  const EdgeMultiset& target = g.edges();
  auto ti = target.begin();
  auto ci = covered.begin();
  while (ti != target.end() || ci != covered.end()) {
    Edge e;
    std::uint64_t want = 0;
    std::uint64_t have = 0;
    if (ci == covered.end() || (ti != target.end() && ti->first < ci->first)) {
      e = ti->first;
      want = ti->second;
      ++ti;
    } else if (ti == target.end() || ci->first < ti->first) {
      e = ci->first;
      have = ci->second;
      ++ci;
    } else {
      e = ti->first;
      want = ti->second;
      have = ci->second;
      ++ti;
      ++ci;
    }
    if (want == have) continue;
    report.status = have < want ? VerifyReport::Status::MissingEdge
                                : VerifyReport::Status::ExcessEdge;
    report.edge = e;
    report.expected = want;
    report.actual = have;
    if (have > want) {
      // Point at the cycle that pushes the count over the target.
      std::uint64_t seen = 0;
      for (std::size_t i = 0; i < d.cycles.size() && !report.cycle_index; ++i) {
        for (const auto& ce : d.cycles[i].edges()) {
          if (ce == e && ++seen > want) {
            report.cycle_index = i;
            break;
          }
        }
      }
    }
    return report;
  }
  return report;
}

}  // namespace linec4
