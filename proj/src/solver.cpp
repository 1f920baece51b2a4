#include "linec4/solver.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "linec4/errors.hpp"

namespace linec4 {

const char* to_string(SearchOutcome::Status s) {
  switch (s) {
    case SearchOutcome::Status::Found: return "Found";
    case SearchOutcome::Status::NoneExists: return "NoneExists";
    case SearchOutcome::Status::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::vector<FourCycle> enumerate_candidate_cycles(const MultiGraph& g) {
  const std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
  const std::size_t n = verts.size();
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(verts[i], i);

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (const auto& [e, c] : g.edges()) {
    const std::size_t u = index.at(e.first);
    const std::size_t v = index.at(e.second);
    adj[u][v] = adj[v][u] = true;
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  for (auto& list : nbrs) std::sort(list.begin(), list.end());

  // a is the minimum vertex, c the vertex opposite a, b < d its neighbours.
  std::vector<FourCycle> out;
  for (std::size_t a = 0; a < n; ++a) {
    const auto& na = nbrs[a];
    for (std::size_t x = 0; x < na.size(); ++x) {
      const std::size_t b = na[x];
      if (b < a) continue;
      for (std::size_t y = x + 1; y < na.size(); ++y) {
        const std::size_t d = na[y];
        for (std::size_t c : nbrs[b]) {
          if (c <= a || c == d || !adj[c][d]) continue;
          out.emplace_back(verts[a], verts[b], verts[c], verts[d]);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class Search {
 public:
  Search(const MultiGraph& g, const SearchBudget& budget) : budget_(budget) {
    for (const auto& [e, c] : g.edges()) {
      edge_index_.emplace(e, edges_.size());
      edges_.push_back(e);
      residual_.push_back(c);
      remaining_ += c;
    }
    cycles_ = enumerate_candidate_cycles(g);
    cand_edges_.reserve(cycles_.size());
    edge_cands_.assign(edges_.size(), {});
    for (std::size_t c = 0; c < cycles_.size(); ++c) {
      std::array<std::size_t, 4> ids{};
      const auto es = cycles_[c].edges();
      for (std::size_t k = 0; k < 4; ++k) {
        ids[k] = edge_index_.at(es[k]);
        edge_cands_[ids[k]].push_back(c);
      }
      cand_edges_.push_back(ids);
    }
    if (budget.order_seed) {
      std::mt19937_64 rng(*budget.order_seed);
      for (auto& list : edge_cands_) std::shuffle(list.begin(), list.end(), rng);
    }
    blocked_.assign(cycles_.size(), 0);
    usable_.assign(edges_.size(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      usable_[e] = edge_cands_[e].size();
      if (usable_[e] == 0) ++dead_;
    }
  }

  SearchOutcome run() {
    SearchOutcome out;
    out.stats.candidates = cycles_.size();
    start_ = std::chrono::steady_clock::now();
    const bool ok = dead_ == 0 && search();
    out.stats.nodes = nodes_;
    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (ok) {
      Decomposition d;
      d.cycles.reserve(chosen_.size());
      for (std::size_t c : chosen_) d.add(cycles_[c]);
      out.status = SearchOutcome::Status::Found;
      out.decomposition = std::move(d);
    } else if (exceeded_) {
      out.status = SearchOutcome::Status::BudgetExceeded;
    } else {
      out.status = SearchOutcome::Status::NoneExists;
    }
    return out;
  }

 private:
  bool search() {
    if (remaining_ == 0) return true;
    // Most constrained edge; ties go to the smallest edge.
    std::size_t best = edges_.size();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (residual_[e] == 0) continue;
      if (best == edges_.size() || usable_[e] < usable_[best]) best = e;
    }
    if (usable_[best] == 0) return false;
    return cover(best, residual_[best], 0);
  }

  // Chooses the multiset of cycles that covers the remaining copies of edge
  // e, in non-decreasing candidate order so each multiset is tried once.
  bool cover(std::size_t e, std::uint64_t need, std::size_t start) {
    if (need == 0) return search();
    const auto& list = edge_cands_[e];
    for (std::size_t i = start; i < list.size(); ++i) {
      const std::size_t c = list[i];
      if (blocked_[c] != 0) continue;
      if (!tick()) return false;
      apply(c);
      if (dead_ == 0 && cover(e, need - 1, i)) return true;
      undo(c);
      if (exceeded_) return false;
    }
    return false;
  }

  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.node_limit) {
      exceeded_ = true;
      return false;
    }
    if ((nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.time_limit) {
      exceeded_ = true;
      return false;
    }
    return true;
  }

  void block(std::size_t c) {
    if (blocked_[c]++ != 0) return;
    for (std::size_t g : cand_edges_[c]) {
      if (--usable_[g] == 0 && residual_[g] > 0) ++dead_;
    }
  }

  void unblock(std::size_t c) {
    if (--blocked_[c] != 0) return;
    for (std::size_t g : cand_edges_[c]) {
      if (usable_[g]++ == 0 && residual_[g] > 0) --dead_;
    }
  }

  void apply(std::size_t c) {
    chosen_.push_back(c);
    remaining_ -= 4;
    for (std::size_t f : cand_edges_[c]) {
      if (--residual_[f] != 0) continue;
      if (usable_[f] == 0) --dead_;
      for (std::size_t c2 : edge_cands_[f]) block(c2);
    }
  }

  void undo(std::size_t c) {
    const auto& es = cand_edges_[c];
    for (auto it = es.rbegin(); it != es.rend(); ++it) {
      const std::size_t f = *it;
      if (residual_[f] == 0) {
        for (auto jt = edge_cands_[f].rbegin(); jt != edge_cands_[f].rend(); ++jt) unblock(*jt);
        if (usable_[f] == 0) ++dead_;
      }
      ++residual_[f];
    }
    remaining_ += 4;
    chosen_.pop_back();
  }

  SearchBudget budget_;
  std::vector<Edge> edges_;
  std::map<Edge, std::size_t> edge_index_;
  std::vector<std::uint64_t> residual_;
  std::uint64_t remaining_ = 0;  // residual edge count
  std::vector<FourCycle> cycles_;
  std::vector<std::array<std::size_t, 4>> cand_edges_;
  std::vector<std::vector<std::size_t>> edge_cands_;
  std::vector<std::uint32_t> blocked_;
  std::vector<std::size_t> usable_;
  std::size_t dead_ = 0;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SearchOutcome find_decomposition(const MultiGraph& g, const SearchBudget& budget) {
  SearchOutcome out;
  const std::uint64_t edges = g.edge_count();
  bool odd = false;
  for (const auto& [v, d] : g.degrees()) odd = odd || d % 2 != 0;
  if (odd || edges % 4 != 0) {
    out.status = SearchOutcome::Status::NoneExists;
    out.filtered = true;
    return out;
  }

  Search search(g, budget);
  out = search.run();
  if (out.found()) {
    const VerifyReport report = verify_decomposition(g, *out.decomposition);
    if (!report.ok()) {
      throw InternalVerificationError("solver produced an invalid decomposition: " +
                                      report.describe());
    }
  }
  return out;
}

SearchOutcome prove_nonexistence(const MultiGraph& g, SearchBudget budget) {
  budget.mode = SearchMode::ProveNone;
  return find_decomposition(g, budget);
}

}  // namespace linec4
