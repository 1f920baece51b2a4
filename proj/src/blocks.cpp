#include "linec4/blocks.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "linec4/errors.hpp"
#include "linec4/solver.hpp"

namespace linec4::blocks {

using nlohmann::json;

namespace {

VertexId P(std::uint32_t i) { return VertexId::plain(i); }

void ensure_verified(const MultiGraph& g, const Decomposition& d, const std::string& what) {
  const VerifyReport r = verify_decomposition(g, d);
  if (!r.ok()) throw InternalVerificationError(what + ": " + r.describe());
}

bool complete_conditions(std::uint32_t n, std::uint64_t lambda) {
  if (n < 4 || lambda == 0) return false;
  const std::uint64_t nn = n;
  return lambda * (nn - 1) % 2 == 0 && lambda * nn * (nn - 1) / 2 % 4 == 0;
}

// Restarts with different candidate orders; each attempt is deterministic.
std::optional<Decomposition> solve_with_restarts(const MultiGraph& g, std::uint64_t node_limit,
                                                 int attempts) {
  for (int a = 0; a < attempts; ++a) {
    SearchBudget budget;
    budget.node_limit = node_limit;
    budget.time_limit = std::chrono::hours(1);
    if (a > 0) budget.order_seed = static_cast<std::uint64_t>(a);
    SearchOutcome out = find_decomposition(g, budget);
    if (out.found()) return std::move(out.decomposition);
    if (out.status == SearchOutcome::Status::NoneExists) return std::nullopt;
  }
  return std::nullopt;
}

constexpr std::uint64_t kSolverNodeLimit = 2'000'000;
constexpr int kSolverAttempts = 12;

std::string cache_key(const std::string& kind, const std::string& params) {
  return "v" + std::to_string(kCacheFormatVersion) + "/" + kind + "/" + params;
}

// Looks the block up in the cache (re-verifying it), otherwise runs the
// solver and stores the result.
Decomposition cached_solve(BlockCache& cache, const std::string& kind, const std::string& params,
                           const MultiGraph& target) {
  const std::string key = cache_key(kind, params);
  if (auto entry = cache.get(key)) {
    try {
      Decomposition d = decode_cycles(entry->at("cycles"));
      if (verify_decomposition(target, d).ok()) return d;
    } catch (const std::exception&) {
    }
    cache.evict(key);
  }
  auto found = solve_with_restarts(target, kSolverNodeLimit, kSolverAttempts);
  if (!found) {
    throw BudgetExceededError("solver could not realize block " + kind + " " + params);
  }
  cache.put(key, json{{"kind", kind}, {"params", params}, {"cycles", encode_cycles(*found)}});
  return *found;
}

// ---- difference method -------------------------------------------------

std::uint32_t diff_class(std::int64_t d, std::uint32_t mod) {
  std::int64_t r = ((d % mod) + mod) % mod;
  return static_cast<std::uint32_t>(std::min<std::int64_t>(r, mod - r));
}

class FamilySearch {
 public:
  FamilySearch(std::uint32_t n, std::uint64_t lambda) : n_(n), lambda_(lambda) {
    infinity_ = n % 2 == 0;
    mod_ = infinity_ ? n - 1 : n;
    need_.assign(mod_ / 2 + 1, lambda);
    need_[0] = 0;
    infinity_cycles_ = infinity_ ? lambda / 2 : 0;
  }

  std::optional<DifferenceFamily> run() {
    const std::uint64_t finite_diffs = lambda_ * (mod_ / 2);
    if (infinity_ && lambda_ % 2 != 0) return std::nullopt;
    if (finite_diffs < 2 * infinity_cycles_ || (finite_diffs - 2 * infinity_cycles_) % 4 != 0) {
      return std::nullopt;
    }
    pure_cycles_ = (finite_diffs - 2 * infinity_cycles_) / 4;
    if (!place(0)) return std::nullopt;
    DifferenceFamily f;
    f.order = n_;
    f.modulus = mod_;
    f.has_infinity = infinity_;
    f.lambda = lambda_;
    f.base_cycles = chosen_;
    return f;
  }

 private:
  bool take(std::uint32_t c) {
    if (need_[c] == 0) return false;
    --need_[c];
    return true;
  }
  void give(std::uint32_t c) { ++need_[c]; }

  bool place(std::size_t k) {
    if (++nodes_ > kNodeLimit) return false;
    if (k == infinity_cycles_ + pure_cycles_) return true;
    return k < infinity_cycles_ ? place_infinity(k) : place_pure(k);
  }

  // (inf, 0, s1, s1 + s2)
  bool place_infinity(std::size_t k) {
    for (std::uint32_t s1 = 1; s1 < mod_; ++s1) {
      if (!take(diff_class(s1, mod_))) continue;
      for (std::uint32_t s2 = 1; s2 < mod_; ++s2) {
        const std::uint32_t b = s1;
        const std::uint32_t c = (s1 + s2) % mod_;
        if (c == 0 || c == b) continue;
        if (!take(diff_class(s2, mod_))) continue;
        chosen_.push_back({mod_, 0, b, c});
        if (place(k + 1)) return true;
        chosen_.pop_back();
        give(diff_class(s2, mod_));
      }
      give(diff_class(s1, mod_));
    }
    return false;
  }

  // (0, c, c + s2, c + s2 + s3); the first class is the smallest one still
  // needed, which is enough up to translation and reflection.
  bool place_pure(std::size_t k) {
    std::uint32_t first = 0;
    for (std::uint32_t c = 1; c < need_.size(); ++c) {
      if (need_[c] > 0) {
        first = c;
        break;
      }
    }
    if (first == 0) return false;
    take(first);
    for (std::uint32_t s2 = 1; s2 < mod_; ++s2) {
      const std::uint32_t v2 = (first + s2) % mod_;
      if (v2 == 0 || v2 == first) continue;
      if (!take(diff_class(s2, mod_))) continue;
      for (std::uint32_t s3 = 1; s3 < mod_; ++s3) {
        const std::uint32_t v3 = (v2 + s3) % mod_;
        if (v3 == 0 || v3 == first || v3 == v2) continue;
        if (!take(diff_class(s3, mod_))) continue;
        if (take(diff_class(v3, mod_))) {
          chosen_.push_back({0, first, v2, v3});
          if (place(k + 1)) return true;
          chosen_.pop_back();
          give(diff_class(v3, mod_));
        }
        give(diff_class(s3, mod_));
      }
      give(diff_class(s2, mod_));
    }
    give(first);
    return false;
  }

  static constexpr std::uint64_t kNodeLimit = 5'000'000;

  std::uint32_t n_;
  std::uint64_t lambda_;
  bool infinity_ = false;
  std::uint32_t mod_ = 0;
  std::vector<std::uint64_t> need_;
  std::uint64_t infinity_cycles_ = 0;
  std::uint64_t pure_cycles_ = 0;
  std::vector<std::array<std::uint32_t, 4>> chosen_;
  std::uint64_t nodes_ = 0;
};

std::optional<DifferenceFamily> minimal_family(std::uint32_t n, std::uint64_t lambda0) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint64_t>, std::optional<DifferenceFamily>> memo;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, lambda0);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, FamilySearch(n, lambda0).run()).first;
  return it->second;
}

// ---- 2-regular subgraphs -----------------------------------------------

// Cycles of a 2-regular graph, each traversed from its smallest vertex
// towards the smaller neighbour. Throws InfeasibleBlockError otherwise.
std::vector<std::vector<std::uint32_t>> two_regular_cycles(std::uint32_t n,
                                                           const std::vector<PlainEdge>& f) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
  std::set<PlainEdge> seen;
  for (auto [u, v] : f) {
    if (u == v || u >= n || v >= n) {
      throw InfeasibleBlockError("2-factor edge out of range or a loop");
    }
    if (!seen.insert(std::minmax(u, v)).second) {
      throw InfeasibleBlockError("2-factor repeats an edge");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& [v, nb] : adj) {
    if (nb.size() != 2) throw InfeasibleBlockError("F is not 2-regular");
    std::sort(nb.begin(), nb.end());
  }
  std::vector<std::vector<std::uint32_t>> cycles;
  std::set<std::uint32_t> done;
  for (const auto& [start, nb] : adj) {
    if (done.contains(start)) continue;
    std::vector<std::uint32_t> cyc{start};
    done.insert(start);
    std::uint32_t prev = start;
    std::uint32_t cur = nb[0];
    while (cur != start) {
      cyc.push_back(cur);
      done.insert(cur);
      const auto& cn = adj.at(cur);
      const std::uint32_t next = cn[0] == prev ? cn[1] : cn[0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

MultiGraph complete_minus(std::uint32_t n, const std::vector<PlainEdge>& f, std::uint64_t lambda) {
  EdgeMultiset removed;
  for (auto [u, v] : f) removed[make_edge(P(u), P(v))] += lambda;
  return remove_edges(build_complete(n, lambda), removed);
}

// ---- 1-factors -----------------------------------------------------------

// Round r of the circle-method 1-factorization of K_{2k}.
std::vector<PlainEdge> circle_round(std::uint32_t order, std::uint32_t r) {
  const std::uint32_t mod = order - 1;
  std::vector<PlainEdge> round{std::minmax(r, mod)};
  for (std::uint32_t i = 1; i <= (mod - 1) / 2; ++i) {
    round.push_back(std::minmax((r + i) % mod, (r + mod - i) % mod));
  }
  std::sort(round.begin(), round.end());
  return round;
}

bool valid_one_factor_set(const OneFactorSet& s) {
  std::set<PlainEdge> used;
  for (const auto& factor : s.factors) {
    std::vector<int> cover(s.host_order, 0);
    for (auto [u, v] : factor) {
      if (u >= s.host_order || v >= s.host_order || u == v) return false;
      if (!used.insert(std::minmax(u, v)).second) return false;
      ++cover[u];
      ++cover[v];
    }
    if (std::any_of(cover.begin(), cover.end(), [](int c) { return c != 1; })) return false;
  }
  return true;
}

json encode_factors(const std::array<std::vector<PlainEdge>, 4>& factors) {
  json out = json::array();
  for (const auto& f : factors) {
    json arr = json::array();
    for (auto [u, v] : f) arr.push_back(json::array({u, v}));
    out.push_back(std::move(arr));
  }
  return out;
}

std::array<std::vector<PlainEdge>, 4> decode_factors(const json& j) {
  std::array<std::vector<PlainEdge>, 4> out;
  if (!j.is_array() || j.size() != 4) throw DocumentError("expected four factors");
  for (std::size_t k = 0; k < 4; ++k) {
    for (const auto& e : j[k]) out[k].emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
  }
  return out;
}

// ---- even x even grid ----------------------------------------------------

// K_m x K_2 on columns c0, c1: a perfect matching of K_m paired across the
// rungs, plus the cocktail party graph K_m - I in each column tiled by the
// K_{2,2}s between matching pairs.
void add_prism(Decomposition& d, std::uint32_t m, std::uint32_t c0, std::uint32_t c1) {
  for (std::uint32_t i = 0; i + 1 < m; i += 2) {
    d.add(FourCycle(VertexId::pair(i, c0), VertexId::pair(i + 1, c0), VertexId::pair(i + 1, c1),
                    VertexId::pair(i, c1)));
  }
  for (std::uint32_t c : {c0, c1}) {
    for (std::uint32_t i = 0; i + 1 < m; i += 2) {
      for (std::uint32_t j = i + 2; j + 1 < m; j += 2) {
        d.add(FourCycle(VertexId::pair(i, c), VertexId::pair(j, c), VertexId::pair(i + 1, c),
                        VertexId::pair(j + 1, c)));
      }
    }
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> walecki_hamilton(std::uint32_t n) {
  if (n < 3 || n % 2 == 0) {
    throw EvenOrderError("Hamilton decomposition needs odd n >= 3, got " + std::to_string(n));
  }
  // Zig-zag path u, u+1, u-1, u+2, ... on Z_{n-1}, closed through infinity.
  const std::uint32_t mod = n - 1;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t u = 0; u < (n - 1) / 2; ++u) {
    std::vector<std::uint32_t> cyc{n - 1, u};
    for (std::uint32_t k = 1; cyc.size() < n; ++k) {
      cyc.push_back((u + k) % mod);
      if (cyc.size() < n) cyc.push_back((u + mod - k) % mod);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::uint64_t minimal_complete_multiplicity(std::uint32_t n) {
  for (std::uint64_t lambda = 1; lambda <= 8; ++lambda) {
    if (complete_conditions(n, lambda)) return lambda;
  }
  return 0;
}

std::optional<DifferenceFamily> find_difference_family(std::uint32_t n, std::uint64_t lambda) {
  if (!complete_conditions(n, lambda)) return std::nullopt;
  const std::uint64_t lambda0 = minimal_complete_multiplicity(n);
  auto base = minimal_family(n, lambda0);
  if (!base) return std::nullopt;
  DifferenceFamily f = *base;
  f.lambda = lambda;
  f.base_cycles.clear();
  for (std::uint64_t t = 0; t < lambda / lambda0; ++t) {
    f.base_cycles.insert(f.base_cycles.end(), base->base_cycles.begin(), base->base_cycles.end());
  }
  return f;
}

std::map<std::uint32_t, std::uint64_t> difference_class_counts(const DifferenceFamily& f) {
  std::map<std::uint32_t, std::uint64_t> counts;
  for (std::uint32_t c = 1; c <= f.modulus / 2; ++c) counts[c] = 0;
  if (f.has_infinity) counts[0] = 0;
  for (const auto& cyc : f.base_cycles) {
    for (std::size_t k = 0; k < 4; ++k) {
      const std::uint32_t a = cyc[k];
      const std::uint32_t b = cyc[(k + 1) % 4];
      if (a == f.modulus || b == f.modulus) {
        ++counts[0];
      } else {
        ++counts[diff_class(std::int64_t(b) - std::int64_t(a), f.modulus)];
      }
    }
  }
  return counts;
}

Decomposition develop(const DifferenceFamily& f) {
  Decomposition d;
  auto shift = [&](std::uint32_t v, std::uint32_t t) {
    return v == f.modulus ? P(v) : P((v + t) % f.modulus);
  };
  for (const auto& cyc : f.base_cycles) {
    for (std::uint32_t t = 0; t < f.modulus; ++t) {
      d.add(FourCycle(shift(cyc[0], t), shift(cyc[1], t), shift(cyc[2], t), shift(cyc[3], t)));
    }
  }
  return d;
}

Decomposition c4_of_lambda_complete(std::uint32_t n, std::uint64_t lambda, BlockCache& cache) {
  if (!complete_conditions(n, lambda)) {
    throw InfeasibleBlockError("no C4-decomposition of " + std::to_string(lambda) + "K_" +
                               std::to_string(n));
  }
  Decomposition d;
  if (auto family = find_difference_family(n, lambda)) {
    d = develop(*family);
  } else {
    const std::uint64_t lambda0 = minimal_complete_multiplicity(n);
    Decomposition base =
        cached_solve(cache, "lambda-complete",
                     "n=" + std::to_string(n) + ",lambda=" + std::to_string(lambda0),
                     build_complete(n, lambda0));
    d = replicate(base, lambda / lambda0);
  }
  ensure_verified(build_complete(n, lambda), d, "lambda K_n block");
  return d;
}

Decomposition c4_of_complete_minus_2factor(std::uint32_t n, const std::vector<PlainEdge>& f,
                                           std::uint64_t lambda, BlockCache& cache) {
  if (n % 2 == 0) throw InfeasibleBlockError("K_n - F needs odd n, got " + std::to_string(n));
  if (lambda == 0) throw InfeasibleBlockError("lambda must be positive");
  const auto cycles = two_regular_cycles(n, f);
  const std::uint64_t single = std::uint64_t(n) * (n - 1) / 2 - f.size();
  if (lambda * single % 4 != 0) {
    throw InfeasibleBlockError("4 does not divide the edge count " +
                               std::to_string(lambda * single) + " of lambda(K_n - F)");
  }
  if (n > 17) {
    throw BudgetExceededError("K_n - F block is supported for n <= 17, got " + std::to_string(n));
  }

  // Solve once per cycle type: the canonical F puts the cycles, shortest
  // first, on consecutive vertices.
  std::vector<std::size_t> order(cycles.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cycles[a].size() < cycles[b].size(); });
  std::vector<PlainEdge> canonical;
  std::vector<std::uint32_t> image(n);  // canonical vertex -> actual vertex
  std::vector<bool> in_f(n, false);
  std::ostringstream type;
  std::uint32_t offset = 0;
  for (std::size_t idx : order) {
    const auto& cyc = cycles[idx];
    const auto len = static_cast<std::uint32_t>(cyc.size());
    type << (offset == 0 ? "" : ".") << len;
    for (std::uint32_t k = 0; k < len; ++k) {
      canonical.emplace_back(offset + k, offset + (k + 1) % len);
      image[offset + k] = cyc[k];
      in_f[cyc[k]] = true;
    }
    offset += len;
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!in_f[v]) image[offset++] = v;
  }

  const std::uint64_t base_lambda = single % 4 == 0 ? 1 : lambda;
  Decomposition base = cached_solve(
      cache, "complete-minus-2factor",
      "n=" + std::to_string(n) + ",cycles=" + (type.str().empty() ? "-" : type.str()) +
          ",lambda=" + std::to_string(base_lambda),
      complete_minus(n, canonical, base_lambda));
  Decomposition mapped =
      relabel(base, [&](VertexId v) { return P(image.at(v.index())); });
  Decomposition d = replicate(mapped, lambda / base_lambda);
  ensure_verified(complete_minus(n, f, lambda), d, "K_n - F block");
  return d;
}

MultiGraph apex_residual_graph(const OneFactorSet& s) {
  std::vector<PlainEdge> all;
  for (const auto& f : s.factors) all.insert(all.end(), f.begin(), f.end());
  EdgeMultiset removed;
  for (auto [u, v] : all) removed[make_edge(P(u), P(v))] += 1;
  MultiGraph residual = remove_edges(build_complete(s.host_order, 1), removed);
  return join_with_apex(residual, P(s.host_order), 1);
}

OneFactorSet sehgal_one_factors(std::uint32_t x, BlockCache& cache) {
  if (x == 0) throw InfeasibleBlockError("x must be positive");
  if (x > 2) {
    throw BudgetExceededError("four 1-factors with apex decomposition are supported for x <= 2, got " +
                              std::to_string(x));
  }
  const std::uint32_t order = 8 * x;
  const std::string key = cache_key("sehgal", "x=" + std::to_string(x));
  if (auto entry = cache.get(key)) {
    try {
      OneFactorSet s;
      s.host_order = order;
      s.factors = decode_factors(entry->at("factors"));
      s.residual_apex_decomposition = decode_cycles(entry->at("cycles"));
      if (valid_one_factor_set(s) &&
          verify_decomposition(apex_residual_graph(s), s.residual_apex_decomposition).ok()) {
        return s;
      }
    } catch (const std::exception&) {
    }
    cache.evict(key);
  }

  // Four rounds of the circle-method 1-factorization, trying round subsets
  // in lexicographic order until the apex residual decomposes.
  const std::uint32_t rounds = order - 1;
  std::vector<std::uint32_t> pick{0, 1, 2, 3};
  for (int tries = 0; tries < 64; ++tries) {
    OneFactorSet s;
    s.host_order = order;
    for (std::size_t k = 0; k < 4; ++k) s.factors[k] = circle_round(order, pick[k]);
    const MultiGraph target = apex_residual_graph(s);
    if (auto found = solve_with_restarts(target, kSolverNodeLimit, 4)) {
      s.residual_apex_decomposition = std::move(*found);
      ensure_verified(target, s.residual_apex_decomposition, "apex residual block");
      cache.put(key, json{{"kind", "sehgal"},
                          {"params", "x=" + std::to_string(x)},
                          {"factors", encode_factors(s.factors)},
                          {"cycles", encode_cycles(s.residual_apex_decomposition)}});
      return s;
    }
    // next 4-subset of the rounds
    int i = 3;
    while (i >= 0 && pick[i] == rounds - 4 + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < 4; ++j) pick[j] = pick[j - 1] + 1;
  }
  throw BudgetExceededError("no apex-decomposable 1-factor set found for x = " + std::to_string(x));
}

Decomposition torus_bipartite(std::uint32_t m, std::uint32_t n) {
  if (m < 2 || n < 2) throw InfeasibleBlockError("torus family needs m, n >= 2");
  Decomposition d;
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t x = 0; x < n; ++x) {
      d.add(FourCycle(P(a), P(m + x), P((a + 1) % m), P(m + (x + 1) % n)));
    }
  }
  ensure_verified(build_complete_bipartite(m, n, 4), d, "torus 4K_{m,n} block");
  return d;
}

Decomposition c4_of_lambda_complete_bipartite(std::uint32_t m, std::uint32_t n,
                                              std::uint64_t lambda) {
  auto infeasible = [&] {
    return InfeasibleBlockError("no C4-decomposition of " + std::to_string(lambda) + "K_{" +
                                std::to_string(m) + "," + std::to_string(n) + "}");
  };
  if (m < 2 || n < 2 || lambda == 0) throw infeasible();
  Decomposition d;
  if (lambda % 2 == 1) {
    // K_{2,2} tiles.
    if (m % 2 != 0 || n % 2 != 0) throw infeasible();
    Decomposition tiles;
    for (std::uint32_t i = 0; i < m; i += 2) {
      for (std::uint32_t j = 0; j < n; j += 2) {
        tiles.add(FourCycle(P(i), P(m + j), P(i + 1), P(m + j + 1)));
      }
    }
    d = replicate(tiles, lambda);
  } else if (m % 2 == 0 || n % 2 == 0) {
    // 2K_{k,2} rotations (a_i, x, a_{i+1}, y) along the odd-or-any side.
    Decomposition twofold;
    if (n % 2 == 0) {
      for (std::uint32_t j = 0; j < n; j += 2) {
        for (std::uint32_t i = 0; i < m; ++i) {
          twofold.add(FourCycle(P(i), P(m + j), P((i + 1) % m), P(m + j + 1)));
        }
      }
    } else {
      for (std::uint32_t i = 0; i < m; i += 2) {
        for (std::uint32_t j = 0; j < n; ++j) {
          twofold.add(FourCycle(P(m + j), P(i), P(m + (j + 1) % n), P(i + 1)));
        }
      }
    }
    d = replicate(twofold, lambda / 2);
  } else if (lambda % 4 == 0) {
    d = replicate(torus_bipartite(m, n), lambda / 4);
  } else {
    throw infeasible();
  }
  ensure_verified(build_complete_bipartite(m, n, lambda), d, "lambda K_{m,n} block");
  return d;
}

Decomposition c4_of_even_even_product(std::uint32_t m, std::uint32_t n) {
  if (m < 2 || n < 2 || m % 2 != 0 || n % 2 != 0) {
    throw InfeasibleBlockError("even-even grid needs even m, n >= 2");
  }
  // Peel columns two at a time: K_m x K_n = K_m x K_{n-2} + K_m x K_2 + m K_{n-2,2}.
  Decomposition d;
  add_prism(d, m, 0, 1);
  for (std::uint32_t c = 2; c < n; c += 2) {
    add_prism(d, m, c, c + 1);
    for (std::uint32_t r = 0; r < m; ++r) {
      for (std::uint32_t k = 0; k < c; k += 2) {
        d.add(FourCycle(VertexId::pair(r, k), VertexId::pair(r, c), VertexId::pair(r, k + 1),
                        VertexId::pair(r, c + 1)));
      }
    }
  }
  ensure_verified(build_line_graph_kmn(m, n, 1), d, "even-even grid block");
  return d;
}

Decomposition solver_seed_line_graph(std::uint32_t m, std::uint32_t n, std::uint64_t lambda,
                                     BlockCache& cache) {
  return cached_solve(cache, "line-graph-seed",
                      "m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                          ",lambda=" + std::to_string(lambda),
                      build_line_graph_kmn(m, n, lambda));
}

}  // namespace linec4::blocks
