#pragma once

// Decision procedure for C4-decomposability of lambda L(K_{m,n}), the
// construction case it falls into, and infeasibility certificates.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linec4 {

struct Params {
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  std::uint64_t lambda = 1;

  Params swapped() const { return {n, m, lambda}; }
  friend bool operator==(const Params&, const Params&) = default;
};

std::string to_string(const Params& p);

/// C1: 2 | lambda(m+n-2).  C2: 8 | lambda mn(m+n-2).
/// C3: {m,n} = {3,7} (mod 8) forces 2 | lambda.
/// C4: min(m,n) = 2 with the other side odd forces other >= 5 and 8 | lambda.
enum class Condition { C1, C2, C3, C4 };

enum class CaseTag {
  EvenEven,
  OddOdd_2_1,
  OddOdd_2_2,
  OddOdd_2_3,
  Mixed_mod4_0,
  Mixed_mod4_2,
  Mixed_m_eq_2,
};

std::string_view to_string(Condition c);
std::string_view to_string(CaseTag t);

struct Verdict {
  bool feasible = false;
  std::vector<Condition> failed_conditions;
  std::optional<CaseTag> case_tag;
  /// Smallest multiplicity mu at which the construction route for this case
  /// applies; the lambda-fold result is mu-fold replicated lambda/mu times.
  std::optional<std::uint64_t> base_multiplicity;
};

/// Throws OutOfTheoremScope when mn < 4 or any parameter is zero.
Verdict decide(const Params& p);

/// lambda mn(m+n-2)/8. Throws NotFeasibleError for infeasible parameters.
std::uint64_t expected_cycle_count(const Params& p);

/// lambda mn(m+n-2)/2, the edge count of lambda L(K_{m,n}).
std::uint64_t line_graph_edge_count(const Params& p);

enum class CertificateKind { OddDegree, EdgeCountNotDiv4, HorizontalParity, MTwoCounting, TriangleNoC4 };

std::string_view to_string(CertificateKind k);

/// Machine-checkable reason why lambda L(K_{m,n}) has no C4-decomposition.
struct Certificate {
  CertificateKind kind;
  Params params;
  /// Named integer quantities of the violated count, e.g. "degree" or
  /// "horizontal_edges".
  std::map<std::string, std::uint64_t> quantities;

  /// Recomputes every quantity from `params` and checks the arithmetic
  /// statement the certificate asserts.
  bool holds() const;
  std::string describe() const;
};

/// Throws FeasibleParamsError when p is feasible.
Certificate necessity_certificate(const Params& p);

}  // namespace linec4
