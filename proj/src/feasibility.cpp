#include "linec4/feasibility.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "linec4/errors.hpp"

namespace linec4 {
namespace {

using u128 = unsigned __int128;

std::uint64_t narrow(u128 v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("quantity exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

// lambda * m * n * (m + n - 2), exact.
u128 twice_edges(const Params& p) {
  return u128(p.lambda) * p.m * p.n * (p.m + p.n - 2);
}

bool is_three_seven(std::uint64_t a, std::uint64_t b) {
  return (a % 8 == 3 && b % 8 == 7) || (a % 8 == 7 && b % 8 == 3);
}

// For min(m,n) = 2 with odd partner, returns that partner.
std::optional<std::uint64_t> two_by_odd_partner(const Params& p) {
  if (p.m == 2 && p.n % 2 == 1) return p.n;
  if (p.n == 2 && p.m % 2 == 1) return p.m;
  return std::nullopt;
}

void check_scope(const Params& p) {
  if (p.m == 0 || p.n == 0 || p.lambda == 0) {
    throw OutOfTheoremScope("m, n and lambda must be positive: " + to_string(p));
  }
  if (u128(p.m) * p.n < 4) {
    throw OutOfTheoremScope("mn >= 4 required, got " + to_string(p));
  }
}

}  // namespace

std::string to_string(const Params& p) {
  std::ostringstream os;
  os << "(m=" << p.m << ", n=" << p.n << ", lambda=" << p.lambda << ")";
  return os.str();
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C3: return "C3";
    case Condition::C4: return "C4";
  }
  return "?";
}

std::string_view to_string(CaseTag t) {
  switch (t) {
    case CaseTag::EvenEven: return "EvenEven";
    case CaseTag::OddOdd_2_1: return "OddOdd_2_1";
    case CaseTag::OddOdd_2_2: return "OddOdd_2_2";
    case CaseTag::OddOdd_2_3: return "OddOdd_2_3";
    case CaseTag::Mixed_mod4_0: return "Mixed_mod4_0";
    case CaseTag::Mixed_mod4_2: return "Mixed_mod4_2";
    case CaseTag::Mixed_m_eq_2: return "Mixed_m_eq_2";
  }
  return "?";
}

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::OddDegree: return "OddDegree";
    case CertificateKind::EdgeCountNotDiv4: return "EdgeCountNotDiv4";
    case CertificateKind::HorizontalParity: return "HorizontalParity";
    case CertificateKind::MTwoCounting: return "MTwoCounting";
    case CertificateKind::TriangleNoC4: return "TriangleNoC4";
  }
  return "?";
}

Verdict decide(const Params& p) {
  check_scope(p);
  Verdict v;
  if (u128(p.lambda) * (p.m + p.n - 2) % 2 != 0) v.failed_conditions.push_back(Condition::C1);
  if (twice_edges(p) % 8 != 0) v.failed_conditions.push_back(Condition::C2);
  if (is_three_seven(p.m, p.n) && p.lambda % 2 != 0) {
    v.failed_conditions.push_back(Condition::C3);
  }
  if (auto other = two_by_odd_partner(p); other && (*other < 5 || p.lambda % 8 != 0)) {
    v.failed_conditions.push_back(Condition::C4);
  }
  v.feasible = v.failed_conditions.empty();
  if (!v.feasible) return v;

  const bool m_even = p.m % 2 == 0;
  const bool n_even = p.n % 2 == 0;
  if (m_even && n_even) {
    v.case_tag = CaseTag::EvenEven;
    v.base_multiplicity = 1;
  } else if (!m_even && !n_even) {
    const std::uint64_t s = (p.m + p.n - 2) % 8;
    if (s == 0) {
      v.case_tag = CaseTag::OddOdd_2_1;
      v.base_multiplicity = is_three_seven(p.m, p.n) ? 2 : 1;
    } else if (s % 4 == 2) {
      v.case_tag = CaseTag::OddOdd_2_2;
      v.base_multiplicity = 4;
    } else {
      v.case_tag = CaseTag::OddOdd_2_3;
      v.base_multiplicity = 2;
    }
  } else {
    const std::uint64_t even_side = m_even ? p.m : p.n;
    if (even_side == 2) {
      v.case_tag = CaseTag::Mixed_m_eq_2;
      v.base_multiplicity = 8;
    } else if (even_side % 4 == 0) {
      v.case_tag = CaseTag::Mixed_mod4_0;
      v.base_multiplicity = 2;
    } else {
      v.case_tag = CaseTag::Mixed_mod4_2;
      v.base_multiplicity = 4;
    }
  }
  return v;
}

std::uint64_t line_graph_edge_count(const Params& p) { return narrow(twice_edges(p) / 2); }

std::uint64_t expected_cycle_count(const Params& p) {
  if (!decide(p).feasible) throw NotFeasibleError("no C4-decomposition exists for " + to_string(p));
  return narrow(twice_edges(p) / 8);
}

Certificate necessity_certificate(const Params& p) {
  const Verdict v = decide(p);
  if (v.feasible) throw FeasibleParamsError("parameters are feasible: " + to_string(p));
  auto failed = [&](Condition c) {
    for (auto f : v.failed_conditions) {
      if (f == c) return true;
    }
    return false;
  };

  Certificate cert{CertificateKind::OddDegree, p, {}};
  const auto partner = two_by_odd_partner(p);
  if (failed(Condition::C4) && partner && *partner == 3) {
    cert.kind = CertificateKind::TriangleNoC4;
    cert.quantities["odd_side"] = 3;
  } else if (failed(Condition::C1)) {
    cert.kind = CertificateKind::OddDegree;
    cert.quantities["degree"] = narrow(u128(p.lambda) * (p.m + p.n - 2));
  } else if (failed(Condition::C2)) {
    cert.kind = CertificateKind::EdgeCountNotDiv4;
    const std::uint64_t edges = line_graph_edge_count(p);
    cert.quantities["edges"] = edges;
    cert.quantities["residue_mod_4"] = edges % 4;
  } else if (failed(Condition::C3)) {
    cert.kind = CertificateKind::HorizontalParity;
    cert.quantities["horizontal_edges"] = narrow(u128(p.lambda) * p.m * p.n * (p.n - 1) / 2);
  } else {
    cert.kind = CertificateKind::MTwoCounting;
    const std::uint64_t odd = *partner;
    cert.quantities["odd_side"] = odd;
    cert.quantities["residue_mod_8"] = narrow(u128(p.lambda) * odd * (odd - 2) % 8);
  }
  return cert;
}

bool Certificate::holds() const {
  const Params& p = params;
  auto q = [&](const char* key) -> std::optional<std::uint64_t> {
    auto it = quantities.find(key);
    if (it == quantities.end()) return std::nullopt;
    return it->second;
  };
  switch (kind) {
    case CertificateKind::OddDegree: {
      const u128 degree = u128(p.lambda) * (p.m + p.n - 2);
      return q("degree") == narrow(degree) && degree % 2 == 1;
    }
    case CertificateKind::EdgeCountNotDiv4: {
      const u128 twice = twice_edges(p);
      if (twice % 2 != 0) return false;
      const std::uint64_t edges = narrow(twice / 2);
      return q("edges") == edges && q("residue_mod_4") == edges % 4 && edges % 4 != 0;
    }
    case CertificateKind::HorizontalParity: {
      // Every 4-cycle of the grid uses 0, 2 or 4 horizontal edges, so an odd
      // horizontal total cannot be covered.
      const u128 horizontal = u128(p.lambda) * p.m * p.n * (p.n - 1) / 2;
      return q("horizontal_edges") == narrow(horizontal) && horizontal % 2 == 1;
    }
    case CertificateKind::MTwoCounting: {
      // Each K_n row loses lambda*n/2 edges to mixed cycles; the pure
      // remainder lambda*n(n-2)/2 must split into 4-cycles.
      const auto partner = two_by_odd_partner(p);
      if (!partner || q("odd_side") != *partner) return false;
      const std::uint64_t residue = narrow(u128(p.lambda) * *partner * (*partner - 2) % 8);
      return q("residue_mod_8") == residue && residue != 0;
    }
    case CertificateKind::TriangleNoC4: {
      // The row cliques are lambda K_3, which contain no 4-cycle.
      const auto partner = two_by_odd_partner(p);
      return partner && *partner == 3 && q("odd_side") == 3;
    }
  }
  return false;
}

std::string Certificate::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " for " << to_string(params) << ":";
  switch (kind) {
    case CertificateKind::OddDegree:
      os << " every vertex has odd degree " << quantities.at("degree");
      break;
    case CertificateKind::EdgeCountNotDiv4:
      os << " edge count " << quantities.at("edges") << " is " << quantities.at("residue_mod_4")
         << " mod 4";
      break;
    case CertificateKind::HorizontalParity:
      os << " horizontal edge count " << quantities.at("horizontal_edges")
         << " is odd, but every 4-cycle uses an even number of horizontal edges";
      break;
    case CertificateKind::MTwoCounting:
      os << " pure remainder lambda*n(n-2) = " << quantities.at("residue_mod_8")
         << " mod 8 with n = " << quantities.at("odd_side") << ", not divisible by 8";
      break;
    case CertificateKind::TriangleNoC4:
      os << " the row cliques are lambda K_3 and contain no 4-cycle";
      break;
  }
  return os.str();
}

}  // namespace linec4
