#include <algorithm>

#include "doctest.h"
#include "linec4/errors.hpp"
#include "linec4/feasibility.hpp"

using namespace linec4;

namespace {

bool failed(const Verdict& v, Condition c) {
  return std::find(v.failed_conditions.begin(), v.failed_conditions.end(), c) !=
         v.failed_conditions.end();
}

// The four conditions restated directly on the parameters.
bool oracle_feasible(std::uint64_t m, std::uint64_t n, std::uint64_t l) {
  if (l * (m + n - 2) % 2 != 0) return false;
  if (l * m * n * (m + n - 2) % 8 != 0) return false;
  const std::uint64_t a = m % 8, b = n % 8;
  if (((a == 3 && b == 7) || (a == 7 && b == 3)) && l % 2 != 0) return false;
  const std::uint64_t lo = std::min(m, n), hi = std::max(m, n);
  if (lo == 2 && hi % 2 == 1 && (hi < 5 || l % 8 != 0)) return false;
  return true;
}

}  // namespace

TEST_CASE("decide on reference parameters") {
  const Verdict v371 = decide({3, 7, 1});
  CHECK(!v371.feasible);
  CHECK(failed(v371, Condition::C3));
  CHECK(decide({3, 7, 2}).feasible);

  const Verdict v238 = decide({2, 3, 8});
  CHECK(!v238.feasible);
  CHECK(failed(v238, Condition::C4));

  const Verdict v258 = decide({2, 5, 8});
  CHECK(v258.feasible);
  CHECK(v258.case_tag == CaseTag::Mixed_m_eq_2);
  CHECK(v258.base_multiplicity == 8u);

  CHECK(!decide({2, 5, 4}).feasible);
  CHECK(decide({2, 2, 1}).feasible);
  CHECK(!decide({3, 3, 1}).feasible);
  CHECK(failed(decide({3, 3, 1}), Condition::C2));
  CHECK(decide({3, 3, 2}).feasible);
  CHECK(decide({3, 3, 2}).case_tag == CaseTag::OddOdd_2_3);
  CHECK(decide({3, 5, 4}).case_tag == CaseTag::OddOdd_2_2);
  CHECK(decide({3, 7, 2}).base_multiplicity == 2u);
  CHECK(decide({9, 9, 1}).base_multiplicity == 1u);
  CHECK(decide({6, 3, 4}).case_tag == CaseTag::Mixed_mod4_2);
  CHECK(decide({4, 3, 2}).case_tag == CaseTag::Mixed_mod4_0);
}

TEST_CASE("decide rejects mn < 4 and zero parameters") {
  CHECK_THROWS_AS(decide({1, 3, 1}), OutOfTheoremScope);
  CHECK_THROWS_AS(decide({0, 5, 1}), OutOfTheoremScope);
  CHECK_THROWS_AS(decide({4, 4, 0}), OutOfTheoremScope);
}

TEST_CASE("expected cycle counts") {
  CHECK(expected_cycle_count({3, 4, 2}) == 15);
  CHECK(expected_cycle_count({11, 3, 2}) == 99);
  CHECK(expected_cycle_count({2, 5, 8}) == 50);
  CHECK(expected_cycle_count({6, 6, 1}) == 45);
  CHECK(expected_cycle_count({2, 2, 1}) == 1);
  CHECK(line_graph_edge_count({3, 3, 1}) == 18);
  CHECK_THROWS_AS(expected_cycle_count({3, 3, 1}), NotFeasibleError);
}

TEST_CASE("property: decide agrees with the conditions and is closed under its invariants") {
  for (std::uint64_t m = 1; m <= 24; ++m) {
    for (std::uint64_t n = 1; n <= 24; ++n) {
      if (m * n < 4) continue;
      for (std::uint64_t l = 1; l <= 16; ++l) {
        const Verdict v = decide({m, n, l});
        REQUIRE(v.feasible == oracle_feasible(m, n, l));
        CHECK(decide({n, m, l}).feasible == v.feasible);
        if (v.feasible) {
          REQUIRE(v.base_multiplicity.has_value());
          CHECK(l % *v.base_multiplicity == 0);
          CHECK(decide({m, n, *v.base_multiplicity}).feasible);
          CHECK(decide({m, n, 2 * l}).feasible);
          CHECK(v.failed_conditions.empty());
          CHECK(expected_cycle_count({m, n, l}) * 8 == l * m * n * (m + n - 2));
        } else {
          CHECK(!v.failed_conditions.empty());
          const Certificate c = necessity_certificate({m, n, l});
          CHECK(c.holds());
        }
      }
    }
  }
}

TEST_CASE("necessity certificates") {
  CHECK(necessity_certificate({3, 7, 1}).kind == CertificateKind::HorizontalParity);
  CHECK(necessity_certificate({7, 3, 1}).kind == CertificateKind::HorizontalParity);
  CHECK(necessity_certificate({2, 5, 4}).kind == CertificateKind::MTwoCounting);
  for (std::uint64_t l = 1; l <= 8; ++l) {
    const Certificate c = necessity_certificate({2, 3, l});
    CHECK(c.kind == CertificateKind::TriangleNoC4);
    CHECK(c.holds());
  }
  CHECK(necessity_certificate({3, 4, 1}).kind == CertificateKind::OddDegree);
  CHECK(necessity_certificate({3, 3, 1}).kind == CertificateKind::EdgeCountNotDiv4);
  CHECK_THROWS_AS(necessity_certificate({3, 3, 2}), FeasibleParamsError);
}

TEST_CASE("tampered certificates do not hold") {
  Certificate c = necessity_certificate({3, 7, 1});
  REQUIRE(c.holds());
  c.quantities["horizontal_edges"] += 1;
  CHECK(!c.holds());

  Certificate d = necessity_certificate({3, 3, 1});
  d.params.lambda = 2;
  CHECK(!d.holds());
}
