#include <doctest.h>

#include "plovkit/exact_linalg.hpp"
#include "plovkit/incidence.hpp"
#include "plovkit/lefschetz.hpp"

using namespace plovkit;

TEST_CASE("operators on W_2") {
  // X x_1 = 1*2 x_0, X x_2 = 2*1 x_1
  CHECK(build_X(2, 1, 1) == RationalMatrix{{2}});
  CHECK(build_X(2, 1, 2) == RationalMatrix{{2}});
  CHECK(build_Y(2, 1, 1) == RationalMatrix{{1}});
  CHECK(build_H(2, 1, 0) == RationalMatrix{{2}});
  CHECK(build_H(2, 1, 2) == RationalMatrix{{-2}});
  CHECK(build_H(2, 2, 0) == RationalMatrix{{4}});
}

TEST_CASE("Y is the transposed incidence matrix") {
  for (int k = 1; k <= 8; ++k)
    for (int d = 1; d * k <= 8; ++d)
      for (int n = 1; n <= d * k; ++n)
        CHECK(build_Y(k, d, n) == to_rational(build_matrix(k, d, n).entries).transpose());
}

TEST_CASE("bracket relations hold") {
  for (auto [k, d] : {std::pair{1, 1}, {2, 2}, {3, 2}, {4, 3}, {2, 5}}) {
    const auto rep = verify_bracket(k, d);
    CHECK(rep.ok);
    CHECK_FALSE(rep.failed_identity.has_value());
  }
}

TEST_CASE("hard Lefschetz windows for k=2, d=2") {
  // A_{2,2,2} A_{2,2,3} = [1 1][1 2]^T = [3]
  const auto v1 = verify_hard_lefschetz(2, 2, 1);
  CHECK(v1.size == 1u);
  CHECK(v1.determinant == 3);
  CHECK(v1.invertible);
  // A_{2,2,1} ... A_{2,2,4} = 2 * 3 * 1
  const auto v0 = verify_hard_lefschetz(2, 2, 0);
  CHECK(v0.determinant == 6);
  CHECK_THROWS_AS(verify_hard_lefschetz(2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_hard_lefschetz(2, 2, -1), std::invalid_argument);
}

TEST_CASE("rank table for k=4, d=3") {
  const auto t = verify_full_rank(4, 3);
  CHECK(t.ok());
  REQUIRE(t.rows.size() == 12u);
  CHECK(t.rows[5].n == 6);
  CHECK(t.rows[5].rank == 4u);
  CHECK(t.rows[6].rank == 4u);
}

TEST_CASE("unimodality and the midpoint plateau") {
  const auto u = unimodality_report(4, 3);
  CHECK(u.ok());
  CHECK(u.counts.size() == 13u);
  CHECK(midpoint_counts_equal(2, 3));
  CHECK_FALSE(midpoint_counts_equal(2, 4));
  CHECK(midpoint_counts_equal(6, 5));
  CHECK_THROWS_AS(midpoint_counts_equal(3, 3), std::invalid_argument);
  CHECK(in_plateau_list(2, 7));
  CHECK_FALSE(in_plateau_list(2, 8));
  CHECK(in_plateau_list(10, 7));
  CHECK_FALSE(in_plateau_list(4, 4));
}

TEST_CASE("symmetric-function realization matches A^T") {
  for (int k = 1; k <= 6; ++k)
    for (int d = 1; d * k <= 6; ++d)
      for (int n = 1; n <= d * k; ++n)
        CHECK(symfun_lefschetz_matrix(k, d, n) == to_rational(build_matrix(k, d, n).entries).transpose());
}
