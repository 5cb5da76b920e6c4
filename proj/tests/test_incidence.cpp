#include <doctest.h>

#include <algorithm>

#include "plovkit/incidence.hpp"

using namespace plovkit;

namespace {

// Raise each position in turn, re-sort, and count hits. A part value shared by
// e_i positions is hit e_i times, which is the weight.
IntMatrix oracle_matrix(int k, int d, int n) {
  const auto rows = enumerate(k, d, n - 1);
  const auto cols = enumerate(k, d, n);
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j) {
      auto parts = rows.items[r].parts;
      if (++parts[j] > k) continue;
      std::sort(parts.rbegin(), parts.rend());
      auto c = cols.index_of(parts);
      REQUIRE(c.has_value());
      m(r, *c) += 1;
    }
  return m;
}

}  // namespace

TEST_CASE("reference matrices for k=4, d=3") {
  const IntMatrix a6{{1, 1, 0, 0, 0}, {1, 0, 1, 1, 0}, {0, 1, 0, 2, 0}, {0, 0, 0, 2, 1}};
  const IntMatrix a7{{1, 1, 0, 0}, {0, 2, 0, 0}, {2, 0, 1, 0}, {0, 1, 1, 1}, {0, 0, 0, 3}};
  CHECK(build_matrix(4, 3, 6).entries == a6);
  CHECK(build_matrix(4, 3, 7).entries == a7);
}

TEST_CASE("small matrices for k=2, d=2") {
  CHECK(build_matrix(2, 2, 1).entries == IntMatrix{{2}});
  CHECK(build_matrix(2, 2, 2).entries == IntMatrix{{1, 1}});
  CHECK(build_matrix(2, 2, 3).entries == IntMatrix{{1}, {2}});
  CHECK(build_matrix(2, 2, 4).entries == IntMatrix{{1}});
}

TEST_CASE("build_matrix agrees with position-wise raising") {
  for (int k = 1; k <= 12; ++k)
    for (int d = 1; d * k <= 12; ++d)
      for (int n = 1; n <= d * k; ++n) CHECK(build_matrix(k, d, n).entries == oracle_matrix(k, d, n));
}

TEST_CASE("column sums: each lambda is reached from every distinct part it can lower") {
  // sum over mu of a_{mu,lambda} = number of positions j with lambda_j > 0 whose
  // lowering keeps the tuple nonincreasing, i.e. the last position of each value
  for (int k = 1; k <= 4; ++k)
    for (int d = 1; d <= 4; ++d)
      for (int n = 1; n <= d * k; ++n) {
        const auto a = build_matrix(k, d, n);
        for (std::size_t c = 0; c < a.cols.size(); ++c) {
          BigInt sum = 0;
          for (std::size_t r = 0; r < a.rows.size(); ++r) sum += a.entries(r, c);
          BigInt expect = 0;
          const auto& parts = a.cols.items[c].parts;
          for (std::size_t j = 0; j < parts.size(); ++j)
            if (parts[j] > 0) {
              // weight of mu = lambda lowered at value parts[j] is e_{parts[j]-1}(mu)
              int below = 0;
              for (int v : parts) below += v == parts[j] - 1;
              if (j + 1 == parts.size() || parts[j + 1] != parts[j]) expect += below + 1;
            }
          CHECK(sum == expect);
        }
      }
}

TEST_CASE("bump") {
  const Partition mu = Partition::make({3, 1, 1, 0}, 4);
  CHECK(bump(mu, 1)->parts == std::vector<int>{3, 2, 1, 0});
  CHECK(bump(mu, 0)->parts == std::vector<int>{3, 1, 1, 1});
  CHECK(bump(mu, 3)->parts == std::vector<int>{4, 1, 1, 0});
  CHECK_FALSE(bump(mu, 2).has_value());
  CHECK_THROWS_AS(bump(mu, 4), std::invalid_argument);
  CHECK_THROWS_AS(bump(mu, -1), std::invalid_argument);
}

TEST_CASE("build_matrix rejects out-of-range grades") {
  CHECK_THROWS_AS(build_matrix(2, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_matrix(2, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_matrix(0, 2, 1), std::invalid_argument);
}
