#pragma once

// The sl2 picture behind the incidence matrices. W_k has basis x_0..x_k with
// H x_i = (k - 2i) x_i, Y x_i = x_{i+1} and X x_i = i(k - i + 1) x_{i-1}.
// On Sym^d W_k the monomial x_0^{e_0}...x_k^{e_k} is identified with the
// partition (k^{e_k}, ..., 0^{e_0}), and the degree-n piece V(n) (H-weight
// dk - 2n) has the basis P(k, d, n) in the canonical order.

#include <optional>
#include <string>
#include <vector>

#include "plovkit/matrix.hpp"
#include "plovkit/partitions.hpp"

namespace plovkit {

/// Lowering operator Y : V(n-1) -> V(n), a p(k,d,n) x p(k,d,n-1) matrix built
/// from the Leibniz rule on monomials. Requires 1 <= n <= dk.
RationalMatrix build_Y(int k, int d, int n);

/// Raising operator X : V(n) -> V(n-1). Requires 1 <= n <= dk.
RationalMatrix build_X(int k, int d, int n);

/// Diagonal H on V(n), eigenvalue sum_i e_i (k - 2i) per basis monomial.
RationalMatrix build_H(int k, int d, int n);

/// Every graded piece with its operators, for repeated checks.
struct Sl2Module {
  int k = 0;
  int d = 0;
  std::vector<PartitionList> bases;  // n = 0..dk
  std::vector<RationalMatrix> h;     // h[n] on V(n)
  std::vector<RationalMatrix> y;     // y[n] : V(n-1) -> V(n), index 0 unused
  std::vector<RationalMatrix> x;     // x[n] : V(n) -> V(n-1), index 0 unused

  static Sl2Module build(int k, int d);
  std::size_t dimension(int n) const { return bases.at(static_cast<std::size_t>(n)).size(); }
};

struct BracketReport {
  int k = 0;
  int d = 0;
  bool ok = true;
  std::optional<std::string> failed_identity;
  std::optional<int> failed_grade;
};

/// Checks [X,Y] = H, [H,X] = 2X and [H,Y] = -2Y on every graded piece, and
/// that each H eigenvalue equals sum_i e_i (k - 2i).
BracketReport verify_bracket(int k, int d);

struct HardLefschetzVerdict {
  int k = 0;
  int d = 0;
  int n = 0;
  std::size_t size = 0;
  Rational determinant;
  bool invertible = false;
};

/// Forms A_{k,d,n+1} ... A_{k,d,dk-n} and certifies invertibility through its
/// exact determinant. Requires 0 <= n < dk/2.
HardLefschetzVerdict verify_hard_lefschetz(int k, int d, int n);

struct RankRow {
  int n = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t expected = 0;
  bool ok = false;
};

struct RankTable {
  int k = 0;
  int d = 0;
  std::vector<RankRow> rows;  // n = 1..dk
  std::optional<int> first_failure;
  bool ok() const { return !first_failure; }
};

/// rank A_{k,d,n} against p(k,d,n-1) for n <= ceil(dk/2) and p(k,d,n) for n > floor(dk/2).
RankTable verify_full_rank(int k, int d);

struct UnimodalityReport {
  int k = 0;
  int d = 0;
  std::vector<BigInt> counts;  // p(k,d,n), n = 0..dk
  bool from_ranks = false;     // implied by injectivity/surjectivity of Y
  bool direct = false;         // checked on the counts
  bool agree = false;
  bool ok() const { return from_ranks && direct && agree; }
};

UnimodalityReport unimodality_report(int k, int d);
UnimodalityReport unimodality_report(const RankTable& ranks);

/// Multiplication by x_1 + ... + x_d from degree n-1 to degree n of the
/// truncated ring of symmetric polynomials (exponents <= k), in the weighted
/// monomial basis m~_lambda = (e_0! ... e_k! / d!) m_lambda.
RationalMatrix symfun_lefschetz_matrix(int k, int d, int n);

/// p(k,d,dk/2-1) == p(k,d,dk/2), i.e. A_{k,d,dk/2} also has full column rank
/// and the plov bound improves by one. Throws std::invalid_argument when dk is odd.
bool midpoint_counts_equal(int k, int d);

/// (k, d) pairs for which the midpoint plateau is known to hold: k = 2 with
/// d odd, and (6,5), (6,7), (6,9), (6,11), (6,13), (10,7).
bool in_plateau_list(int k, int d);

}  // namespace plovkit
