#pragma once

// A computable model of an automorphism of X = E^d, E a generic elliptic curve.
//
//  * N^1(X)_Q is the space of symmetric d x d rational matrices.
//  * The automorphism given by an integer matrix A (det = +-1) pulls a class
//    M back to A^T M A.
//  * Ample classes are the positive-definite matrices.
//  * The top intersection of d classes is the polarized determinant
//    sum over nonempty S of (-1)^(d-|S|) det(sum_{i in S} M_i),
//    which is d! times the mixed discriminant; D^d = d! det(D).

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plovkit/matrix.hpp"
#include "plovkit/partitions.hpp"
#include "plovkit/poly.hpp"

namespace plovkit {

using NsClass = RationalMatrix;

/// Raised when the induced action on N^1 has an eigenvalue off the unit circle.
class PositiveEntropyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AbelianModel {
  int d = 0;
  IntMatrix automorphism;  // A
  NsClass polarization;    // H, symmetric positive definite
  int iterate = 1;         // the model stands for f^iterate of the input map

  /// Validates shape, |det A| = 1, and that H is symmetric positive definite.
  static AbelianModel make(IntMatrix a, std::optional<NsClass> h = std::nullopt);
};

/// Block-diagonal J_{1,r0} + J_{1,d0}^{m0}, H = identity. Requires
/// d = m0*d0 + r0 >= 1, d0 >= 1 and 0 <= r0 < d0.
AbelianModel jordan_model(int r0, int d0, int m0);

struct JordanTriple {
  int r0 = 0;
  int d0 = 1;
  int m0 = 0;
  int dimension() const { return m0 * d0 + r0; }
  /// m0 d0^2 + r0^2
  int expected_plov() const { return m0 * d0 * d0 + r0 * r0; }
};

/// Every admissible (r0, d0, m0) with 1 <= m0*d0 + r0 <= max_d, ordered by d0, r0, m0.
std::vector<JordanTriple> jordan_triples(int max_d);

bool is_positive_definite(const NsClass& m);

/// Top intersection number of exactly d classes.
Rational intersection_number(std::span<const NsClass> classes);

/// Same, with classes given with multiplicities that add up to d. Equal
/// classes may be merged, which keeps the number of determinants small.
Rational intersection_number(std::span<const std::pair<NsClass, int>> classes);

/// Intersection number whose classes depend polynomially on a parameter.
RationalPoly intersection_polynomial(std::span<const std::pair<PolyMatrix, int>> classes);

NsClass pullback(const IntMatrix& a, const NsClass& m);

/// Symmetric-matrix basis {E_ii} then {E_ij + E_ji, i < j}; its size is d(d+1)/2.
std::vector<NsClass> ns_basis(int d);

/// Matrix of M -> A^T M A on ns_basis(d).
RationalMatrix ns_operator(const IntMatrix& a);

IntMatrix power(const IntMatrix& a, int e);
/// Inverse of a unimodular integer matrix.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Cyclotomic polynomial Phi_n.
RationalPoly cyclotomic(int n);

struct UnipotentReduction {
  int iterate = 1;             // least m with ns_operator(A^m) unipotent
  IntMatrix power;             // A^m
  RationalPoly charpoly;       // of ns_operator(A)
  std::vector<int> orders;     // orders of the roots of unity found, with multiplicity
};

/// Throws PositiveEntropyError if the characteristic polynomial of
/// ns_operator(A) is not a product of cyclotomic polynomials.
UnipotentReduction quasi_unipotent_reduce(const IntMatrix& a);

/// Replaces the automorphism by its unipotent iterate (no-op when already unipotent).
AbelianModel reduce(const AbelianModel& model);

struct NilpotentData {
  int k = 0;                          // N^k != 0, N^{k+1} = 0 for N = ns_operator - id
  std::vector<int> jordan_sizes;      // block sizes of ns_operator, descending
  int class_exponent = 0;             // max i with N^i H != 0
};

/// Requires a unipotent model.
NilpotentData nilpotent_data(const AbelianModel& model);

/// N^i H for i = 0..k where N^{k+1} H = 0.
std::vector<NsClass> nilpotent_orbit(const AbelianModel& model);

/// Delta_n = sum_{i=0}^{k} C(n, i+1) N^i H, the sum of (f^m)^* H over 0 <= m < n.
PolyMatrix delta_poly(const AbelianModel& model);

/// (f^n)^* H = sum_j C(n, j) N^j H, valid for every integer n.
PolyMatrix pullback_poly(const AbelianModel& model);

struct PlovResult {
  int plov = 0;
  Rational leading_coefficient;
  int gkdim = 0;
  RationalPoly volume;  // Delta_n^d
};

/// Requires a unipotent model.
PlovResult plov(const AbelianModel& model);

struct DegreeSequence {
  int i = 0;
  RationalPoly polynomial;  // n -> (f^n)^* H^i . H^{d-i}
  int exponent = 0;
};

DegreeSequence degree_sequence(const AbelianModel& model, int i);

/// v_lambda = N^{lambda_1} H ... N^{lambda_d} H over every partition with parts <= k.
std::map<Partition, Rational> monomial_intersections(const AbelianModel& model);

struct MonomialGap {
  int bound = 0;  // d + max{|lambda| : v_lambda != 0}
  int plov = 0;
  int gap = 0;
};

MonomialGap plov_monomial_gap(const AbelianModel& model);

/// True iff the product of `factors` pairs to zero with every (d - j)-tuple
/// drawn from ns_basis(d). Requires factors.size() <= d.
bool weakly_trivial(int d, std::span<const NsClass> factors);
inline bool weakly_trivial(const AbelianModel& model, std::span<const NsClass> factors) {
  return weakly_trivial(model.d, factors);
}

/// Seeded source of random positive-definite integer matrices B^T B + I.
class AmpleSampler {
 public:
  AmpleSampler(int d, std::uint64_t seed);
  NsClass next();

 private:
  int d_;
  std::mt19937_64 engine_;
};

/// Pairs the product of `factors` with `samples` random tuples of ample
/// classes and reports whether every value was strictly positive.
bool sampled_positive(int d, std::span<const NsClass> factors, AmpleSampler& sampler, int samples);

struct PositivityCheck {
  std::string name;
  bool ok = false;
  bool sampled = false;  // true when the quantifier over ample classes was sampled
  std::string detail;
};

struct PositivitySequence {
  int r = 0;
  std::vector<int> t;   // t_r, t_{r-1}, ..., t_1
  std::vector<int> s;   // s_0 = 0, s_j = t_r + ... + t_{r-j+1}
  std::vector<std::vector<NsClass>> products;  // M_0, ..., M_r as factor lists
  std::vector<PositivityCheck> checks;
  bool ok() const;
};

struct PositivityOptions {
  std::uint64_t seed = 1;
  int samples = 8;
};

/// Requires a unipotent model with k = 2r > 0; throws std::invalid_argument otherwise.
PositivitySequence positivity_sequence(const AbelianModel& model, const PositivityOptions& options = {});

struct PolynomialCheck {
  int j = 0;
  int l = 0;
  RationalPoly polynomial;      // P(m) = M_j . ((f^m)^* H)^l . H^{d - s_j - l}
  int degree_bound = 0;         // (2r - 2j) l
  bool positive_samples = false;   // P(m) > 0 for m in [-10, 10]
  bool matches_direct = false;     // equals the direct pullback value at each sample
  bool even_degree = false;
  bool positive_leading = false;
  bool within_bound = false;
  bool ok() const {
    return positive_samples && matches_direct && even_degree && positive_leading && within_bound;
  }
};

PolynomialCheck positivity_polynomial_check(const AbelianModel& model, const PositivitySequence& seq, int j, int l);

enum class Status { pass, fail, observed };
std::string_view to_string(Status s);

struct BoundCheck {
  std::string name;
  std::string anchor;
  Status status = Status::pass;
  std::string detail;
};

struct DynReport {
  int d = 0;
  int iterate = 1;
  int plov = 0;
  Rational plov_leading;
  int gkdim = 0;
  int k = 0;
  int r = 0;
  std::vector<int> jordan_sizes;
  std::vector<int> degree_exponents;  // i = 0..d
  std::optional<PositivitySequence> positivity;
  MonomialGap monomial_gap;
  std::vector<BoundCheck> checks;
  bool ok() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int samples = 8;
};

/// Reduces to a unipotent iterate, then instantiates every bound. Propagates PositiveEntropyError.
DynReport verify_bounds(const AbelianModel& model, const VerifyOptions& options = {});

}  // namespace plovkit
