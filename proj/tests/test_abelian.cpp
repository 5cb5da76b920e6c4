#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "plovkit/abelian.hpp"
#include "plovkit/exact_linalg.hpp"
#include "support.hpp"

using namespace plovkit;

namespace {

// Sum over permutations s of det[column j of M_{s(j)}]; equals d! times the mixed discriminant.
Rational permutation_intersection(const std::vector<NsClass>& ms) {
  const std::size_t d = ms.size();
  std::vector<std::size_t> s(d);
  std::iota(s.begin(), s.end(), 0);
  Rational total = 0;
  do {
    RationalMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) m(i, j) = ms[s[j]](i, j);
    total += testing::cofactor_det(m);
  } while (std::next_permutation(s.begin(), s.end()));
  return total;
}

NsClass diag(std::initializer_list<long> v) {
  NsClass m(v.size(), v.size());
  std::size_t i = 0;
  for (long x : v) m(i, i) = x, ++i;
  return m;
}

IntMatrix j12() { return IntMatrix{{1, 1}, {0, 1}}; }

}  // namespace

TEST_CASE("intersection numbers on E x E") {
  const NsClass id = RationalMatrix::identity(2);
  const std::vector<NsClass> ii{id, id};
  CHECK(intersection_number(ii) == 2);
  // the two fibre classes meet once
  const std::vector<NsClass> fibres{diag({1, 0}), diag({0, 1})};
  CHECK(intersection_number(fibres) == 1);
  const std::vector<NsClass> with_zero{id, NsClass(2, 2)};
  CHECK(intersection_number(with_zero) == 0);
  const std::vector<NsClass> wrong{id};
  CHECK_THROWS_AS(intersection_number(wrong), std::invalid_argument);
}

TEST_CASE("intersection_number matches the permutation formula") {
  testing::Gen g(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = static_cast<std::size_t>(g.between(1, 4));
    std::vector<NsClass> ms;
    for (std::size_t i = 0; i < d; ++i) ms.push_back(g.symmetric(d, -3, 3));
    if (g.between(0, 2) == 0 && d > 1) ms[1] = ms[0];
    CHECK(intersection_number(ms) == permutation_intersection(ms));
  }
}

TEST_CASE("intersection_number is multilinear, symmetric and invariant under unimodular pullback") {
  testing::Gen g(32);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = static_cast<std::size_t>(g.between(1, 4));
    std::vector<NsClass> ms;
    for (std::size_t i = 0; i < d; ++i) ms.push_back(g.symmetric(d, -3, 3));
    const Rational base = intersection_number(ms);
    const NsClass other = g.symmetric(d, -3, 3);
    const long a = g.between(-3, 3);
    const auto pos = static_cast<std::size_t>(g.between(0, static_cast<long>(d) - 1));
    auto mixed = ms;
    NsClass scaled = ms[pos];
    scaled.scale(Rational(a));
    mixed[pos] = scaled + other;
    auto swapped = ms;
    swapped[pos] = other;
    CHECK(intersection_number(mixed) == a * base + intersection_number(swapped));
    auto rev = ms;
    std::reverse(rev.begin(), rev.end());
    CHECK(intersection_number(rev) == base);
    BigInt fact = 1;
    for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<unsigned long>(i);
    const std::vector<NsClass> same(d, ms[0]);
    CHECK(intersection_number(same) == Rational(fact) * det(ms[0]));

    IntMatrix u;
    do u = g.int_matrix(d, d, -3, 3);
    while (abs(det(to_rational(u))) != 1);
    std::vector<NsClass> pulled;
    for (const auto& m : ms) pulled.push_back(pullback(u, m));
    CHECK(intersection_number(pulled) == base);
  }
}

TEST_CASE("pullback") {
  CHECK(pullback(j12(), RationalMatrix::identity(2)) == RationalMatrix{{1, 1}, {1, 2}});
  const NsClass m{{2, 1}, {1, 3}};
  CHECK(pullback(IntMatrix::identity(2), m) == m);
  CHECK_THROWS_AS(pullback(IntMatrix::identity(3), m), std::invalid_argument);
  const NsClass pi = pullback(j12(), RationalMatrix::identity(2));
  const std::vector<NsClass> before{RationalMatrix::identity(2), RationalMatrix::identity(2)};
  const std::vector<NsClass> after{pi, pi};
  CHECK(intersection_number(before) == 2);
  CHECK(intersection_number(after) == 2);
}

TEST_CASE("ns_operator") {
  CHECK(ns_operator(IntMatrix::identity(3)) == RationalMatrix::identity(6));
  const RationalMatrix n = ns_operator(j12()) - RationalMatrix::identity(3);
  CHECK_FALSE((n * n).is_zero());
  CHECK((n * n * n).is_zero());
  // block-diagonal input: the E_11 coordinate of a pullback ignores the second block
  IntMatrix blocks = IntMatrix::identity(3);
  blocks(1, 2) = 1;
  const RationalMatrix phi = ns_operator(blocks);
  CHECK(phi(0, 0) == 1);
  for (std::size_t c = 1; c < 6; ++c) CHECK(phi(0, c) == 0);
}

TEST_CASE("quasi-unipotent reduction") {
  const auto id = quasi_unipotent_reduce(j12());
  CHECK(id.iterate == 1);
  CHECK(id.power == j12());
  // the quarter turn acts on symmetric matrices with eigenvalues 1, -1, -1
  const auto rot = quasi_unipotent_reduce(IntMatrix{{0, -1}, {1, 0}});
  CHECK(rot.iterate == 2);
  CHECK(rot.power == IntMatrix{{-1, 0}, {0, -1}});
  CHECK(std::count(rot.orders.begin(), rot.orders.end(), 2) == 2);
  CHECK_THROWS_AS(quasi_unipotent_reduce(IntMatrix{{2, 1}, {1, 1}}), PositiveEntropyError);
  // order 6 element of SL_2(Z)
  const auto six = quasi_unipotent_reduce(IntMatrix{{1, -1}, {1, 0}});
  CHECK(six.iterate == 3);
  CHECK(six.power == IntMatrix{{-1, 0}, {0, -1}});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == RationalPoly(std::vector<Rational>{-1, 1}));
  CHECK(cyclotomic(4) == RationalPoly(std::vector<Rational>{1, 0, 1}));
  CHECK(cyclotomic(6) == RationalPoly(std::vector<Rational>{1, -1, 1}));
  CHECK(cyclotomic(12) == RationalPoly(std::vector<Rational>{1, 0, -1, 0, 1}));
}

TEST_CASE("nilpotent data") {
  const auto a = nilpotent_data(jordan_model(0, 2, 1));
  CHECK(a.k == 2);
  CHECK(a.jordan_sizes == std::vector<int>{3});
  CHECK(a.class_exponent == 2);
  CHECK(nilpotent_data(AbelianModel::make(IntMatrix::identity(3))).k == 0);
  CHECK(nilpotent_data(jordan_model(0, 3, 1)).k == 4);
  CHECK_THROWS_AS(nilpotent_data(AbelianModel::make(IntMatrix{{0, -1}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("delta polynomial for J_{1,2}") {
  const auto model = jordan_model(0, 2, 1);
  const auto orbit = nilpotent_orbit(model);
  REQUIRE(orbit.size() == 3u);
  CHECK(orbit[1] == RationalMatrix{{0, 1}, {1, 1}});
  CHECK(orbit[2] == RationalMatrix{{0, 0}, {0, 2}});
  const PolyMatrix delta = delta_poly(model);
  const RationalPoly n = RationalPoly::variable();
  const RationalPoly c2 = binomial_poly(1);
  const RationalPoly c3 = binomial_poly(2);
  CHECK(delta(0, 0) == n);
  CHECK(delta(0, 1) == c2);
  CHECK(delta(1, 0) == c2);
  CHECK(delta(1, 1) == n + c2 + RationalPoly(2) * c3);
  for (long steps = 1; steps <= 5; ++steps) {
    NsClass direct(2, 2);
    for (long m = 0; m < steps; ++m) direct += pullback(power(model.automorphism, static_cast<int>(m)), model.polarization);
    CHECK(evaluate(delta, Rational(steps)) == direct);
  }
}

TEST_CASE("plov of Jordan models") {
  struct Row {
    int r0, d0, m0, plov;
    Rational leading;
  };
  // leading coefficients from an independent symbolic computation
  const Row rows[] = {
      {0, 2, 1, 4, Rational(1, 6)},   {1, 2, 1, 5, Rational(1, 2)},       {0, 3, 1, 9, Rational(1, 1440)},
      {0, 2, 2, 8, Rational(1, 6)},   {1, 3, 1, 10, Rational(1, 360)},    {0, 4, 1, 16, Rational(1, 36288000)},
      {1, 2, 2, 9, Rational(5, 6)},   {2, 3, 1, 13, Rational(1, 864)},    {1, 4, 1, 17, Rational(1, 7257600)},
  };
  for (const auto& r : rows) {
    const auto p = plov(jordan_model(r.r0, r.d0, r.m0));
    CHECK(p.plov == r.plov);
    CHECK(p.leading_coefficient == r.leading);
    CHECK(p.gkdim == r.plov + 1);
  }
  for (int d = 1; d <= 5; ++d) {
    const auto p = plov(AbelianModel::make(IntMatrix::identity(static_cast<std::size_t>(d))));
    CHECK(p.plov == d);
    BigInt fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    CHECK(p.leading_coefficient == Rational(fact));
  }
  for (const auto& t : jordan_triples(5)) CHECK(plov(jordan_model(t.r0, t.d0, t.m0)).plov == t.expected_plov());
}

TEST_CASE("plov does not change under iteration") {
  for (const auto& t : jordan_triples(4)) {
    const auto model = jordan_model(t.r0, t.d0, t.m0);
    const int base = plov(model).plov;
    for (int e : {2, 3}) {
      const auto iter = AbelianModel::make(power(model.automorphism, e));
      CHECK(plov(iter).plov == base);
    }
  }
}

TEST_CASE("degree sequences") {
  const auto model = jordan_model(0, 2, 1);
  CHECK(degree_sequence(model, 0).polynomial == RationalPoly(2));
  const auto d1 = degree_sequence(model, 1);
  CHECK(d1.exponent == 2);
  CHECK(d1.polynomial.leading_coefficient() > 0);
  CHECK_THROWS_AS(degree_sequence(model, 3), std::invalid_argument);
  for (const auto& t : jordan_triples(4)) {
    const auto m = jordan_model(t.r0, t.d0, t.m0);
    const auto inv = AbelianModel::make(inverse_unimodular(m.automorphism));
    for (int i = 0; i <= m.d; ++i) CHECK(degree_sequence(m, i).exponent == degree_sequence(inv, m.d - i).exponent);
  }
}

TEST_CASE("monomial intersections for J_{1,2}") {
  const auto model = jordan_model(0, 2, 1);
  const auto v = monomial_intersections(model);
  CHECK(v.at(Partition::make({0, 0}, 2)) == 2);
  CHECK(v.at(Partition::make({2, 2}, 2)) == 0);
  CHECK(v.at(Partition::make({2, 0}, 2)) == 2);
  const auto gap = plov_monomial_gap(model);
  CHECK(gap.bound == 4);
  CHECK(gap.gap == 0);
  const auto id = plov_monomial_gap(AbelianModel::make(IntMatrix::identity(3)));
  CHECK(id.bound == 3);
  CHECK(id.gap == 0);
}

TEST_CASE("monomial bound equals plov on small Jordan models") {
  for (auto [r0, d0, m0, bound] : {std::array{0, 2, 1, 4}, {0, 3, 1, 9}, {1, 2, 1, 5}, {0, 2, 2, 8}, {1, 3, 1, 10},
                                   {0, 4, 1, 16}}) {
    const auto g = plov_monomial_gap(jordan_model(r0, d0, m0));
    CHECK(g.bound == bound);
    CHECK(g.gap == 0);
  }
}

TEST_CASE("weak triviality") {
  const auto model = jordan_model(0, 2, 1);
  const auto orbit = nilpotent_orbit(model);
  const std::vector<NsClass> one{orbit[2]};
  CHECK_FALSE(weakly_trivial(model, one));
  const std::vector<NsClass> two{orbit[2], orbit[2]};
  CHECK(weakly_trivial(model, two));
  const std::vector<NsClass> zero{NsClass(2, 2)};
  CHECK(weakly_trivial(model, zero));
  const std::vector<NsClass> e11{orbit[2], diag({1, 0})};
  CHECK(intersection_number(e11) == 2);
}

TEST_CASE("positivity sequences") {
  const auto s = positivity_sequence(jordan_model(0, 2, 1));
  CHECK(s.r == 1);
  CHECK(s.t == std::vector<int>{1});
  CHECK(s.s == std::vector<int>{0, 1});
  CHECK(s.ok());
  for (auto [r0, d0, m0] : {std::array{0, 3, 1}, {1, 3, 1}}) {
    const auto q = positivity_sequence(jordan_model(r0, d0, m0));
    CHECK(q.t == std::vector<int>{1, 1});
    CHECK(q.ok());
  }
  CHECK(positivity_sequence(jordan_model(0, 2, 2)).t == std::vector<int>{2});
  CHECK(positivity_sequence(jordan_model(0, 4, 1)).t == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(positivity_sequence(AbelianModel::make(IntMatrix::identity(2))), std::invalid_argument);
}

TEST_CASE("positivity sequences are stable across seeds") {
  const auto model = jordan_model(1, 3, 1);
  const auto a = positivity_sequence(model, {1, 4});
  const auto b = positivity_sequence(model, {99, 4});
  CHECK(a.t == b.t);
  CHECK(a.ok());
  CHECK(b.ok());
}

TEST_CASE("positivity polynomials") {
  const auto model = jordan_model(0, 2, 1);
  const auto seq = positivity_sequence(model);
  const auto full = positivity_polynomial_check(model, seq, 0, 2);
  CHECK(full.polynomial == RationalPoly(2));
  const auto one = positivity_polynomial_check(model, seq, 0, 1);
  CHECK(one.polynomial.degree() == 2u);
  CHECK(one.ok());
  const auto none = positivity_polynomial_check(model, seq, 0, 0);
  CHECK(none.polynomial == RationalPoly(2));
  CHECK(none.positive_samples);
  CHECK_THROWS_AS(positivity_polynomial_check(model, seq, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(positivity_polynomial_check(model, seq, 0, 3), std::invalid_argument);
}

TEST_CASE("verify_bounds") {
  const auto r3 = verify_bounds(jordan_model(0, 3, 1));
  CHECK(r3.ok());
  CHECK(r3.plov == 9);
  CHECK(r3.k == 4);
  const auto r5 = verify_bounds(jordan_model(1, 4, 1), {1, 2});
  CHECK(r5.ok());
  CHECK(r5.plov == 17);
  const auto plateau = std::find_if(r5.checks.begin(), r5.checks.end(),
                                    [](const BoundCheck& c) { return c.name == "plov_plateau_bound"; });
  REQUIRE(plateau != r5.checks.end());
  CHECK(plateau->status == Status::pass);
  const auto id = verify_bounds(AbelianModel::make(IntMatrix::identity(2)));
  CHECK(id.ok());
  CHECK(id.k == 0);
  CHECK(id.plov == 2);
  CHECK_FALSE(id.positivity.has_value());
  const auto rot = verify_bounds(AbelianModel::make(IntMatrix{{0, -1}, {1, 0}}));
  CHECK(rot.iterate == 2);
  CHECK_THROWS_AS(verify_bounds(AbelianModel::make(IntMatrix{{2, 1}, {1, 1}})), PositiveEntropyError);
}

TEST_CASE("nilpotency exponent of random unimodular conjugates") {
  testing::Gen g(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto shapes = jordan_triples(4);
    const auto& t = shapes[static_cast<std::size_t>(g.between(0, static_cast<long>(shapes.size()) - 1))];
    const auto base = jordan_model(t.r0, t.d0, t.m0);
    const auto d = static_cast<std::size_t>(base.d);
    IntMatrix s = IntMatrix::identity(d);
    for (int step = 0; step < 6 && d > 1; ++step) {
      const auto i = static_cast<std::size_t>(g.between(0, static_cast<long>(d) - 1));
      const auto j = (i + 1 + static_cast<std::size_t>(g.between(0, static_cast<long>(d) - 2))) % d;
      for (std::size_t c = 0; c < d; ++c) s(i, c) += s(j, c);
    }
    const auto conj = AbelianModel::make(inverse_unimodular(s) * base.automorphism * s);
    const int k = nilpotent_data(conj).k;
    CHECK(k == nilpotent_data(base).k);
    CHECK(k <= std::max(0, 2 * base.d - 2));
    CHECK(plov(conj).plov == t.expected_plov());
  }
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(AbelianModel::make(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianModel::make(IntMatrix{{1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianModel::make(IntMatrix::identity(2), RationalMatrix{{1, 0}, {0, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianModel::make(IntMatrix::identity(2), RationalMatrix{{1, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianModel::make(IntMatrix::identity(2), RationalMatrix::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(jordan_model(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(jordan_model(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(jordan_model(0, 2, 0), std::invalid_argument);
  CHECK(jordan_model(0, 2, 1).automorphism == j12());
  CHECK(jordan_model(1, 4, 1).d == 5);
  CHECK(jordan_model(0, 3, 1).automorphism == IntMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK(is_positive_definite(RationalMatrix{{2, 1}, {1, 2}}));
  CHECK_FALSE(is_positive_definite(RationalMatrix{{1, 2}, {2, 1}}));
  CHECK(inverse_unimodular(j12()) == IntMatrix{{1, -1}, {0, 1}});
  CHECK(power(j12(), -2) == IntMatrix{{1, -2}, {0, 1}});
}
