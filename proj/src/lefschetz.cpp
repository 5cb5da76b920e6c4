#include "plovkit/lefschetz.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "plovkit/exact_linalg.hpp"
#include "plovkit/incidence.hpp"

namespace plovkit {

namespace {

void require_grade(int k, int d, int n) {
  if (k < 1 || d < 1) throw std::invalid_argument("need k >= 1 and d >= 1");
  if (n < 1 || n > d * k)
    throw std::invalid_argument("grade n=" + std::to_string(n) + " outside [1, " + std::to_string(d * k) + "]");
}

RationalMatrix build_Y_between(const PartitionList& src, const PartitionList& dst) {
  RationalMatrix y(dst.size(), src.size());
  const int k = src.k;
  for (std::size_t c = 0; c < src.size(); ++c) {
    auto e = exponent_form(src.items[c]);
    // Y(x_i) = x_{i+1}; Leibniz spreads it over each factor x_i
    for (int i = 0; i < k; ++i) {
      const int mult = e[static_cast<std::size_t>(i)];
      if (mult == 0) continue;
      auto f = e;
      --f[static_cast<std::size_t>(i)];
      ++f[static_cast<std::size_t>(i) + 1];
      auto target = dst.index_of(from_exponents(f, src.d).parts);
      if (!target) throw std::logic_error("build_Y: target monomial outside the graded basis");
      y(*target, c) += mult;
    }
  }
  return y;
}

RationalMatrix build_X_between(const PartitionList& src, const PartitionList& dst) {
  RationalMatrix x(dst.size(), src.size());
  const int k = src.k;
  for (std::size_t c = 0; c < src.size(); ++c) {
    auto e = exponent_form(src.items[c]);
    for (int i = 1; i <= k; ++i) {
      const int mult = e[static_cast<std::size_t>(i)];
      if (mult == 0) continue;
      auto f = e;
      --f[static_cast<std::size_t>(i)];
      ++f[static_cast<std::size_t>(i) - 1];
      auto target = dst.index_of(from_exponents(f, src.d).parts);
      if (!target) throw std::logic_error("build_X: target monomial outside the graded basis");
      x(*target, c) += mult * i * (k - i + 1);
    }
  }
  return x;
}

RationalMatrix build_H_on(const PartitionList& basis) {
  RationalMatrix h(basis.size(), basis.size());
  const int k = basis.k;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto e = exponent_form(basis.items[c]);
    long weight = 0;
    for (int i = 0; i <= k; ++i) weight += static_cast<long>(e[static_cast<std::size_t>(i)]) * (k - 2 * i);
    h(c, c) = weight;
  }
  return h;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// e_0! ... e_k! / d!
Rational monomial_weight(const Partition& p) {
  BigInt num = 1;
  for (int e : exponent_form(p)) num *= factorial(e);
  Rational w(num, factorial(p.length()));
  w.canonicalize();
  return w;
}

}  // namespace

RationalMatrix build_Y(int k, int d, int n) {
  require_grade(k, d, n);
  return build_Y_between(enumerate(k, d, n - 1), enumerate(k, d, n));
}

RationalMatrix build_X(int k, int d, int n) {
  require_grade(k, d, n);
  return build_X_between(enumerate(k, d, n), enumerate(k, d, n - 1));
}

RationalMatrix build_H(int k, int d, int n) {
  if (n < 0 || n > d * k) throw std::invalid_argument("build_H: grade out of range");
  return build_H_on(enumerate(k, d, n));
}

Sl2Module Sl2Module::build(int k, int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("Sl2Module: need k >= 1 and d >= 1");
  Sl2Module m;
  m.k = k;
  m.d = d;
  const int top = d * k;
  for (int n = 0; n <= top; ++n) {
    m.bases.push_back(enumerate(k, d, n));
    m.h.push_back(build_H_on(m.bases.back()));
  }
  m.y.resize(static_cast<std::size_t>(top) + 1);
  m.x.resize(static_cast<std::size_t>(top) + 1);
  for (int n = 1; n <= top; ++n) {
    const auto un = static_cast<std::size_t>(n);
    m.y[un] = build_Y_between(m.bases[un - 1], m.bases[un]);
    m.x[un] = build_X_between(m.bases[un], m.bases[un - 1]);
  }
  return m;
}

BracketReport verify_bracket(int k, int d) {
  const Sl2Module m = Sl2Module::build(k, d);
  BracketReport rep;
  rep.k = k;
  rep.d = d;
  auto fail = [&](std::string what, int n) {
    if (rep.ok) {
      rep.ok = false;
      rep.failed_identity = std::move(what);
      rep.failed_grade = n;
    }
  };
  const int top = d * k;
  for (int n = 0; n <= top && rep.ok; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const std::size_t dim = m.dimension(n);
    // H eigenvalue on V(n) is dk - 2n
    if (!(m.h[un] == RationalMatrix::identity(dim).scale(Rational(top - 2 * n)))) fail("H eigenvalue", n);

    // [X,Y] on V(n) = X_{n+1} Y_{n+1} - Y_n X_n
    RationalMatrix xy(dim, dim);
    if (n < top) xy += m.x[un + 1] * m.y[un + 1];
    if (n > 0) xy -= m.y[un] * m.x[un];
    if (!(xy == m.h[un])) fail("[X,Y] = H", n);

    if (n > 0) {
      // [H,Y] = -2Y as maps V(n-1) -> V(n)
      RationalMatrix hy = m.h[un] * m.y[un] - m.y[un] * m.h[un - 1];
      RationalMatrix rhs = m.y[un];
      if (!(hy == rhs.scale(Rational(-2)))) fail("[H,Y] = -2Y", n);
      // [H,X] = 2X as maps V(n) -> V(n-1)
      RationalMatrix hx = m.h[un - 1] * m.x[un] - m.x[un] * m.h[un];
      RationalMatrix rhs2 = m.x[un];
      if (!(hx == rhs2.scale(Rational(2)))) fail("[H,X] = 2X", n);
    }
  }
  // the eigenvalue formula itself, monomial by monomial
  for (int n = 0; n <= top && rep.ok; ++n) {
    for (std::size_t i = 0; i < m.dimension(n); ++i) {
      auto e = exponent_form(m.bases[static_cast<std::size_t>(n)].items[i]);
      long w = 0;
      for (int j = 0; j <= k; ++j) w += static_cast<long>(e[static_cast<std::size_t>(j)]) * (k - 2 * j);
      if (w != top - 2 * n) fail("weight formula", n);
    }
  }
  return rep;
}

HardLefschetzVerdict verify_hard_lefschetz(int k, int d, int n) {
  if (k < 1 || d < 1) throw std::invalid_argument("need k >= 1 and d >= 1");
  if (n < 0 || 2 * n >= d * k)
    throw std::invalid_argument("verify_hard_lefschetz: need 0 <= n < dk/2 (got n=" + std::to_string(n) + ")");
  std::vector<RationalMatrix> window;
  for (int j = n + 1; j <= d * k - n; ++j) window.push_back(to_rational(build_matrix(k, d, j).entries));
  RationalMatrix prod = chain_product(window);
  HardLefschetzVerdict v;
  v.k = k;
  v.d = d;
  v.n = n;
  v.size = prod.rows();
  if (!prod.is_square()) return v;
  v.determinant = det(prod);
  v.invertible = v.determinant != 0;
  return v;
}

RankTable verify_full_rank(int k, int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("need k >= 1 and d >= 1");
  RankTable t;
  t.k = k;
  t.d = d;
  const int top = d * k;
  const int ceil_half = (top + 1) / 2;
  const int floor_half = top / 2;
  for (int n = 1; n <= top; ++n) {
    auto a = build_matrix(k, d, n);
    RankRow row;
    row.n = n;
    row.rows = a.rows.size();
    row.cols = a.cols.size();
    row.rank = rank(to_rational(a.entries));
    bool ok = true;
    if (n <= ceil_half) {
      row.expected = row.rows;
      ok = ok && row.rank == row.rows;
    }
    if (n > floor_half) {
      row.expected = row.cols;
      ok = ok && row.rank == row.cols;
    }
    row.ok = ok;
    if (!ok && !t.first_failure) t.first_failure = n;
    t.rows.push_back(row);
  }
  return t;
}

UnimodalityReport unimodality_report(const RankTable& ranks) {
  UnimodalityReport u;
  u.k = ranks.k;
  u.d = ranks.d;
  u.counts = gaussian_binomial(ranks.k, ranks.d);
  const int top = ranks.k * ranks.d;
  const int ceil_half = (top + 1) / 2;
  const int floor_half = top / 2;
  // injective Y forces p(n-1) <= p(n); surjective Y forces p(n-1) >= p(n)
  u.from_ranks = true;
  for (const auto& row : ranks.rows) {
    const bool injective = row.rank == row.rows;
    const bool surjective = row.rank == row.cols;
    if (row.n <= ceil_half && !injective) u.from_ranks = false;
    if (row.n > floor_half && !surjective) u.from_ranks = false;
  }
  u.direct = true;
  for (int n = 0; n < top; ++n) {
    const auto& a = u.counts[static_cast<std::size_t>(n)];
    const auto& b = u.counts[static_cast<std::size_t>(n) + 1];
    if (2 * n < top && !(a <= b)) u.direct = false;
    if (2 * n >= top && !(a >= b)) u.direct = false;
  }
  // the rank table and the counts must describe the same sequence
  u.agree = ranks.rows.size() == static_cast<std::size_t>(top);
  for (const auto& row : ranks.rows) {
    if (row.rows != u.counts[static_cast<std::size_t>(row.n) - 1] || row.cols != u.counts[static_cast<std::size_t>(row.n)])
      u.agree = false;
  }
  return u;
}

UnimodalityReport unimodality_report(int k, int d) { return unimodality_report(verify_full_rank(k, d)); }

RationalMatrix symfun_lefschetz_matrix(int k, int d, int n) {
  require_grade(k, d, n);
  const PartitionList src = enumerate(k, d, n - 1);
  const PartitionList dst = enumerate(k, d, n);
  RationalMatrix out(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Partition& mu = src.items[c];
    const Rational w = monomial_weight(mu);
    // expand w * m_mu * (x_1 + ... + x_d) in full monomials, dropping exponents above k
    std::map<std::vector<int>, Rational> product;
    std::vector<int> alpha(mu.parts.rbegin(), mu.parts.rend());
    do {
      for (int j = 0; j < d; ++j) {
        auto beta = alpha;
        if (++beta[static_cast<std::size_t>(j)] > k) continue;
        product[beta] += w;
      }
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    // the product is symmetric; read m_lambda off its sorted representative
    for (std::size_t r = 0; r < dst.size(); ++r) {
      const Partition& lambda = dst.items[r];
      auto it = product.find(lambda.parts);
      if (it == product.end()) continue;
      out(r, c) = it->second / monomial_weight(lambda);
    }
  }
  return out;
}

bool midpoint_counts_equal(int k, int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("need k >= 1 and d >= 1");
  if ((k * d) % 2 != 0) throw std::invalid_argument("midpoint condition needs dk even");
  const int half = k * d / 2;
  return count(k, d, half - 1) == count(k, d, half);
}

bool in_plateau_list(int k, int d) {
  if (k == 2 && d % 2 == 1) return true;
  static constexpr std::pair<int, int> couples[] = {{6, 5}, {6, 7}, {6, 9}, {6, 11}, {6, 13}, {10, 7}};
  return std::ranges::find(couples, std::pair{k, d}) != std::end(couples);
}

}  // namespace plovkit
