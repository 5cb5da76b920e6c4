#include "plovkit/abelian.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "plovkit/exact_linalg.hpp"
#include "plovkit/lefschetz.hpp"

namespace plovkit {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string str(const Rational& q) { return q.get_str(); }

RationalPoly poly_det(const PolyMatrix& m) { return polydet(m); }
Rational rat_det(const RationalMatrix& m) { return det(m); }

// sum over 0 <= j_a <= c_a, not all zero, of
// (-1)^(d - |j|) prod C(c_a, j_a) det(sum j_a M_a)
template <typename M, typename V, typename DetFn>
V polarize(std::span<const std::pair<M, int>> groups, DetFn det_fn) {
  int d = 0;
  for (const auto& [m, c] : groups) {
    if (c < 0) throw std::invalid_argument("intersection: negative multiplicity");
    d += c;
  }
  if (groups.empty()) throw std::invalid_argument("intersection: no classes");
  const std::size_t n = groups.front().first.rows();
  for (const auto& [m, c] : groups)
    if (!m.is_square() || m.rows() != n) throw std::invalid_argument("intersection: classes of different sizes");
  if (d != static_cast<int>(n))
    throw std::invalid_argument("intersection: expected " + std::to_string(n) + " classes, got " + std::to_string(d));

  std::vector<std::pair<const M*, int>> live;
  for (const auto& [m, c] : groups) {
    if (c == 0) continue;
    if (m.is_zero()) return V(0);
    live.emplace_back(&m, c);
  }
  // D^d = d! det D
  if (live.size() == 1) {
    V out = det_fn(*live.front().first);
    out *= Rational(factorial(d));
    return out;
  }

  V total(0);
  std::vector<int> j(live.size(), 0);
  while (true) {
    std::size_t a = 0;
    while (a < j.size() && j[a] == live[a].second) j[a++] = 0;
    if (a == j.size()) break;
    ++j[a];
    M sum(n, n);
    BigInt coef = 1;
    int used = 0;
    for (std::size_t b = 0; b < live.size(); ++b) {
      if (j[b] == 0) continue;
      M part = *live[b].first;
      part.scale(Rational(j[b]));
      sum += part;
      coef *= binomial(live[b].second, j[b]);
      used += j[b];
    }
    if ((d - used) % 2) coef = -coef;
    V term = det_fn(sum);
    term *= Rational(coef);
    total += term;
  }
  return total;
}

std::vector<std::pair<NsClass, int>> group(std::span<const NsClass> classes) {
  std::vector<std::pair<NsClass, int>> out;
  for (const auto& c : classes) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& g) { return g.first == c; });
    if (it == out.end())
      out.emplace_back(c, 1);
    else
      ++it->second;
  }
  return out;
}

std::vector<NsClass> concat(std::vector<NsClass> a, const NsClass& c, int times) {
  for (int i = 0; i < times; ++i) a.push_back(c);
  return a;
}

// Calls f on every nondecreasing index tuple of length len over [0, size).
template <typename F>
bool for_each_multiset(std::size_t size, int len, F&& f) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
  while (true) {
    if (!f(idx)) return false;
    int p = len - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] + 1 == size) --p;
    if (p < 0) return true;
    const std::size_t v = ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < len; ++q) idx[static_cast<std::size_t>(q)] = v;
  }
}

// a . T == b . T for every complementary tuple T drawn from the basis.
bool weakly_equal(int d, const std::vector<NsClass>& a, const std::vector<NsClass>& b) {
  if (a.size() != b.size() || a.size() > static_cast<std::size_t>(d))
    throw std::invalid_argument("weakly_equal: factor lists of different or excessive length");
  const auto basis = ns_basis(d);
  const int rest = d - static_cast<int>(a.size());
  return for_each_multiset(basis.size(), rest, [&](const std::vector<std::size_t>& idx) {
    auto x = a;
    auto y = b;
    for (auto i : idx) {
      x.push_back(basis[i]);
      y.push_back(basis[i]);
    }
    return intersection_number(x) == intersection_number(y);
  });
}

bool sampled_sign(int d, std::span<const NsClass> factors, AmpleSampler& sampler, int samples, int sign) {
  const int rest = d - static_cast<int>(factors.size());
  if (rest < 0) throw std::invalid_argument("sampled positivity: too many factors");
  const int rounds = rest == 0 ? 1 : std::max(samples, 1);
  for (int s = 0; s < rounds; ++s) {
    std::vector<NsClass> all(factors.begin(), factors.end());
    for (int i = 0; i < rest; ++i) all.push_back(sampler.next());
    if (sgn(intersection_number(all)) != sign) return false;
  }
  return true;
}

RationalMatrix operator_power(const RationalMatrix& m, int e) {
  RationalMatrix out = RationalMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

RationalMatrix nilpotent_part(const IntMatrix& a) {
  RationalMatrix n = ns_operator(a);
  return n - RationalMatrix::identity(n.rows());
}

}  // namespace

AbelianModel AbelianModel::make(IntMatrix a, std::optional<NsClass> h) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("automorphism must be a nonempty square matrix");
  const int d = static_cast<int>(a.rows());
  const Rational dt = det(to_rational(a));
  if (dt != 1 && dt != -1)
    throw std::invalid_argument("automorphism must have determinant +-1 (got " + dt.get_str() + ")");
  NsClass pol = h ? std::move(*h) : RationalMatrix::identity(a.rows());
  if (!pol.is_square() || pol.rows() != a.rows())
    throw std::invalid_argument("polarization must be " + std::to_string(d) + "x" + std::to_string(d));
  if (!pol.is_symmetric()) throw std::invalid_argument("polarization must be symmetric");
  if (!is_positive_definite(pol)) throw std::invalid_argument("polarization must be positive definite");
  AbelianModel m;
  m.d = d;
  m.automorphism = std::move(a);
  m.polarization = std::move(pol);
  return m;
}

AbelianModel jordan_model(int r0, int d0, int m0) {
  if (d0 < 1 || r0 < 0 || r0 >= d0 || m0 < 0)
    throw std::invalid_argument("jordan triple needs d0 >= 1, 0 <= r0 < d0 and m0 >= 0");
  const int d = m0 * d0 + r0;
  if (d < 1) throw std::invalid_argument("jordan triple gives dimension 0");
  IntMatrix a = IntMatrix::identity(static_cast<std::size_t>(d));
  std::vector<int> blocks;
  if (r0 > 0) blocks.push_back(r0);
  for (int i = 0; i < m0; ++i) blocks.push_back(d0);
  std::size_t start = 0;
  for (int b : blocks) {
    for (int i = 0; i + 1 < b; ++i) a(start + static_cast<std::size_t>(i), start + static_cast<std::size_t>(i) + 1) = 1;
    start += static_cast<std::size_t>(b);
  }
  return AbelianModel::make(std::move(a));
}

std::vector<JordanTriple> jordan_triples(int max_d) {
  std::vector<JordanTriple> out;
  for (int d0 = 1; d0 <= max_d; ++d0)
    for (int r0 = 0; r0 < d0; ++r0)
      for (int m0 = 0; m0 * d0 + r0 <= max_d; ++m0)
        if (m0 * d0 + r0 >= 1) out.push_back({r0, d0, m0});
  return out;
}

bool is_positive_definite(const NsClass& m) {
  if (!m.is_symmetric()) return false;
  // Sylvester: every leading principal minor is positive
  for (std::size_t s = 1; s <= m.rows(); ++s) {
    RationalMatrix minor(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) minor(i, j) = m(i, j);
    if (det(minor) <= 0) return false;
  }
  return true;
}

Rational intersection_number(std::span<const NsClass> classes) {
  if (classes.empty()) throw std::invalid_argument("intersection_number: no classes");
  const auto grouped = group(classes);
  return intersection_number(std::span<const std::pair<NsClass, int>>(grouped));
}

Rational intersection_number(std::span<const std::pair<NsClass, int>> classes) {
  return polarize<NsClass, Rational>(classes, rat_det);
}

RationalPoly intersection_polynomial(std::span<const std::pair<PolyMatrix, int>> classes) {
  return polarize<PolyMatrix, RationalPoly>(classes, poly_det);
}

NsClass pullback(const IntMatrix& a, const NsClass& m) {
  if (!a.is_square() || !m.is_square() || a.rows() != m.rows())
    throw std::invalid_argument("pullback: dimension mismatch");
  const RationalMatrix q = to_rational(a);
  return q.transpose() * m * q;
}

std::vector<NsClass> ns_basis(int d) {
  if (d < 1) throw std::invalid_argument("ns_basis: need d >= 1");
  const auto n = static_cast<std::size_t>(d);
  std::vector<NsClass> basis;
  for (std::size_t i = 0; i < n; ++i) {
    NsClass e(n, n);
    e(i, i) = 1;
    basis.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      NsClass e(n, n);
      e(i, j) = 1;
      e(j, i) = 1;
      basis.push_back(std::move(e));
    }
  return basis;
}

RationalMatrix ns_operator(const IntMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("ns_operator: need a nonempty square matrix");
  const std::size_t n = a.rows();
  const auto basis = ns_basis(static_cast<int>(n));
  RationalMatrix phi(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const NsClass img = pullback(a, basis[c]);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) phi(r++, c) = img(i, i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) phi(r++, c) = img(i, j);
  }
  return phi;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse_unimodular: not square");
  const std::size_t n = a.rows();
  RationalMatrix m = to_rational(a);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw std::invalid_argument("inverse_unimodular: singular matrix");
    m.swap_rows(p, c);
    inv.swap_rows(p, c);
    const Rational piv = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (inv(r, c).get_den() != 1) throw std::invalid_argument("inverse_unimodular: inverse is not integral");
      out(r, c) = inv(r, c).get_num();
    }
  return out;
}

IntMatrix power(const IntMatrix& a, int e) {
  if (!a.is_square()) throw std::invalid_argument("power: not square");
  IntMatrix base = e < 0 ? inverse_unimodular(a) : a;
  unsigned long left = e < 0 ? static_cast<unsigned long>(-static_cast<long>(e)) : static_cast<unsigned long>(e);
  IntMatrix out = IntMatrix::identity(a.rows());
  while (left) {
    if (left & 1u) out = out * base;
    left >>= 1;
    if (left) base = base * base;
  }
  return out;
}

RationalPoly cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: need n >= 1");
  static std::mutex mu;
  static std::map<int, RationalPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // x^n - 1 = prod over m | n of Phi_m
  RationalPoly p = RationalPoly::monomial(Rational(1), static_cast<std::size_t>(n)) - RationalPoly(1);
  for (int m = 1; m < n; ++m)
    if (n % m == 0) p = divide(p, cyclotomic(m)).first;
  std::lock_guard lock(mu);
  memo.emplace(n, p);
  return p;
}

namespace {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_unipotent(const IntMatrix& a) {
  const RationalMatrix n = nilpotent_part(a);
  return operator_power(n, static_cast<int>(n.rows())).is_zero();
}

}  // namespace

UnipotentReduction quasi_unipotent_reduce(const IntMatrix& a) {
  UnipotentReduction out;
  const RationalMatrix phi = ns_operator(a);
  const int dim = static_cast<int>(phi.rows());
  out.charpoly = charpoly(phi);
  RationalPoly rest = out.charpoly;
  // phi(j) >= sqrt(j/2), so phi(j) <= dim forces j <= 2 dim^2
  for (int j = 1; j <= 2 * dim * dim && rest.degree().value_or(0) > 0; ++j) {
    if (euler_phi(j) > dim) continue;
    const RationalPoly cj = cyclotomic(j);
    while (rest.degree().value_or(0) > 0) {
      auto [q, r] = divide(rest, cj);
      if (!r.is_zero()) break;
      rest = q;
      out.orders.push_back(j);
    }
  }
  if (rest.degree().value_or(0) > 0)
    throw PositiveEntropyError("positive entropy: the induced action on N^1 has the non-cyclotomic factor " +
                               rest.to_string('x'));
  out.iterate = 1;
  for (int o : out.orders) out.iterate = std::lcm(out.iterate, o);
  out.power = power(a, out.iterate);
  return out;
}

AbelianModel reduce(const AbelianModel& model) {
  const auto red = quasi_unipotent_reduce(model.automorphism);
  AbelianModel out = model;
  out.automorphism = red.power;
  out.iterate = model.iterate * red.iterate;
  return out;
}

NilpotentData nilpotent_data(const AbelianModel& model) {
  if (!is_unipotent(model.automorphism))
    throw std::invalid_argument("model is not unipotent; pass it through reduce() first");
  const RationalMatrix n = nilpotent_part(model.automorphism);
  const std::size_t dim = n.rows();
  NilpotentData out;
  // ranks[j] = rank N^j; blocks of size >= j number ranks[j-1] - ranks[j]
  std::vector<long> ranks{static_cast<long>(dim)};
  RationalMatrix p = RationalMatrix::identity(dim);
  while (ranks.back() > 0) {
    p = p * n;
    ranks.push_back(static_cast<long>(rank(p)));
  }
  out.k = static_cast<int>(ranks.size()) - 2;
  for (std::size_t j = ranks.size() - 1; j >= 1; --j) {
    const long at_least_j = ranks[j - 1] - ranks[j];
    const long at_least_next = j + 1 < ranks.size() ? ranks[j] - ranks[j + 1] : 0;
    for (long c = 0; c < at_least_j - at_least_next; ++c) out.jordan_sizes.push_back(static_cast<int>(j));
  }
  NsClass cur = model.polarization;
  int i = 0;
  while (!cur.is_zero()) {
    out.class_exponent = i++;
    cur = pullback(model.automorphism, cur) - cur;
  }
  return out;
}

std::vector<NsClass> nilpotent_orbit(const AbelianModel& model) {
  const int k = nilpotent_data(model).k;
  std::vector<NsClass> orbit;
  NsClass cur = model.polarization;
  for (int i = 0; i <= k; ++i) {
    orbit.push_back(cur);
    cur = pullback(model.automorphism, cur) - cur;
  }
  return orbit;
}

PolyMatrix delta_poly(const AbelianModel& model) {
  const auto orbit = nilpotent_orbit(model);
  const auto n = static_cast<std::size_t>(model.d);
  PolyMatrix out(n, n);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    PolyMatrix term = to_poly(orbit[i]);
    term.scale(binomial_poly(static_cast<unsigned>(i)));
    out += term;
  }
  return out;
}

PolyMatrix pullback_poly(const AbelianModel& model) {
  const auto orbit = nilpotent_orbit(model);
  PolyMatrix out = to_poly(orbit.front());
  for (std::size_t j = 1; j < orbit.size(); ++j) {
    PolyMatrix term = to_poly(orbit[j]);
    term.scale(binomial_poly(static_cast<unsigned>(j - 1)));
    out += term;
  }
  return out;
}

PlovResult plov(const AbelianModel& model) {
  const std::pair<PolyMatrix, int> groups[] = {{delta_poly(model), model.d}};
  PlovResult out;
  out.volume = intersection_polynomial(groups);
  if (out.volume.is_zero()) throw std::logic_error("plov: volume polynomial vanishes");
  out.plov = static_cast<int>(*out.volume.degree());
  out.leading_coefficient = out.volume.leading_coefficient();
  out.gkdim = out.plov + 1;
  return out;
}

DegreeSequence degree_sequence(const AbelianModel& model, int i) {
  if (i < 0 || i > model.d) throw std::invalid_argument("degree_sequence: need 0 <= i <= d");
  const std::pair<PolyMatrix, int> groups[] = {{pullback_poly(model), i},
                                               {to_poly(model.polarization), model.d - i}};
  DegreeSequence out;
  out.i = i;
  out.polynomial = intersection_polynomial(groups);
  out.exponent = out.polynomial.is_zero() ? -1 : static_cast<int>(*out.polynomial.degree());
  return out;
}

std::map<Partition, Rational> monomial_intersections(const AbelianModel& model) {
  const auto orbit = nilpotent_orbit(model);
  const int k = static_cast<int>(orbit.size()) - 1;
  std::vector<Partition> all;
  if (k == 0) {
    all.push_back(Partition::make(std::vector<int>(static_cast<std::size_t>(model.d), 0), 0));
  } else {
    for (int n = 0; n <= model.d * k; ++n)
      for (auto& p : enumerate(k, model.d, n).items) all.push_back(std::move(p));
  }
  std::map<Partition, Rational> out;
  for (const auto& lambda : all) {
    const auto e = exponent_form(lambda);
    std::vector<std::pair<NsClass, int>> groups;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) groups.emplace_back(orbit[i], e[i]);
    out.emplace(lambda, intersection_number(std::span<const std::pair<NsClass, int>>(groups)));
  }
  return out;
}

MonomialGap plov_monomial_gap(const AbelianModel& model) {
  MonomialGap g;
  int top = -1;
  for (const auto& [lambda, v] : monomial_intersections(model))
    if (v != 0) top = std::max(top, lambda.degree());
  if (top < 0) throw std::logic_error("plov_monomial_gap: every monomial vanishes");
  g.bound = model.d + top;
  g.plov = plov(model).plov;
  g.gap = g.bound - g.plov;
  return g;
}

bool weakly_trivial(int d, std::span<const NsClass> factors) {
  if (factors.size() > static_cast<std::size_t>(d)) throw std::invalid_argument("weakly_trivial: more than d factors");
  for (const auto& f : factors)
    if (f.is_zero()) return true;
  const auto basis = ns_basis(d);
  const int rest = d - static_cast<int>(factors.size());
  return for_each_multiset(basis.size(), rest, [&](const std::vector<std::size_t>& idx) {
    std::vector<NsClass> all(factors.begin(), factors.end());
    for (auto i : idx) all.push_back(basis[i]);
    return intersection_number(all) == 0;
  });
}

AmpleSampler::AmpleSampler(int d, std::uint64_t seed) : d_(d), engine_(seed) {
  if (d < 1) throw std::invalid_argument("AmpleSampler: need d >= 1");
}

NsClass AmpleSampler::next() {
  const auto n = static_cast<std::size_t>(d_);
  RationalMatrix b(n, n);
  // reduction by hand keeps the stream identical across standard libraries
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b(r, c) = static_cast<long>(engine_() % 5) - 2;
  return b.transpose() * b + RationalMatrix::identity(n);
}

bool sampled_positive(int d, std::span<const NsClass> factors, AmpleSampler& sampler, int samples) {
  return sampled_sign(d, factors, sampler, samples, 1);
}

bool PositivitySequence::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const PositivityCheck& c) { return c.ok; });
}

PositivitySequence positivity_sequence(const AbelianModel& model, const PositivityOptions& options) {
  const auto orbit = nilpotent_orbit(model);
  const int k = static_cast<int>(orbit.size()) - 1;
  if (k == 0 || k % 2) throw std::invalid_argument("positivity_sequence: needs a positive even nilpotency exponent");
  const int d = model.d;
  const int r = k / 2;
  PositivitySequence seq;
  seq.r = r;
  seq.s.push_back(0);
  seq.products.emplace_back();
  AmpleSampler sampler(d, options.seed);
  auto add = [&](std::string name, bool ok, bool sampled, std::string detail = {}) {
    seq.checks.push_back({std::move(name), ok, sampled, std::move(detail)});
  };

  std::vector<NsClass> m;
  int s = 0;
  for (int j = 0; j < r; ++j) {
    const std::string tag = "j=" + std::to_string(j);
    const NsClass& lead = orbit[static_cast<std::size_t>(2 * r - 2 * j)];
    int t = 0;
    while (s + t + 1 <= d && !weakly_trivial(d, concat(m, lead, t + 1))) ++t;
    if (t == 0) {
      add("exponent exists " + tag, false, false, "M_j.N^(2r-2j)H is weakly trivial");
      break;
    }
    seq.t.push_back(t);

    for (int i = 0; i <= t; ++i) {
      const auto prod = concat(m, lead, i);
      const std::string at = tag + " i=" + std::to_string(i);
      add("weakly positive M_j.(N^(2r-2j)H)^i " + at, sampled_sign(d, prod, sampler, options.samples, 1), true);
      std::vector<NsClass> pulled;
      for (const auto& f : prod) pulled.push_back(pullback(model.automorphism, f));
      add("pullback invariant M_j.(N^(2r-2j)H)^i " + at, weakly_equal(d, pulled, prod), false);
    }

    const std::vector<NsClass> next = concat(m, lead, t);
    const int s_next = s + t;
    if (s_next < d) {
      for (int e = 2 * r - 2 * j - 1; e <= k; ++e)
        add("weakly trivial M_(j+1).N^s H " + tag + " s=" + std::to_string(e),
            weakly_trivial(d, concat(next, orbit[static_cast<std::size_t>(e)], 1)), false);
      const auto neg = concat(concat(m, lead, t - 1), orbit[static_cast<std::size_t>(2 * r - 2 * j - 1)], 2);
      add("weakly negative M_j.(N^(2r-2j)H)^(t-1).(N^(2r-2j-1)H)^2 " + tag,
          sampled_sign(d, neg, sampler, options.samples, -1), true);
      add("weakly positive M_(j+1).N^(2r-2j-2)H " + tag,
          sampled_sign(d, concat(next, orbit[static_cast<std::size_t>(2 * r - 2 * j - 2)], 1), sampler,
                       options.samples, 1),
          true);
    }
    m = next;
    s = s_next;
    seq.s.push_back(s);
    seq.products.push_back(m);
  }
  add("sum of t below d", s < d, false, "sum=" + std::to_string(s) + " d=" + std::to_string(d));
  add("r <= d-1", r <= d - 1, false, "r=" + std::to_string(r));
  return seq;
}

PolynomialCheck positivity_polynomial_check(const AbelianModel& model, const PositivitySequence& seq, int j, int l) {
  if (j < 0 || j >= seq.r || static_cast<std::size_t>(j) >= seq.products.size())
    throw std::invalid_argument("positivity_polynomial_check: need 0 <= j < r");
  const int sj = seq.s[static_cast<std::size_t>(j)];
  const int d = model.d;
  if (l < 0 || l > d - sj) throw std::invalid_argument("positivity_polynomial_check: need 0 <= l <= d - s_j");
  const auto& factors = seq.products[static_cast<std::size_t>(j)];

  std::vector<std::pair<PolyMatrix, int>> groups;
  for (const auto& [cls, c] : group(factors)) groups.emplace_back(to_poly(cls), c);
  groups.emplace_back(pullback_poly(model), l);
  groups.emplace_back(to_poly(model.polarization), d - sj - l);

  PolynomialCheck out;
  out.j = j;
  out.l = l;
  out.polynomial = intersection_polynomial(groups);
  out.degree_bound = (2 * seq.r - 2 * j) * l;
  out.positive_samples = true;
  out.matches_direct = true;
  for (int mm = -10; mm <= 10; ++mm) {
    const Rational value = out.polynomial.evaluate(Rational(mm));
    if (value <= 0) out.positive_samples = false;
    const NsClass moved = pullback(power(model.automorphism, mm), model.polarization);
    auto direct = concat(concat(factors, moved, l), model.polarization, d - sj - l);
    if (intersection_number(direct) != value) out.matches_direct = false;
  }
  const auto deg = out.polynomial.degree();
  out.even_degree = deg && *deg % 2 == 0;
  out.positive_leading = out.polynomial.leading_coefficient() > 0;
  out.within_bound = deg && static_cast<int>(*deg) <= out.degree_bound;
  return out;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::observed:
      return "observed";
  }
  return "?";
}

bool DynReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.status == Status::fail; });
}

DynReport verify_bounds(const AbelianModel& input, const VerifyOptions& options) {
  const AbelianModel model = reduce(input);
  const NilpotentData nil = nilpotent_data(model);
  const PlovResult pv = plov(model);
  const int d = model.d;
  const int k = nil.k;

  DynReport rep;
  rep.d = d;
  rep.iterate = model.iterate;
  rep.plov = pv.plov;
  rep.plov_leading = pv.leading_coefficient;
  rep.gkdim = pv.gkdim;
  rep.k = k;
  rep.r = k / 2;
  rep.jordan_sizes = nil.jordan_sizes;

  auto check = [&](std::string name, std::string anchor, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), std::move(anchor), ok ? Status::pass : Status::fail, std::move(detail)});
  };
  auto observe = [&](std::string name, std::string anchor, std::string detail) {
    rep.checks.push_back({std::move(name), std::move(anchor), Status::observed, std::move(detail)});
  };
  const std::string pk = "plov=" + std::to_string(pv.plov) + " k=" + std::to_string(k) + " d=" + std::to_string(d);

  check("k_even", "nilpotency exponent is even", k % 2 == 0, "k=" + std::to_string(k));
  check("plov_linear_bound", "plov <= (k/2+1)d", pv.plov <= (k / 2 + 1) * d,
        pk + " bound=" + std::to_string((k / 2 + 1) * d));
  check("plov_square_bound", "plov <= d^2", pv.plov <= d * d, pk);
  if (k > 0) check("k_bound", "k <= 2d-2", k <= 2 * d - 2, "k=" + std::to_string(k));
  check("volume_leading_positive", "leading coefficient of Delta_n^d is positive", pv.leading_coefficient > 0,
        "leading=" + str(pv.leading_coefficient));
  if (k > 0 && in_plateau_list(k, d))
    check("plov_plateau_bound", "plov <= (k/2+1)d - 1 on the midpoint plateau list",
          pv.plov <= (k / 2 + 1) * d - 1, pk + " bound=" + std::to_string((k / 2 + 1) * d - 1));
  if (!nil.jordan_sizes.empty() && nil.jordan_sizes.front() == 3)
    check("plov_block3_bound", "plov <= 2 floor(d/2) + d when the largest block has size 3",
          pv.plov <= 2 * (d / 2) + d, pk + " bound=" + std::to_string(2 * (d / 2) + d));

  const auto monomials = monomial_intersections(model);
  int top = -1;
  bool vanish = true;
  for (const auto& [lambda, v] : monomials) {
    if (v == 0) continue;
    top = std::max(top, lambda.degree());
    if (2 * lambda.degree() > d * k) vanish = false;
  }
  rep.monomial_gap.bound = d + top;
  rep.monomial_gap.plov = pv.plov;
  rep.monomial_gap.gap = rep.monomial_gap.bound - pv.plov;
  check("monomial_bound", "plov <= d + max{|lambda| : v_lambda != 0}", pv.plov <= rep.monomial_gap.bound,
        pk + " bound=" + std::to_string(rep.monomial_gap.bound));
  check("monomial_vanishing", "v_lambda = 0 whenever |lambda| > dk/2", vanish,
        "largest nonzero |lambda|=" + std::to_string(top));
  observe("monomial_gap", "gap between plov and the monomial bound",
          "gap=" + std::to_string(rep.monomial_gap.gap));

  for (int i = 0; i <= d; ++i) {
    const auto seq = degree_sequence(model, i);
    rep.degree_exponents.push_back(seq.exponent);
    const int bound = 2 * (d - 1) * std::min(i, d - i);
    const std::string at = "i=" + std::to_string(i) + " exponent=" + std::to_string(seq.exponent);
    check("degree_exponent_bound_" + std::to_string(i), "deg_i(f^n) exponent <= 2(d-1)min(i,d-i)",
          seq.exponent >= 0 && seq.exponent <= bound, at + " bound=" + std::to_string(bound));
    check("degree_shape_" + std::to_string(i), "deg_i(f^n) has even degree and positive leading coefficient",
          seq.exponent >= 0 && seq.exponent % 2 == 0 && seq.polynomial.leading_coefficient() > 0, at);
    if (i == 1 && d >= 1)
      check("degree_1_exponent", "deg_1(f^n) grows like n^k", seq.exponent == k, at + " k=" + std::to_string(k));
  }

  observe("class_exponent", "max{i : N^i H != 0} against k",
          "class_exponent=" + std::to_string(nil.class_exponent) + " k=" + std::to_string(k) +
              (nil.class_exponent == k ? " (equal)" : " (differs)"));
  const int lower = d + rep.r * (rep.r + 1);
  observe("conjectural_lower_bound", "plov >= d + r(r+1)",
          pk + " lower=" + std::to_string(lower) + (pv.plov >= lower ? " (holds)" : " (violated)"));
  if (k == 4 && d == 4)
    observe("plov_4_4", "plov <= 10 for (k,d) = (4,4)", pk + (pv.plov <= 10 ? " (holds)" : " (exceeds)"));

  if (k > 0 && k % 2 == 0) {
    auto seq = positivity_sequence(model, {options.seed, options.samples});
    for (const auto& c : seq.checks)
      check("positivity: " + c.name, c.sampled ? "sampled over random ample classes" : "exact", c.ok, c.detail);
    observe("positivity_sequence", "t_r, ..., t_1", "t=" + join(seq.t));
    for (int j = 0; j + 1 < static_cast<int>(seq.products.size()) && j < seq.r; ++j) {
      for (int l = 1; l <= d - seq.s[static_cast<std::size_t>(j)]; ++l) {
        const auto pc = positivity_polynomial_check(model, seq, j, l);
        check("polynomial j=" + std::to_string(j) + " l=" + std::to_string(l),
              "P(m) positive, even degree, positive leading coefficient, degree <= (2r-2j)l", pc.ok(),
              "P(m)=" + pc.polynomial.to_string('m'));
      }
    }
    rep.positivity = std::move(seq);
  }
  return rep;
}

}  // namespace plovkit
