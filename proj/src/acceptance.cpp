#include "plovkit/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "plovkit/abelian.hpp"
#include "plovkit/exact_linalg.hpp"
#include "plovkit/incidence.hpp"
#include "plovkit/lefschetz.hpp"
#include "plovkit/parallel.hpp"
#include "plovkit/partitions.hpp"
#include "plovkit/poly.hpp"
#include "plovkit/report.hpp"

namespace plovkit {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

// Uniform integer in [lo, hi] by explicit reduction, identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long between(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::pair<int, int>> cells(int max_dk) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= max_dk; ++k)
    for (int d = 1; d * k <= max_dk; ++d) out.emplace_back(k, d);
  return out;
}

IntMatrix random_unimodular(int d, Rng& rng) {
  const auto n = static_cast<std::size_t>(d);
  IntMatrix s = IntMatrix::identity(n);
  if (d == 1) {
    if (rng.between(0, 1)) s(0, 0) = -1;
    return s;
  }
  for (int step = 0; step < 3 * d; ++step) {
    const auto i = static_cast<std::size_t>(rng.between(0, d - 1));
    auto j = static_cast<std::size_t>(rng.between(0, d - 2));
    if (j >= i) ++j;
    const long c = rng.between(0, 1) ? 1 : -1;
    for (std::size_t col = 0; col < n; ++col) s(i, col) += c * s(j, col);
  }
  return s;
}

// Integer matrix with entries in [lo, hi] and determinant +-1, by rejection.
IntMatrix bounded_unimodular(int d, long lo, long hi, Rng& rng) {
  const auto n = static_cast<std::size_t>(d);
  while (true) {
    IntMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.between(lo, hi);
    const Rational dt = det(to_rational(a));
    if (dt == 1 || dt == -1) return a;
  }
}

NsClass random_symmetric(int d, Rng& rng) {
  const auto n = static_cast<std::size_t>(d);
  NsClass m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = rng.between(-3, 3);
  return m;
}

std::string triple_name(const JordanTriple& t) {
  return "(" + std::to_string(t.r0) + "," + std::to_string(t.d0) + "," + std::to_string(t.m0) + ")";
}

void criterion_matrices(Outcome& o) {
  const IntMatrix a6{{1, 1, 0, 0, 0}, {1, 0, 1, 1, 0}, {0, 1, 0, 2, 0}, {0, 0, 0, 2, 1}};
  const IntMatrix a7{{1, 1, 0, 0}, {0, 2, 0, 0}, {2, 0, 1, 0}, {0, 1, 1, 1}, {0, 0, 0, 3}};
  const auto m6 = build_matrix(4, 3, 6).entries;
  const auto m7 = build_matrix(4, 3, 7).entries;
  o.require(m6 == a6, "A_{4,3,6} differs from the reference matrix");
  o.require(m7 == a7, "A_{4,3,7} differs from the reference matrix");
  const auto r6 = rank(to_rational(m6));
  const auto r7 = rank(to_rational(m7));
  o.require(r6 == 4 && r7 == 4, "ranks are not both 4");
  const Rational dt = det(to_rational(m6 * m7));
  o.require(dt != 0, "A_{4,3,6} A_{4,3,7} is singular");
  o.detail << "rank A6=" << r6 << " rank A7=" << r7 << " det(A6 A7)=" << dt.get_str();
}

void criterion_rank_sweep(Outcome& o, const AcceptanceOptions& opt) {
  const auto grid = cells(opt.sweep_dk);
  struct Cell {
    bool ranks = false;
    bool windows = false;
    std::string where;
  };
  const auto results = parallel_map(grid.size(), opt.jobs, [&](std::size_t i) {
    const auto [k, d] = grid[i];
    Cell c;
    c.ranks = verify_full_rank(k, d).ok();
    c.windows = true;
    for (int n = 0; 2 * n < d * k; ++n)
      if (!verify_hard_lefschetz(k, d, n).invertible) {
        c.windows = false;
        c.where = "n=" + std::to_string(n);
        break;
      }
    return c;
  });
  std::size_t windows = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [k, d] = grid[i];
    const std::string at = "(k,d)=(" + std::to_string(k) + "," + std::to_string(d) + ")";
    o.require(results[i].ranks, "rank formula " + at);
    o.require(results[i].windows, "window product singular " + at + " " + results[i].where);
    windows += static_cast<std::size_t>((d * k + 1) / 2);
  }
  o.detail << grid.size() << " (k,d) cells, " << windows << " window products";
}

void criterion_sl2(Outcome& o, const AcceptanceOptions& opt) {
  const auto grid = cells(16);
  const auto results = parallel_map(grid.size(), opt.jobs, [&](std::size_t i) {
    const auto [k, d] = grid[i];
    std::string bad;
    for (int n = 1; n <= d * k && bad.empty(); ++n)
      if (!(build_Y(k, d, n) == to_rational(build_matrix(k, d, n).entries).transpose()))
        bad = "Y != A^T at n=" + std::to_string(n);
    if (bad.empty()) {
      const auto br = verify_bracket(k, d);
      if (!br.ok) bad = *br.failed_identity + " at n=" + std::to_string(*br.failed_grade);
    }
    return bad;
  });
  for (std::size_t i = 0; i < grid.size(); ++i)
    o.require(results[i].empty(),
              "(k,d)=(" + std::to_string(grid[i].first) + "," + std::to_string(grid[i].second) + ") " + results[i]);
  o.detail << grid.size() << " (k,d) cells";
}

void criterion_symfun(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& [k, d] : cells(12))
    for (int n = 1; n <= d * k; ++n) {
      ++checked;
      o.require(symfun_lefschetz_matrix(k, d, n) == to_rational(build_matrix(k, d, n).entries).transpose(),
                "(k,d,n)=(" + std::to_string(k) + "," + std::to_string(d) + "," + std::to_string(n) + ")");
    }
  o.detail << checked << " matrices";
}

void criterion_unimodality(Outcome& o, const AcceptanceOptions& opt) {
  const auto grid = cells(opt.sweep_dk);
  const auto results =
      parallel_map(grid.size(), opt.jobs, [&](std::size_t i) { return unimodality_report(grid[i].first, grid[i].second); });
  for (const auto& u : results) {
    const std::string at = "(k,d)=(" + std::to_string(u.k) + "," + std::to_string(u.d) + ")";
    o.require(u.direct, "counts not unimodal around the midpoint " + at);
    o.require(u.from_ranks, "rank table does not force unimodality " + at);
    o.require(u.agree, "rank table and counts disagree " + at);
  }
  o.detail << grid.size() << " (k,d) cells";
}

void criterion_plateau(Outcome& o) {
  for (int d = 1; d <= 13; d += 2) {
    o.require(midpoint_counts_equal(2, d), "(2," + std::to_string(d) + ") midpoint");
    o.require(count(2, d, d) == (d + 1) / 2, "p(2," + std::to_string(d) + ",d) != (d+1)/2");
  }
  for (auto [k, d] : {std::pair{6, 5}, {6, 7}, {6, 9}, {6, 11}, {6, 13}, {10, 7}})
    o.require(midpoint_counts_equal(k, d), "(" + std::to_string(k) + "," + std::to_string(d) + ") midpoint");
  for (int d = 2; d <= 12; d += 2)
    o.require(!midpoint_counts_equal(2, d), "(2," + std::to_string(d) + ") unexpectedly equal");
  o.detail << "7 odd (2,d), 6 listed couples, 6 even (2,d)";
}

void criterion_plov(Outcome& o, const AcceptanceOptions& opt) {
  const auto triples = jordan_triples(5);
  const auto got = parallel_map(triples.size(), opt.jobs, [&](std::size_t i) {
    const auto& t = triples[i];
    return plov(jordan_model(t.r0, t.d0, t.m0)).plov;
  });
  for (std::size_t i = 0; i < triples.size(); ++i)
    o.require(got[i] == triples[i].expected_plov(), "plov" + triple_name(triples[i]) + "=" + std::to_string(got[i]) +
                                                        " expected " + std::to_string(triples[i].expected_plov()));
  o.detail << triples.size() << " triples";
}

void criterion_jordan_exponent(Outcome& o, const AcceptanceOptions& opt) {
  for (const auto& t : jordan_triples(5)) {
    if (t.m0 < 1) continue;
    const int k = nilpotent_data(jordan_model(t.r0, t.d0, t.m0)).k;
    o.require(k == 2 * t.d0 - 2, "k" + triple_name(t) + "=" + std::to_string(k));
  }
  Rng rng(opt.seed);
  int conjugates = 0;
  for (int d = 1; d <= 4; ++d) {
    std::vector<JordanTriple> shapes;
    for (const auto& t : jordan_triples(d))
      if (t.dimension() == d) shapes.push_back(t);
    for (int s = 0; s < 100; ++s) {
      const auto& t = shapes[static_cast<std::size_t>(s) % shapes.size()];
      const AbelianModel j = jordan_model(t.r0, t.d0, t.m0);
      const IntMatrix conj = random_unimodular(d, rng);
      const AbelianModel m = AbelianModel::make(inverse_unimodular(conj) * j.automorphism * conj);
      const int k = nilpotent_data(m).k;
      const int kj = nilpotent_data(j).k;
      o.require(k <= 2 * d - 2, "k > 2d-2 for a conjugate of " + triple_name(t));
      o.require(k == kj, "conjugation changed k for " + triple_name(t));
      ++conjugates;
    }
  }
  o.detail << conjugates << " random conjugates";
}

void criterion_vanishing(Outcome& o) {
  std::size_t scanned = 0;
  for (const auto& t : jordan_triples(4)) {
    const auto model = jordan_model(t.r0, t.d0, t.m0);
    const int k = nilpotent_data(model).k;
    for (const auto& [lambda, v] : monomial_intersections(model)) {
      ++scanned;
      if (2 * lambda.degree() > model.d * k) o.require(v == 0, "v_lambda != 0 for " + triple_name(t));
    }
  }
  o.detail << scanned << " monomials";
}

void criterion_positivity(Outcome& o, const AcceptanceOptions& opt) {
  std::vector<JordanTriple> live;
  for (const auto& t : jordan_triples(4))
    if (nilpotent_data(jordan_model(t.r0, t.d0, t.m0)).k > 0) live.push_back(t);
  const auto seqs = parallel_map(live.size(), opt.jobs, [&](std::size_t i) {
    const auto& t = live[i];
    return positivity_sequence(jordan_model(t.r0, t.d0, t.m0), {opt.seed, opt.samples});
  });
  for (std::size_t i = 0; i < live.size(); ++i) {
    const auto& seq = seqs[i];
    const int d = live[i].dimension();
    int sum = 0;
    for (int t : seq.t) sum += t;
    o.require(static_cast<int>(seq.t.size()) == seq.r, "sequence incomplete for " + triple_name(live[i]));
    o.require(sum < d, "sum t >= d for " + triple_name(live[i]));
    o.require(seq.r <= d - 1, "r > d-1 for " + triple_name(live[i]));
    for (const auto& c : seq.checks) o.require(c.ok, c.name + " for " + triple_name(live[i]));
    o.detail << triple_name(live[i]) << " t=";
    for (std::size_t j = 0; j < seq.t.size(); ++j) o.detail << (j ? "," : "") << seq.t[j];
    o.detail << "; ";
  }
}

void criterion_degrees(Outcome& o) {
  std::size_t polys = 0;
  for (const auto& t : jordan_triples(5)) {
    const auto model = jordan_model(t.r0, t.d0, t.m0);
    const int k = nilpotent_data(model).k;
    const int d = model.d;
    for (int i = 0; i <= d; ++i) {
      const auto seq = degree_sequence(model, i);
      ++polys;
      o.require(seq.exponent >= 0 && seq.exponent <= 2 * (d - 1) * std::min(i, d - i),
                "exponent bound i=" + std::to_string(i) + " " + triple_name(t));
      if (i == 1) {
        o.require(seq.exponent == k, "deg_1 exponent != k for " + triple_name(t));
        o.require(seq.exponent % 2 == 0, "deg_1 exponent odd for " + triple_name(t));
        o.require(seq.polynomial.leading_coefficient() > 0, "deg_1 leading coefficient for " + triple_name(t));
      }
    }
  }
  o.detail << polys << " degree polynomials";
}

void criterion_properties(Outcome& o, const AcceptanceOptions& opt) {
  Rng rng(opt.seed);
  int cases = 0;
  // partitions: complement symmetry, conjugation symmetry, recurrence, enumeration size
  for (int k = 0; k <= 7; ++k)
    for (int d = 0; d <= 7; ++d) {
      BigInt total = 0;
      for (int n = 0; n <= d * k; ++n) {
        const BigInt p = count(k, d, n);
        total += p;
        o.require(p == count(k, d, d * k - n), "p(k,d,n) != p(k,d,dk-n)");
        o.require(p == count(d, k, n), "p(k,d,n) != p(d,k,n)");
        if (k >= 1 && d >= 1) {
          o.require(p == count(k, d - 1, n) + (n >= d ? count(k - 1, d, n - d) : BigInt(0)), "recurrence");
          o.require(enumerate(k, d, n).size() == p, "enumeration size");
        }
        ++cases;
      }
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d + k), static_cast<unsigned long>(d));
      o.require(total == binom, "sum of p(k,d,n) != C(d+k,d)");
    }
  // intersection numbers: multilinearity, symmetry, diagonal, projection formula
  for (int trial = 0; trial < 40; ++trial) {
    const int d = static_cast<int>(rng.between(1, 4));
    std::vector<NsClass> cls;
    for (int i = 0; i < d; ++i) cls.push_back(random_symmetric(d, rng));
    const Rational base = intersection_number(cls);
    const NsClass extra = random_symmetric(d, rng);
    const long a = rng.between(-3, 3);
    const long b = rng.between(-3, 3);
    auto mixed = cls;
    NsClass lhs = cls[0];
    lhs.scale(Rational(a));
    NsClass rhs = extra;
    rhs.scale(Rational(b));
    mixed[0] = lhs + rhs;
    auto swapped = cls;
    swapped[0] = extra;
    o.require(intersection_number(mixed) == a * base + b * intersection_number(swapped), "multilinearity");
    auto rotated = cls;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    o.require(intersection_number(rotated) == base, "symmetry");
    const std::vector<NsClass> diag(static_cast<std::size_t>(d), cls[0]);
    BigInt fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    o.require(intersection_number(diag) == Rational(fact) * det(cls[0]), "D^d = d! det D");
    const IntMatrix u = bounded_unimodular(d, -3, 3, rng);
    std::vector<NsClass> pulled;
    for (const auto& c : cls) pulled.push_back(pullback(u, c));
    o.require(intersection_number(pulled) == base, "projection formula");
    ++cases;
  }
  // polydet commutes with evaluation
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(1, 4));
    PolyMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rational> coeffs;
        for (int e = 0; e <= 2; ++e) {
          Rational q(BigInt(rng.between(-4, 4)), BigInt(rng.between(1, 3)));
          q.canonicalize();
          coeffs.push_back(q);
        }
        m(r, c) = RationalPoly(std::move(coeffs));
      }
    const RationalPoly p = polydet(m);
    for (long x = -3; x <= 3; ++x) o.require(p.evaluate(Rational(x)) == det(evaluate(m, Rational(x))), "polydet");
    ++cases;
  }
  // seeded reports are reproducible and round-trip through JSON
  for (const auto& t : {JordanTriple{0, 2, 1}, JordanTriple{0, 3, 1}, JordanTriple{1, 2, 1}}) {
    auto render = [&] {
      Report rep;
      rep.config["seed"] = std::to_string(opt.seed);
      append(rep, verify_bounds(jordan_model(t.r0, t.d0, t.m0), {opt.seed, opt.samples}));
      return rep.to_json().dump(2);
    };
    const std::string first = render();
    o.require(first == render(), "report not deterministic for " + triple_name(t));
    o.require(Json::parse(first).dump(2) == first, "report does not round-trip for " + triple_name(t));
    ++cases;
  }
  o.detail << cases << " property cases";
}

const char* title(int id) {
  switch (id) {
    case 1: return "reference incidence matrices A_{4,3,6}, A_{4,3,7}";
    case 2: return "rank formula and invertible window products, dk <= 24";
    case 3: return "sl2 operators and brackets, dk <= 16";
    case 4: return "symmetric-function realization, dk <= 12";
    case 5: return "unimodality from the rank table, dk <= 24";
    case 6: return "midpoint plateau couples";
    case 7: return "plov of Jordan models, d <= 5";
    case 8: return "nilpotency exponent of Jordan models and conjugates";
    case 9: return "monomial vanishing above dk/2, d <= 4";
    case 10: return "positivity sequence, d <= 4";
    case 11: return "degree growth exponents";
    case 12: return "property suites";
    default: return "unknown";
  }
}

double budget(int id) {
  switch (id) {
    case 1: return 1.0;
    case 2: return 180.0;
    case 7: return 60.0;
    default: return 0.0;
  }
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  CriterionResult res;
  res.id = id;
  res.title = title(id);
  res.budget_seconds = budget(id);
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: criterion_matrices(o); break;
      case 2: criterion_rank_sweep(o, options); break;
      case 3: criterion_sl2(o, options); break;
      case 4: criterion_symfun(o); break;
      case 5: criterion_unimodality(o, options); break;
      case 6: criterion_plateau(o); break;
      case 7: criterion_plov(o, options); break;
      case 8: criterion_jordan_exponent(o, options); break;
      case 9: criterion_vanishing(o); break;
      case 10: criterion_positivity(o, options); break;
      case 11: criterion_degrees(o); break;
      case 12: criterion_properties(o, options); break;
      default: throw std::invalid_argument("no criterion " + std::to_string(id));
    }
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.budget_seconds > 0 && res.seconds > res.budget_seconds)
    o.require(false, "over the runtime budget of " + std::to_string(res.budget_seconds) + " s");
  res.pass = o.pass;
  res.detail = o.detail.str();
  return res;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace plovkit
