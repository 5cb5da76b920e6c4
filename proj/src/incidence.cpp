#include "plovkit/incidence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace plovkit {

std::optional<Partition> bump(const Partition& mu, int i) {
  if (i < 0 || i >= mu.k)
    throw std::invalid_argument("bump: part index " + std::to_string(i) + " outside [0, " +
                                std::to_string(mu.k - 1) + "]");
  // leftmost occurrence of i: everything before it is >= i+1, so order is kept
  auto it = std::find(mu.parts.begin(), mu.parts.end(), i);
  if (it == mu.parts.end()) return std::nullopt;
  Partition out = mu;
  ++out.parts[static_cast<std::size_t>(it - mu.parts.begin())];
  return out;
}

IncidenceMatrix build_matrix(int k, int d, int n) {
  if (k < 1 || d < 1) throw std::invalid_argument("build_matrix: need k >= 1 and d >= 1");
  if (n < 1 || n > d * k)
    throw std::invalid_argument("build_matrix: n=" + std::to_string(n) + " outside [1, " + std::to_string(d * k) +
                                "]");
  IncidenceMatrix a;
  a.k = k;
  a.d = d;
  a.n = n;
  a.rows = enumerate(k, d, n - 1);
  a.cols = enumerate(k, d, n);
  a.entries = IntMatrix(a.rows.size(), a.cols.size());
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    const Partition& mu = a.rows.items[r];
    const auto e = exponent_form(mu);
    for (int i = 0; i < k; ++i) {
      auto lambda = bump(mu, i);
      if (!lambda) continue;
      auto c = a.cols.index_of(lambda->parts);
      if (!c) throw std::logic_error("build_matrix: bumped partition missing from column basis");
      a.entries(r, *c) += e[static_cast<std::size_t>(i)];
    }
  }
  return a;
}

}  // namespace plovkit
