#include "plovkit/partitions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace plovkit {

namespace {

void require_shape(int k, int d, int n) {
  if (k < 1 || d < 1 || n < 0)
    throw std::invalid_argument("need k >= 1, d >= 1, n >= 0 (got k=" + std::to_string(k) +
                                ", d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
}

// Fills parts[pos..] with a nonincreasing tail bounded by `cap` summing to `remaining`.
void enumerate_tail(std::vector<int>& parts, int pos, int cap, int remaining, int k, std::vector<Partition>& out) {
  const int d = static_cast<int>(parts.size());
  if (pos == d) {
    if (remaining == 0) out.push_back(Partition{parts, k});
    return;
  }
  const int slots = d - pos;
  // the largest part must be at least ceil(remaining / slots)
  const int low = (remaining + slots - 1) / slots;
  for (int v = std::min(cap, remaining); v >= low; --v) {
    parts[pos] = v;
    enumerate_tail(parts, pos + 1, v, remaining - v, k, out);
  }
  parts[pos] = 0;
}

BigInt count_memo(int k, int d, int n) {
  if (n < 0) return 0;
  if (k == 0 || d == 0) return n == 0 ? 1 : 0;
  if (n > k * d) return 0;
  thread_local std::map<std::tuple<int, int, int>, BigInt> memo;
  auto key = std::make_tuple(k, d, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt v = count_memo(k, d - 1, n) + count_memo(k - 1, d, n - d);
  memo.emplace(key, v);
  return v;
}

}  // namespace

Partition Partition::make(std::vector<int> parts, int k) {
  if (k < 0) throw std::invalid_argument("partition bound k must be nonnegative");
  int prev = k;
  for (int p : parts) {
    if (p < 0 || p > prev) throw std::invalid_argument("parts must be nonincreasing within [0, k]");
    prev = p;
  }
  return Partition{std::move(parts), k};
}

int Partition::degree() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

std::optional<std::size_t> PartitionList::index_of(std::span<const int> parts) const {
  auto it = index_.find(std::vector<int>(parts.begin(), parts.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PartitionList enumerate(int k, int d, int n) {
  require_shape(k, d, n);
  PartitionList list;
  list.k = k;
  list.d = d;
  list.n = n;
  if (n <= k * d) {
    std::vector<int> parts(d, 0);
    enumerate_tail(parts, 0, k, n, k, list.items);
  }
  for (std::size_t i = 0; i < list.items.size(); ++i) list.index_.emplace(list.items[i].parts, i);
  return list;
}

BigInt count(int k, int d, int n) {
  if (k < 0 || d < 0 || n < 0) throw std::invalid_argument("count: k, d, n must be nonnegative");
  return count_memo(k, d, n);
}

std::vector<BigInt> gaussian_binomial(int k, int d) {
  require_shape(k, d, 0);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(d * k + 1));
  for (int n = 0; n <= d * k; ++n) out.push_back(count_memo(k, d, n));
  return out;
}

std::vector<int> exponent_form(const Partition& p) {
  std::vector<int> e(static_cast<std::size_t>(p.k) + 1, 0);
  for (int part : p.parts) {
    if (part < 0 || part > p.k) throw std::invalid_argument("exponent_form: part out of range");
    ++e[static_cast<std::size_t>(part)];
  }
  return e;
}

Partition from_exponents(std::span<const int> e, int d) {
  if (e.empty()) throw std::invalid_argument("from_exponents: empty exponent vector");
  int total = 0;
  for (int v : e) {
    if (v < 0) throw std::invalid_argument("from_exponents: negative multiplicity");
    total += v;
  }
  if (total != d)
    throw std::invalid_argument("from_exponents: multiplicities sum to " + std::to_string(total) +
                                ", expected " + std::to_string(d));
  const int k = static_cast<int>(e.size()) - 1;
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(d));
  for (int i = k; i >= 0; --i) parts.insert(parts.end(), static_cast<std::size_t>(e[i]), i);
  return Partition{std::move(parts), k};
}

}  // namespace plovkit
