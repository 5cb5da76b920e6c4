#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "plovkit/matrix.hpp"

namespace plovkit {

/// A restricted partition: d nonincreasing parts, each in [0, k].
struct Partition {
  std::vector<int> parts;
  int k = 0;

  /// Validates k >= parts[0] >= ... >= parts[d-1] >= 0; throws std::invalid_argument otherwise.
  static Partition make(std::vector<int> parts, int k);

  int length() const noexcept { return static_cast<int>(parts.size()); }
  int degree() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All of P(k, d, n), sorted in decreasing lexicographic order of the part tuple.
struct PartitionList {
  int k = 0;
  int d = 0;
  int n = 0;
  std::vector<Partition> items;

  std::size_t size() const noexcept { return items.size(); }
  std::optional<std::size_t> index_of(std::span<const int> parts) const;

 private:
  friend PartitionList enumerate(int k, int d, int n);
  std::map<std::vector<int>, std::size_t> index_;
};

PartitionList enumerate(int k, int d, int n);

/// p(k, d, n) by the recurrence p(k,d,n) = p(k,d-1,n) + p(k-1,d,n-d) with a
/// per-thread memo. Accepts k = 0 or d = 0, where p = [n == 0].
BigInt count(int k, int d, int n);

/// Coefficients of the Gaussian binomial [d+k choose d]_q, i.e. p(k, d, n) for n = 0..dk.
std::vector<BigInt> gaussian_binomial(int k, int d);

/// Multiplicities e[i] = #{j : parts[j] == i} for i = 0..k.
std::vector<int> exponent_form(const Partition& p);

/// Inverse of exponent_form. Rejects negative entries and vectors with sum(e) != d.
Partition from_exponents(std::span<const int> e, int d);

}  // namespace plovkit
