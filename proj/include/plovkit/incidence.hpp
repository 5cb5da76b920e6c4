#pragma once

#include <optional>

#include "plovkit/matrix.hpp"
#include "plovkit/partitions.hpp"

namespace plovkit {

/// Weighted incidence matrix A_{k,d,n}: rows indexed by P(k,d,n-1), columns by
/// P(k,d,n). Entry (mu, lambda) is e_i(mu) when lambda is mu with one part i
/// raised to i+1, and 0 otherwise.
struct IncidenceMatrix {
  int k = 0;
  int d = 0;
  int n = 0;
  PartitionList rows;
  PartitionList cols;
  IntMatrix entries;
};

/// Raises one part equal to i to i+1. Returns std::nullopt when mu has no part
/// equal to i; throws std::invalid_argument when i is outside [0, k-1].
std::optional<Partition> bump(const Partition& mu, int i);

/// Requires 1 <= n <= dk.
IncidenceMatrix build_matrix(int k, int d, int n);

}  // namespace plovkit
