#pragma once

#include <cstddef>
#include <span>

#include "plovkit/matrix.hpp"
#include "plovkit/poly.hpp"

namespace plovkit {

/// Exact rank over Q.
///
/// Integer matrices first go through an elimination modulo a 16-bit prime.
/// That gives a lower bound on the rational rank; when it already equals
/// min(rows, cols) it is returned as is. Otherwise the answer comes from
/// fraction-free elimination, so the result never depends on the prime.
std::size_t rank(const RationalMatrix& m);

/// Fraction-free (Bareiss) rank, with no modular shortcut.
std::size_t rank_bareiss(const RationalMatrix& m);

/// Exact determinant via fraction-free elimination. Throws std::invalid_argument if not square.
Rational det(const RationalMatrix& m);

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

/// Left-to-right product; throws on an empty list or a dimension mismatch.
RationalMatrix chain_product(std::span<const RationalMatrix> factors);

/// Characteristic polynomial det(x*I - m) of a square rational matrix.
RationalPoly charpoly(const RationalMatrix& m);

}  // namespace plovkit
