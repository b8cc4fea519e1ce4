#pragma once

#include <optional>
#include <vector>

#include "burnside/scalar.hpp"

namespace burnside {

using ZMatrix = std::vector<std::vector<Integer>>;
using QMatrix = std::vector<std::vector<Rational>>;

ZMatrix to_zmatrix(const std::vector<std::vector<long long>>& m);

// Fraction-free Bareiss elimination.
Integer determinant(ZMatrix m);

// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(ZMatrix m);

// Nonzero exponents of p in the given integers, sorted.
std::vector<unsigned long> p_exponents(const std::vector<Integer>& values, unsigned long p);

// Solves x A = b for a square nonsingular A (row vector convention).
std::optional<std::vector<Rational>> solve_left(const QMatrix& a, const std::vector<Rational>& b);

}  // namespace burnside
