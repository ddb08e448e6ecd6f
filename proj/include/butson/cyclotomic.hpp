#pragma once

#include <vector>

#include "butson/core.hpp"

// Exact test of whether a sum of q-th roots of unity vanishes, by
// reducing the exponent-frequency polynomial modulo the q-th cyclotomic
// polynomial. Works for any q >= 2 in integer arithmetic.

namespace butson {

// Coefficients of the q-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(int q);

// True iff sum_i exp(2*pi*i*x_i/q) == 0, exactly.
bool vanishes_exact(const Row& x, int q);

}  // namespace butson
