#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "butson/core.hpp"

// Automorphism group orders, equivalence testing, the orbit-stabilizer
// total over all matrices, and the coarser Hadamard-equivalence count.

namespace butson {

// |{(X,Y) monomial : X H Y* = H}|. Backtracks over row images, keeping a
// candidate bitmask per target column, and multiplies by q for the free
// global phase.
std::uint64_t aut_group_size(const Matrix& h);

// True iff the canonical forms coincide.
bool are_equivalent(const Matrix& a, const Matrix& b);

// |G| Sum 1/|Aut(X)| with |G| = (n!)^2 q^(2n), in exact arithmetic.
// Throws when the result is not an integer.
mpz_class total_count(const std::vector<std::uint64_t>& aut_sizes, int n, int q);

// Same total from (aut order, multiplicity) pairs.
mpz_class total_count(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& freq, int n,
                      int q);

// Number of Hadamard equivalence classes represented by a complete list
// of monomial classes: units of Z_q act entrywise on the logs, and each
// orbit of size i among the canonical forms contributes 1 = (1/i) * i.
std::uint64_t hadamard_classes(const std::vector<Matrix>& reps);

}  // namespace butson
