#pragma once

#include <gmpxx.h>

#include "butson/core.hpp"

// Verification, compositions producing new Butson matrices, and the
// exact defect (a monomial invariant bounding the number of smooth
// parameters a matrix admits).

namespace butson {

// True iff the matrix is square and all row pairs are orthogonal,
// checked by exact cyclotomic arithmetic (any q).
bool verify_butson(const Matrix& m);

// Log-form Kronecker product over Z_lcm(q1,q2).
Matrix kronecker(const Matrix& h, const Matrix& k);

// BH(n,4) -> BH(2n,2): write H = A + iB with disjoint {-1,0,1} supports
// and return A (x) [[1,1],[1,-1]] + B (x) [[-1,1],[1,1]].
Matrix turyn_double(const Matrix& h);

// Unreal BH(n,6) (every entry among w, w^2, -w, -w^2) -> BH(2n,4):
// H = Aw + Bw^2 maps to A (x) [[1,1],[1,-1]] + B (x) [[i,-1],[-1,i]].
Matrix unreal6_to_quaternary(const Matrix& h);

struct DefectReport {
    int defect = 0;
    int rank = 0;
    int variables = 0;  // (n-1)^2
};

// Rank of the linearized unitarity system over the integers, computed by
// fraction-free elimination. Supported for q in {2,3,4,6}.
DefectReport defect(const Matrix& h);

// Sufficient condition only: vanishing defect.
bool is_isolated(const Matrix& h);

// Integer coefficient rows of the defect system, exposed so the exact
// rank can be cross-checked numerically.
std::vector<std::vector<long>> defect_system(const Matrix& h);

long exact_rank(const std::vector<std::vector<long>>& rows);

}  // namespace butson
