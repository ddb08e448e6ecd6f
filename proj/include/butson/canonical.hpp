#pragma once

#include <vector>

#include "butson/core.hpp"

// Canonical-form machinery for orderly generation. A matrix is canonical
// when its row-major vectorization is minimal over the monomial orbit;
// by the structure of dephased matrices this minimum is attained among
// the transforms R^(sigma,i) below.

namespace butson {

// Row permutation, row phases, column permutation, column phases.
struct MonomialMap {
    std::vector<int> row_perm;    // image row j takes source row row_perm[j]
    std::vector<int> row_phase;   // added to row j of the result
    std::vector<int> col_perm;
    std::vector<int> col_phase;
};

Matrix apply_monomial(const Matrix& m, const MonomialMap& map);

MonomialMap inverse(const MonomialMap& map, int q);

// Row-major flattening of the matrix.
Row vectorize(const Matrix& m);

// R^(sigma,i): permute rows by sigma, swap the first and i-th columns,
// dephase, then stable-sort columns under the lexicographic order on
// their top-to-bottom residue strings. sigma and i are 0-based here.
Matrix transform(const Matrix& m, const std::vector<int>& sigma, int i);

// Canonicality test with restricted-prefix pruning over the row
// permutations. Requires a dephased input.
bool is_canonical(const Matrix& m);

// The lexicographically minimal matrix in the monomial orbit of m.
// Two matrices are monomially equivalent iff their canonical forms
// are equal.
Matrix canonical_form(const Matrix& m);

}  // namespace butson
