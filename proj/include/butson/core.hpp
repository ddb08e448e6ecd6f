#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic on Z_q vectors and matrices in logarithmic form.
// A Butson matrix H with q-th root of unity entries is carried as the
// exponent matrix L(H) over Z_q = {0,...,q-1}.

namespace butson {

using Row = std::vector<std::uint8_t>;

struct Matrix {
    int q = 0;
    std::vector<Row> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
    int col_count() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }

    bool operator==(const Matrix& other) const = default;
};

// Nondecreasing rearrangement of x; the lexicographic minimum over all
// permutations of the coordinates.
Row sort_row(const Row& x);

// Three-way lexicographic comparison of equal-length residue vectors.
std::strong_ordering lex_compare(const Row& a, const Row& b);

bool row_less(const Row& a, const Row& b);

// Subtract the first entry of each row, then the first entry of each
// column; the result has zero first row and first column and is
// monomially equivalent to the input.
Matrix dephase(const Matrix& m);

bool is_dephased(const Matrix& m);

// Exact value of |sum_i exp(2*pi*i*x_i/q)|^2.
// For q in {2,3,4,6} this is a nonnegative integer, stored in `a`.
// For q = 10 the doubled norm lies in Z + Z*sqrt(5): 2*|E|^2 = a + b*sqrt(5).
struct NormValue {
    bool quadratic = false;
    long long a = 0;
    long long b = 0;

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const NormValue&) const = default;
};

// Supported q: 2, 3, 4, 6, 10. Throws std::invalid_argument otherwise.
NormValue norm_squared(const Row& x, int q);

// Frequency vector (f_0,...,f_{q-1}) of the residues of x.
std::vector<int> frequencies(const Row& x, int q);

inline Row row_sub(const Row& a, const Row& b, int q) {
    if (a.size() != b.size()) throw std::invalid_argument("row_sub: length mismatch");
    Row d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int v = static_cast<int>(a[i]) - static_cast<int>(b[i]);
        if (v < 0) v += q;
        d[i] = static_cast<std::uint8_t>(v);
    }
    return d;
}

std::string row_to_string(const Row& x);

}  // namespace butson
