#include "butson/core.hpp"

#include <algorithm>
#include <cassert>

namespace butson {

Row sort_row(const Row& x) {
    Row y = x;
    std::sort(y.begin(), y.end());
    return y;
}

std::strong_ordering lex_compare(const Row& a, const Row& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lex_compare: length mismatch");
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool row_less(const Row& a, const Row& b) {
    return lex_compare(a, b) == std::strong_ordering::less;
}

Matrix dephase(const Matrix& m) {
    Matrix out = m;
    const int q = m.q;
    for (auto& row : out.rows) {
        if (row.empty()) throw std::invalid_argument("dephase: empty row");
        const int off = row.front();
        for (auto& e : row) {
            int v = static_cast<int>(e) - off;
            if (v < 0) v += q;
            e = static_cast<std::uint8_t>(v);
        }
    }
    if (out.rows.empty()) return out;
    const Row first = out.rows.front();
    for (auto& row : out.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            int v = static_cast<int>(row[c]) - static_cast<int>(first[c]);
            if (v < 0) v += q;
            row[c] = static_cast<std::uint8_t>(v);
        }
    }
    return out;
}

bool is_dephased(const Matrix& m) {
    if (m.rows.empty()) return true;
    for (auto e : m.rows.front())
        if (e != 0) return false;
    for (const auto& row : m.rows)
        if (row.front() != 0) return false;
    return true;
}

std::vector<int> frequencies(const Row& x, int q) {
    std::vector<int> f(q, 0);
    for (auto e : x) {
        if (e >= q) throw std::invalid_argument("frequencies: residue out of range");
        ++f[e];
    }
    return f;
}

namespace {

long long sq(long long v) { return v * v; }

// 2*|E_{n,10}(x)|^2 = A + sqrt(5)*B, computed by reducing the
// autocorrelation polynomial of the frequency vector modulo the 10th
// cyclotomic polynomial t^4 - t^3 + t^2 - t + 1.
NormValue norm10(const std::vector<int>& f) {
    long long c[10] = {0};
    for (int d = 0; d < 10; ++d)
        for (int j = 0; j < 10; ++j) c[d] += static_cast<long long>(f[j]) * f[(j + d) % 10];
    long long e[5];
    for (int t = 0; t < 5; ++t) e[t] = c[t] - c[t + 5];
    // value = a + b*z + c2*z^2 + d*z^3 with z = exp(2*pi*i/10)
    const long long a = e[0] - e[4];
    const long long b = e[1] + e[4];
    const long long c2 = e[2] - e[4];
    const long long d = e[3] + e[4];
    const long long num_a = 4 * a + b - c2 + d;
    const long long num_b = b + c2 - d;
    assert(num_a % 2 == 0 && num_b % 2 == 0);
    return NormValue{true, num_a / 2, num_b / 2};
}

}  // namespace

NormValue norm_squared(const Row& x, int q) {
    const std::vector<int> f = frequencies(x, q);
    switch (q) {
        case 2:
            return NormValue{false, sq(f[0] - f[1]), 0};
        case 3: {
            const long long s = sq(f[0]) + sq(f[1]) + sq(f[2]) -
                                static_cast<long long>(f[0]) * f[1] -
                                static_cast<long long>(f[0]) * f[2] -
                                static_cast<long long>(f[1]) * f[2];
            return NormValue{false, s, 0};
        }
        case 4:
            return NormValue{false, sq(f[0] - f[2]) + sq(f[1] - f[3]), 0};
        case 6: {
            // |A + B*z + C*z^2|^2 with z = exp(pi*i/3), reduced via z^2 = z - 1.
            const long long a = f[0] - f[3], b = f[1] - f[4], c = f[2] - f[5];
            return NormValue{false, a * a + b * b + c * c + a * b - a * c + b * c, 0};
        }
        case 10:
            return norm10(f);
        default:
            throw std::invalid_argument("norm_squared: unsupported q=" + std::to_string(q));
    }
}

std::string row_to_string(const Row& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(static_cast<int>(x[i]));
    }
    return s;
}

}  // namespace butson
