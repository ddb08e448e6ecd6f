#include "butson/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "butson/cyclotomic.hpp"

namespace butson {

bool verify_butson(const Matrix& m) {
    const int n = m.row_count();
    if (n == 0 || m.col_count() != n || m.q < 1) return false;
    for (const auto& row : m.rows)
        for (auto e : row)
            if (e >= m.q) return false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const Row d = row_sub(m.rows[a], m.rows[b], m.q);
            if (std::all_of(d.begin(), d.end(), [](std::uint8_t e) { return e == 0; }))
                return false;
            if (!vanishes_exact(d, m.q)) return false;
        }
    return true;
}

Matrix kronecker(const Matrix& h, const Matrix& k) {
    if (!verify_butson(h) || !verify_butson(k))
        throw std::invalid_argument("kronecker: inputs must be Butson matrices");
    const int q = std::lcm(h.q, k.q);
    const int sh = q / h.q, sk = q / k.q;
    const int n1 = h.row_count(), n2 = k.row_count();
    Matrix out{q, std::vector<Row>(n1 * n2, Row(n1 * n2))};
    for (int i1 = 0; i1 < n1; ++i1)
        for (int i2 = 0; i2 < n2; ++i2)
            for (int j1 = 0; j1 < n1; ++j1)
                for (int j2 = 0; j2 < n2; ++j2)
                    out.rows[i1 * n2 + i2][j1 * n2 + j2] = static_cast<std::uint8_t>(
                        (h.rows[i1][j1] * sh + k.rows[i2][j2] * sk) % q);
    return out;
}

Matrix turyn_double(const Matrix& h) {
    if (h.q != 4) throw std::invalid_argument("turyn_double: expects q = 4");
    if (!verify_butson(h)) throw std::invalid_argument("turyn_double: invalid input");
    const int n = h.row_count();
    // H = A + iB; A (x) [[1,1],[1,-1]] + B (x) [[-1,1],[1,1]], signs to Z_2 logs
    static const int x_sign[2][2] = {{1, 1}, {1, -1}};
    static const int y_sign[2][2] = {{-1, 1}, {1, 1}};
    Matrix out{2, std::vector<Row>(2 * n, Row(2 * n))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int t = h.rows[i][j];
            const int coef = (t == 0 || t == 1) ? 1 : -1;
            const bool real = (t % 2 == 0);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    const int v = coef * (real ? x_sign[r][c] : y_sign[r][c]);
                    out.rows[2 * i + r][2 * j + c] = v == 1 ? 0 : 1;
                }
        }
    return out;
}

Matrix unreal6_to_quaternary(const Matrix& h) {
    if (h.q != 6) throw std::invalid_argument("unreal6_to_quaternary: expects q = 6");
    if (!verify_butson(h)) throw std::invalid_argument("unreal6_to_quaternary: invalid input");
    const int n = h.row_count();
    // H = Aw + Bw^2 with disjoint supports; blocks as Z_4 logs
    static const int x_log[2][2] = {{0, 0}, {0, 2}};  // [[1,1],[1,-1]]
    static const int y_log[2][2] = {{1, 2}, {2, 1}};  // [[i,-1],[-1,i]]
    Matrix out{4, std::vector<Row>(2 * n, Row(2 * n))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int t = h.rows[i][j];
            if (t == 0 || t == 3)
                throw std::invalid_argument("unreal6_to_quaternary: real entry present");
            const bool in_a = (t == 2 || t == 5);  // w and -w
            const int shift = (t == 2 || t == 4) ? 0 : 2;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    out.rows[2 * i + r][2 * j + c] = static_cast<std::uint8_t>(
                        ((in_a ? x_log[r][c] : y_log[r][c]) + shift) % 4);
        }
    return out;
}

std::vector<std::vector<long>> defect_system(const Matrix& h) {
    const int n = h.row_count(), q = h.q;
    if (q != 2 && q != 3 && q != 4 && q != 6)
        throw std::invalid_argument("defect: supported for q in {2,3,4,6}");
    if (!verify_butson(h)) throw std::invalid_argument("defect: invalid input");

    // coordinates of the q-th roots in the basis {1, i} or {1, w}
    auto coords = [q](int t) -> std::pair<long, long> {
        switch (q) {
            case 2:
                return {t == 0 ? 1 : -1, 0};
            case 4:
                switch (t) {
                    case 0: return {1, 0};
                    case 1: return {0, 1};
                    case 2: return {-1, 0};
                    default: return {0, -1};
                }
            case 3:
                switch (t) {
                    case 0: return {1, 0};
                    case 1: return {0, 1};
                    default: return {-1, -1};
                }
            default:  // q = 6, powers of 1 + w
                switch (t) {
                    case 0: return {1, 0};
                    case 1: return {1, 1};
                    case 2: return {0, 1};
                    case 3: return {-1, 0};
                    case 4: return {-1, -1};
                    default: return {0, -1};
                }
        }
    };

    const int vars = (n - 1) * (n - 1);
    const auto var = [n](int j, int l) { return (j - 1) * (n - 1) + (l - 1); };
    std::vector<std::vector<long>> rows;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            std::vector<long> re(vars, 0), im(vars, 0);
            for (int l = 1; l < n; ++l) {
                const int t = (h.rows[j][l] - h.rows[k][l] + q) % q;
                const auto [x, y] = coords(t);
                if (j >= 1) {
                    re[var(j, l)] += x;
                    im[var(j, l)] += y;
                }
                re[var(k, l)] -= x;
                im[var(k, l)] -= y;
            }
            rows.push_back(std::move(re));
            if (q != 2) rows.push_back(std::move(im));
        }
    return rows;
}

long exact_rank(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return 0;
    const int m = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows[0].size());
    std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(w));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < w; ++j) a[i][j] = rows[i][j];

    // Bareiss fraction-free elimination
    long rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < w && rank < m; ++col) {
        int pivot = -1;
        for (int i = static_cast<int>(rank); i < m; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int i = static_cast<int>(rank) + 1; i < m; ++i) {
            for (int j = col + 1; j < w; ++j) {
                mpz_class num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

DefectReport defect(const Matrix& h) {
    const int n = h.row_count();
    DefectReport report;
    report.variables = (n - 1) * (n - 1);
    report.rank = static_cast<int>(exact_rank(defect_system(h)));
    report.defect = report.variables - report.rank;
    return report;
}

bool is_isolated(const Matrix& h) { return defect(h).defect == 0; }

}  // namespace butson
