#include "butson/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace butson {

Row vectorize(const Matrix& m) {
    Row v;
    v.reserve(static_cast<std::size_t>(m.row_count()) * m.col_count());
    for (const auto& row : m.rows) v.insert(v.end(), row.begin(), row.end());
    return v;
}

Matrix apply_monomial(const Matrix& m, const MonomialMap& map) {
    const int r = m.row_count(), n = m.col_count(), q = m.q;
    Matrix out;
    out.q = q;
    out.rows.assign(r, Row(n));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < n; ++k) {
            const int v = m.rows[map.row_perm[j]][map.col_perm[k]] + map.row_phase[j] +
                          map.col_phase[k];
            out.rows[j][k] = static_cast<std::uint8_t>(v % q);
        }
    return out;
}

MonomialMap inverse(const MonomialMap& map, int q) {
    MonomialMap inv;
    const int r = static_cast<int>(map.row_perm.size());
    const int n = static_cast<int>(map.col_perm.size());
    inv.row_perm.resize(r);
    inv.row_phase.resize(r);
    inv.col_perm.resize(n);
    inv.col_phase.resize(n);
    for (int j = 0; j < r; ++j) inv.row_perm[map.row_perm[j]] = j;
    for (int k = 0; k < n; ++k) inv.col_perm[map.col_perm[k]] = k;
    for (int j = 0; j < r; ++j)
        inv.row_phase[j] = (q - map.row_phase[inv.row_perm[j]] % q) % q;
    for (int k = 0; k < n; ++k)
        inv.col_phase[k] = (q - map.col_phase[inv.col_perm[k]] % q) % q;
    return inv;
}

Matrix transform(const Matrix& m, const std::vector<int>& sigma, int i) {
    const int r = m.row_count(), n = m.col_count();
    if (i < 0 || i >= n) throw std::invalid_argument("transform: column index out of range");
    Matrix t;
    t.q = m.q;
    t.rows.reserve(r);
    for (int j = 0; j < r; ++j) t.rows.push_back(m.rows[sigma[j]]);
    for (auto& row : t.rows) std::swap(row[0], row[i]);
    t = dephase(t);
    // Stable sort keeps equal columns in positional order, which makes
    // the transform deterministic on degenerate inputs.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        for (int j = 0; j < r; ++j) {
            if (t.rows[j][a] != t.rows[j][b]) return t.rows[j][a] < t.rows[j][b];
        }
        return false;
    });
    Matrix out;
    out.q = m.q;
    out.rows.assign(r, Row(n));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < n; ++k) out.rows[j][k] = t.rows[j][order[k]];
    return out;
}

namespace {

// Shared state for the pruned enumeration of candidate transforms.
//
// For a fixed reference column i and first row j1, the dephased entry of
// source row j at source column c is
//   d(j,c) = R[j][c] - R[j][i] - R[j1][c] + R[j1][i]   (mod q).
// Columns of the transformed matrix are ordered lexicographically by
// their top-to-bottom strings, so after k rows have been placed the
// columns form ordered groups of ties; the (k+1)-th row of the
// candidate, read through those groups with values sorted inside each
// group, is exactly the next row of R^(sigma,i).
struct CandidateScan {
    const Matrix& m;
    int r, n, q;
    std::vector<std::uint8_t> dep;  // d(j,c), row-major, for the current (i, j1)

    explicit CandidateScan(const Matrix& mat)
        : m(mat), r(mat.row_count()), n(mat.col_count()), q(mat.q), dep(r * n) {}

    void set_reference(int i, int j1) {
        for (int j = 0; j < r; ++j) {
            const int rowShift = m.rows[j][i];
            for (int c = 0; c < n; ++c) {
                int v = static_cast<int>(m.rows[j][c]) - rowShift -
                        static_cast<int>(m.rows[j1][c]) + static_cast<int>(m.rows[j1][i]);
                v %= q;
                if (v < 0) v += q;
                dep[j * n + c] = static_cast<std::uint8_t>(v);
            }
        }
    }

    // Reads the candidate row for source row j through the column groups,
    // writing it to out and refining (cols, bounds) into (newCols, newBounds).
    void evaluate(int j, const std::vector<std::uint8_t>& cols,
                  const std::vector<std::uint8_t>& bounds, Row& out,
                  std::vector<std::uint8_t>& newCols,
                  std::vector<std::uint8_t>& newBounds) const {
        out.resize(n);
        newCols.clear();
        newBounds.clear();
        newBounds.push_back(0);
        const std::uint8_t* d = dep.data() + static_cast<std::size_t>(j) * n;
        int pos = 0;
        std::vector<std::uint8_t> bucket[30];
        for (std::size_t g = 0; g + 1 < bounds.size(); ++g) {
            const int lo = bounds[g], hi = bounds[g + 1];
            for (int t = lo; t < hi; ++t) bucket[d[cols[t]]].push_back(cols[t]);
            for (int v = 0; v < q; ++v) {
                auto& b = bucket[v];
                if (b.empty()) continue;
                for (auto c : b) {
                    out[pos++] = static_cast<std::uint8_t>(v);
                    newCols.push_back(c);
                }
                newBounds.push_back(static_cast<std::uint8_t>(newCols.size()));
                b.clear();
            }
        }
    }
};

bool canonical_rec(const CandidateScan& scan, int k, std::uint32_t used,
                   const std::vector<std::uint8_t>& cols,
                   const std::vector<std::uint8_t>& bounds) {
    if (k >= scan.r) return true;
    Row cand;
    std::vector<std::uint8_t> newCols, newBounds;
    for (int j = 0; j < scan.r; ++j) {
        if (used & (1u << j)) continue;
        scan.evaluate(j, cols, bounds, cand, newCols, newBounds);
        const auto cmp = lex_compare(cand, scan.m.rows[k]);
        if (cmp == std::strong_ordering::less) return false;
        if (cmp == std::strong_ordering::greater) continue;  // prunes this whole prefix
        if (!canonical_rec(scan, k + 1, used | (1u << j), newCols, newBounds)) return false;
    }
    return true;
}

}  // namespace

bool is_canonical(const Matrix& m) {
    if (!is_dephased(m)) throw std::invalid_argument("is_canonical: matrix is not dephased");
    const int r = m.row_count(), n = m.col_count();
    if (r == 0 || n == 0) return true;
    CandidateScan scan(m);
    std::vector<std::uint8_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    const std::vector<std::uint8_t> bounds = {0, static_cast<std::uint8_t>(n)};
    for (int i = 0; i < n; ++i) {
        for (int j1 = 0; j1 < r; ++j1) {
            scan.set_reference(i, j1);
            if (!canonical_rec(scan, 1, 1u << j1, cols, bounds)) return false;
        }
    }
    return true;
}

namespace {

// Branch-and-bound minimization. Invariant on entry: the k placed rows
// equal best[0..k-1]; deeper best rows may be the sentinel value q.
void minimize_rec(const CandidateScan& scan, int k, std::uint32_t used,
                  const std::vector<std::uint8_t>& cols,
                  const std::vector<std::uint8_t>& bounds, std::vector<Row>& best) {
    if (k >= scan.r) return;
    struct Entry {
        Row row;
        int j;
        std::vector<std::uint8_t> cols, bounds;
    };
    std::vector<Entry> entries;
    for (int j = 0; j < scan.r; ++j) {
        if (used & (1u << j)) continue;
        Entry e;
        e.j = j;
        scan.evaluate(j, cols, bounds, e.row, e.cols, e.bounds);
        entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.row != b.row) return a.row < b.row;
        return a.j < b.j;
    });
    for (auto& e : entries) {
        const auto cmp = lex_compare(e.row, best[k]);
        if (cmp == std::strong_ordering::greater) break;
        if (cmp == std::strong_ordering::less) {
            best[k] = e.row;
            for (int t = k + 1; t < scan.r; ++t)
                best[t].assign(scan.n, static_cast<std::uint8_t>(scan.q));
        }
        minimize_rec(scan, k + 1, used | (1u << e.j), e.cols, e.bounds, best);
    }
}

}  // namespace

Matrix canonical_form(const Matrix& m) {
    const int r = m.row_count(), n = m.col_count();
    if (r == 0 || n == 0) return m;
    if (r > 31) throw std::invalid_argument("canonical_form: too many rows");
    CandidateScan scan(m);
    std::vector<Row> best(r, Row(n, static_cast<std::uint8_t>(m.q)));
    best[0].assign(n, 0);  // the first row of any dephased transform is zero
    std::vector<std::uint8_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    const std::vector<std::uint8_t> bounds = {0, static_cast<std::uint8_t>(n)};
    for (int i = 0; i < n; ++i) {
        for (int j1 = 0; j1 < r; ++j1) {
            scan.set_reference(i, j1);
            minimize_rec(scan, 1, 1u << j1, cols, bounds, best);
        }
    }
    Matrix out;
    out.q = m.q;
    out.rows = std::move(best);
    return out;
}

}  // namespace butson
