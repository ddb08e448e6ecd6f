#include "butson/extend.hpp"

#include <algorithm>
#include <stdexcept>

namespace butson {

namespace {

bool is_zero_row(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](std::uint8_t e) { return e == 0; });
}

// Sort(x) in O plus orthogonality to every nonzero row; orthogonality to
// a zero row is the same membership test again.
bool verify_extension(const Row& x, const Matrix& r, const VanishingSet& o) {
    if (!o.contains_sorted(sort_row(x))) return false;
    for (const auto& row : r.rows) {
        if (is_zero_row(row)) continue;
        if (!is_orthogonal(x, row, o)) return false;
    }
    return true;
}

std::vector<std::uint64_t> first_odd_primes(int count) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t v = 3; static_cast<int>(ps.size()) < count; v += 2) {
        bool prime = true;
        for (std::uint64_t d = 3; d * d <= v; d += 2)
            if (v % d == 0) {
                prime = false;
                break;
            }
        if (prime) ps.push_back(v);
    }
    return ps;
}

}  // namespace

void extensions_naive(const Matrix& r, const VanishingSet& o, const RowSink& sink) {
    const int n = o.n();
    if (r.row_count() > 0 && r.col_count() != n)
        throw std::invalid_argument("extensions_naive: dimension mismatch");
    for (const auto& member : o.members()) {
        // Fix one zero in the leading position and run through the
        // distinct arrangements of the remaining multiset.
        Row rest(member.begin() + 1, member.end());
        Row x(n);
        x[0] = 0;
        do {
            std::copy(rest.begin(), rest.end(), x.begin() + 1);
            bool ok = true;
            for (const auto& row : r.rows) {
                if (is_zero_row(row)) continue;
                if (!is_orthogonal(x, row, o)) {
                    ok = false;
                    break;
                }
            }
            if (ok) sink(x);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
}

std::uint64_t norm_scalar(const NormValue& v) {
    if (!v.quadratic) return static_cast<std::uint64_t>(v.a);
    return static_cast<std::uint64_t>(v.a * v.a + 1009 * v.b * v.b);
}

std::uint64_t hash_key(const std::vector<NormValue>& partial_norms,
                       const std::vector<std::uint64_t>& primes, std::uint64_t p_big) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < partial_norms.size(); ++i)
        key = (key + norm_scalar(partial_norms[i]) % p_big * primes[i]) % p_big;
    return key;
}

bool hash_supported(int q) { return q == 2 || q == 3 || q == 4 || q == 6 || q == 10; }

ExtensionTable build_table(const Matrix& r, int m, std::size_t memory_cap_bytes,
                           std::uint64_t p_big) {
    const int n = r.col_count(), q = r.q, nrows = r.row_count();
    if (m < 1 || m >= n) throw std::invalid_argument("build_table: suffix length out of range");
    if (!hash_supported(q)) throw std::invalid_argument("build_table: unsupported q");

    double entries = 1;
    for (int t = 0; t < m; ++t) entries *= q;
    if (entries * 16 > static_cast<double>(memory_cap_bytes))
        throw std::length_error("build_table: memory cap exceeded, reduce m");

    ExtensionTable table;
    table.m = m;
    table.q = q;
    table.p_big = p_big;
    table.primes = first_odd_primes(std::max(nrows, 1));

    Row d(m, 0);
    Row diff(m);
    std::vector<NormValue> norms(nrows);
    std::uint64_t packed = 0;  // base-q value of d, d[0] most significant
    for (;;) {
        for (int i = 0; i < nrows; ++i) {
            for (int t = 0; t < m; ++t) {
                int v = static_cast<int>(r.rows[i][n - m + t]) - static_cast<int>(d[t]);
                if (v < 0) v += q;
                diff[t] = static_cast<std::uint8_t>(v);
            }
            norms[i] = norm_squared(diff, q);
        }
        table.buckets[hash_key(norms, table.primes, table.p_big)].push_back(packed);
        // advance the odometer; d[m-1] is the least significant digit
        int pos = m - 1;
        std::uint64_t place = 1;
        while (pos >= 0 && d[pos] == q - 1) {
            packed -= static_cast<std::uint64_t>(q - 1) * place;
            d[pos] = 0;
            --pos;
            place *= q;
        }
        if (pos < 0) break;
        ++d[pos];
        packed += place;
    }
    return table;
}

void extensions_hashed(const Matrix& r, const ExtensionTable& table, const VanishingSet& o,
                       const RowSink& sink) {
    const int n = o.n(), q = o.q(), m = table.m, nrows = r.row_count();
    const int plen = n - m;
    if (plen < 1) throw std::invalid_argument("extensions_hashed: bad suffix length");

    Row x(n, 0);
    Row diff(plen);
    std::vector<NormValue> norms(nrows);
    for (;;) {
        for (int i = 0; i < nrows; ++i) {
            for (int t = 0; t < plen; ++t) {
                int v = static_cast<int>(r.rows[i][t]) - static_cast<int>(x[t]);
                if (v < 0) v += q;
                diff[t] = static_cast<std::uint8_t>(v);
            }
            norms[i] = norm_squared(diff, q);
        }
        auto it = table.buckets.find(hash_key(norms, table.primes, table.p_big));
        if (it != table.buckets.end()) {
            for (std::uint64_t packed : it->second) {
                std::uint64_t v = packed;
                for (int t = m - 1; t >= 0; --t) {
                    x[plen + t] = static_cast<std::uint8_t>(v % q);
                    v /= q;
                }
                if (verify_extension(x, r, o)) sink(x);
            }
        }
        // next prefix with x[0] pinned to zero
        int pos = plen - 1;
        while (pos >= 1 && x[pos] == q - 1) x[pos--] = 0;
        if (pos < 1) break;
        ++x[pos];
    }
}

std::vector<Row> extension_rows(const Matrix& r, const VanishingSet& o, bool use_hash,
                                int suffix_length, std::size_t memory_cap_bytes) {
    std::vector<Row> out;
    const RowSink collect = [&out](const Row& x) { out.push_back(x); };
    const int n = o.n();
    if (use_hash && hash_supported(o.q()) && n >= 2) {
        int m = suffix_length > 0 ? suffix_length : n / 2;
        m = std::clamp(m, 1, n - 1);
        for (;;) {
            try {
                const ExtensionTable table = build_table(r, m, memory_cap_bytes);
                extensions_hashed(r, table, o, collect);
                std::sort(out.begin(), out.end());
                return out;
            } catch (const std::length_error&) {
                if (--m < 1) throw;
                out.clear();
            }
        }
    }
    extensions_naive(r, o, collect);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace butson
