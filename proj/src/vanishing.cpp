#include "butson/vanishing.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace butson {

VanishingSet::VanishingSet(int n, int q, std::vector<Row> members)
    : n_(n), q_(q), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VanishingSet::contains_sorted(const Row& sorted) const {
    return std::binary_search(members_.begin(), members_.end(), sorted);
}

bool VanishingSet::prefix_feasible(const Row& prefix) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), prefix);
    if (it == members_.end()) return false;
    if (it->size() < prefix.size()) return false;
    return std::equal(prefix.begin(), prefix.end(), it->begin());
}

std::vector<int> prime_divisors(int q) {
    std::vector<int> ps;
    int m = q;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    }
    return r;
}

bool exists_vanishing(int n, int q) {
    if (n < 1 || q < 2) return false;
    const auto ps = prime_divisors(q);
    std::vector<char> reachable(n + 1, 0);
    reachable[0] = 1;
    for (int v = 1; v <= n; ++v)
        for (int p : ps)
            if (v >= p && reachable[v - p]) {
                reachable[v] = 1;
                break;
            }
    return n >= 2 && reachable[n];
}

namespace {

// Appends the rotated p-block {rot + j*q/p : j} to out.
void append_block(Row& out, int rot, int p, int q) {
    const int step = q / p;
    for (int j = 0; j < p; ++j) out.push_back(static_cast<std::uint8_t>(rot + j * step));
}

// Enumerates nondecreasing tuples of the given length over {min_value,...,limit-1}.
void for_each_multiset(int length, int limit, int min_value, Row& acc,
                       const std::function<void(const Row&)>& fn) {
    if (length == 0) {
        fn(acc);
        return;
    }
    for (int v = min_value; v < limit; ++v) {
        acc.push_back(static_cast<std::uint8_t>(v));
        for_each_multiset(length - 1, limit, v, acc, fn);
        acc.pop_back();
    }
}

void generate_prime_power(int n, int q, int p, std::set<Row>& out) {
    if (n % p != 0) return;
    const int s = n / p;
    Row acc;
    for_each_multiset(s - 1, q / p, 0, acc, [&](const Row& rots) {
        Row x;
        x.reserve(n);
        append_block(x, 0, p, q);
        for (auto r : rots) append_block(x, r, p, q);
        std::sort(x.begin(), x.end());
        out.insert(std::move(x));
    });
}

void generate_two_primes(int n, int q, int p1, int p2, std::set<Row>& out) {
    for (int s = 0; s * p1 <= n; ++s) {
        if ((n - s * p1) % p2 != 0) continue;
        const int t = (n - s * p1) / p2;
        if (s == 0 && t == 0) continue;
        Row acc1;
        for_each_multiset(s, q / p1, 0, acc1, [&](const Row& rs) {
            Row acc2;
            for_each_multiset(t, q / p2, 0, acc2, [&](const Row& Rs) {
                // Normalization: some block must carry rotation 0 so the
                // assembled vector contains a zero coordinate.
                const bool ok = (!rs.empty() && rs.front() == 0) ||
                                (!Rs.empty() && Rs.front() == 0);
                if (!ok) return;
                Row x;
                x.reserve(n);
                for (auto r : rs) append_block(x, r, p1, q);
                for (auto R : Rs) append_block(x, R, p2, q);
                std::sort(x.begin(), x.end());
                out.insert(std::move(x));
            });
        });
    }
}

}  // namespace

VanishingSet generate_vanishing_set(int n, int q) {
    if (n < 1 || q < 2) throw std::invalid_argument("generate_vanishing_set: bad parameters");
    const auto ps = prime_divisors(q);
    if (ps.size() > 2 || q >= 30)
        throw std::invalid_argument(
            "generate_vanishing_set: q=" + std::to_string(q) +
            " out of scope (needs at most two distinct prime factors and q < 30)");
    std::set<Row> out;
    if (ps.size() == 1)
        generate_prime_power(n, q, ps[0], out);
    else
        generate_two_primes(n, q, ps[0], ps[1], out);
    return VanishingSet(n, q, std::vector<Row>(out.begin(), out.end()));
}

unsigned long long count_vanishing_prime_power(int n, int q) {
    const auto ps = prime_divisors(q);
    if (ps.size() != 1)
        throw std::invalid_argument("count_vanishing_prime_power: q not a prime power");
    const int p = ps[0];
    if (n % p != 0) return 0;
    return binomial((n + q) / p - 2, n / p - 1);
}

unsigned long long count_vanishing_2p(int n, int q) {
    const auto ps = prime_divisors(q);
    if (ps.size() != 2 || ps[0] != 2 || q != 2 * ps[1])
        throw std::invalid_argument("count_vanishing_2p: q not of the form 2p");
    const int p = ps[1];
    unsigned long long total = 0;
    if (n % 2 == 0) total += binomial(p + n / 2 - 2, n / 2 - 1);
    for (int s = 1; 2 * s < n; ++s) {
        if ((n - 2 * s) % p != 0) continue;
        const int t = (n - 2 * s) / p;
        if (t < 1) continue;
        total += binomial(p + s - 1, s);
        total += binomial(p + s - 2, s - 1);
    }
    if (n % p == 0) total += 1;
    return total;
}

bool is_orthogonal(const Row& r1, const Row& r2, const VanishingSet& o) {
    if (r1.size() != r2.size() || static_cast<int>(r1.size()) != o.n())
        throw std::invalid_argument("is_orthogonal: dimension mismatch");
    Row d = row_sub(r1, r2, o.q());
    std::sort(d.begin(), d.end());
    // The difference of two rows with equal leading entries always
    // contains a zero, which is what normalized members assume.
    assert(!d.empty() && d.front() == 0);
    return o.contains_sorted(d);
}

}  // namespace butson
