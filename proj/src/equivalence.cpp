#include "butson/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "butson/analysis.hpp"
#include "butson/canonical.hpp"

namespace butson {

namespace {

using Grid = std::vector<std::vector<int>>;

// entries dephased against row j0 and column k0
Grid dephase_against(const Matrix& h, int j0, int k0) {
    const int n = h.row_count(), q = h.q;
    Grid d(n, std::vector<int>(n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            d[j][k] =
                ((h.rows[j][k] - h.rows[j][k0] - h.rows[j0][k] + h.rows[j0][k0]) % q + q) % q;
    return d;
}

std::vector<int> row_fingerprint(const std::vector<int>& row, int q) {
    std::vector<int> f(q, 0);
    for (int v : row) ++f[v];
    return f;
}

// Number of systems of distinct representatives of the candidate sets.
std::uint64_t count_matchings(std::vector<std::uint64_t>& cand, std::uint64_t used, int left) {
    if (left == 0) return 1;
    // pick the tightest undecided column
    int best = -1;
    int fewest = 65;
    for (std::size_t k = 0; k < cand.size(); ++k) {
        if (cand[k] == 0) continue;  // marker: already matched
        const int options = std::popcount(cand[k] & ~used);
        if (options == 0) return 0;
        if (options < fewest) {
            fewest = options;
            best = static_cast<int>(k);
        }
    }
    std::uint64_t total = 0;
    std::uint64_t options = cand[best] & ~used;
    const std::uint64_t saved = cand[best];
    cand[best] = 0;
    while (options) {
        const std::uint64_t bit = options & -options;
        options ^= bit;
        total += count_matchings(cand, used | bit, left - 1);
    }
    cand[best] = saved;
    return total;
}

struct AutCounter {
    int n;
    Grid d0;                           // reference pattern
    Grid d1;                           // target pattern for the current (j0, k0)
    std::vector<std::vector<std::uint64_t>> mask;  // mask[s][v]: columns c with d1[s][c] == v
    std::vector<std::vector<int>> fp0, fp1;        // row value histograms

    std::uint64_t count_pairs(int j0, int k0) {
        std::vector<std::uint64_t> cand(n, ~std::uint64_t{0} >> (64 - n));
        cand[0] = std::uint64_t{1} << k0;
        std::uint64_t used = std::uint64_t{1} << j0;
        return place(1, used, cand, j0);
    }

    std::uint64_t place(int j, std::uint64_t used, const std::vector<std::uint64_t>& cand,
                        int j0) {
        if (j == n) {
            std::vector<std::uint64_t> work = cand;
            return count_matchings(work, 0, n);
        }
        std::uint64_t total = 0;
        for (int s = 0; s < n; ++s) {
            if (used >> s & 1) continue;
            if (fp0[j] != fp1[s]) continue;
            std::vector<std::uint64_t> next(n);
            bool dead = false;
            for (int k = 0; k < n; ++k) {
                next[k] = cand[k] & mask[s][d0[j][k]];
                if (next[k] == 0) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            total += place(j + 1, used | std::uint64_t{1} << s, next, j0);
        }
        return total;
    }
};

}  // namespace

std::uint64_t aut_group_size(const Matrix& h) {
    if (!verify_butson(h)) throw std::invalid_argument("aut_group_size: invalid matrix");
    const int n = h.row_count(), q = h.q;
    if (n > 64) throw std::invalid_argument("aut_group_size: order too large");

    AutCounter counter;
    counter.n = n;
    counter.d0 = dephase_against(h, 0, 0);
    counter.fp0.resize(n);
    for (int j = 0; j < n; ++j) counter.fp0[j] = row_fingerprint(counter.d0[j], q);

    std::uint64_t pairs = 0;
    for (int j0 = 0; j0 < n; ++j0)
        for (int k0 = 0; k0 < n; ++k0) {
            counter.d1 = dephase_against(h, j0, k0);
            counter.mask.assign(n, std::vector<std::uint64_t>(q, 0));
            counter.fp1.resize(n);
            for (int s = 0; s < n; ++s) {
                for (int c = 0; c < n; ++c)
                    counter.mask[s][counter.d1[s][c]] |= std::uint64_t{1} << c;
                counter.fp1[s] = row_fingerprint(counter.d1[s], q);
            }
            pairs += counter.count_pairs(j0, k0);
        }
    return static_cast<std::uint64_t>(q) * pairs;
}

bool are_equivalent(const Matrix& a, const Matrix& b) {
    if (a.q != b.q || a.row_count() != b.row_count() || a.col_count() != b.col_count())
        throw std::invalid_argument("are_equivalent: shape or modulus mismatch");
    return canonical_form(a) == canonical_form(b);
}

namespace {

mpz_class group_order(int n, int q) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    mpz_class qe;
    mpz_ui_pow_ui(qe.get_mpz_t(), q, 2 * static_cast<unsigned>(n));
    return fact * fact * qe;
}

}  // namespace

mpz_class total_count(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& freq, int n,
                      int q) {
    mpq_class sum = 0;
    for (const auto& [aut, count] : freq) {
        if (aut == 0) throw std::invalid_argument("total_count: zero automorphism order");
        mpq_class term(count, aut);
        term.canonicalize();
        sum += term;
    }
    sum *= mpq_class(group_order(n, q));
    if (sum.get_den() != 1) throw std::domain_error("total_count: non-integral result");
    return sum.get_num();
}

mpz_class total_count(const std::vector<std::uint64_t>& aut_sizes, int n, int q) {
    std::map<std::uint64_t, std::uint64_t> tally;
    for (auto a : aut_sizes) ++tally[a];
    return total_count(std::vector<std::pair<std::uint64_t, std::uint64_t>>(tally.begin(),
                                                                            tally.end()),
                       n, q);
}

std::uint64_t hadamard_classes(const std::vector<Matrix>& reps) {
    if (reps.empty()) return 0;
    const int q = reps[0].q;
    std::set<Row> all;
    for (const auto& m : reps) all.insert(vectorize(canonical_form(m)));

    std::map<int, std::uint64_t> orbit_sizes;  // k_i tallies
    for (const auto& m : reps) {
        std::set<Row> orbit;
        for (int u = 1; u < q; ++u) {
            if (std::gcd(u, q) != 1) continue;
            Matrix image{q, m.rows};
            for (auto& row : image.rows)
                for (auto& e : row) e = static_cast<std::uint8_t>(e * u % q);
            const Row v = vectorize(canonical_form(image));
            if (!all.contains(v))
                throw std::invalid_argument("hadamard_classes: list is not closed under units");
            orbit.insert(v);
        }
        ++orbit_sizes[static_cast<int>(orbit.size())];
    }
    mpq_class sum = 0;
    for (const auto& [i, k] : orbit_sizes) {
        mpq_class term(k, i);
        term.canonicalize();
        sum += term;
    }
    if (sum.get_den() != 1) throw std::domain_error("hadamard_classes: non-integral sum");
    return static_cast<std::uint64_t>(sum.get_num().get_ui());
}

}  // namespace butson
