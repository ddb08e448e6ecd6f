#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "butson/canonical.hpp"

using namespace butson;

namespace {

Matrix fourier(int n) {
    Matrix m{n, {}};
    for (int j = 0; j < n; ++j) {
        Row row(n);
        for (int k = 0; k < n; ++k) row[k] = static_cast<std::uint8_t>((j * k) % n);
        m.rows.push_back(row);
    }
    return m;
}

Matrix random_matrix(std::mt19937& rng, int r, int n, int q) {
    Matrix m{q, {}};
    for (int j = 0; j < r; ++j) {
        Row row(n);
        for (auto& e : row) e = static_cast<std::uint8_t>(rng() % q);
        m.rows.push_back(row);
    }
    return m;
}

// Reference oracle: minimum vectorization over every (sigma, i) transform.
Row brute_min_over_transforms(const Matrix& m) {
    const int r = m.row_count(), n = m.col_count();
    std::vector<int> sigma(r);
    std::iota(sigma.begin(), sigma.end(), 0);
    Row best;
    do {
        for (int i = 0; i < n; ++i) {
            Row v = vectorize(transform(m, sigma, i));
            if (best.empty() || v < best) best = v;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

// Oracle over the full monomial orbit, using that the orbit minimum is
// dephased: enumerate all row and column permutations, dephase each.
Row brute_min_over_orbit(const Matrix& m) {
    const int r = m.row_count(), n = m.col_count();
    std::vector<int> sigma(r), tau(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Row best;
    do {
        std::iota(tau.begin(), tau.end(), 0);
        do {
            Matrix p{m.q, {}};
            for (int j = 0; j < r; ++j) {
                Row row(n);
                for (int k = 0; k < n; ++k) row[k] = m.rows[sigma[j]][tau[k]];
                p.rows.push_back(std::move(row));
            }
            Row v = vectorize(dephase(p));
            if (best.empty() || v < best) best = v;
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

// Literal orbit enumeration including all phase choices; tiny sizes only.
Row brute_min_full_group(const Matrix& m) {
    const int r = m.row_count(), n = m.col_count(), q = m.q;
    std::vector<int> sigma(r), tau(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Row best;
    long long rp_count = 1, cp_count = 1;
    for (int j = 0; j < r; ++j) rp_count *= q;
    for (int k = 0; k < n; ++k) cp_count *= q;
    do {
        std::iota(tau.begin(), tau.end(), 0);
        do {
            for (long long rp = 0; rp < rp_count; ++rp) {
                for (long long cp = 0; cp < cp_count; ++cp) {
                    MonomialMap map;
                    map.row_perm = sigma;
                    map.col_perm = tau;
                    long long t = rp;
                    for (int j = 0; j < r; ++j, t /= q) map.row_phase.push_back(t % q);
                    t = cp;
                    for (int k = 0; k < n; ++k, t /= q) map.col_phase.push_back(t % q);
                    Row v = vectorize(apply_monomial(m, map));
                    if (best.empty() || v < best) best = v;
                }
            }
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

MonomialMap random_monomial(std::mt19937& rng, int r, int n, int q) {
    MonomialMap map;
    map.row_perm.resize(r);
    map.col_perm.resize(n);
    std::iota(map.row_perm.begin(), map.row_perm.end(), 0);
    std::iota(map.col_perm.begin(), map.col_perm.end(), 0);
    std::shuffle(map.row_perm.begin(), map.row_perm.end(), rng);
    std::shuffle(map.col_perm.begin(), map.col_perm.end(), rng);
    for (int j = 0; j < r; ++j) map.row_phase.push_back(rng() % q);
    for (int k = 0; k < n; ++k) map.col_phase.push_back(rng() % q);
    return map;
}

}  // namespace

TEST_CASE("vectorize") {
    CHECK(vectorize(Matrix{2, {{0, 0}, {0, 1}}}) == Row{0, 0, 0, 1});
    CHECK(vectorize(Matrix{3, {{0, 1, 2}}}) == Row{0, 1, 2});
    CHECK(vectorize(Matrix{3, {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}}) ==
          Row{0, 0, 0, 0, 1, 2, 0, 2, 1});
}

TEST_CASE("transform") {
    const Matrix f3 = fourier(3);
    std::vector<int> id = {0, 1, 2};
    CHECK(transform(f3, id, 0) == f3);

    // Swapping the last two rows dephases and column-sorts back to F_3.
    CHECK(transform(f3, {0, 2, 1}, 0) == f3);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 5);
        const int q = 2 + static_cast<int>(rng() % 5);
        const Matrix m = random_matrix(rng, r, n, q);
        std::vector<int> sigma(r);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const int i = static_cast<int>(rng() % n);
        const Matrix t = transform(m, sigma, i);
        CHECK(is_dephased(t));
        // transform is invariant under pre-dephasing
        CHECK(transform(dephase(m), sigma, i) == t);
        // columns of the result are sorted
        for (int k = 0; k + 1 < n; ++k) {
            Row a(r), b(r);
            for (int j = 0; j < r; ++j) {
                a[j] = t.rows[j][k];
                b[j] = t.rows[j][k + 1];
            }
            CHECK(lex_compare(a, b) != std::strong_ordering::greater);
        }
    }
}

TEST_CASE("is_canonical basics") {
    CHECK(is_canonical(Matrix{2, {{0, 0}, {0, 1}}}));
    CHECK(is_canonical(fourier(3)));
    CHECK_FALSE(is_canonical(Matrix{3, {{0, 0, 0}, {0, 2, 1}, {0, 1, 2}}}));
    CHECK_THROWS_AS((void)is_canonical(Matrix{3, {{0, 1, 0}}}), std::invalid_argument);
}

TEST_CASE("is_canonical and canonical_form match the (sigma,i) oracle") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 6);
        const int q = 2 + static_cast<int>(rng() % 5);
        const Matrix m = dephase(random_matrix(rng, r, n, q));
        const Row oracle = brute_min_over_transforms(m);
        const Matrix canon = canonical_form(m);
        CAPTURE(m.q);
        CHECK(vectorize(canon) == oracle);
        CHECK(is_canonical(m) == (vectorize(m) == oracle));
        CHECK(is_canonical(canon));
        CHECK(canonical_form(canon) == canon);
    }
}

TEST_CASE("canonical_form equals the dephased orbit minimum") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 150; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
        const int q = 2 + static_cast<int>(rng() % 5);
        const Matrix m = random_matrix(rng, r, n, q);
        CHECK(vectorize(canonical_form(m)) == brute_min_over_orbit(m));
    }
}

TEST_CASE("canonical_form equals the literal full-group minimum at tiny sizes") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
        const Matrix m = random_matrix(rng, r, n, 2);
        CHECK(vectorize(canonical_form(m)) == brute_min_full_group(m));
    }
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix m = random_matrix(rng, 2, 2, 3);
        CHECK(vectorize(canonical_form(m)) == brute_min_full_group(m));
    }
}

TEST_CASE("canonical_form is a monomial invariant") {
    std::mt19937 rng(53);
    const Matrix f2{2, {{0, 0}, {0, 1}}};
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix moved = apply_monomial(f2, random_monomial(rng, 2, 2, 2));
        CHECK(canonical_form(moved) == f2);
    }
    const Matrix f4 = fourier(4);
    const Matrix canon4 = canonical_form(f4);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix moved = apply_monomial(f4, random_monomial(rng, 4, 4, 4));
        CHECK(canonical_form(moved) == canon4);
    }
}

TEST_CASE("canonical matrices have sorted rows and columns") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 3), n = 2 + static_cast<int>(rng() % 4);
        const int q = 2 + static_cast<int>(rng() % 5);
        const Matrix canon = canonical_form(random_matrix(rng, r, n, q));
        CHECK(is_dephased(canon));
        for (int j = 0; j + 1 < r; ++j)
            CHECK(lex_compare(canon.rows[j], canon.rows[j + 1]) != std::strong_ordering::greater);
    }
}

TEST_CASE("monomial map inversion") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 5), n = 1 + static_cast<int>(rng() % 5);
        const int q = 2 + static_cast<int>(rng() % 9);
        const Matrix m = random_matrix(rng, r, n, q);
        const MonomialMap map = random_monomial(rng, r, n, q);
        CHECK(apply_monomial(apply_monomial(m, map), inverse(map, q)) == m);
    }
}
