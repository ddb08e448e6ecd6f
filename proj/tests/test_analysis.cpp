#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "butson/analysis.hpp"
#include "butson/canonical.hpp"
#include "butson/equivalence.hpp"
#include "butson/matrix_io.hpp"
#include "butson/search.hpp"

using namespace butson;

namespace {

Matrix fourier(int n, int q) {
    Matrix m{q, std::vector<Row>(n, Row(n))};
    const int s = q / n;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m.rows[j][k] = static_cast<std::uint8_t>(j * k * s % q);
    return m;
}

std::vector<Matrix> classes_of(int n, int q) {
    SearchOptions opts;
    opts.n = n;
    opts.q = q;
    return classify(opts).representatives;
}

MonomialMap random_monomial(int n, int q, std::mt19937& rng) {
    MonomialMap map;
    map.row_perm.resize(n);
    map.col_perm.resize(n);
    for (int i = 0; i < n; ++i) map.row_perm[i] = map.col_perm[i] = i;
    std::shuffle(map.row_perm.begin(), map.row_perm.end(), rng);
    std::shuffle(map.col_perm.begin(), map.col_perm.end(), rng);
    for (int i = 0; i < n; ++i) {
        map.row_phase.push_back(static_cast<int>(rng() % q));
        map.col_phase.push_back(static_cast<int>(rng() % q));
    }
    return map;
}

// Independent defect oracle: assemble the linearized unitarity system
// with floating-point root-of-unity coefficients and take the numeric
// rank by pivoted elimination.
int numeric_defect(const Matrix& h) {
    const int n = h.row_count(), q = h.q;
    const int vars = (n - 1) * (n - 1);
    const auto var = [n](int j, int l) { return (j - 1) * (n - 1) + (l - 1); };
    std::vector<std::vector<double>> rows;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            std::vector<double> re(vars, 0), im(vars, 0);
            for (int l = 1; l < n; ++l) {
                const int t = (h.rows[j][l] - h.rows[k][l] + q) % q;
                const double angle = 2 * std::numbers::pi * t / q;
                const std::complex<double> c(std::cos(angle), std::sin(angle));
                if (j >= 1) {
                    re[var(j, l)] += c.real();
                    im[var(j, l)] += c.imag();
                }
                re[var(k, l)] -= c.real();
                im[var(k, l)] -= c.imag();
            }
            rows.push_back(std::move(re));
            rows.push_back(std::move(im));
        }
    int rank = 0;
    const double tol = 1e-8;
    for (int col = 0; col < vars && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        double best = tol;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (std::abs(rows[i][col]) > best) {
                best = std::abs(rows[i][col]);
                pivot = i;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
            const double f = rows[i][col] / rows[rank][col];
            for (int c2 = col; c2 < vars; ++c2) rows[i][c2] -= f * rows[rank][c2];
        }
        ++rank;
    }
    return vars - rank;
}

}  // namespace

TEST_CASE("verify_butson") {
    CHECK(verify_butson(read_matrix_file(std::string(FIXTURE_DIR) + "/bh14_10.txt")));
    for (int n = 1; n <= 8; ++n) CHECK(verify_butson(fourier(n, n)));
    CHECK_FALSE(verify_butson(Matrix{2, {{0, 0}, {0, 0}}}));
    CHECK_FALSE(verify_butson(Matrix{2, {{0, 0}}}));
    CHECK_FALSE(verify_butson(Matrix{2, {{0, 0}, {0, 1}, {0, 1}}}));
    CHECK_FALSE(verify_butson(Matrix{3, {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}}}));
}

TEST_CASE("kronecker") {
    const Matrix f2 = fourier(2, 2);
    CHECK(kronecker(f2, f2) ==
          Matrix{2, {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 0}}});

    const Matrix f2f3 = kronecker(f2, fourier(3, 3));
    CHECK(f2f3.q == 6);
    CHECK(f2f3.row_count() == 6);
    CHECK(verify_butson(f2f3));

    const Matrix one{5, {{0}}};
    CHECK(kronecker(fourier(5, 5), one) == fourier(5, 5));

    CHECK_THROWS_AS((void)kronecker(f2, Matrix{2, {{0, 0}, {0, 0}}}), std::invalid_argument);
}

TEST_CASE("turyn_double") {
    // F_2 with +-1 entries viewed over Z_4
    const Matrix f2_as_q4{4, {{0, 0}, {0, 2}}};
    const Matrix d = turyn_double(f2_as_q4);
    CHECK(d.q == 2);
    CHECK(d.row_count() == 4);
    CHECK(verify_butson(d));

    const Matrix d4 = turyn_double(fourier(4, 4));
    CHECK(verify_butson(d4));
    CHECK(d4.row_count() == 8);
    const auto bh82 = classes_of(8, 2);
    REQUIRE(bh82.size() == 1);
    CHECK(are_equivalent(canonical_form(d4), bh82[0]));

    for (const auto& m : classes_of(6, 4)) {
        const Matrix out = turyn_double(m);
        CHECK(out.q == 2);
        CHECK(verify_butson(out));
    }

    CHECK_THROWS_AS((void)turyn_double(fourier(2, 2)), std::invalid_argument);
}

TEST_CASE("unreal6_to_quaternary") {
    // [[w, w], [w, -w]] has no real entries
    const Matrix unreal{6, {{2, 2}, {2, 5}}};
    const Matrix out = unreal6_to_quaternary(unreal);
    CHECK(out.q == 4);
    CHECK(out.row_count() == 4);
    CHECK(verify_butson(out));

    // F_3 embedded in sixth roots has 1 entries
    Matrix embedded = fourier(3, 3);
    embedded.q = 6;
    for (auto& row : embedded.rows)
        for (auto& e : row) e = static_cast<std::uint8_t>(e * 2);
    CHECK_THROWS_AS((void)unreal6_to_quaternary(embedded), std::invalid_argument);
    CHECK_THROWS_AS((void)unreal6_to_quaternary(fourier(2, 2)), std::invalid_argument);

    // dephased representatives always carry a 1 entry, so scan their
    // global phase shifts for unreal forms
    int found = 0;
    for (int n : {2, 4, 6}) {
        for (const auto& m : classes_of(n, 6)) {
            for (int shift = 0; shift < 6; ++shift) {
                Matrix shifted{6, m.rows};
                for (auto& row : shifted.rows)
                    for (auto& e : row) e = static_cast<std::uint8_t>((e + shift) % 6);
                const bool unreal_entries =
                    std::all_of(shifted.rows.begin(), shifted.rows.end(), [](const Row& r) {
                        return std::all_of(r.begin(), r.end(),
                                           [](std::uint8_t e) { return e != 0 && e != 3; });
                    });
                if (!unreal_entries) continue;
                ++found;
                CHECK(verify_butson(unreal6_to_quaternary(shifted)));
            }
        }
    }
    CHECK(found >= 1);  // F_2 * w is unreal, so the scan is not vacuous
}

TEST_CASE("block identity behind the quaternary doubling") {
    using C = std::complex<double>;
    const C i(0, 1);
    const C x[2][2] = {{1, 1}, {1, -1}};
    const C y[2][2] = {{i, -1}, {-1, i}};
    auto gram = [](const C a[2][2], const C b[2][2], int r, int c) {
        return a[r][0] * std::conj(b[c][0]) + a[r][1] * std::conj(b[c][1]);
    };
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const C expected = r == c ? 2.0 : 0.0;
            CHECK(std::abs(gram(x, x, r, c) - expected) < 1e-12);
            CHECK(std::abs(gram(y, y, r, c) - expected) < 1e-12);
            CHECK(std::abs(gram(x, y, r, c) + gram(y, x, r, c) + expected) < 1e-12);
        }
}

TEST_CASE("defect closed cases") {
    CHECK(defect(fourier(2, 2)).defect == 0);
    const auto f4 = defect(fourier(4, 4));
    CHECK(f4.defect == 1);
    CHECK(f4.variables == 9);
    CHECK(f4.rank == 8);
    CHECK(is_isolated(fourier(2, 2)));
    CHECK_FALSE(is_isolated(fourier(4, 4)));

    // published values: d(F_3) = 0, d(F_6) = 4
    CHECK(defect(fourier(3, 3)).defect == 0);
    CHECK(defect(fourier(6, 6)).defect == 4);

    // the unique cube-root class of order 6 is isolated
    const auto bh63 = classes_of(6, 3);
    REQUIRE(bh63.size() == 1);
    CHECK(defect(bh63[0]).defect == 0);
    CHECK(is_isolated(bh63[0]));
    CHECK(defect(bh63[0]).defect == numeric_defect(bh63[0]));

    CHECK_THROWS_AS((void)defect(fourier(5, 5)), std::invalid_argument);
    CHECK_THROWS_AS((void)defect(Matrix{2, {{0, 0}, {0, 0}}}), std::invalid_argument);
}

TEST_CASE("exact and numeric defect agree on classified matrices") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{
             {4, 2}, {8, 2}, {6, 3}, {4, 4}, {6, 4}, {8, 4}, {6, 6}, {7, 6}}) {
        CAPTURE(n);
        CAPTURE(q);
        for (const auto& m : classes_of(n, q)) CHECK(defect(m).defect == numeric_defect(m));
    }
}

TEST_CASE("defect is a monomial invariant") {
    std::mt19937 rng(41);
    for (const Matrix& h : {fourier(4, 4), fourier(6, 6), classes_of(6, 3)[0]}) {
        const int reference = defect(h).defect;
        for (int trial = 0; trial < 5; ++trial)
            CHECK(defect(apply_monomial(h, random_monomial(h.row_count(), h.q, rng))).defect ==
                  reference);
    }
}

TEST_CASE("real row pairs rule out isolation") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 4}, {6, 4}, {8, 4}}) {
        for (const auto& m : classes_of(n, q))
            if (matrix_type(m) == 0) CHECK(defect(m).defect > 0);
    }
}
