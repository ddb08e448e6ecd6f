#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "butson/cyclotomic.hpp"
#include "butson/vanishing.hpp"

using namespace butson;

namespace {

// Independent oracle: every sorted zero-leading vector in Z_q^n whose
// root of unity sum vanishes exactly.
std::vector<Row> brute_force_vanishing(int n, int q) {
    std::vector<Row> out;
    Row x(n, 0);
    // enumerate nondecreasing vectors with x_0 = 0
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            if (vanishes_exact(x, q)) out.push_back(x);
            return;
        }
        for (int v = x[pos - 1]; v < q; ++v) {
            x[pos] = static_cast<std::uint8_t>(v);
            self(self, pos + 1);
        }
    };
    if (n >= 1) rec(rec, 1);
    return out;
}

}  // namespace

TEST_CASE("exists_vanishing") {
    CHECK(exists_vanishing(7, 6));
    CHECK_FALSE(exists_vanishing(5, 4));
    for (int q = 2; q <= 17; ++q) CHECK_FALSE(exists_vanishing(1, q));
    CHECK(exists_vanishing(4, 2));
    CHECK_FALSE(exists_vanishing(3, 2));
    CHECK(exists_vanishing(8, 15));
    CHECK_FALSE(exists_vanishing(4, 15));
}

TEST_CASE("generate_vanishing_set small cases") {
    CHECK(generate_vanishing_set(4, 2).members() == std::vector<Row>{{0, 0, 1, 1}});

    const auto o84 = generate_vanishing_set(8, 4);
    CHECK(o84.members() == std::vector<Row>{{0, 0, 0, 0, 2, 2, 2, 2},
                                            {0, 0, 0, 1, 2, 2, 2, 3},
                                            {0, 0, 1, 1, 2, 2, 3, 3},
                                            {0, 1, 1, 1, 2, 3, 3, 3}});

    CHECK(generate_vanishing_set(16, 4).size() == 8);
    CHECK(generate_vanishing_set(6, 6).size() == 7);
}

TEST_CASE("generate_vanishing_set rejects unsupported q") {
    CHECK_THROWS_AS((void)generate_vanishing_set(6, 30), std::invalid_argument);
}

TEST_CASE("generated sets match the brute force oracle") {
    for (int q = 2; q <= 17; ++q) {
        if (prime_divisors(q).size() > 2) continue;
        for (int n = 2; n <= 10; ++n) {
            if (static_cast<double>(binomial(n + q - 2, n - 1)) > 4e6) continue;
            const auto gen = generate_vanishing_set(n, q);
            const auto brute = brute_force_vanishing(n, q);
            CAPTURE(n);
            CAPTURE(q);
            CHECK(gen.members() == brute);
        }
    }
}

TEST_CASE("members are sorted, zero leading and vanishing") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{8, 4}, {9, 6}, {9, 10}, {8, 15}, {6, 12}}) {
        const auto o = generate_vanishing_set(n, q);
        CHECK(o.size() >= 1);
        for (const auto& x : o.members()) {
            CHECK(x.front() == 0);
            CHECK(sort_row(x) == x);
            CHECK(vanishes_exact(x, q));
        }
    }
}

TEST_CASE("counting formulas") {
    CHECK(count_vanishing_prime_power(16, 4) == 8);
    CHECK(count_vanishing_prime_power(4, 2) == 1);
    CHECK(count_vanishing_prime_power(9, 3) == 1);
    CHECK(count_vanishing_prime_power(5, 4) == 0);

    CHECK(count_vanishing_2p(6, 6) == 7);
    CHECK(count_vanishing_2p(5, 6) == 4);
    CHECK(count_vanishing_2p(2, 6) == 1);
}

TEST_CASE("generated cardinalities equal the closed-form counts") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17}) {
        for (int n = 2; n <= 12; ++n) {
            if (static_cast<double>(count_vanishing_prime_power(n, q)) > 2e5) continue;
            CAPTURE(n);
            CAPTURE(q);
            CHECK(generate_vanishing_set(n, q).size() == count_vanishing_prime_power(n, q));
        }
    }
    for (int q : {6, 10, 14}) {
        for (int n = 2; n <= 12; ++n) {
            CAPTURE(n);
            CAPTURE(q);
            CHECK(generate_vanishing_set(n, q).size() == count_vanishing_2p(n, q));
        }
    }
}

TEST_CASE("existence matches generated nonemptiness") {
    for (int q = 2; q <= 17; ++q) {
        if (prime_divisors(q).size() > 2) continue;
        for (int n = 2; n <= 12; ++n) {
            CAPTURE(n);
            CAPTURE(q);
            CHECK(exists_vanishing(n, q) == (generate_vanishing_set(n, q).size() >= 1));
        }
    }
}

TEST_CASE("is_orthogonal") {
    const auto o3 = generate_vanishing_set(3, 3);
    CHECK(is_orthogonal({0, 0, 0}, {0, 1, 2}, o3));
    const auto o2 = generate_vanishing_set(2, 2);
    CHECK_FALSE(is_orthogonal({0, 0}, {0, 0}, o2));
    CHECK_THROWS_AS((void)is_orthogonal({0, 0, 0}, {0, 1}, o3), std::invalid_argument);
}

TEST_CASE("prefix_feasible") {
    const auto o42 = generate_vanishing_set(4, 2);
    CHECK(o42.prefix_feasible({0, 0, 1}));
    CHECK_FALSE(o42.prefix_feasible({0, 1, 1}));
    const auto o84 = generate_vanishing_set(8, 4);
    CHECK(o84.prefix_feasible({0, 0, 0, 1}));
    CHECK(o84.prefix_feasible({}));
}
