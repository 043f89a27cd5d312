#include <doctest.h>

#include <cislope/chow.hpp>
#include <cislope/combinatorics.hpp>
#include <cislope/errors.hpp>
#include <cislope/fibration.hpp>
#include <cislope/sampler.hpp>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"

using cislope::BigInt;
using cislope::FibrationConfig;
using cislope::Rational;

TEST_CASE("slope bound values") {
    CHECK(cislope::slope_bound(3, 3) == Rational(24, 5));
    CHECK(cislope::slope_bound(2, 4) == Rational(3));
    CHECK(cislope::slope_bound(2, 3) == Rational(0));
    CHECK(cislope::slope_bound(4, 2) == Rational(4));
    CHECK_THROWS_AS(cislope::slope_bound(2, 2), cislope::domain_error);
    CHECK_THROWS_AS(cislope::slope_bound(1, 3), std::invalid_argument);
}

TEST_CASE("fiber genus") {
    CHECK(cislope::genus(2, 4) == 3);  // plane quartic
    CHECK(cislope::genus(2, 3) == 1);  // plane cubic
    CHECK(cislope::genus(3, 3) == 10);
    CHECK(cislope::genus(2, 2) == 0);
    CHECK(cislope::genus(3, 2) == 1);  // elliptic space curve cut by two quadrics
    CHECK(cislope::genus(4, 2) == 5);
}

TEST_CASE("r is positive exactly when the slope denominator is") {
    CHECK(cislope::slope_r(2, 4) == Rational(1));
    CHECK(cislope::slope_r(3, 3) == Rational(5, 6));
    CHECK(cislope::slope_r(2, 2) == Rational(0));
}

TEST_CASE("line bundle Euler characteristic on the bundle") {
    // chi_line_bundle(n, b, deg_e, x, y) is chi of O(-(xT + yG)).
    SUBCASE("structure sheaf gives 1 - b") {
        CHECK(cislope::chi_line_bundle(2, 0, 5, 0, 0) == 1);
        CHECK(cislope::chi_line_bundle(2, 2, 0, 0, 0) == -1);
        CHECK(cislope::chi_line_bundle(3, 0, 7, 0, 0) == 1);
        CHECK(cislope::chi_line_bundle(5, 4, -3, 0, 0) == -3);
    }
    SUBCASE("O(-T) has no cohomology") {
        CHECK(cislope::chi_line_bundle(2, 0, 7, 1, 0) == 0);
        CHECK(cislope::chi_line_bundle(3, 1, -2, 1, 0) == 0);
        CHECK(cislope::chi_line_bundle(3, 0, 4, 2, 0) == 0); // still below the fiber degree
    }
    SUBCASE("O(T) recovers the bundle itself") {
        // chi = deg_e + (n+1)(1-b)
        CHECK(cislope::chi_line_bundle(2, 0, 1, -1, 0) == 4);
        CHECK(cislope::chi_line_bundle(3, 2, 5, -1, 0) == 1);
    }
    SUBCASE("fiber class twist shifts by the top binomial") {
        // Raising y by one adds (-1)^(n+1) C(x-1, n).
        for (long x : {-2l, 0l, 3l}) {
            const BigInt base = cislope::chi_line_bundle(2, 1, 3, x, 4);
            const BigInt up = cislope::chi_line_bundle(2, 1, 3, x, 5);
            CHECK(up - base == -cislope::binom_poly(BigInt(x - 1), 2));
        }
    }
}

TEST_CASE("chi coefficient closed forms") {
    const auto c24 = cislope::chi_coefficients(2, 4);
    CHECK(c24.a0 == Rational(2));
    CHECK(c24.a1 == Rational(4));
    CHECK(c24.a2 == Rational(3));

    const auto c32 = cislope::chi_coefficients(3, 2);
    CHECK(c32.a0 == Rational(0));
    CHECK(c32.a1 == Rational(1));
    CHECK(c32.a2 == Rational(1));

    const auto c21 = cislope::chi_coefficients(2, 1);
    CHECK(c21.a1 == Rational(0));
    CHECK(c21.a2 == Rational(0));
    CHECK(c21.a0 == Rational(-1));
}

TEST_CASE("chi coefficients match the alternating-sum oracle") {
    for (int n = 2; n <= 7; ++n) {
        for (int d = 1; d <= 8; ++d) {
            const auto closed = cislope::chi_coefficients(n, d);
            const auto brute = cislope::oracles::a_coeffs_bruteforce(n, d);
            CHECK(closed.a0 == brute.a0);
            CHECK(closed.a1 == brute.a1);
            CHECK(closed.a2 == brute.a2);
            CHECK(closed.a0 + 1 == Rational(cislope::genus(n, d)));
        }
    }
}

TEST_CASE("invariant fixtures") {
    SUBCASE("(3,3) with deg_e = 1") {
        const FibrationConfig cfg{.n = 3, .d = 3, .b = 0, .deg_e = 1, .a = {0, 0}};
        const auto inv = cislope::invariants_closed(cfg);
        CHECK(inv.k2 == Rational(72));
        CHECK(inv.chi == Rational(15));
        CHECK(inv.genus == 10);
        REQUIRE(inv.lambda.has_value());
        CHECK(*inv.lambda == Rational(24, 5));
        CHECK(inv.slope_equality == true);
    }
    SUBCASE("(2,4) with deg_e = 1") {
        const FibrationConfig cfg{.n = 2, .d = 4, .b = 0, .deg_e = 1, .a = {0}};
        const auto inv = cislope::invariants_closed(cfg);
        CHECK(inv.k2 == Rational(12));
        CHECK(inv.chi == Rational(4));
        CHECK(inv.genus == 3);
        CHECK(*inv.lambda == Rational(3));
        CHECK(inv.slope_equality == true);
    }
    SUBCASE("(2,2) has no slope bound and zero chi") {
        const FibrationConfig cfg{.n = 2, .d = 2, .b = 0, .deg_e = 0, .a = {0}};
        const auto inv = cislope::invariants_closed(cfg);
        CHECK(inv.k2 == Rational(0));
        CHECK(inv.chi == Rational(0));
        CHECK_FALSE(inv.lambda.has_value());
        CHECK_FALSE(inv.slope_equality.has_value());
    }
    SUBCASE("invariants are base-genus independent") {
        FibrationConfig cfg{.n = 3, .d = 4, .b = 0, .deg_e = 3, .a = {1, -2}};
        const auto inv0 = cislope::invariants_closed(cfg);
        cfg.b = 5;
        const auto inv5 = cislope::invariants_closed(cfg);
        CHECK(inv0.k2 == inv5.k2);
        CHECK(inv0.chi == inv5.chi);
    }
    SUBCASE("config validation") {
        CHECK_THROWS_AS(
            cislope::invariants_closed({.n = 1, .d = 3, .b = 0, .deg_e = 0, .a = {}}),
            std::invalid_argument);
        CHECK_THROWS_AS(
            cislope::invariants_closed({.n = 2, .d = 3, .b = 0, .deg_e = 0, .a = {0, 0}}),
            std::invalid_argument);
        CHECK_THROWS_AS(
            cislope::invariants_closed({.n = 2, .d = 3, .b = -1, .deg_e = 0, .a = {0}}),
            std::invalid_argument);
    }
}

TEST_CASE("k2 splits into bundle and twist parts") {
    // k2 = eprime d^(n-1) (eprime+2) deg_e + eprime d^(n-2) (eprime+2d) sum(a),
    // since eprime+2 = (n-1)(d-1) and eprime+2d = (n+1)(d-1).
    cislope::Sampler rng(0x7a21);
    for (int n = 2; n <= 5; ++n) {
        for (int d = 2; d <= 6; ++d) {
            FibrationConfig cfg{.n = n, .d = d, .b = int(rng.in_range(0, 3)),
                                .deg_e = BigInt(rng.in_range(-4, 4)), .a = {}};
            BigInt a_sum = 0;
            for (int i = 0; i < n - 1; ++i) {
                cfg.a.emplace_back(rng.in_range(-3, 3));
                a_sum += cfg.a.back();
            }
            const BigInt ep = cfg.eprime();
            const Rational split =
                Rational(ep * cislope::int_pow(d, n - 1) * (ep + 2) * cfg.deg_e) +
                Rational(ep * cislope::int_pow(d, n - 2) * (ep + 2 * d) * a_sum);
            CHECK(cislope::invariants_closed(cfg).k2 == split);
        }
    }
}

TEST_CASE("k2 through intersection theory") {
    const FibrationConfig cfg{.n = 3, .d = 3, .b = 0, .deg_e = 1, .a = {0, 0}};
    CHECK(cislope::k2_chow(cfg) == Rational(72));

    SUBCASE("base genus cancels") {
        FibrationConfig c{.n = 2, .d = 5, .b = 0, .deg_e = 2, .a = {3}};
        const Rational at0 = cislope::k2_chow(c);
        c.b = 5;
        CHECK(cislope::k2_chow(c) == at0);
    }
    SUBCASE("agrees with the closed formula on a grid") {
        cislope::Sampler rng(0x88aa);
        for (int n = 2; n <= 5; ++n) {
            for (int d = 2; d <= 5; ++d) {
                FibrationConfig c{.n = n, .d = d, .b = int(rng.in_range(0, 2)),
                                  .deg_e = BigInt(rng.in_range(-3, 3)), .a = {}};
                for (int i = 0; i < n - 1; ++i) {
                    c.a.emplace_back(rng.in_range(-2, 2));
                }
                CHECK(cislope::k2_chow(c) == cislope::invariants_closed(c).k2);
            }
        }
    }
}

TEST_CASE("structure sheaf chi by inclusion-exclusion") {
    const FibrationConfig cfg{.n = 2, .d = 4, .b = 0, .deg_e = 1, .a = {0}};
    CHECK(cislope::chi_incl_excl(cfg) == Rational(2)); // chi 4 + (g-1)(b-1) = 4 - 2

    SUBCASE("matches chi + (g-1)(b-1) everywhere") {
        cislope::Sampler rng(0x3e1);
        for (int n = 2; n <= 5; ++n) {
            for (int d = 2; d <= 5; ++d) {
                for (int b = 0; b <= 2; ++b) {
                    FibrationConfig c{.n = n, .d = d, .b = b,
                                      .deg_e = BigInt(rng.in_range(-3, 3)), .a = {}};
                    for (int i = 0; i < n - 1; ++i) {
                        c.a.emplace_back(rng.in_range(-2, 2));
                    }
                    const auto inv = cislope::invariants_closed(c);
                    const Rational expected =
                        inv.chi + Rational(inv.genus - 1) * Rational(long(b) - 1);
                    CHECK(cislope::chi_incl_excl(c) == expected);
                }
            }
        }
    }
}

TEST_CASE("chi is always an integer") {
    cislope::Sampler rng(0x515);
    for (int n = 2; n <= 6; ++n) {
        for (int d = 2; d <= 6; ++d) {
            for (int rep = 0; rep < 4; ++rep) {
                FibrationConfig c{.n = n, .d = d, .b = int(rng.in_range(0, 3)),
                                  .deg_e = BigInt(rng.in_range(-5, 5)), .a = {}};
                for (int i = 0; i < n - 1; ++i) {
                    c.a.emplace_back(rng.in_range(-4, 4));
                }
                CHECK(cislope::invariants_closed(c).chi.is_integer());
            }
        }
    }
}

TEST_CASE("pushforward degree: three independent routes agree") {
    cislope::Sampler rng(0xfeed);
    for (int n : {2, 3}) {
        for (int d : {2, 3, 4, 5}) {
            for (int offset : {0, 1, 5}) {
                const int e = (n - 1) * d + offset; // higher direct images vanish here
                for (int b = 0; b <= 2; ++b) {
                    FibrationConfig cfg{.n = n, .d = d, .b = b,
                                        .deg_e = BigInt(rng.in_range(-3, 3)), .a = {}};
                    BigInt a_sum = 0;
                    for (int i = 0; i < n - 1; ++i) {
                        cfg.a.emplace_back(rng.in_range(-2, 2));
                        a_sum += cfg.a.back();
                    }
                    const Rational via_rr =
                        cislope::oracles::pushforward_degree_rr(cfg, e);
                    const Rational via_grr =
                        cislope::grr_pushforward_degree(n, d, e, cfg.deg_e, cfg.a);
                    const Rational via_uv =
                        cislope::pushforward_u(n, d, e) * Rational(cfg.deg_e) +
                        cislope::pushforward_v(n, d, e) * Rational(a_sum);
                    CHECK(via_rr == via_grr);
                    CHECK(via_rr == via_uv);
                }
            }
        }
    }
}

TEST_CASE("pushforward oracle rejects twists with higher direct images") {
    const FibrationConfig cfg{.n = 2, .d = 4, .b = 0, .deg_e = 1, .a = {0}};
    CHECK_THROWS_AS(cislope::oracles::pushforward_degree_rr(cfg, 3),
                    cislope::domain_error);
}

TEST_CASE("u, v at canonical multiples") {
    SUBCASE("fixture (2,4)") {
        const auto pc = cislope::pushforward_uvr(2, 4, 1);
        CHECK(pc.e == 1);
        CHECK(pc.r == Rational(1));
        CHECK(pc.u == Rational(2));
        CHECK(pc.v == Rational(1));
    }
    SUBCASE("degenerate fiber genus throws") {
        CHECK_THROWS_AS(cislope::pushforward_uvr(2, 2, 5), cislope::domain_error);
        CHECK_THROWS_AS(cislope::pushforward_uvr(2, 3, 5), cislope::domain_error);
    }
    SUBCASE("agrees with the intersection-theoretic extraction") {
        for (int n : {2, 3, 4}) {
            for (int d = 2; d <= 5; ++d) {
                if ((n - 1) * d - (n + 1) <= 0) {
                    continue;
                }
                for (int m : {1, 2, 3}) {
                    const auto pc = cislope::pushforward_uvr(n, d, m);
                    const int e = static_cast<int>(pc.e.get_si());
                    const std::vector<BigInt> zeros(n - 1, BigInt(0));
                    std::vector<BigInt> unit = zeros;
                    unit[0] = 1;
                    CHECK(pc.u == cislope::grr_pushforward_degree(n, d, e, 1, zeros));
                    CHECK(pc.v == cislope::grr_pushforward_degree(n, d, e, 0, unit));
                }
            }
        }
    }
}

TEST_CASE("symmetric power degree oracle") {
    for (int m = 0; m <= 6; ++m) {
        for (int rank = 1; rank <= 4; ++rank) {
            for (long deg : {-3l, 0l, 2l, 7l}) {
                const BigInt expected =
                    cislope::binom_poly(BigInt(m + rank - 1), rank) * deg;
                CHECK(cislope::oracles::deg_sym_splitting(m, rank, deg) == expected);
            }
        }
    }
    // Spot values: rank 2 gives m(m+1)/2 copies of the degree.
    CHECK(cislope::oracles::deg_sym_splitting(4, 2, 3) == 30);
    CHECK(cislope::oracles::deg_sym_splitting(0, 3, 9) == 0);
    CHECK(cislope::oracles::deg_sym_splitting(1, 3, 9) == 9);
}
