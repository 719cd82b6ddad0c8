#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sptcong/partitions.hpp"
#include "sptcong/zagier.hpp"

#include <random>

using namespace sptcong;

namespace {
const ExactRing kExact{};
}

TEST_CASE("f coefficients match the q-expansion display") {
    SeriesQ f = f_series(24 * 10);
    CHECK(f.coeff(-1) == Rational(1));
    CHECK(f.coeff(23) == Rational(-35));
    CHECK(f.coeff(47) == Rational(-130));
    CHECK(f.coeff(71) == Rational(-273));
    for (long k = 1; k <= 9; ++k) CHECK(f.coeff(24 * k) == Rational(0));
}

TEST_CASE("f support and table consistency") {
    long T = 24 * 60;
    SeriesQ f = f_series(T);
    auto p = partition_table(60);
    auto s = spt_table(60);
    for (long e = -1; e < T; ++e) {
        if (e == -1) continue;
        if (((e % 24) + 24) % 24 == 23) {
            long k = (e + 1) / 24;
            CHECK(f.coeff(e) == Rational(-(12 * s[k] + Integer(e) * p[k])));
        } else {
            CHECK(f.coeff(e) == Rational(0));
        }
    }
}

TEST_CASE("F_k dual representations agree") {
    long T = 24 * 100 + 1;
    for (unsigned k : {2u, 4u, 6u, 8u, 10u}) {
        SeriesQ a = zagier_f(k, T, FForm::rs_sum);
        SeriesQ b = zagier_f(k, T, FForm::n_sum);
        CAPTURE(k);
        CHECK(equal_through(a, b, T));
    }
}

TEST_CASE("F_k is supported on integer powers of q") {
    long T = 24 * 120;
    for (unsigned k : {2u, 4u, 8u}) {
        CHECK(zagier_f(k, T, FForm::rs_sum).integer_q_supported());
        CHECK(zagier_f(k, T, FForm::n_sum).integer_q_supported());
    }
}

TEST_CASE("12 F_2 + f eta = E_2") {
    long T = 24 * 120 + 2;
    SeriesQ lhs = add(scale(12L, zagier_f(2, T)),
                      mul(f_series(T + 1), eta_series(kExact, T + 1)));
    SeriesQ e2 = eisenstein(kExact, 2, T);
    CHECK(equal_through(lhs, e2, T - 1));
    CHECK(lhs.q_coeff(0) == Rational(1));  // 12*0 + 1*1
}

TEST_CASE("rankin_cohen degenerates to the product at n = 0") {
    std::mt19937_64 rng(5);
    SeriesQ f = f_series(24 * 20);
    SeriesQ eta = eta_series(kExact, 24 * 20);
    BracketParams prm{0, rational_from_long(3, 2), rational_from_long(1, 2)};
    SeriesQ br = rankin_cohen(f, eta, prm);
    SeriesQ pr = mul(f, eta);
    CHECK(equal_through(br, pr, std::min(br.trunc(), pr.trunc())));
    (void)rng;
}

TEST_CASE("rankin_cohen antisymmetry for equal weights") {
    SeriesQ g(kExact, 0, 100);
    for (long e = 0; e < 100; e += 7) g.at(e) = rational_from_long(e + 1, 3);
    BracketParams prm{1, rational_from_long(5, 2), rational_from_long(5, 2)};
    CHECK(rankin_cohen(g, g, prm).is_zero());
}

TEST_CASE("bracket plus F gives the Eisenstein series in one-dimensional weights") {
    long T = 24 * 60 + 2;
    SeriesQ f = f_series(T + 1);
    SeriesQ eta = eta_series(kExact, T + 1);
    for (unsigned n = 1; n <= 4; ++n) {
        BracketParams prm{n, rational_from_long(3, 2), rational_from_long(1, 2)};
        SeriesQ g = add(scale(12L, zagier_f(2 * n + 2, T)),
                        scale(kExact.from_rational(c_coefficient(n)), rankin_cohen(f, eta, prm)));
        SeriesQ ek = eisenstein(kExact, 2 * n + 2, T);
        CAPTURE(n);
        CHECK(equal_through(g, ek, 24 * 55));
    }
}

TEST_CASE("c coefficients") {
    CHECK(c_coefficient(0) == Rational(1));
    CHECK(c_coefficient(1) == Rational(12));
    CHECK(c_coefficient(2) == Rational(96));
    CHECK(c_coefficient(3) == rational_from_long(3456, 5));
    CHECK(c_coefficient(4) == rational_from_long(165888, 35));
}

TEST_CASE("f_ell definition and congruence modes agree") {
    long T = 24 * 60;
    for (uint64_t ell : {5, 7, 11, 13}) {
        SeriesFp a = f_ell_series(ell, T, FellMode::definition);
        SeriesFp b = f_ell_series(ell, T, FellMode::congruence);
        CAPTURE(ell);
        CHECK(equal_through(a, b, T));
    }
}

TEST_CASE("f_5 vanishes mod 5") {
    SeriesFp f5 = f_ell_series(5, 24 * 100);
    CHECK(f5.is_zero());
}

TEST_CASE("f_11 is a nonzero multiple of Delta mod 11") {
    long T = 24 * 60;
    SeriesFp f11 = f_ell_series(11, T);
    REQUIRE_FALSE(f11.is_zero());
    CHECK(f11.first_nonzero() == 24);
    uint64_t c = f11.q_coeff(1);
    REQUIRE(c != 0);
    SeriesFp delta = delta_series(ModRing(11), T);
    CHECK(equal_through(f11, scale(c, delta), T));
}

TEST_CASE("leading behavior of the twisted theta power of f") {
    // (-24|ell) Theta^{(ell-1)/2} f = q^{-1/24} + O(q^{23/24}) mod ell
    for (uint64_t ell : {5, 7, 11, 13, 17}) {
        long T = 48;
        SeriesQ t = f_series(T);
        for (uint64_t i = 0; i < (ell - 1) / 2; ++i) t = theta(t);
        SeriesFp r = reduce_series(scale(kronecker(-24, static_cast<int64_t>(ell)), t), ell);
        CAPTURE(ell);
        CHECK(r.coeff(-1) == 1);
        for (long e = 0; e < 23; ++e) CHECK(r.coeff(e) == 0);
    }
}

TEST_CASE("g_5 is the zero series") {
    CHECK(g_ell_series(5, 24 * 40).is_zero());
}

TEST_CASE("g_11 first nonzero exponent is ell^2 + 23") {
    SeriesFp g11 = g_ell_series(11, 24 * 40);
    CHECK(g11.first_nonzero() == 11 * 11 + 23);
}

TEST_CASE("U_ell identity for g_ell") {
    // g_ell | U_ell = (f | U_ell) * eta^ell  (mod ell)
    for (uint64_t ell : {11, 17}) {
        long lell = static_cast<long>(ell);
        long To = 24 * 10 + 1;
        SeriesFp gu = u_ell(g_ell_series(ell, lell * To), ell);
        ModRing ring(ell);
        SeriesFp fu = u_ell(reduce_series(f_series(lell * To), ell), ell);
        SeriesFp rhs = mul(fu, eta_pow(ring, static_cast<unsigned>(ell), To));
        long common = std::min(gu.trunc(), rhs.trunc());
        CAPTURE(ell);
        CHECK(equal_through(gu, rhs, common));
        CHECK(common >= To - 1);
    }
}
