#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sptcong/partitions.hpp"
#include "sptcong/qseries.hpp"

using namespace sptcong;

TEST_CASE("partition table small values and p(50)") {
    auto p = partition_table(50);
    CHECK(p[0] == 1);
    CHECK(p[1] == 1);
    CHECK(p[3] == 3);
    CHECK(p[4] == 5);
    CHECK(p[50] == 204226);
}

TEST_CASE("partition table equals the inverted Euler product to 200") {
    long N = 200;
    ExactRing ring;
    long T = 24 * (N + 1);
    SeriesQ euler(ring, 0, T);
    euler.at(0) = Rational(1);
    for (long n = 1; n <= N; ++n) {
        SeriesQ factor(ring, 0, T);
        factor.at(0) = Rational(1);
        factor.at(24 * n) = Rational(-1);
        euler = truncated(mul(euler, factor), T);
    }
    SeriesQ gen = inverse_unit(euler);
    auto p = partition_table(N);
    for (long n = 0; n <= N; ++n) {
        CAPTURE(n);
        CHECK(gen.q_coeff(n) == Rational(p[n]));
    }
}

TEST_CASE("spt series method equals brute-force enumeration to 40") {
    auto s = spt_table(40);
    CHECK(s[1] == 1);
    CHECK(s[2] == 3);
    CHECK(s[3] == 5);
    CHECK(s[4] == 10);
    CHECK(s[6] == 26);
    for (int n = 1; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(s[n] == spt_bruteforce(n));
    }
}

TEST_CASE("spt_bruteforce examples") {
    CHECK(spt_bruteforce(1) == 1);
    CHECK(spt_bruteforce(3) == 5);
    CHECK(spt_bruteforce(6) == 26);
    CHECK_THROWS_AS(spt_bruteforce(0), std::invalid_argument);
    CHECK_THROWS_AS(spt_bruteforce(41), std::invalid_argument);
}

TEST_CASE("second rank moment") {
    CHECK(n2_moment(1) == 0);
    CHECK(n2_moment(2) == 2);
    CHECK(n2_moment(3) == 8);
    // spt(n) = n p(n) - N2(n)/2 restated
    auto p = partition_table(30);
    auto s = spt_table(30);
    for (long n = 1; n <= 30; ++n) CHECK(2 * (Integer(n) * p[n] - s[n]) == n2_moment(n));
}

TEST_CASE("Andrews congruences hold for all arguments up to 1000") {
    auto s = spt_table(1000);
    for (uint64_t ell : {5, 7, 13}) {
        uint64_t inv24 = invmod(24, ell);
        long checked = 0;
        for (long m = 1; m <= 1000; ++m) {
            if (static_cast<uint64_t>(m % static_cast<long>(ell)) != inv24) continue;
            ++checked;
            CAPTURE(ell);
            CAPTURE(m);
            CHECK(reduce_mod_value(s[m], ell) == 0);
        }
        CHECK(checked > 50);
    }
}

TEST_CASE("candidate table values") {
    CandidateTable t = a_coefficients(50);
    REQUIRE(t.count() == 50);
    CHECK(t.entries[0].n == 23);
    CHECK(t.entries[0].a == -35);
    CHECK(t.entries[1].n == 47);
    CHECK(t.entries[1].a == -130);
    CHECK(t.entries[2].n == 71);
    CHECK(t.entries[2].a == -273);
    CHECK(t.entries[3].a == -595);
    CHECK(t.entries[49].n == 1199);
    CHECK(t.entries[49].a == -259162358);
    for (const auto& e : t.entries) {
        CHECK(e.n % 24 == 23);
        CHECK(e.n == static_cast<uint64_t>(24 * e.k - 1));
        CHECK(sgn(e.a) != 0);
    }
}

TEST_CASE("candidate table hash is stable and content-sensitive") {
    CandidateTable a = a_coefficients(50);
    CandidateTable b = a_coefficients(50);
    CHECK(a.hash() == b.hash());
    CHECK(a.hash() != a_coefficients(49).hash());
    CandidateTable c = a_coefficients(10);
    c.entries[3].a += 1;
    CHECK(c.hash() != a_coefficients(10).hash());
}

TEST_CASE("prime candidate subsequence") {
    CandidateTable t = a_coefficients(40);
    auto idx = t.prime_candidates();
    std::vector<long> ks;
    for (int i : idx) ks.push_back(t.entries[i].k);
    std::vector<long> expect{1, 2, 3, 7, 8, 10, 11, 13, 15, 16, 18, 20, 21, 25, 27, 30, 31, 35, 36, 37};
    REQUIRE(ks.size() >= expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(ks[i] == expect[i]);

    CandidateTable big = a_coefficients_with_primes(30);
    CHECK(big.prime_candidates().size() >= 30);
}
