#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sptcong {

using Integer = mpz_class;
using Rational = mpq_class;

// Two coefficient rings with different moduli (or a modular and an exact
// value) were mixed in one operation.
struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A result was requested beyond the precision that the inputs can certify.
struct PrecisionError : std::logic_error {
    using std::logic_error::logic_error;
};

// Reduction mod ell of a rational whose denominator is divisible by ell.
struct NotEllIntegral : std::domain_error {
    using std::domain_error::domain_error;
};

// Canonical rational: lowest terms, positive denominator.
Rational make_rational(Integer num, Integer den);
Rational rational_from_long(long num, long den = 1);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m);  // m prime, a not divisible by m

// Deterministic primality by trial division; fine for configuration-time
// checks (the scan itself never tests primality, it sieves).
bool is_prime(uint64_t n);

// Full Kronecker symbol (a|b) for all integers, standard conventions:
// (a|0) = 1 iff a = +-1, (a|-1) = -1 iff a < 0, (a|2) by a mod 8.
int kronecker(int64_t a, int64_t b);

// Element of the prime field F_ell, ell >= 5.
struct FpElement {
    uint64_t value = 0;
    uint64_t modulus = 0;

    friend bool operator==(const FpElement&, const FpElement&) = default;
};

FpElement fp_make(uint64_t value, uint64_t ell);
FpElement fp_add(FpElement a, FpElement b);
FpElement fp_sub(FpElement a, FpElement b);
FpElement fp_mul(FpElement a, FpElement b);
FpElement fp_inv(FpElement a);

bool is_ell_integral(const Rational& x, uint64_t ell);

// num * den^-1 mod ell; throws NotEllIntegral when ell divides den.
FpElement reduce_mod(const Rational& x, uint64_t ell);
uint64_t reduce_mod_value(const Rational& x, uint64_t ell);
uint64_t reduce_mod_value(const Integer& n, uint64_t ell);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// x(x-1)...(x-k+1)/k!
Rational gen_binomial(const Rational& x, unsigned k);

// Bernoulli number B_k for even k (B_0 = 1, B_2 = 1/6, B_4 = -1/30),
// by the defining recurrence, memoized.
Rational bernoulli(unsigned k);

// The unique r in {1..23} with r = -ell (mod 24); requires ell >= 5 prime.
unsigned r_ell(uint64_t ell);

}  // namespace sptcong
