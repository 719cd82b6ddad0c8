#include "sptcong/arith.hpp"

#include <bit>
#include <mutex>
#include <vector>

namespace sptcong {

Rational make_rational(Integer num, Integer den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

Rational rational_from_long(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    a %= m;
    if (a == 0) throw std::domain_error("invmod: zero has no inverse");
    return powmod(a, m - 2, m);  // m prime
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

int kronecker(int64_t a, int64_t b) {
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    int s = 1;
    if (b < 0) {
        if (a < 0) s = -s;
        b = -b;
    }
    if ((b & 1) == 0) {
        if ((a & 1) == 0) return 0;
        unsigned e = std::countr_zero(static_cast<uint64_t>(b));
        b >>= e;
        if (e & 1) {
            int64_t am8 = a % 8;
            if (am8 < 0) am8 += 8;
            if (am8 == 3 || am8 == 5) s = -s;
        }
    }
    // b odd positive from here; Jacobi symbol by binary reciprocity.
    int64_t am = a % b;
    if (am < 0) am += b;
    uint64_t ua = static_cast<uint64_t>(am);
    uint64_t ub = static_cast<uint64_t>(b);
    while (ua != 0) {
        unsigned t = std::countr_zero(ua);
        ua >>= t;
        if (t & 1) {
            uint64_t bm8 = ub & 7;
            if (bm8 == 3 || bm8 == 5) s = -s;
        }
        if ((ua & 3) == 3 && (ub & 3) == 3) s = -s;
        uint64_t r = ub % ua;
        ub = ua;
        ua = r;
    }
    return ub == 1 ? s : 0;
}

FpElement fp_make(uint64_t value, uint64_t ell) {
    if (ell < 5 || !is_prime(ell))
        throw std::invalid_argument("FpElement: modulus must be a prime >= 5");
    return FpElement{value % ell, ell};
}

static void fp_check(FpElement a, FpElement b) {
    if (a.modulus != b.modulus) throw RingMismatch("FpElement: mixed moduli");
}

FpElement fp_add(FpElement a, FpElement b) {
    fp_check(a, b);
    uint64_t v = a.value + b.value;
    if (v >= a.modulus) v -= a.modulus;
    return FpElement{v, a.modulus};
}

FpElement fp_sub(FpElement a, FpElement b) {
    fp_check(a, b);
    uint64_t v = a.value >= b.value ? a.value - b.value : a.value + a.modulus - b.value;
    return FpElement{v, a.modulus};
}

FpElement fp_mul(FpElement a, FpElement b) {
    fp_check(a, b);
    return FpElement{mulmod(a.value, b.value, a.modulus), a.modulus};
}

FpElement fp_inv(FpElement a) {
    return FpElement{invmod(a.value, a.modulus), a.modulus};
}

uint64_t reduce_mod_value(const Integer& n, uint64_t ell) {
    return mpz_fdiv_ui(n.get_mpz_t(), ell);
}

bool is_ell_integral(const Rational& x, uint64_t ell) {
    return mpz_fdiv_ui(x.get_den().get_mpz_t(), ell) != 0;
}

FpElement reduce_mod(const Rational& x, uint64_t ell) {
    uint64_t den = mpz_fdiv_ui(x.get_den().get_mpz_t(), ell);
    if (den == 0)
        throw NotEllIntegral("reduce_mod: denominator divisible by " + std::to_string(ell));
    uint64_t num = mpz_fdiv_ui(x.get_num().get_mpz_t(), ell);
    return FpElement{mulmod(num, invmod(den, ell), ell), ell};
}

uint64_t reduce_mod_value(const Rational& x, uint64_t ell) {
    return reduce_mod(x, ell).value;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational gen_binomial(const Rational& x, unsigned k) {
    Rational num(1);
    for (unsigned i = 0; i < k; ++i) num *= x - Rational(i);
    return num / Rational(factorial(k));
}

Rational bernoulli(unsigned k) {
    if (k & 1) throw std::invalid_argument("bernoulli: odd index");
    static std::mutex mu;
    static std::vector<Rational> table;  // B_0, B_1, ...
    std::lock_guard<std::mutex> lock(mu);
    if (table.empty()) table.emplace_back(1);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m in terms of earlier values
    while (table.size() <= k) {
        unsigned m = static_cast<unsigned>(table.size());
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[j];
        table.push_back(-acc / Rational(m + 1));
    }
    return table[k];
}

unsigned r_ell(uint64_t ell) {
    if (ell < 5 || !is_prime(ell))
        throw std::invalid_argument("r_ell: requires a prime >= 5");
    return static_cast<unsigned>((24 - ell % 24) % 24);
}

}  // namespace sptcong
