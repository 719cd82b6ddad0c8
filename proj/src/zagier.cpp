#include "sptcong/zagier.hpp"

#include "sptcong/partitions.hpp"

namespace sptcong {

SeriesQ f_series(long xtrunc) {
    if (xtrunc < 24) throw PrecisionError("f_series: needs xtrunc >= 24");
    long kmax = xtrunc / 24;  // largest k with 24k - 1 < xtrunc
    if (24 * kmax - 1 >= xtrunc) --kmax;
    auto p = partition_table(kmax);
    auto s = spt_table(kmax);
    SeriesQ out(ExactRing{}, -1, xtrunc);
    out.at(-1) = Rational(1);
    for (long k = 1; k <= kmax; ++k) {
        long n = 24 * k - 1;
        out.at(n) = Rational(-(12 * s[k] + Integer(n) * p[k]));
    }
    return out;
}

static SeriesQ zagier_f_rs(unsigned k, long xtrunc) {
    SeriesQ out(ExactRing{}, 0, xtrunc);
    // - sum_{r>s>0} (12 | r^2 - s^2) s^{k-1} q^{rs/6}, X-exponent 4rs
    for (long r = 2; 4 * r < xtrunc; ++r) {
        for (long s = 1; s < r && 4 * r * s < xtrunc; ++s) {
            int sym = kronecker(12, r * r - s * s);
            if (sym == 0) continue;
            Integer t;
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(s), k - 1);
            if (sym > 0) t = -t;
            out.at(4 * r * s) += Rational(t);
        }
    }
    return out;
}

static SeriesQ zagier_f_nsum(unsigned k, long xtrunc) {
    SeriesQ out(ExactRing{}, 0, xtrunc);
    // n > 0: (-1)^n (-3|n-1) n^{k-1} q^{n(n+1)/6} / (1-q^n)
    for (long n = 1; 4 * n * (n + 1) < xtrunc; ++n) {
        int sym = kronecker(-3, n - 1);
        if (sym == 0) continue;
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(n), k - 1);
        if ((n % 2 != 0) != (sym < 0)) t = -t;  // (-1)^n * sym
        Rational c(t);
        for (long e = 4 * n * (n + 1); e < xtrunc; e += 24 * n) out.at(e) += c;
    }
    // n = -v < 0 folds to (-1)^v (-3|-v-1) v^{k-1} sum_{m>=1} q^{v(v-1)/6 + vm}
    for (long v = 1; 4 * v * (v - 1) + 24 * v < xtrunc; ++v) {
        int sym = kronecker(-3, -v - 1);
        if (sym == 0) continue;
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(v), k - 1);
        if ((v % 2 != 0) != (sym < 0)) t = -t;  // (-1)^v * sym
        Rational c(t);
        for (long e = 4 * v * (v - 1) + 24 * v; e < xtrunc; e += 24 * v) out.at(e) += c;
    }
    return out;
}

SeriesQ zagier_f(unsigned k, long xtrunc, FForm form) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("zagier_f: k must be even >= 2");
    return form == FForm::rs_sum ? zagier_f_rs(k, xtrunc) : zagier_f_nsum(k, xtrunc);
}

Rational c_coefficient(unsigned n) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 24, n);
    return make_rational(p, binomial(2 * n, n));
}

SeriesFp f_ell_series(uint64_t ell, long xtrunc, FellMode mode) {
    ModRing ring(ell);
    long margin = 26;
    if (mode == FellMode::definition) {
        SeriesQ f = f_series(xtrunc + margin);
        SeriesQ t = f;
        for (uint64_t i = 0; i < (ell - 1) / 2; ++i) t = theta(t);
        long chi = kronecker(-24, static_cast<int64_t>(ell));
        SeriesQ inner = sub(f, scale(chi, t));
        SeriesQ v = mul(eta_series(ExactRing{}, xtrunc + margin), inner);
        return truncated(reduce_series(v, ell), xtrunc);
    }
    // congruence mode: eta * sum a(n)(1 - (-n|ell)) X^n in F_ell directly;
    // the n = -1 term carries the factor 1 - (1|ell) = 0.
    long t_inner = xtrunc + margin;
    long kmax = t_inner / 24;
    if (24 * kmax - 1 >= t_inner) --kmax;
    auto p = partition_table(kmax);
    auto s = spt_table(kmax);
    SeriesFp inner(ring, -1, t_inner);
    for (long k = 1; k <= kmax; ++k) {
        long n = 24 * k - 1;
        uint64_t factor = ring.from_long(1 - kronecker(-n, static_cast<int64_t>(ell)));
        if (factor == 0) continue;
        Integer a = -(12 * s[k] + Integer(n) * p[k]);
        inner.at(n) = ring.mul(ring.from_integer(a), factor);
    }
    SeriesFp v = mul(eta_series(ring, t_inner), inner);
    return truncated(v, xtrunc);
}

SeriesFp f_ell_series(uint64_t ell, long xtrunc) {
    return f_ell_series(ell, xtrunc, ell <= 13 ? FellMode::definition : FellMode::congruence);
}

SeriesFp g_ell_series(uint64_t ell, long xtrunc) {
    unsigned e = static_cast<unsigned>((ell * ell - 1) / 24);
    long need = xtrunc + static_cast<long>(24 * e);
    SeriesFp fell = f_ell_series(ell, xtrunc);
    ModRing ring(ell);
    SeriesFp dpow = power(delta_series(ring, need), e);  // valuation 24e
    return truncated(mul(fell, dpow), xtrunc);
}

}  // namespace sptcong
