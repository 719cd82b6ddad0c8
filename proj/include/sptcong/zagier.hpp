#pragma once

#include "sptcong/qseries.hpp"

namespace sptcong {

// f(z) = sum a(n) q^{n/24}: coefficient 1 at X^{-1} and
// -(12 spt(k) + (24k-1) p(k)) at X^{24k-1}; zero elsewhere.
SeriesQ f_series(long xtrunc);

enum class FForm { rs_sum, n_sum };

// Zagier's F_k for even k >= 2, either as the finite double sum over
// r > s > 0 (default) or as the two-sided n-sum with the negative-n
// geometric tails folded to nonnegative exponents.
SeriesQ zagier_f(unsigned k, long xtrunc, FForm form = FForm::rs_sum);

struct BracketParams {
    unsigned n = 0;
    Rational weight1;  // weight of the first argument
    Rational weight2;  // weight of the second argument
};

// [g,h]_n = sum_{r=0..n} (-1)^r C(n+k1-1, n-r) C(n+k2-1, r) Theta^r g Theta^{n-r} h
template <class R>
Series<R> rankin_cohen(const Series<R>& g, const Series<R>& h, const BracketParams& prm) {
    require_same_ring(g.ring(), h.ring());
    const R& ring = g.ring();
    std::vector<Series<R>> tg{g}, th{h};
    for (unsigned r = 1; r <= prm.n; ++r) {
        tg.push_back(theta(tg.back()));
        th.push_back(theta(th.back()));
    }
    Rational top1 = prm.weight1 + Rational(static_cast<long>(prm.n)) - 1;
    Rational top2 = prm.weight2 + Rational(static_cast<long>(prm.n)) - 1;
    bool have = false;
    Series<R> acc(ring, 0, 1);
    for (unsigned r = 0; r <= prm.n; ++r) {
        Rational c = gen_binomial(top1, prm.n - r) * gen_binomial(top2, r);
        if (r % 2 == 1) c = -c;
        Series<R> term = scale(ring.from_rational(c), mul(tg[r], th[prm.n - r]));
        acc = have ? add(acc, term) : term;
        have = true;
    }
    return acc;
}

// c(n) = 24^n / C(2n, n)
Rational c_coefficient(unsigned n);

enum class FellMode { definition, congruence };

// f_ell = eta (f - (-24|ell) Theta^{(ell-1)/2} f) mod ell.  Definition mode
// evaluates the Theta power in exact rationals before reducing; congruence
// mode builds eta * sum a(n) (1 - (-n|ell)) X^n directly in F_ell.
SeriesFp f_ell_series(uint64_t ell, long xtrunc, FellMode mode);
SeriesFp f_ell_series(uint64_t ell, long xtrunc);  // definition for ell <= 13, else congruence

// g_ell = f_ell * Delta^{(ell^2-1)/24} mod ell.
SeriesFp g_ell_series(uint64_t ell, long xtrunc);

}  // namespace sptcong
