#pragma once

#include "sptcong/arith.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace sptcong {

// Coefficient rings for truncated Laurent series in X = q^{1/24}.
// A q-exponent m sits at X-exponent 24m.

struct ExactRing {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& x) const { return sgn(x) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    void add_assign(Elem& a, const Elem& b) const { a += b; }
    void addmul(Elem& acc, const Elem& a, const Elem& b) const { acc += a * b; }
    Elem from_long(long v) const { return Rational(v); }
    Elem from_integer(const Integer& v) const { return Rational(v); }
    Elem from_rational(const Rational& v) const { return v; }
    // multiplier applied to the X^n coefficient by the theta operator
    Elem theta_factor(long n) const { return rational_from_long(n, 24); }
    std::string to_string(const Elem& x) const { return x.get_str(); }
    friend bool operator==(const ExactRing&, const ExactRing&) { return true; }
};

struct ModRing {
    using Elem = uint64_t;

    explicit ModRing(uint64_t ell) : ell_(ell) {
        if (ell < 5 || !is_prime(ell))
            throw std::invalid_argument("ModRing: modulus must be a prime >= 5");
        inv24_ = invmod(24 % ell, ell);
    }

    uint64_t modulus() const { return ell_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem x) const { return x == 0; }
    Elem add(Elem a, Elem b) const {
        Elem v = a + b;
        return v >= ell_ ? v - ell_ : v;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + ell_ - b; }
    Elem mul(Elem a, Elem b) const { return mulmod(a, b, ell_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : ell_ - a; }
    void add_assign(Elem& a, Elem b) const { a = add(a, b); }
    void addmul(Elem& acc, Elem a, Elem b) const { acc = add(acc, mul(a, b)); }
    Elem from_long(long v) const {
        long r = v % static_cast<long>(ell_);
        if (r < 0) r += static_cast<long>(ell_);
        return static_cast<Elem>(r);
    }
    Elem from_integer(const Integer& v) const { return reduce_mod_value(v, ell_); }
    Elem from_rational(const Rational& v) const { return reduce_mod_value(v, ell_); }
    Elem inv(Elem a) const { return invmod(a, ell_); }
    Elem theta_factor(long n) const { return mul(from_long(n), inv24_); }
    std::string to_string(Elem x) const { return std::to_string(x); }
    friend bool operator==(const ModRing& a, const ModRing& b) { return a.ell_ == b.ell_; }

  private:
    uint64_t ell_;
    uint64_t inv24_;
};

template <class RA, class RB>
void require_same_ring(const RA& a, const RB& b) {
    if (!(a == b)) throw RingMismatch("q-series operation over mismatched rings");
}

// Truncated Laurent series: dense coefficients on X-exponents [lower, trunc).
// Coefficients below lower are exactly zero; at or above trunc they are
// unknown, and asking for one is an error rather than a zero.  Leading stored
// coefficients may be zero (no renormalization).
template <class Ring>
class Series {
  public:
    using Elem = typename Ring::Elem;

    Series(Ring ring, long lower, long trunc)
        : ring_(std::move(ring)), lower_(lower), trunc_(trunc) {
        if (trunc_ <= lower_) throw PrecisionError("Series: trunc must exceed lower");
        coeff_.assign(static_cast<size_t>(trunc_ - lower_), ring_.zero());
    }

    const Ring& ring() const { return ring_; }
    long lower() const { return lower_; }
    long trunc() const { return trunc_; }

    Elem coeff(long e) const {
        if (e >= trunc_)
            throw PrecisionError("Series::coeff: exponent " + std::to_string(e) +
                                 " at or beyond trunc " + std::to_string(trunc_));
        if (e < lower_) return ring_.zero();
        return coeff_[static_cast<size_t>(e - lower_)];
    }

    // coefficient of q^m (X-exponent 24m)
    Elem q_coeff(long m) const { return coeff(24 * m); }
    // number of certified integer-q coefficients (indices 0..q_precision()-1)
    long q_precision() const { return trunc_ >= 0 ? (trunc_ + 23) / 24 : 0; }

    Elem& at(long e) {
        if (e < lower_ || e >= trunc_) throw PrecisionError("Series::at: exponent out of range");
        return coeff_[static_cast<size_t>(e - lower_)];
    }
    void set(long e, Elem v) { at(e) = std::move(v); }

    const std::vector<Elem>& data() const { return coeff_; }

    bool is_zero() const {
        for (const Elem& c : coeff_)
            if (!ring_.is_zero(c)) return false;
        return true;
    }

    // least exponent with a nonzero stored coefficient, or trunc if none
    long first_nonzero() const {
        for (long e = lower_; e < trunc_; ++e)
            if (!ring_.is_zero(coeff_[static_cast<size_t>(e - lower_)])) return e;
        return trunc_;
    }

    // nonzero exponents all divisible by 24 (integer q-powers)
    bool integer_q_supported() const {
        for (long e = lower_; e < trunc_; ++e) {
            if (((e % 24) + 24) % 24 != 0 && !ring_.is_zero(coeff_[static_cast<size_t>(e - lower_)]))
                return false;
        }
        return true;
    }

  private:
    Ring ring_;
    long lower_;
    long trunc_;
    std::vector<Elem> coeff_;
};

using SeriesQ = Series<ExactRing>;
using SeriesFp = Series<ModRing>;

template <class R>
Series<R> add(const Series<R>& a, const Series<R>& b) {
    require_same_ring(a.ring(), b.ring());
    long lo = std::min(a.lower(), b.lower());
    long tr = std::min(a.trunc(), b.trunc());
    Series<R> out(a.ring(), lo, tr);
    for (long e = std::max(lo, a.lower()); e < std::min(tr, a.trunc()); ++e)
        out.at(e) = a.coeff(e);
    for (long e = std::max(lo, b.lower()); e < std::min(tr, b.trunc()); ++e)
        out.ring().add_assign(out.at(e), b.coeff(e));
    return out;
}

template <class R>
Series<R> negate(const Series<R>& a) {
    Series<R> out(a.ring(), a.lower(), a.trunc());
    for (long e = a.lower(); e < a.trunc(); ++e) out.at(e) = a.ring().neg(a.coeff(e));
    return out;
}

template <class R>
Series<R> sub(const Series<R>& a, const Series<R>& b) {
    return add(a, negate(b));
}

template <class R>
Series<R> scale(const typename R::Elem& c, const Series<R>& a) {
    Series<R> out(a.ring(), a.lower(), a.trunc());
    if (a.ring().is_zero(c)) return out;
    for (long e = a.lower(); e < a.trunc(); ++e) out.at(e) = a.ring().mul(c, a.coeff(e));
    return out;
}

template <class R>
Series<R> scale(long c, const Series<R>& a) {
    return scale(a.ring().from_long(c), a);
}

// Cauchy product.  The result is certified on [la+lb, min(Ta+lb, Tb+la)):
// valuation shifts extend what the operand truncations can support.
template <class R>
Series<R> mul(const Series<R>& a, const Series<R>& b) {
    require_same_ring(a.ring(), b.ring());
    const R& ring = a.ring();
    long lo = a.lower() + b.lower();
    long tr = std::min(a.trunc() + b.lower(), b.trunc() + a.lower());
    Series<R> out(ring, lo, tr);
    for (long i = a.lower(); i < a.trunc(); ++i) {
        const auto& ai = a.data()[static_cast<size_t>(i - a.lower())];
        if (ring.is_zero(ai)) continue;
        long jmax = std::min(b.trunc(), tr - i);
        for (long j = b.lower(); j < jmax; ++j) {
            const auto& bj = b.data()[static_cast<size_t>(j - b.lower())];
            if (ring.is_zero(bj)) continue;
            ring.addmul(out.at(i + j), ai, bj);
        }
    }
    return out;
}

template <class R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) { return add(a, b); }
template <class R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) { return sub(a, b); }
template <class R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) { return mul(a, b); }
template <class R>
Series<R> operator-(const Series<R>& a) { return negate(a); }

// Theta = q d/dq: multiplies the X^n coefficient by n/24.
template <class R>
Series<R> theta(const Series<R>& a) {
    Series<R> out(a.ring(), a.lower(), a.trunc());
    for (long e = a.lower(); e < a.trunc(); ++e) {
        const auto& c = a.data()[static_cast<size_t>(e - a.lower())];
        if (a.ring().is_zero(c)) continue;
        out.at(e) = a.ring().mul(c, a.ring().theta_factor(e));
    }
    return out;
}

// U_ell: X^n coefficient of the result is the X^{ell*n} coefficient of a.
template <class R>
Series<R> u_ell(const Series<R>& a, uint64_t ell) {
    long l = static_cast<long>(ell);
    auto floor_div = [](long x, long d) { return x >= 0 ? x / d : -((-x + d - 1) / d); };
    long lo = -floor_div(-a.lower(), l);  // ceil(lower/ell)
    long tr = floor_div(a.trunc(), l);
    if (tr <= lo)
        throw PrecisionError("u_ell: input truncation too small to certify any coefficient");
    Series<R> out(a.ring(), lo, tr);
    for (long e = lo; e < tr; ++e) out.at(e) = a.coeff(e * l);
    return out;
}

template <class R>
Series<R> shifted(const Series<R>& a, long delta) {
    Series<R> out(a.ring(), a.lower() + delta, a.trunc() + delta);
    for (long e = a.lower(); e < a.trunc(); ++e) out.at(e + delta) = a.coeff(e);
    return out;
}

template <class R>
Series<R> truncated(const Series<R>& a, long new_trunc) {
    if (new_trunc > a.trunc()) throw PrecisionError("truncated: cannot extend precision");
    if (new_trunc <= a.lower())
        throw PrecisionError("truncated: truncation at or below lower exponent");
    Series<R> out(a.ring(), a.lower(), new_trunc);
    for (long e = a.lower(); e < new_trunc; ++e) out.at(e) = a.coeff(e);
    return out;
}

template <class R>
Series<R> constant_one(const R& ring, long trunc) {
    Series<R> out(ring, 0, trunc);
    out.at(0) = ring.one();
    return out;
}

template <class R>
Series<R> x_power(const R& ring, long e, long trunc) {
    Series<R> out(ring, e, trunc);
    out.at(e) = ring.one();
    return out;
}

template <class R>
Series<R> power(const Series<R>& a, unsigned n) {
    if (n == 0) return constant_one(a.ring(), a.trunc());
    Series<R> acc = a;
    bool have = false;
    Series<R> sq = a;
    unsigned e = n;
    while (true) {
        if (e & 1) {
            acc = have ? mul(acc, sq) : sq;
            have = true;
        }
        e >>= 1;
        if (!e) break;
        sq = mul(sq, sq);
    }
    return acc;
}

// Inverse of a unit power series with constant term exactly 1, by the usual
// coefficient recurrence; certified on [0, a.trunc()).
template <class R>
Series<R> inverse_unit(const Series<R>& a) {
    const R& ring = a.ring();
    if (a.lower() != 0 || !(a.coeff(0) == ring.one()))
        throw std::domain_error("inverse_unit: requires constant term 1 at X^0");
    long tr = a.trunc();
    std::vector<long> support;  // nonzero exponents of a above 0
    for (long j = 1; j < tr; ++j)
        if (!ring.is_zero(a.coeff(j))) support.push_back(j);
    Series<R> out(ring, 0, tr);
    out.at(0) = ring.one();
    for (long n = 1; n < tr; ++n) {
        auto acc = ring.zero();
        for (long j : support) {
            if (j > n) break;
            ring.addmul(acc, a.coeff(j), out.coeff(n - j));
        }
        out.at(n) = ring.neg(acc);
    }
    return out;
}

// Dedekind eta by the pentagonal number theorem: exponents 24*g_k + 1 with
// g_k = k(3k-1)/2, sign (-1)^k.
template <class R>
Series<R> eta_series(const R& ring, long xtrunc) {
    Series<R> out(ring, 1, xtrunc);
    for (long k = 0;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        long e1 = 24 * g1 + 1, e2 = 24 * g2 + 1;
        if (e1 >= xtrunc && e2 >= xtrunc) break;
        auto s = ring.from_long(k % 2 == 0 ? 1 : -1);
        if (e1 < xtrunc) out.at(e1) = s;
        if (k > 0 && e2 < xtrunc) out.at(e2) = s;
    }
    return out;
}

template <class R>
Series<R> eta_pow(const R& ring, unsigned r, long xtrunc) {
    if (r == 0) return constant_one(ring, xtrunc);
    if (xtrunc <= static_cast<long>(r))
        throw PrecisionError("eta_pow: truncation at or below the X^r valuation");
    return truncated(power(eta_series(ring, xtrunc), r), xtrunc);
}

template <class R>
Series<R> delta_series(const R& ring, long xtrunc) {
    return eta_pow(ring, 24, xtrunc);
}

// Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, on the
// X-grid (support at multiples of 24).
template <class R>
Series<R> eisenstein(const R& ring, unsigned k, long xtrunc) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("eisenstein: k must be even >= 2");
    Series<R> out(ring, 0, xtrunc);
    out.at(0) = ring.one();
    Rational factor = Rational(-2L * k) / bernoulli(k);
    long qmax = (xtrunc - 1) / 24;
    for (long n = 1; n <= qmax; ++n) {
        Integer sigma(0);
        for (long d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            Integer t;
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), k - 1);
            sigma += t;
            long dd = n / d;
            if (dd != d) {
                mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(dd), k - 1);
                sigma += t;
            }
        }
        out.at(24 * n) = ring.from_rational(factor * Rational(sigma));
    }
    return out;
}

// Exact quotient g / eta^r.  Requires every nonzero coefficient of g to sit
// at X^r or above; certified on [0, g.trunc() - r).
template <class R>
Series<R> divide_by_eta_pow(const Series<R>& g, unsigned r) {
    long lr = static_cast<long>(r);
    for (long e = g.lower(); e < std::min(g.trunc(), lr); ++e) {
        if (!g.ring().is_zero(g.coeff(e)))
            throw std::domain_error("divide_by_eta_pow: nonzero coefficient below X^r at X^" +
                                    std::to_string(e));
    }
    long tr = g.trunc() - lr;
    if (tr <= 0) throw PrecisionError("divide_by_eta_pow: no precision left after valuation shift");
    // g = X^r * h * u with u the unit part of eta^r
    Series<R> unit = shifted(eta_pow(g.ring(), r, g.trunc()), -lr);  // [0, trunc-r)
    Series<R> top(g.ring(), 0, tr);
    for (long e = std::max(g.lower(), lr); e < g.trunc(); ++e) top.at(e - lr) = g.coeff(e);
    return mul(top, inverse_unit(unit));
}

// Coefficientwise reduction into F_ell; throws NotEllIntegral if any
// coefficient has denominator divisible by ell.
SeriesFp reduce_series(const SeriesQ& a, uint64_t ell);

// True when a and b agree on every exponent below xtrunc (both must certify
// that range; coefficients below a lower bound count as zero).
template <class R>
bool equal_through(const Series<R>& a, const Series<R>& b, long xtrunc) {
    require_same_ring(a.ring(), b.ring());
    if (a.trunc() < xtrunc || b.trunc() < xtrunc)
        throw PrecisionError("equal_through: operands do not certify the requested range");
    for (long e = std::min(a.lower(), b.lower()); e < xtrunc; ++e) {
        if (!(a.coeff(e) == b.coeff(e))) return false;
    }
    return true;
}

// First exponent below xtrunc where a and b differ, or xtrunc if none.
template <class R>
long first_difference(const Series<R>& a, const Series<R>& b, long xtrunc) {
    require_same_ring(a.ring(), b.ring());
    if (a.trunc() < xtrunc || b.trunc() < xtrunc)
        throw PrecisionError("first_difference: operands do not certify the requested range");
    for (long e = std::min(a.lower(), b.lower()); e < xtrunc; ++e) {
        if (!(a.coeff(e) == b.coeff(e))) return e;
    }
    return xtrunc;
}

// "exponent coefficient" lines, nonzero coefficients, ascending exponents.
template <class R>
void dump_series(std::ostream& os, const Series<R>& a) {
    for (long e = a.lower(); e < a.trunc(); ++e) {
        const auto& c = a.data()[static_cast<size_t>(e - a.lower())];
        if (a.ring().is_zero(c)) continue;
        os << e << ' ' << a.ring().to_string(c) << '\n';
    }
}

}  // namespace sptcong
