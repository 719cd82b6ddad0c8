#include "sptcong/modforms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace sptcong {

int space_dim(int k) {
    if (k < 0 || k % 2 != 0 || k == 2) return 0;
    return k / 12 + (k % 12 == 2 ? 0 : 1);
}

int cusp_dim(int k) {
    return space_dim(k - 12);  // Delta * M_{k-12}
}

long sturm_bound(int k) {
    return k < 0 ? 0 : k / 12;
}

long policy_precision(int k) {
    return sturm_bound(k) + kSturmMargin;
}

namespace {

// Dense q-grid polynomial arithmetic mod ell, length = tq coefficients.
using QVec = std::vector<uint64_t>;

QVec qmul(const QVec& a, const QVec& b, uint64_t ell) {
    size_t tq = a.size();
    QVec out(tq, 0);
    for (size_t i = 0; i < tq; ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j + i < tq; ++j) {
            if (!b[j]) continue;
            out[i + j] = (out[i + j] + mulmod(a[i], b[j], ell)) % ell;
        }
    }
    return out;
}

QVec qpow(QVec base, unsigned e, uint64_t ell, size_t tq) {
    QVec acc(tq, 0);
    acc[0] = 1;
    while (e) {
        if (e & 1) acc = qmul(acc, base, ell);
        e >>= 1;
        if (e) base = qmul(base, base, ell);
    }
    return acc;
}

uint64_t sigma_mod(long n, unsigned k1, uint64_t ell) {
    uint64_t s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s = (s + powmod(static_cast<uint64_t>(d), k1, ell)) % ell;
        long dd = n / d;
        if (dd != d) s = (s + powmod(static_cast<uint64_t>(dd), k1, ell)) % ell;
    }
    return s;
}

QVec eisenstein_q(unsigned k, uint64_t ell, long tq) {
    // normalizing factor -2k/B_k is an ell-integral rational for the k used here
    uint64_t factor = reduce_mod_value(Rational(-2L * k) / bernoulli(k), ell);
    QVec v(static_cast<size_t>(tq), 0);
    v[0] = 1;
    for (long n = 1; n < tq; ++n) v[n] = mulmod(factor, sigma_mod(n, k - 1, ell), ell);
    return v;
}

QVec delta_q(uint64_t ell, long tq) {
    // q prod (1-q^n)^24; built directly on the q-grid
    QVec euler(static_cast<size_t>(tq), 0);
    euler[0] = 1;
    for (long n = 1; n < tq; ++n) {
        // multiply by (1 - q^n) in place, descending
        for (long i = tq - 1; i >= n; --i)
            euler[i] = (euler[i] + ell - euler[i - n] % ell) % ell;
    }
    QVec pow24 = qpow(euler, 24, ell, static_cast<size_t>(tq));
    QVec out(static_cast<size_t>(tq), 0);
    for (long i = tq - 1; i >= 1; --i) out[i] = pow24[i - 1];
    return out;
}

// Monomials E4^a E6^b with 4a + 6b = k, descending a (ascending b).
std::vector<std::pair<int, int>> monomial_exponents(int k) {
    std::vector<std::pair<int, int>> out;
    for (int b = 0; 6 * b <= k; ++b) {
        int rem = k - 6 * b;
        if (rem % 4 == 0) out.emplace_back(rem / 4, b);
    }
    return out;
}

void echelonize(std::vector<QVec>& rows, std::vector<long>& pivots, uint64_t ell) {
    pivots.clear();
    size_t rank = 0;
    size_t tq = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < tq && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        uint64_t inv = invmod(rows[rank][col], ell);
        for (size_t j = col; j < tq; ++j) rows[rank][j] = mulmod(rows[rank][j], inv, ell);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            uint64_t f = rows[r][col];
            for (size_t j = col; j < tq; ++j)
                rows[r][j] = (rows[r][j] + ell - mulmod(f, rows[rank][j], ell)) % ell;
        }
        pivots.push_back(static_cast<long>(col));
        ++rank;
    }
    rows.resize(rank);
}

SpaceBasis build_basis(int k, uint64_t ell, long tq, bool cusp) {
    if (ell < 5 || !is_prime(ell))
        throw std::invalid_argument("basis: modulus must be a prime >= 5");
    if (tq < policy_precision(k))
        throw PrecisionError("basis: precision below sturm(k) + margin policy");
    SpaceBasis B;
    B.weight = k;
    B.ell = ell;
    B.tq = tq;
    B.cusp = cusp;
    int monomial_weight = cusp ? k - 12 : k;
    if (space_dim(monomial_weight) == 0) return B;  // empty space
    QVec e4 = eisenstein_q(4, ell, tq);
    QVec e6 = eisenstein_q(6, ell, tq);
    std::vector<QVec> rows;
    for (auto [a, b] : monomial_exponents(monomial_weight)) {
        QVec m = qmul(qpow(e4, a, ell, tq), qpow(e6, b, ell, tq), ell);
        if (cusp) m = qmul(m, delta_q(ell, tq), ell);
        rows.push_back(std::move(m));
    }
    echelonize(rows, B.pivots, ell);
    if (static_cast<int>(rows.size()) != (cusp ? cusp_dim(k) : space_dim(k)))
        throw std::logic_error("basis: echelon rank does not match the dimension formula");
    B.rows = std::move(rows);
    return B;
}

}  // namespace

SpaceBasis basis(int k, uint64_t ell, long tq) {
    return build_basis(k, ell, tq, false);
}

SpaceBasis cusp_basis(int k, uint64_t ell, long tq) {
    return build_basis(k, ell, tq, true);
}

std::shared_ptr<const SpaceBasis> basis_cached(int k, uint64_t ell, long tq, bool cusp) {
    using Key = std::tuple<int, uint64_t, long, bool>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const SpaceBasis>> cache;
    Key key{k, ell, tq, cusp};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ptr = std::make_shared<const SpaceBasis>(build_basis(k, ell, tq, cusp));
    cache.emplace(key, ptr);
    return ptr;
}

MembershipResult membership(const SeriesFp& g, const SpaceBasis& B) {
    if (g.ring().modulus() != B.ell) throw RingMismatch("membership: modulus mismatch");
    if (!g.integer_q_supported())
        throw std::invalid_argument("membership: series not supported on integer q-powers");
    if (g.q_precision() < B.tq)
        throw PrecisionError("membership: series precision below basis precision");
    QVec residual(static_cast<size_t>(B.tq));
    for (long t = 0; t < B.tq; ++t) residual[t] = g.q_coeff(t);
    MembershipResult res;
    res.fit.verified_tq = B.tq;
    for (size_t i = 0; i < B.rows.size(); ++i) {
        uint64_t c = residual[static_cast<size_t>(B.pivots[i])];
        res.fit.combo.push_back(c);
        if (!c) continue;
        for (long t = B.pivots[i]; t < B.tq; ++t) {
            residual[t] = (residual[t] + B.ell - mulmod(c, B.rows[i][t], B.ell)) % B.ell;
        }
    }
    for (long t = 0; t < B.tq; ++t) {
        if (residual[t]) {
            res.member = false;
            res.witness_q = t;
            return res;
        }
    }
    res.member = true;
    return res;
}

Filtration filtration(const SeriesFp& g, int nominal_weight, uint64_t ell) {
    Filtration out;
    out.ell = ell;
    if (g.is_zero()) {
        out.status = FiltrationStatus::Zero;
        return out;
    }
    long step = static_cast<long>(ell) - 1;
    long tq = policy_precision(nominal_weight);
    if (g.q_precision() < tq)
        throw PrecisionError("filtration: series precision below policy for the nominal weight");
    // ladder of candidate weights = nominal (mod ell-1), ascending; empty
    // spaces (k' = 2, k' < 0) are automatic failures and are skipped
    long start = nominal_weight % step;
    for (long w = start; w <= nominal_weight; w += step) {
        if (space_dim(static_cast<int>(w)) == 0) continue;
        auto B = basis_cached(static_cast<int>(w), ell, tq, false);
        auto m = membership(g, *B);
        if (!m.member) continue;
        out.status = FiltrationStatus::Value;
        out.value = static_cast<int>(w);
        out.fit = m.fit;
        long below = w - step;
        if (below >= 0 && space_dim(static_cast<int>(below)) > 0) {
            out.below_space_empty = false;
            auto mb = membership(g, *basis_cached(static_cast<int>(below), ell, tq, false));
            out.below_witness_q = mb.member ? -1 : mb.witness_q;
        }
        return out;
    }
    out.status = FiltrationStatus::NotMember;
    return out;
}

std::vector<SeriesQ> mk_monomials(int k, long xtrunc) {
    std::vector<SeriesQ> out;
    if (space_dim(k) == 0) return out;
    ExactRing ring;
    SeriesQ e4 = eisenstein(ring, 4, xtrunc);
    SeriesQ e6 = eisenstein(ring, 6, xtrunc);
    for (auto [a, b] : monomial_exponents(k)) {
        SeriesQ m = constant_one(ring, xtrunc);
        if (a) m = truncated(power(e4, a), xtrunc);
        if (b) m = truncated(mul(m, power(e6, b)), xtrunc);
        out.push_back(std::move(m));
    }
    return out;
}

ExactFit fit_exact(const SeriesQ& target, const std::vector<SeriesQ>& monomials) {
    ExactFit res;
    long tq = target.q_precision();
    for (const auto& m : monomials) tq = std::min(tq, m.q_precision());
    size_t cols = monomials.size();
    // Gaussian elimination over Q on [A | b] restricted to pioneer rows
    std::vector<std::vector<Rational>> sys;  // each row: cols entries + rhs
    std::vector<size_t> pivot_col;
    for (long t = 0; t < tq && pivot_col.size() < cols; ++t) {
        std::vector<Rational> row;
        row.reserve(cols + 1);
        for (const auto& m : monomials) row.push_back(m.q_coeff(t));
        row.push_back(target.q_coeff(t));
        // eliminate known pivots
        for (size_t i = 0; i < sys.size(); ++i) {
            Rational f = row[pivot_col[i]];
            if (sgn(f) == 0) continue;
            for (size_t j = 0; j <= cols; ++j) row[j] -= f * sys[i][j];
        }
        size_t pc = 0;
        while (pc < cols && sgn(row[pc]) == 0) ++pc;
        if (pc == cols) continue;  // no new pivot from this coefficient
        Rational inv = Rational(1) / row[pc];
        for (size_t j = 0; j <= cols; ++j) row[j] *= inv;
        for (size_t i = 0; i < sys.size(); ++i) {
            Rational f = sys[i][pc];
            if (sgn(f) == 0) continue;
            for (size_t j = 0; j <= cols; ++j) sys[i][j] -= f * row[j];
        }
        sys.push_back(std::move(row));
        pivot_col.push_back(pc);
    }
    if (pivot_col.size() != cols)
        throw std::logic_error("fit_exact: monomials are not linearly independent");
    res.combo.assign(cols, Rational(0));
    for (size_t i = 0; i < sys.size(); ++i) res.combo[pivot_col[i]] = sys[i][cols];
    // verify the residual across the full certified range
    for (long t = 0; t < tq; ++t) {
        Rational r = target.q_coeff(t);
        for (size_t j = 0; j < cols; ++j) r -= res.combo[j] * monomials[j].q_coeff(t);
        if (sgn(r) != 0) {
            res.ok = false;
            res.witness_q = t;
            return res;
        }
    }
    res.ok = true;
    return res;
}

}  // namespace sptcong
