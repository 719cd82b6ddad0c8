#include "sptcong/verify.hpp"

#include "sptcong/partitions.hpp"

#include <random>
#include <sstream>

namespace sptcong {

std::string Verdict::to_line() const {
    std::ostringstream os;
    os << claim;
    for (const auto& [k, v] : params) os << ' ' << k << '=' << v;
    os << (pass ? " PASS" : " FAIL");
    if (!certificate.empty()) os << ' ' << certificate;
    return os.str();
}

namespace {

// first exponent below xtrunc carrying a nonzero coefficient, or -1
template <class R>
long nonzero_witness(const Series<R>& s, long xtrunc) {
    for (long e = s.lower(); e < std::min(s.trunc(), xtrunc); ++e) {
        if (!s.ring().is_zero(s.coeff(e))) return e;
    }
    return -1;
}

std::string combo_string(const std::vector<uint64_t>& combo) {
    std::string s = "[";
    for (size_t i = 0; i < combo.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(combo[i]);
    }
    return s + "]";
}

std::string combo_string(const std::vector<Rational>& combo) {
    std::string s = "[";
    for (size_t i = 0; i < combo.size(); ++i) {
        if (i) s += ',';
        s += combo[i].get_str();
    }
    return s + "]";
}

// sum spt((ell n + 1)/24) X^n reduced mod ell, built from the spt table;
// support is the progression n = r_ell (mod 24).
SeriesFp spt_progression_series(uint64_t ell, long xtrunc) {
    ModRing ring(ell);
    long r = static_cast<long>(r_ell(ell));
    long lell = static_cast<long>(ell);
    long max_arg = (lell * (xtrunc - 1) + 1) / 24;
    auto spt = spt_table(max_arg);
    SeriesFp s(ring, 0, xtrunc);
    for (long n = r; n < xtrunc; n += 24) {
        long arg = (lell * n + 1) / 24;
        s.at(n) = reduce_mod_value(spt[arg], ell);
    }
    return s;
}

bool andrews_prime(uint64_t ell) {
    return ell == 5 || ell == 7 || ell == 13;
}

}  // namespace

Verdict verify_prop21_part1(long T) {
    if (T < 2) throw std::invalid_argument("verify_prop21_part1: T too small");
    Verdict v;
    v.claim = "prop21-1";
    v.params = {{"T", std::to_string(T)}};
    v.precision_q = T;
    long xt = 24 * T + 2;
    ExactRing ring;
    SeriesQ lhs = add(scale(12L, zagier_f(2, xt)),
                      mul(f_series(xt + 1), eta_series(ring, xt + 1)));
    SeriesQ resid = sub(lhs, eisenstein(ring, 2, xt));
    long w = nonzero_witness(resid, 24 * T);
    v.pass = w < 0;
    v.certificate = v.pass ? "identity-zero-through-q" + std::to_string(T)
                           : "residual-at-X^" + std::to_string(w);
    return v;
}

Verdict verify_prop21_part2(unsigned n, long T) {
    if (n < 1) throw std::invalid_argument("verify_prop21_part2: n >= 1 required");
    Verdict v;
    v.claim = "prop21-2";
    v.params = {{"n", std::to_string(n)}, {"T", std::to_string(T)}};
    v.precision_q = T;
    long xt = 24 * T + 2;
    ExactRing ring;
    SeriesQ f = f_series(xt + 1);
    SeriesQ eta = eta_series(ring, xt + 1);
    BracketParams prm{n, rational_from_long(3, 2), rational_from_long(1, 2)};
    SeriesQ bracket = rankin_cohen(f, eta, prm);
    SeriesQ target = add(scale(12L, zagier_f(2 * n + 2, xt)),
                         scale(ring.from_rational(c_coefficient(n)), bracket));
    if (!target.integer_q_supported()) {
        v.pass = false;
        v.certificate = "fractional-exponent-support";
        return v;
    }
    auto monos = mk_monomials(static_cast<int>(2 * n + 2), xt);
    auto fit = fit_exact(target, monos);
    v.pass = fit.ok;
    v.certificate = fit.ok ? "fit-in-M" + std::to_string(2 * n + 2) + " combo=" + combo_string(fit.combo)
                           : "residual-at-q^" + std::to_string(fit.witness_q);
    return v;
}

Verdict verify_theorem12(uint64_t ell, long tq) {
    int k = static_cast<int>(ell) + 1;
    if (tq <= 0) tq = sturm_bound(k) + 50;
    Verdict v;
    v.claim = "thm12";
    v.params = {{"ell", std::to_string(ell)}, {"tq", std::to_string(tq)}};
    v.precision_q = tq;
    long xt = 24 * tq + 2;
    SeriesFp fell = f_ell_series(ell, xt);
    if (cusp_dim(k) == 0) {
        long w = nonzero_witness(fell, xt);
        v.pass = w < 0;
        v.certificate = v.pass ? "S" + std::to_string(k) + "-is-zero f_ell=0"
                               : "nonzero-at-X^" + std::to_string(w);
        return v;
    }
    if (!fell.integer_q_supported()) {
        v.pass = false;
        v.certificate = "fractional-exponent-support";
        return v;
    }
    auto B = basis_cached(k, ell, tq, true);
    auto m = membership(fell, *B);
    v.pass = m.member;
    v.certificate = m.member ? "member-of-S" + std::to_string(k) + " combo=" + combo_string(m.fit.combo)
                             : "mismatch-at-q^" + std::to_string(m.witness_q);
    return v;
}

Verdict verify_section3(uint64_t ell, long T) {
    Verdict v;
    v.claim = "sec3";
    v.params = {{"ell", std::to_string(ell)}, {"T", std::to_string(T)}};
    v.precision_q = T;
    int k = static_cast<int>(ell) + 1;
    if (T < policy_precision(k))
        throw PrecisionError("verify_section3: T below membership policy");
    unsigned m = static_cast<unsigned>((ell - 1) / 2);
    long xt = 24 * T + 2;
    ExactRing ring;
    SeriesQ f = f_series(xt + 1);
    SeriesQ eta = eta_series(ring, xt + 1);
    BracketParams prm{m, rational_from_long(3, 2), rational_from_long(1, 2)};
    SeriesQ braq = scale(ring.from_rational(c_coefficient(m)), rankin_cohen(f, eta, prm));
    SeriesFp lhs = reduce_series(braq, ell);
    SeriesQ tf = f;
    for (unsigned i = 0; i < m; ++i) tf = theta(tf);
    long chi = kronecker(-24, static_cast<int64_t>(ell));
    SeriesFp rhs = reduce_series(scale(chi, mul(tf, eta)), ell);
    long diff = first_difference(lhs, rhs, 24 * T);
    bool congruent = diff >= 24 * T;
    // membership half of the claim: the reduction of f*eta - c(...)[f,eta] lies in M_{ell+1}
    SeriesFp D = reduce_series(sub(mul(f, eta), braq), ell);
    bool member = false;
    std::string member_cert;
    if (!D.integer_q_supported()) {
        member_cert = "fractional-exponent-support";
    } else {
        auto mm = membership(D, *basis_cached(k, ell, policy_precision(k), false));
        member = mm.member;
        member_cert = member ? "f.eta-c.bracket-in-M" + std::to_string(k)
                             : "membership-mismatch-at-q^" + std::to_string(mm.witness_q);
    }
    v.pass = congruent && member;
    v.certificate = (congruent ? "bracket-congruence-through-q" + std::to_string(T)
                               : "bracket-mismatch-at-X^" + std::to_string(diff)) +
                    " " + member_cert;
    return v;
}

Verdict verify_theorem11(uint64_t ell, long tq) {
    unsigned r = r_ell(ell);
    int w = (static_cast<int>(ell) - static_cast<int>(r)) / 2 + 1;
    Verdict v;
    v.claim = "thm11";
    VerifyDefaults defaults;
    if (space_dim(w) == 0) {
        long T = tq > 0 ? tq : defaults.thm11_zero_space_terms;
        v.params = {{"ell", std::to_string(ell)}, {"tq", std::to_string(T)}};
        v.precision_q = T;
        SeriesFp s = spt_progression_series(ell, 24 * T);
        long witness = nonzero_witness(s, 24 * T);
        v.pass = witness < 0;
        v.certificate = v.pass
            ? "target-weight=" + std::to_string(w) + " space-zero spt((ell*n+1)/24)=0-mod-ell"
            : "nonzero-spt-at-X^" + std::to_string(witness);
        return v;
    }
    long T = tq > 0 ? tq : sturm_bound(w) + 50;
    v.params = {{"ell", std::to_string(ell)}, {"tq", std::to_string(T)}};
    v.precision_q = T;
    long xs = 24 * T + static_cast<long>(r) + 1;
    SeriesFp s = spt_progression_series(ell, xs);
    SeriesFp h = divide_by_eta_pow(s, r);
    if (!h.integer_q_supported()) {
        v.pass = false;
        v.certificate = "quotient-not-integer-q-supported";
        return v;
    }
    auto B = basis_cached(w, ell, T, false);
    auto m = membership(h, *B);
    v.pass = m.member;
    v.certificate = m.member
        ? "s_ell/eta^" + std::to_string(r) + "-in-M" + std::to_string(w) +
              " combo=" + combo_string(m.fit.combo)
        : "mismatch-at-q^" + std::to_string(m.witness_q);
    return v;
}

namespace {

struct Lemma22Violation {
    bool hit = false;
    std::string what;
};

void record(Lemma22Violation& viol, int weight, const std::string& what) {
    if (viol.hit) return;
    viol.hit = true;
    viol.what = "weight=" + std::to_string(weight) + " " + what;
}

}  // namespace

Verdict verify_lemma22(uint64_t ell, int samples, uint64_t seed) {
    Verdict v;
    v.claim = "lemma22";
    v.params = {{"ell", std::to_string(ell)}, {"samples", std::to_string(samples)}};
    const long Tq = 300;
    v.precision_q = Tq;
    long xt = 24 * Tq;
    ModRing ring(ell);
    long step = static_cast<long>(ell) - 1;

    std::vector<int> weights;
    for (int k = 0; k <= 40; k += 2)
        if (space_dim(k) > 0) weights.push_back(k);

    // monomial pool per weight, built on demand
    std::vector<std::vector<SeriesFp>> pool(weights.size());
    auto monomials_for = [&](size_t wi) -> const std::vector<SeriesFp>& {
        if (pool[wi].empty()) {
            for (const SeriesQ& m : mk_monomials(weights[wi], xt))
                pool[wi].push_back(reduce_series(m, ell));
        }
        return pool[wi];
    };

    std::mt19937_64 rng(seed ^ (ell * 0x9e3779b97f4a7c15ull));
    Lemma22Violation viol;
    int done = 0;
    while (done < samples && !viol.hit) {
        size_t wi = rng() % weights.size();
        int k = weights[wi];
        const auto& monos = monomials_for(wi);
        std::vector<uint64_t> coeffs(monos.size());
        bool any = false;
        for (auto& c : coeffs) {
            c = rng() % ell;
            any = any || c != 0;
        }
        if (!any) continue;
        SeriesFp g(ring, 0, xt);
        for (size_t i = 0; i < monos.size(); ++i) {
            if (coeffs[i]) g = add(g, scale(coeffs[i], monos[i]));
        }
        ++done;

        // (1) w(g) exists on the ladder and is congruent to k mod ell-1
        Filtration F = filtration(g, k, ell);
        if (F.status != FiltrationStatus::Value) {
            record(viol, k, "no-filtration-on-ladder");
            continue;
        }
        int w = F.value;
        if ((k - w) % step != 0) record(viol, k, "filtration-class-mismatch");
        if (!F.below_space_empty && F.below_witness_q < 0)
            record(viol, k, "below-weight-membership-should-fail");

        // (2) Theta g lies in M_{k+ell+1}
        SeriesFp tg = theta(g);
        int ktheta = k + static_cast<int>(ell) + 1;
        if (!tg.is_zero()) {
            auto m2 = membership(tg, *basis_cached(ktheta, ell, policy_precision(ktheta), false));
            if (!m2.member) record(viol, k, "theta-not-in-M_{k+ell+1}");
        }

        // (3) w(Theta g) <= w + ell + 1 with equality iff w != 0 mod ell
        bool expect_equality = (w % static_cast<long>(ell)) != 0;
        if (tg.is_zero()) {
            if (expect_equality) record(viol, k, "theta-zero-but-equality-expected");
        } else {
            Filtration Ft = filtration(tg, w + static_cast<int>(ell) + 1, ell);
            if (Ft.status != FiltrationStatus::Value) {
                record(viol, k, "theta-filtration-missing");
            } else {
                int wt = Ft.value;
                if (wt > w + static_cast<int>(ell) + 1) record(viol, k, "theta-filtration-bound");
                bool equal = wt == w + static_cast<int>(ell) + 1;
                if (equal != expect_equality) record(viol, k, "theta-filtration-equality-iff");
            }
        }

        // (4) w(g|U_ell) <= ell + (w(g) - 1)/ell
        SeriesFp h = u_ell(g, ell);
        if (!h.is_zero()) {
            long bound_num = static_cast<long>(ell) * static_cast<long>(ell) + w - 1;
            long ku = k % step;  // largest ladder value with ell*ku <= bound_num
            while ((ku + step) * static_cast<long>(ell) <= bound_num) ku += step;
            Filtration Fu = filtration(h, static_cast<int>(ku), ell);
            if (Fu.status != FiltrationStatus::Value) record(viol, k, "U-filtration-exceeds-bound");
        }
    }
    v.pass = !viol.hit;
    v.certificate = v.pass ? "samples=" + std::to_string(done) + " violations=0"
                           : "violation " + viol.what;
    return v;
}

Verdict check_prop51(uint64_t ell, long T) {
    Verdict v;
    v.claim = "prop51";
    v.params = {{"ell", std::to_string(ell)}, {"T", std::to_string(T)}};
    v.precision_q = T;
    long xt = 24 * T;
    SeriesFp fell = f_ell_series(ell, xt);
    SeriesQ f = f_series(xt * static_cast<long>(ell));
    SeriesFp fu = u_ell(reduce_series(f, ell), ell);
    bool fell_zero = nonzero_witness(fell, xt) < 0;
    long fu_witness = nonzero_witness(fu, xt);
    bool fu_zero = fu_witness < 0;
    if (andrews_prime(ell)) {
        v.pass = fell_zero && fu_zero;
        v.certificate = v.pass ? "f|U_ell=0 f_ell=0"
                               : (fell_zero ? "f|U_ell-nonzero-at-X^" + std::to_string(fu_witness)
                                            : "f_ell-nonzero");
        return v;
    }
    // contrapositive: f_ell != 0 must come with a nonzero spt coefficient
    v.pass = fell_zero || !fu_zero;
    if (!fu_zero) {
        long arg = (static_cast<long>(ell) * fu_witness + 1) / 24;
        v.certificate = "f_ell-nonzero witness-n=" + std::to_string(fu_witness) +
                        " spt(" + std::to_string(arg) + ")!=0-mod-" + std::to_string(ell);
    } else {
        v.certificate = fell_zero ? "f_ell=0-through-range" : "contrapositive-violated";
    }
    return v;
}

std::vector<Verdict> verify_all(bool quick) {
    VerifyDefaults d;
    if (quick) {
        d.prop21_1_terms = 60;
        d.prop21_2_terms = 60;
        d.section3_terms = 30;
        d.prop51_terms = 30;
        d.lemma22_samples = 25;
        d.thm11_zero_space_terms = 60;
    }
    std::vector<Verdict> out;
    for (uint64_t ell : {5, 7, 11, 13}) out.push_back(verify_lemma22(ell, d.lemma22_samples));
    out.push_back(verify_prop21_part1(d.prop21_1_terms));
    for (unsigned n = 1; n <= 4; ++n) out.push_back(verify_prop21_part2(n, d.prop21_2_terms));
    for (uint64_t ell : {5, 7, 11, 13}) out.push_back(check_prop51(ell, d.prop51_terms));
    for (uint64_t ell : {5, 7, 11, 13}) out.push_back(verify_section3(ell, d.section3_terms));
    for (uint64_t ell : {5, 7, 11, 13, 17, 19, 23}) {
        unsigned r = r_ell(ell);
        int w = (static_cast<int>(ell) - static_cast<int>(r)) / 2 + 1;
        long tq = 0;
        if (space_dim(w) == 0)
            tq = d.thm11_zero_space_terms;
        else if (quick)
            tq = policy_precision(w);
        out.push_back(verify_theorem11(ell, tq));
    }
    for (uint64_t ell : {5, 7, 11, 13, 17, 19, 23})
        out.push_back(verify_theorem12(ell, quick ? policy_precision(static_cast<int>(ell) + 1) : 0));
    return out;
}

}  // namespace sptcong
