#pragma once

#include "sptcong/modforms.hpp"
#include "sptcong/zagier.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sptcong {

// Pass/fail outcome of one claim, with parameters and a certificate summary.
// Failures always carry a concrete witness in the certificate.
struct Verdict {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    long precision_q = 0;  // q-terms through which the claim was certified
    std::string certificate;

    // one stable line: claim, key=value params, PASS/FAIL, certificate
    std::string to_line() const;
};

// 12 F_2 + f eta = E_2, exact equality through T q-terms.
Verdict verify_prop21_part1(long T);

// 12 F_{2n+2} + c(n) [f, eta]_n lies in the exact rational span of the
// M_{2n+2} monomials, residual zero through T q-terms.
Verdict verify_prop21_part2(unsigned n, long T);

// f_ell lies in the reduction of S_{ell+1}; for ell in {5,7,13} the space is
// zero and the claim degenerates to f_ell = 0.  tq <= 0 selects the policy
// default sturm(ell+1) + 50.
Verdict verify_theorem12(uint64_t ell, long tq = 0);

// c((ell-1)/2) [f,eta]_{(ell-1)/2} = (-24|ell) Theta^{(ell-1)/2} f * eta
// (mod ell) through T q-terms, plus membership of the reduction of
// f eta - c(...) [f,eta]_... in M_{ell+1}.
Verdict verify_section3(uint64_t ell, long T);

// s_ell = sum spt((ell n + 1)/24) X^n mod ell equals eta^{r_ell} times a
// member of M_{(ell - r_ell)/2 + 1}; for the weight <= 2 cases this asserts
// s_ell = 0 (the Andrews congruences).  tq <= 0 selects the policy default.
Verdict verify_theorem11(uint64_t ell, long tq = 0);

// Filtration properties (1)-(4) over random monomial combinations of
// weights <= 40.
Verdict verify_lemma22(uint64_t ell, int samples, uint64_t seed = 0x5eed5eedull);

// The contrapositive instance the scan relies on: f_ell != 0 through T
// implies a coefficient spt((ell n + 1)/24) != 0 (mod ell); for ell in
// {5,7,13} both f|U_ell and f_ell vanish through T.
Verdict check_prop51(uint64_t ell, long T);

struct VerifyDefaults {
    long prop21_1_terms = 300;
    long prop21_2_terms = 200;
    long section3_terms = 60;
    long prop51_terms = 60;
    int lemma22_samples = 200;
    long thm11_zero_space_terms = 200;
};

// Every claim at its default (or reduced, when quick) precision, ordered by
// claim identifier.
std::vector<Verdict> verify_all(bool quick);

}  // namespace sptcong
