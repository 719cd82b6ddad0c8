#pragma once

#include "sptcong/qseries.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace sptcong {

// Level-one dimension counts: dim M_k (0 for k < 0, odd k, and k = 2).
int space_dim(int k);
int cusp_dim(int k);

// Classical level-one Sturm index floor(k/12); the artifact's policy is
// that membership claims carry verified precision >= sturm(k) + kSturmMargin.
long sturm_bound(int k);
inline constexpr long kSturmMargin = 20;
long policy_precision(int k);  // sturm_bound(k) + kSturmMargin

// Echelonized mod-ell q-expansion basis of M_k (or S_k), built from the
// monomials E4^a E6^b with 4a + 6b = k (cusp variant: Delta times weight
// k-12 monomials).  rows[i][t] is the q^t coefficient; pivots strictly
// increase.
struct SpaceBasis {
    int weight = 0;
    uint64_t ell = 0;
    long tq = 0;  // q-coefficients 0..tq-1 are stored
    bool cusp = false;
    std::vector<std::vector<uint64_t>> rows;
    std::vector<long> pivots;

    int dim() const { return static_cast<int>(rows.size()); }
};

SpaceBasis basis(int k, uint64_t ell, long tq);
SpaceBasis cusp_basis(int k, uint64_t ell, long tq);
// Shared cache keyed by (k, ell, tq, cusp); safe for concurrent readers.
std::shared_ptr<const SpaceBasis> basis_cached(int k, uint64_t ell, long tq, bool cusp);

struct FitResult {
    std::vector<uint64_t> combo;  // coefficient per basis row
    long verified_tq = 0;
};

struct MembershipResult {
    bool member = false;
    FitResult fit;
    long witness_q = -1;  // first mismatching q-exponent when not a member
};

// Solves for a combination of B's rows matching g through B.tq.  g must be
// supported on integer q-powers and certify at least B.tq q-coefficients.
MembershipResult membership(const SeriesFp& g, const SpaceBasis& B);

enum class FiltrationStatus { Zero, Value, NotMember };

// w(g) = least k' = K (mod ell-1), 0 <= k' <= K, with g in the reduction of
// M_{k'}; carries the fit at the reported weight and the failure witness one
// ladder step below.
struct Filtration {
    FiltrationStatus status = FiltrationStatus::Zero;
    int value = 0;
    uint64_t ell = 0;
    FitResult fit;               // at value
    long below_witness_q = -1;   // mismatch at value-(ell-1); -1 if that space is empty
    bool below_space_empty = true;
};

Filtration filtration(const SeriesFp& g, int nominal_weight, uint64_t ell);

// Exact-rational monomial expansions of M_k on the X-grid, ordered by
// descending E4 exponent.
std::vector<SeriesQ> mk_monomials(int k, long xtrunc);

struct ExactFit {
    bool ok = false;
    std::vector<Rational> combo;
    long witness_q = -1;  // first q-exponent of a nonzero residual
};

// Unique exact combination of the given (independent) series matching the
// target through the common precision, verified coefficientwise.
ExactFit fit_exact(const SeriesQ& target, const std::vector<SeriesQ>& monomials);

}  // namespace sptcong
