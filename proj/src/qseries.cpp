#include "sptcong/qseries.hpp"

namespace sptcong {

SeriesFp reduce_series(const SeriesQ& a, uint64_t ell) {
    ModRing ring(ell);
    SeriesFp out(ring, a.lower(), a.trunc());
    for (long e = a.lower(); e < a.trunc(); ++e) {
        const Rational& c = a.data()[static_cast<size_t>(e - a.lower())];
        if (sgn(c) == 0) continue;
        out.at(e) = ring.from_rational(c);
    }
    return out;
}

}  // namespace sptcong
