#include "sptcong/primes.hpp"

#include <algorithm>
#include <cmath>

namespace sptcong {

static uint64_t isqrt_u64(uint64_t x) {
    if (x == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > x) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

std::vector<uint64_t> primes_below(uint64_t n) {
    std::vector<uint64_t> out;
    if (n <= 2) return out;
    std::vector<uint8_t> composite(n, 0);
    for (uint64_t i = 2; i < n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (uint64_t j = i * i; j < n; j += i) composite[j] = 1;
    }
    return out;
}

void sieve_window(uint64_t a, uint64_t b, const std::vector<uint64_t>& base,
                  std::vector<uint8_t>& scratch, std::vector<uint64_t>& out) {
    if (b <= a) return;
    if (a <= 2 && 2 < b) out.push_back(2);
    uint64_t first = std::max<uint64_t>(a, 3);
    if (first % 2 == 0) ++first;
    if (first >= b) return;
    size_t count = static_cast<size_t>((b - first + 1) / 2);  // odd values first, first+2, ...
    scratch.assign(count, 1);
    for (uint64_t p : base) {
        if (p == 2) continue;
        if (static_cast<unsigned __int128>(p) * p >= b) break;
        uint64_t start = std::max<uint64_t>(p * p, ((a + p - 1) / p) * p);
        if (start % 2 == 0) start += p;  // odd multiples only; start >= first holds
        for (uint64_t m = start; m < b; m += 2 * p) scratch[(m - first) / 2] = 0;
    }
    for (size_t i = 0; i < count; ++i) {
        if (scratch[i]) out.push_back(first + 2 * i);
    }
}

SegmentedSieve::SegmentedSieve(uint64_t lo, uint64_t hi, uint64_t segment_width)
    : cursor_(lo), hi_(hi), width_(segment_width ? segment_width : kDefaultWidth) {
    if (hi_ > 0) base_ = primes_below(isqrt_u64(hi_ - 1) + 1);
}

bool SegmentedSieve::next_segment(std::vector<uint64_t>& out) {
    out.clear();
    if (cursor_ >= hi_) return false;
    uint64_t b = std::min(cursor_ + width_, hi_);
    sieve_window(cursor_, b, base_, scratch_, out);
    cursor_ = b;
    return true;
}

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> all;
    SegmentedSieve sieve(lo, hi);
    std::vector<uint64_t> seg;
    while (sieve.next_segment(seg)) all.insert(all.end(), seg.begin(), seg.end());
    return all;
}

}  // namespace sptcong
