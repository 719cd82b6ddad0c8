#pragma once

#include <cstdint>
#include <vector>

namespace sptcong {

// Primes below n (exclusive), simple sieve of Eratosthenes.
std::vector<uint64_t> primes_below(uint64_t n);

// Appends the primes in [a, b) to out, given base primes covering sqrt(b).
// scratch is a reusable odd-residue bitmap; resized as needed.
void sieve_window(uint64_t a, uint64_t b, const std::vector<uint64_t>& base,
                  std::vector<uint8_t>& scratch, std::vector<uint64_t>& out);

// Streaming segmented sieve over [lo, hi), ascending, memory bounded by the
// segment width (default 2^20 odd residues = 2^21 numbers).
class SegmentedSieve {
  public:
    static constexpr uint64_t kDefaultWidth = uint64_t(1) << 21;

    SegmentedSieve(uint64_t lo, uint64_t hi, uint64_t segment_width = kDefaultWidth);

    // Fills out with the primes of the next segment (possibly none); returns
    // false once the range is exhausted.
    bool next_segment(std::vector<uint64_t>& out);

  private:
    uint64_t cursor_;
    uint64_t hi_;
    uint64_t width_;
    std::vector<uint64_t> base_;
    std::vector<uint8_t> scratch_;
};

// All primes in [lo, hi) collected into a vector.
std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi);

}  // namespace sptcong
