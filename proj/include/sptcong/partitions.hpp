#pragma once

#include "sptcong/arith.hpp"

#include <cstdint>
#include <vector>

namespace sptcong {

// p(0..n_max) by Euler's pentagonal recurrence.
std::vector<Integer> partition_table(long n_max);

// spt(0..n_max) (spt(0) = 0) from the generating identity
//   sum spt(n) q^n = sum_{j>=1} q^j (1-q^j)^{-2} prod_{i>j} (1-q^i)^{-1},
// expanded coefficientwise with a parts->j partition table.
std::vector<Integer> spt_table(long n_max);

// Oracle: enumerates every partition of n and sums the multiplicity of its
// smallest part.  Kept deliberately independent of spt_table.
Integer spt_bruteforce(int n);

// Second rank moment N_2(n) = 2(n p(n) - spt(n)).
Integer n2_moment(long n);

struct CandidateEntry {
    long k = 0;           // candidate index
    uint64_t n = 0;       // 24k - 1
    Integer a;            // a(n) = -(12 spt(k) + n p(k))
    bool n_is_prime = false;
};

// Exact integer values a(24k - 1) for k = 1..C, the scan's witness source.
struct CandidateTable {
    std::vector<CandidateEntry> entries;  // ascending k

    long count() const { return static_cast<long>(entries.size()); }
    // FNV-1a over (k, n, decimal a(n)); stable across runs and platforms.
    uint64_t hash() const;
    // entry indices whose n is prime, ascending
    std::vector<int> prime_candidates() const;
};

CandidateTable a_coefficients(long C);

// Smallest table size whose prime-candidate subsequence has length >= C.
CandidateTable a_coefficients_with_primes(long C);

}  // namespace sptcong
