#include "sptcong/partitions.hpp"

#include <stdexcept>

namespace sptcong {

std::vector<Integer> partition_table(long n_max) {
    if (n_max < 0) throw std::invalid_argument("partition_table: negative bound");
    std::vector<Integer> p(static_cast<size_t>(n_max) + 1);
    p[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        Integer acc(0);
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            if (k % 2 == 1) {
                if (g1 <= n) acc += p[n - g1];
                if (g2 <= n) acc += p[n - g2];
            } else {
                if (g1 <= n) acc -= p[n - g1];
                if (g2 <= n) acc -= p[n - g2];
            }
        }
        p[n] = acc;
    }
    return p;
}

std::vector<Integer> spt_table(long n_max) {
    if (n_max < 0) throw std::invalid_argument("spt_table: negative bound");
    size_t size = static_cast<size_t>(n_max) + 1;
    std::vector<Integer> spt(size);
    // R[x] = partitions of x into parts >= j+1 while handling smallest part j
    std::vector<Integer> R(size);
    R[0] = 1;
    for (long j = n_max; j >= 1; --j) {
        for (long m = 1; j * m <= n_max; ++m) {
            long shift = j * m;
            for (long x = 0; x + shift <= n_max; ++x) {
                if (sgn(R[x]) == 0) continue;
                mpz_addmul_ui(spt[x + shift].get_mpz_t(), R[x].get_mpz_t(),
                              static_cast<unsigned long>(m));
            }
        }
        for (long x = j; x <= n_max; ++x) R[x] += R[x - j];
    }
    return spt;
}

namespace {

// Recursive partition enumeration, parts ascending; head is the smallest
// part of the partition under construction and mult its multiplicity so far.
void enumerate(int remaining, int next_min, int head, int mult, Integer& total) {
    if (remaining == 0) {
        total += mult;
        return;
    }
    for (int part = next_min; part <= remaining; ++part) {
        if (head == 0)
            enumerate(remaining - part, part, part, 1, total);
        else
            enumerate(remaining - part, part, head, part == head ? mult + 1 : mult, total);
    }
}

}  // namespace

Integer spt_bruteforce(int n) {
    if (n < 1 || n > 40)
        throw std::invalid_argument("spt_bruteforce: supported for 1 <= n <= 40");
    Integer total(0);
    enumerate(n, 1, 0, 0, total);
    return total;
}

Integer n2_moment(long n) {
    if (n < 1) throw std::invalid_argument("n2_moment: requires n >= 1");
    auto p = partition_table(n);
    auto s = spt_table(n);
    return 2 * (Integer(n) * p[n] - s[n]);
}

uint64_t CandidateTable::hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= ';';
        h *= 1099511628211ull;
    };
    mix(std::to_string(entries.size()));
    for (const auto& e : entries) {
        mix(std::to_string(e.k));
        mix(std::to_string(e.n));
        mix(e.a.get_str());
    }
    return h;
}

std::vector<int> CandidateTable::prime_candidates() const {
    std::vector<int> idx;
    for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i].n_is_prime) idx.push_back(static_cast<int>(i));
    return idx;
}

CandidateTable a_coefficients(long C) {
    if (C < 1) throw std::invalid_argument("a_coefficients: C must be >= 1");
    auto p = partition_table(C);
    auto s = spt_table(C);
    CandidateTable table;
    table.entries.reserve(static_cast<size_t>(C));
    for (long k = 1; k <= C; ++k) {
        CandidateEntry e;
        e.k = k;
        e.n = static_cast<uint64_t>(24 * k - 1);
        e.a = -(12 * s[k] + Integer(static_cast<long>(e.n)) * p[k]);
        e.n_is_prime = is_prime(e.n);
        if (sgn(e.a) == 0)
            throw std::logic_error("a_coefficients: vanishing a(n) at k=" + std::to_string(k));
        table.entries.push_back(std::move(e));
    }
    return table;
}

CandidateTable a_coefficients_with_primes(long C) {
    long size = C;
    while (true) {
        long primes = 0;
        for (long k = 1; k <= size; ++k)
            if (is_prime(static_cast<uint64_t>(24 * k - 1))) ++primes;
        if (primes >= C) break;
        size *= 2;
    }
    return a_coefficients(size);
}

}  // namespace sptcong
