#pragma once

#include "sptcong/partitions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sptcong {

// Witness outcome for one prime: the first candidate k with
// kronecker(ell, n_k) != 1 and a(n_k) != 0 (mod ell).
struct WitnessOutcome {
    int k = 0;           // 1-based index in the tried candidate sequence
    uint64_t n = 0;      // the candidate exponent itself
    int symbol = 0;      // kronecker(ell, n), 0 or -1 for a witness
    uint64_t a_mod = 0;  // a(n) mod ell, nonzero for a witness
};

struct ScanRecord {
    uint64_t ell = 0;
    bool witness = false;
    WitnessOutcome w;
    int candidates_checked = 0;  // == C for exceptional primes
};

ScanRecord scan_prime(uint64_t ell, const CandidateTable& table, int candidates,
                      bool primes_only = false);

struct ScanOptions {
    uint64_t lo = 5;
    uint64_t hi = 0;
    int candidates = 50;
    bool primes_only = false;
    int workers = 1;
    uint64_t segment_width = uint64_t(1) << 21;
    std::string checkpoint_path;         // empty: no checkpointing
    uint64_t stop_after_segments = 0;    // 0: run to completion
    uint64_t checkpoint_every = 64;      // segments between saves
};

// Aggregated result; the payload is identical for any worker count.
struct ScanReport {
    uint64_t lo = 0, hi = 0;
    int candidates = 0;
    bool primes_only = false;
    uint64_t segment_width = 0;
    uint64_t table_hash = 0;
    uint64_t cursor = 0;  // next unscanned position; == hi when complete
    uint64_t primes_scanned = 0;
    std::vector<uint64_t> exceptional;  // ascending
    std::vector<uint64_t> histogram;    // index 1..candidates
    double wall_seconds = 0.0;

    bool complete() const { return cursor >= hi; }
    uint64_t witnesses() const;
    // stable line-oriented record; no timing inside
    std::string payload_text() const;
    // payload plus a timing trailer
    std::string full_text() const;
};

// OpenMP kernel: fixed-width segments scanned in parallel, results folded in
// segment order, so the report is bit-identical for any worker count.  With a
// checkpoint path, a partial scan can be resumed; completed segments are
// never rescanned.
ScanReport scan_range(const CandidateTable& table, const ScanOptions& opt);

// Serial reference implementation (single pass over a streaming sieve, no
// OpenMP, no checkpointing); kept for testing and benchmarking against the
// parallel kernel.
ScanReport scan_range_serial(const CandidateTable& table, const ScanOptions& opt);

void checkpoint_save(const std::string& path, const ScanReport& report);
ScanReport checkpoint_load(const std::string& path);

}  // namespace sptcong
