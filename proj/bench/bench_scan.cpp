// Benchmark: serial reference kernel vs the OpenMP kernel over the same
// range, with a projection of the full 1e11 run.

#include "CLI11.hpp"

#include "sptcong/scan.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>

using namespace sptcong;

namespace {

double run_once(const CandidateTable& table, const ScanOptions& opt, bool serial,
                ScanReport& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = serial ? scan_range_serial(table, opt) : scan_range(table, opt);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare the serial and OpenMP scan kernels"};
    uint64_t lo = 1000000000ull;
    uint64_t span = 10000000ull;
    int candidates = 50;
    std::vector<int> worker_counts{1, 2, 4, 8};
    app.add_option("--from", lo, "range start");
    app.add_option("--span", span, "range length");
    app.add_option("--candidates", candidates, "candidates per prime");
    app.add_option("--workers", worker_counts, "worker counts to benchmark");
    CLI11_PARSE(app, argc, argv);

    CandidateTable table = a_coefficients(candidates);
    ScanOptions opt;
    opt.lo = lo;
    opt.hi = lo + span;
    opt.candidates = candidates;

    std::printf("range [%llu, %llu), C=%d, hardware threads %d\n",
                (unsigned long long)opt.lo, (unsigned long long)opt.hi, candidates,
                omp_get_max_threads());

    ScanReport serial_rep;
    double serial_s = run_once(table, opt, true, serial_rep);
    double mps = static_cast<double>(span) / serial_s / 1e6;
    std::printf("%-22s %8.3fs  %8.1f Mnum/s  primes=%llu\n", "serial reference", serial_s, mps,
                (unsigned long long)serial_rep.primes_scanned);

    for (int w : worker_counts) {
        opt.workers = w;
        ScanReport rep;
        double s = run_once(table, opt, false, rep);
        bool same = rep.payload_text() == serial_rep.payload_text();
        double hours_1e11 = s * (1e11 / static_cast<double>(span)) / 3600.0;
        std::printf("%-19s %2d %8.3fs  %8.1f Mnum/s  speedup %4.2fx  1e11 in %6.2fh  %s\n",
                    "openmp workers", w, s, static_cast<double>(span) / s / 1e6, serial_s / s,
                    hours_1e11, same ? "payload=serial" : "PAYLOAD MISMATCH");
        if (!same) return 1;
    }
    return 0;
}
