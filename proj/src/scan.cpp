#include "sptcong/scan.hpp"

#include "sptcong/arith.hpp"
#include "sptcong/primes.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sptcong {

namespace {

// Flat read-only view of the candidate sequence actually scanned.
struct CandidateView {
    std::vector<uint64_t> n;
    std::vector<mpz_srcptr> a;
};

CandidateView make_view(const CandidateTable& table, int candidates, bool primes_only) {
    if (candidates < 1) throw std::invalid_argument("scan: candidates must be >= 1");
    CandidateView view;
    if (primes_only) {
        for (const auto& e : table.entries) {
            if (!e.n_is_prime) continue;
            view.n.push_back(e.n);
            view.a.push_back(e.a.get_mpz_t());
            if (static_cast<int>(view.n.size()) == candidates) break;
        }
    } else {
        for (const auto& e : table.entries) {
            view.n.push_back(e.n);
            view.a.push_back(e.a.get_mpz_t());
            if (static_cast<int>(view.n.size()) == candidates) break;
        }
    }
    if (static_cast<int>(view.n.size()) < candidates)
        throw std::invalid_argument("scan: candidate table too small for requested C");
    return view;
}

// Symbol first (cheapest), then the arbitrary-precision remainder; both
// conditions of the witness criterion must hold.
inline ScanRecord scan_prime_view(uint64_t ell, const CandidateView& view) {
    ScanRecord rec;
    rec.ell = ell;
    int count = static_cast<int>(view.n.size());
    for (int i = 0; i < count; ++i) {
        int sym = kronecker(static_cast<int64_t>(ell), static_cast<int64_t>(view.n[i]));
        if (sym == 1) continue;
        uint64_t amod = mpz_fdiv_ui(view.a[i], ell);
        if (amod == 0) continue;
        rec.witness = true;
        rec.w = WitnessOutcome{i + 1, view.n[i], sym, amod};
        rec.candidates_checked = i + 1;
        return rec;
    }
    rec.candidates_checked = count;
    return rec;
}

struct SegmentResult {
    uint64_t primes = 0;
    std::vector<uint64_t> exceptional;
    std::vector<uint64_t> histogram;
};

SegmentResult scan_segment(uint64_t a, uint64_t b, const std::vector<uint64_t>& base,
                           const CandidateView& view, int candidates) {
    static thread_local std::vector<uint8_t> scratch;
    static thread_local std::vector<uint64_t> primes;
    primes.clear();
    sieve_window(a, b, base, scratch, primes);
    SegmentResult res;
    res.histogram.assign(static_cast<size_t>(candidates) + 1, 0);
    for (uint64_t ell : primes) {
        if (ell < 5) continue;
        ++res.primes;
        ScanRecord rec = scan_prime_view(ell, view);
        if (rec.witness)
            ++res.histogram[static_cast<size_t>(rec.w.k)];
        else
            res.exceptional.push_back(ell);
    }
    return res;
}

void fold(ScanReport& agg, const SegmentResult& seg) {
    agg.primes_scanned += seg.primes;
    agg.exceptional.insert(agg.exceptional.end(), seg.exceptional.begin(), seg.exceptional.end());
    for (size_t k = 0; k < seg.histogram.size(); ++k) agg.histogram[k] += seg.histogram[k];
}

void validate_options(const ScanOptions& opt) {
    if (opt.lo < 5 || opt.lo >= opt.hi)
        throw std::invalid_argument("scan: requires 5 <= lo < hi");
    if (opt.workers < 1) throw std::invalid_argument("scan: workers must be >= 1");
    if (opt.segment_width == 0) throw std::invalid_argument("scan: zero segment width");
}

ScanReport fresh_report(const CandidateTable& table, const ScanOptions& opt) {
    ScanReport rep;
    rep.lo = opt.lo;
    rep.hi = opt.hi;
    rep.candidates = opt.candidates;
    rep.primes_only = opt.primes_only;
    rep.segment_width = opt.segment_width;
    rep.table_hash = table.hash();
    rep.cursor = opt.lo;
    rep.histogram.assign(static_cast<size_t>(opt.candidates) + 1, 0);
    return rep;
}

void check_resume_match(const ScanReport& ck, const CandidateTable& table,
                        const ScanOptions& opt) {
    auto fail = [](const std::string& what) {
        throw std::runtime_error("checkpoint resume conflict: " + what);
    };
    if (ck.lo != opt.lo || ck.hi != opt.hi) fail("scan range differs from checkpoint");
    if (ck.candidates != opt.candidates) fail("candidate count differs from checkpoint");
    if (ck.primes_only != opt.primes_only) fail("primes-only mode differs from checkpoint");
    if (ck.segment_width != opt.segment_width) fail("segment width differs from checkpoint");
    if (ck.table_hash != table.hash()) fail("candidate table hash differs from checkpoint");
}

}  // namespace

ScanRecord scan_prime(uint64_t ell, const CandidateTable& table, int candidates,
                      bool primes_only) {
    return scan_prime_view(ell, make_view(table, candidates, primes_only));
}

uint64_t ScanReport::witnesses() const {
    uint64_t w = 0;
    for (uint64_t h : histogram) w += h;
    return w;
}

std::string ScanReport::payload_text() const {
    std::ostringstream os;
    char hash_hex[17];
    std::snprintf(hash_hex, sizeof hash_hex, "%016llx",
                  static_cast<unsigned long long>(table_hash));
    os << "sptcong-scan v1\n";
    os << "range " << lo << ' ' << hi << '\n';
    os << "candidates " << candidates << '\n';
    os << "primes-only " << (primes_only ? 1 : 0) << '\n';
    os << "segment-width " << segment_width << '\n';
    os << "table-hash " << hash_hex << '\n';
    os << "cursor " << cursor << '\n';
    os << "primes-scanned " << primes_scanned << '\n';
    os << "witnesses " << witnesses() << '\n';
    for (uint64_t ell : exceptional) os << "exceptional " << ell << '\n';
    for (size_t k = 1; k < histogram.size(); ++k) {
        if (histogram[k]) os << "histogram " << k << ' ' << histogram[k] << '\n';
    }
    os << "end\n";
    return os.str();
}

std::string ScanReport::full_text() const {
    std::ostringstream os;
    os << payload_text();
    char buf[64];
    std::snprintf(buf, sizeof buf, "timing wall-seconds %.3f\n", wall_seconds);
    os << buf;
    return os.str();
}

ScanReport scan_range(const CandidateTable& table, const ScanOptions& opt) {
    validate_options(opt);
    auto t0 = std::chrono::steady_clock::now();
    CandidateView view = make_view(table, opt.candidates, opt.primes_only);

    ScanReport rep;
    bool resumed = false;
    if (!opt.checkpoint_path.empty() && std::filesystem::exists(opt.checkpoint_path)) {
        rep = checkpoint_load(opt.checkpoint_path);
        check_resume_match(rep, table, opt);
        resumed = true;
    } else {
        rep = fresh_report(table, opt);
    }
    if (rep.complete()) return rep;

    uint64_t width = opt.segment_width;
    uint64_t done_segments = (rep.cursor - rep.lo) / width;
    uint64_t total_segments = (rep.hi - rep.lo + width - 1) / width;
    uint64_t budget = opt.stop_after_segments ? opt.stop_after_segments
                                              : total_segments - done_segments;

    std::vector<uint64_t> base = primes_below(
        static_cast<uint64_t>(std::sqrt(static_cast<double>(rep.hi - 1))) + 2);

    uint64_t since_save = 0;
    while (rep.cursor < rep.hi && budget > 0) {
        uint64_t batch = std::min<uint64_t>(
            {budget, total_segments - done_segments,
             static_cast<uint64_t>(std::max(4 * opt.workers, 8))});
        std::vector<SegmentResult> results(batch);
        uint64_t start = rep.cursor;
#pragma omp parallel for schedule(dynamic) num_threads(opt.workers)
        for (long long i = 0; i < static_cast<long long>(batch); ++i) {
            uint64_t a = start + static_cast<uint64_t>(i) * width;
            uint64_t b = std::min(a + width, rep.hi);
            results[static_cast<size_t>(i)] =
                scan_segment(a, b, base, view, opt.candidates);
        }
        for (const auto& seg : results) fold(rep, seg);
        done_segments += batch;
        budget -= batch;
        since_save += batch;
        rep.cursor = std::min(rep.hi, start + batch * width);
        if (!opt.checkpoint_path.empty() &&
            (since_save >= opt.checkpoint_every || rep.complete() || budget == 0)) {
            checkpoint_save(opt.checkpoint_path, rep);
            since_save = 0;
        }
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    (void)resumed;
    return rep;
}

ScanReport scan_range_serial(const CandidateTable& table, const ScanOptions& opt) {
    validate_options(opt);
    auto t0 = std::chrono::steady_clock::now();
    CandidateView view = make_view(table, opt.candidates, opt.primes_only);
    ScanReport rep = fresh_report(table, opt);
    SegmentedSieve sieve(rep.lo, rep.hi, opt.segment_width);
    std::vector<uint64_t> primes;
    while (sieve.next_segment(primes)) {
        for (uint64_t ell : primes) {
            if (ell < 5) continue;
            ++rep.primes_scanned;
            ScanRecord rec = scan_prime_view(ell, view);
            if (rec.witness)
                ++rep.histogram[static_cast<size_t>(rec.w.k)];
            else
                rep.exceptional.push_back(ell);
        }
    }
    rep.cursor = rep.hi;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

constexpr char kMagic[8] = {'S', 'P', 'T', 'C', 'K', 'P', 'T', '1'};

void put_u64(std::string& buf, uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint64_t get_u64(const std::string& buf, size_t& pos) {
    if (pos + 8 > buf.size()) throw std::runtime_error("checkpoint: truncated file");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<uint64_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
    pos += 8;
    return v;
}

uint64_t fnv64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

void checkpoint_save(const std::string& path, const ScanReport& rep) {
    std::string buf(kMagic, sizeof kMagic);
    put_u64(buf, 1);  // version
    put_u64(buf, rep.lo);
    put_u64(buf, rep.hi);
    put_u64(buf, static_cast<uint64_t>(rep.candidates));
    put_u64(buf, rep.primes_only ? 1 : 0);
    put_u64(buf, rep.segment_width);
    put_u64(buf, rep.table_hash);
    put_u64(buf, rep.cursor);
    put_u64(buf, rep.primes_scanned);
    put_u64(buf, rep.exceptional.size());
    put_u64(buf, rep.histogram.size());
    for (uint64_t v : rep.exceptional) put_u64(buf, v);
    for (uint64_t v : rep.histogram) put_u64(buf, v);
    put_u64(buf, fnv64(buf));
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("checkpoint: cannot write " + tmp);
        os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
    std::filesystem::rename(tmp, path);
}

ScanReport checkpoint_load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("checkpoint: cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    std::string buf = ss.str();
    if (buf.size() < sizeof kMagic + 8 || buf.compare(0, sizeof kMagic, kMagic, sizeof kMagic) != 0)
        throw std::runtime_error("checkpoint: bad magic in " + path);
    std::string body = buf.substr(0, buf.size() - 8);
    size_t pos = buf.size() - 8;
    if (get_u64(buf, pos) != fnv64(body))
        throw std::runtime_error("checkpoint: checksum mismatch in " + path);
    pos = sizeof kMagic;
    uint64_t version = get_u64(buf, pos);
    if (version != 1) throw std::runtime_error("checkpoint: unsupported version");
    ScanReport rep;
    rep.lo = get_u64(buf, pos);
    rep.hi = get_u64(buf, pos);
    rep.candidates = static_cast<int>(get_u64(buf, pos));
    rep.primes_only = get_u64(buf, pos) != 0;
    rep.segment_width = get_u64(buf, pos);
    rep.table_hash = get_u64(buf, pos);
    rep.cursor = get_u64(buf, pos);
    rep.primes_scanned = get_u64(buf, pos);
    uint64_t n_exc = get_u64(buf, pos);
    uint64_t n_hist = get_u64(buf, pos);
    rep.exceptional.resize(n_exc);
    for (auto& v : rep.exceptional) v = get_u64(buf, pos);
    rep.histogram.resize(n_hist);
    for (auto& v : rep.histogram) v = get_u64(buf, pos);
    return rep;
}

}  // namespace sptcong
