#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sptcong/primes.hpp"
#include "sptcong/scan.hpp"
#include "sptcong/verify.hpp"

#include <gmpxx.h>

#include <cstdio>
#include <filesystem>
#include <random>

using namespace sptcong;

namespace {

std::string tmp_path(const char* name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p.string();
}

}  // namespace

TEST_CASE("scan_prime witnesses and exceptional primes") {
    CandidateTable table = a_coefficients(50);

    ScanRecord r11 = scan_prime(11, table, 50);
    REQUIRE(r11.witness);
    CHECK(r11.w.k == 1);
    CHECK(r11.w.n == 23);
    CHECK(r11.w.symbol == -1);
    CHECK(r11.w.a_mod == 9);  // -35 mod 11

    for (uint64_t ell : {5, 13}) {
        ScanRecord r = scan_prime(ell, table, 50);
        CAPTURE(ell);
        CHECK_FALSE(r.witness);
        CHECK(r.candidates_checked == 50);
    }
}

TEST_CASE("single-candidate exceptional list below 100") {
    CandidateTable table = a_coefficients(1);
    ScanOptions opt;
    opt.lo = 5;
    opt.hi = 100;
    opt.candidates = 1;
    ScanReport rep = scan_range(table, opt);
    CHECK(rep.exceptional ==
          std::vector<uint64_t>{5, 7, 13, 29, 31, 41, 47, 59, 71, 73});
}

TEST_CASE("scan to 1e5: exceptional set, counts, determinism across workers") {
    CandidateTable table = a_coefficients(50);
    ScanOptions opt;
    opt.lo = 5;
    opt.hi = 100000;
    opt.candidates = 50;
    opt.segment_width = 1 << 14;

    opt.workers = 1;
    ScanReport one = scan_range(table, opt);
    CHECK(one.exceptional == std::vector<uint64_t>{5, 7, 13});
    CHECK(one.primes_scanned == 9590);
    CHECK(one.complete());
    uint64_t outcomes = one.witnesses() + one.exceptional.size();
    CHECK(outcomes == one.primes_scanned);

    opt.workers = 4;
    ScanReport four = scan_range(table, opt);
    opt.workers = 8;
    ScanReport eight = scan_range(table, opt);
    CHECK(one.payload_text() == four.payload_text());
    CHECK(one.payload_text() == eight.payload_text());

    ScanReport serial = scan_range_serial(table, opt);
    CHECK(serial.payload_text() == one.payload_text());
}

TEST_CASE("payload format is line-oriented and stable") {
    CandidateTable table = a_coefficients(5);
    ScanOptions opt;
    opt.lo = 5;
    opt.hi = 50;
    opt.candidates = 5;
    ScanReport rep = scan_range(table, opt);
    std::string payload = rep.payload_text();
    CHECK(payload.rfind("sptcong-scan v1\nrange 5 50\ncandidates 5\nprimes-only 0\n", 0) == 0);
    CHECK(payload.find("timing") == std::string::npos);
    CHECK(rep.full_text().find("timing wall-seconds") != std::string::npos);
    CHECK(scan_range(table, opt).payload_text() == payload);
}

TEST_CASE("witness soundness: independent revalidation of a 1% sample") {
    CandidateTable table = a_coefficients(50);
    auto primes = primes_in(5, 100000);
    std::mt19937_64 rng(321);
    int checked = 0;
    for (uint64_t ell : primes) {
        if (rng() % 100 != 0) continue;  // ~1% sample
        ScanRecord rec = scan_prime(ell, table, 50);
        if (!rec.witness) continue;
        ++checked;
        const CandidateEntry& e = table.entries[rec.w.k - 1];
        CHECK(e.n == rec.w.n);
        mpz_class zell(std::to_string(ell)), zn(std::to_string(e.n));
        int sym = mpz_kronecker(zell.get_mpz_t(), zn.get_mpz_t());
        CHECK(sym == rec.w.symbol);
        CHECK(sym != 1);
        mpz_class amod = e.a % zell;
        if (amod < 0) amod += zell;
        CHECK(amod == rec.w.a_mod);
        CHECK(rec.w.a_mod != 0);
        // first-witness property: every earlier candidate fails the conjunction
        for (int i = 0; i + 1 < rec.w.k; ++i) {
            const CandidateEntry& prev = table.entries[i];
            mpz_class zp(std::to_string(prev.n));
            bool sym_ok = mpz_kronecker(zell.get_mpz_t(), zp.get_mpz_t()) != 1;
            bool a_ok = mpz_fdiv_ui(prev.a.get_mpz_t(), ell) != 0;
            bool qualifies = sym_ok && a_ok;
            CHECK_FALSE(qualifies);
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("monotonicity: larger C never adds exceptional primes") {
    CandidateTable table = a_coefficients(50);
    ScanOptions opt;
    opt.lo = 5;
    opt.hi = 10000;
    opt.candidates = 10;
    ScanReport small = scan_range(table, opt);
    opt.candidates = 50;
    ScanReport big = scan_range(table, opt);
    for (uint64_t ell : big.exceptional) {
        CHECK(std::find(small.exceptional.begin(), small.exceptional.end(), ell) !=
              small.exceptional.end());
    }
}

TEST_CASE("histogram invariants over [5, 1e6)") {
    CandidateTable table = a_coefficients(50);
    ScanOptions opt;
    opt.lo = 5;
    opt.hi = 1000000;
    opt.candidates = 50;
    opt.workers = 2;
    opt.segment_width = 1 << 17;
    ScanReport rep = scan_range(table, opt);
    CHECK(rep.exceptional == std::vector<uint64_t>{5, 7, 13});
    CHECK(rep.primes_scanned == 78496);
    double frac1 = static_cast<double>(rep.histogram[1]) / rep.primes_scanned;
    CHECK(frac1 > 0.45);
    CHECK(frac1 < 0.55);
    uint64_t tail = 0;
    for (size_t k = 21; k < rep.histogram.size(); ++k) tail += rep.histogram[k];
    CHECK(static_cast<double>(tail) / rep.primes_scanned < 1e-4);
    // geometric-ish decay at the front of the histogram
    CHECK(rep.histogram[1] > rep.histogram[2]);
    CHECK(rep.histogram[2] > rep.histogram[4]);
}

TEST_CASE("primes-only candidate mode") {
    CandidateTable table = a_coefficients_with_primes(20);
    ScanOptions opt;
    opt.lo = 5;
    opt.hi = 20000;
    opt.candidates = 20;
    opt.primes_only = true;
    ScanReport rep = scan_range(table, opt);
    CHECK(rep.complete());
    // witnesses must come from prime candidates
    ScanRecord rec = scan_prime(11, table, 20, true);
    REQUIRE(rec.witness);
    CHECK(is_prime(rec.w.n));
    CHECK(rec.w.n % 24 == 23);
    // plain table without enough prime candidates is rejected
    CandidateTable tiny = a_coefficients(10);
    CHECK_THROWS_AS(scan_prime(11, tiny, 10, true), std::invalid_argument);
}

TEST_CASE("interrupted scan resumes to a byte-identical report") {
    CandidateTable table = a_coefficients(50);
    ScanOptions opt;
    opt.lo = 5;
    opt.hi = 100000;
    opt.candidates = 50;
    opt.segment_width = 1 << 13;
    opt.workers = 2;
    ScanReport full = scan_range(table, opt);

    std::string ck = tmp_path("sptcong-test-ckpt.bin");
    ScanOptions interrupted = opt;
    interrupted.checkpoint_path = ck;
    interrupted.stop_after_segments = 5;
    interrupted.checkpoint_every = 2;
    ScanReport part = scan_range(table, interrupted);
    CHECK_FALSE(part.complete());
    CHECK(part.cursor == opt.lo + 5 * opt.segment_width);

    ScanOptions resume = opt;
    resume.checkpoint_path = ck;
    ScanReport done = scan_range(table, resume);
    CHECK(done.complete());
    CHECK(done.payload_text() == full.payload_text());

    // resuming a completed checkpoint leaves the report unchanged
    ScanReport again = scan_range(table, resume);
    CHECK(again.payload_text() == done.payload_text());
    std::filesystem::remove(ck);
}

TEST_CASE("checkpoint mismatches are rejected with a diagnostic") {
    CandidateTable table = a_coefficients(50);
    ScanOptions opt;
    opt.lo = 5;
    opt.hi = 50000;
    opt.candidates = 50;
    opt.segment_width = 1 << 13;
    opt.checkpoint_path = tmp_path("sptcong-test-ckpt2.bin");
    opt.stop_after_segments = 2;
    scan_range(table, opt);

    ScanOptions wrongC = opt;
    wrongC.stop_after_segments = 0;
    wrongC.candidates = 60;
    CHECK_THROWS_WITH_AS(scan_range(a_coefficients(60), wrongC),
                         doctest::Contains("candidate count"), std::runtime_error);

    ScanOptions wrongRange = opt;
    wrongRange.stop_after_segments = 0;
    wrongRange.hi = 60000;
    CHECK_THROWS_WITH_AS(scan_range(table, wrongRange), doctest::Contains("range"),
                         std::runtime_error);

    ScanOptions wrongTable = opt;
    wrongTable.stop_after_segments = 0;
    CandidateTable other = a_coefficients(50);
    other.entries[7].a += 1;
    CHECK_THROWS_WITH_AS(scan_range(other, wrongTable), doctest::Contains("hash"),
                         std::runtime_error);
    std::filesystem::remove(opt.checkpoint_path);
}

TEST_CASE("corrupted checkpoint file is detected") {
    CandidateTable table = a_coefficients(10);
    ScanOptions opt;
    opt.lo = 5;
    opt.hi = 30000;
    opt.candidates = 10;
    opt.segment_width = 1 << 13;
    opt.checkpoint_path = tmp_path("sptcong-test-ckpt3.bin");
    opt.stop_after_segments = 1;
    scan_range(table, opt);
    {
        std::FILE* fp = std::fopen(opt.checkpoint_path.c_str(), "r+b");
        REQUIRE(fp);
        std::fseek(fp, 40, SEEK_SET);
        std::fputc(0x5a, fp);
        std::fclose(fp);
    }
    ScanOptions resume = opt;
    resume.stop_after_segments = 0;
    CHECK_THROWS_WITH_AS(scan_range(table, resume), doctest::Contains("checksum"),
                         std::runtime_error);
    std::filesystem::remove(opt.checkpoint_path);
}

TEST_CASE("exceptional primes below 1000 are confirmed by the thm11 route") {
    CandidateTable table = a_coefficients(50);
    ScanOptions opt;
    opt.lo = 5;
    opt.hi = 1000;
    opt.candidates = 50;
    ScanReport rep = scan_range(table, opt);
    CHECK(rep.exceptional == std::vector<uint64_t>{5, 7, 13});
    for (uint64_t ell : rep.exceptional) {
        Verdict v = verify_theorem11(ell, 100);
        CAPTURE(ell);
        CHECK(v.pass);
    }
}

TEST_CASE("option validation") {
    CandidateTable table = a_coefficients(5);
    ScanOptions opt;
    opt.lo = 3;
    opt.hi = 100;
    CHECK_THROWS_AS(scan_range(table, opt), std::invalid_argument);
    opt.lo = 50;
    opt.hi = 50;
    CHECK_THROWS_AS(scan_range(table, opt), std::invalid_argument);
    opt.lo = 5;
    opt.hi = 100;
    opt.candidates = 4;
    ScanReport ok = scan_range(table, opt);  // C smaller than the table is fine
    CHECK(ok.complete());
    opt.candidates = 6;
    CHECK_THROWS_AS(scan_range(a_coefficients(5), opt), std::invalid_argument);
}
