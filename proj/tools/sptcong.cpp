#include "CLI11.hpp"

#include "sptcong/partitions.hpp"
#include "sptcong/scan.hpp"
#include "sptcong/verify.hpp"

#include <omp.h>

#include <cstdlib>
#include <iostream>

using namespace sptcong;

namespace {

int default_workers() {
    if (const char* env = std::getenv("SPTCONG_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return omp_get_max_threads();
}

int run_tables(const std::string& kind, long count) {
    if (kind == "p") {
        auto p = partition_table(count);
        for (long n = 0; n <= count; ++n) std::cout << n << ' ' << p[n].get_str() << '\n';
        return 0;
    }
    if (kind == "spt") {
        auto s = spt_table(count);
        for (long n = 1; n <= count; ++n) std::cout << n << ' ' << s[n].get_str() << '\n';
        return 0;
    }
    if (kind == "a") {
        CandidateTable t = a_coefficients(count);
        for (const auto& e : t.entries)
            std::cout << e.k << ' ' << e.n << ' ' << e.a.get_str() << '\n';
        return 0;
    }
    std::cerr << "unknown table kind: " << kind << " (expected p, spt or a)\n";
    return 2;
}

// series names: f, eta, delta, e<k>, f<k>, fell, gell
int run_series(const std::string& name, long terms, uint64_t ell, uint64_t mod,
               const std::string& form) {
    long xt = 24 * terms + 2;
    ExactRing exact;
    auto emit_exact = [&](const SeriesQ& s) {
        if (mod)
            dump_series(std::cout, reduce_series(s, mod));
        else
            dump_series(std::cout, s);
        return 0;
    };
    if (name == "f") return emit_exact(f_series(xt));
    if (name == "eta") return emit_exact(eta_series(exact, xt));
    if (name == "delta") return emit_exact(delta_series(exact, xt));
    if (name == "fell" || name == "gell") {
        if (!ell) {
            std::cerr << "series " << name << " requires --ell\n";
            return 2;
        }
        if (name == "fell")
            dump_series(std::cout, f_ell_series(ell, xt));
        else
            dump_series(std::cout, g_ell_series(ell, xt));
        return 0;
    }
    if (name.size() > 1 && (name[0] == 'e' || name[0] == 'f')) {
        long k = std::atol(name.c_str() + 1);
        if (k >= 2 && k % 2 == 0) {
            if (name[0] == 'e') return emit_exact(eisenstein(exact, static_cast<unsigned>(k), xt));
            FForm f = form == "n" ? FForm::n_sum : FForm::rs_sum;
            return emit_exact(zagier_f(static_cast<unsigned>(k), xt, f));
        }
    }
    std::cerr << "unknown series: " << name
              << " (expected f, eta, delta, e<k>, f<k>, fell, gell)\n";
    return 2;
}

void print_verdict(const Verdict& v, bool human) {
    if (human)
        std::cout << (v.pass ? "PASS  " : "FAIL  ") << v.to_line() << '\n';
    else
        std::cout << v.to_line() << '\n';
}

int run_verify(const std::string& claim, long terms, long ell_opt, int n_opt, int samples,
               uint64_t seed, bool quick, bool human) {
    std::vector<Verdict> verdicts;
    std::vector<uint64_t> small{5, 7, 11, 13};
    std::vector<uint64_t> all_ell{5, 7, 11, 13, 17, 19, 23};
    auto ells = [&](const std::vector<uint64_t>& def) {
        return ell_opt > 0 ? std::vector<uint64_t>{static_cast<uint64_t>(ell_opt)} : def;
    };
    if (claim == "all") {
        verdicts = verify_all(quick);
    } else if (claim == "prop21-1") {
        verdicts.push_back(verify_prop21_part1(terms > 0 ? terms : 300));
    } else if (claim == "prop21-2") {
        if (n_opt > 0)
            verdicts.push_back(verify_prop21_part2(static_cast<unsigned>(n_opt),
                                                   terms > 0 ? terms : 200));
        else
            for (unsigned n = 1; n <= 4; ++n)
                verdicts.push_back(verify_prop21_part2(n, terms > 0 ? terms : 200));
    } else if (claim == "thm12") {
        for (uint64_t l : ells(all_ell)) verdicts.push_back(verify_theorem12(l, terms));
    } else if (claim == "thm11") {
        for (uint64_t l : ells(all_ell)) verdicts.push_back(verify_theorem11(l, terms));
    } else if (claim == "sec3") {
        for (uint64_t l : ells(small)) verdicts.push_back(verify_section3(l, terms > 0 ? terms : 60));
    } else if (claim == "lemma22") {
        for (uint64_t l : ells(small))
            verdicts.push_back(verify_lemma22(l, samples > 0 ? samples : 200, seed));
    } else if (claim == "prop51") {
        for (uint64_t l : ells(small)) verdicts.push_back(check_prop51(l, terms > 0 ? terms : 60));
    } else {
        std::cerr << "unknown claim: " << claim
                  << " (expected prop21-1, prop21-2, thm11, thm12, sec3, lemma22, prop51, all)\n";
        return 2;
    }
    bool ok = true;
    for (const auto& v : verdicts) {
        print_verdict(v, human);
        ok = ok && v.pass;
    }
    return ok ? 0 : 1;
}

int run_filtration(const std::string& name, uint64_t ell, long terms) {
    ModRing ring(ell);
    long tq = terms > 0 ? terms : 0;
    SeriesFp g(ring, 0, 1);
    int nominal = 0;
    if (name == "delta") {
        nominal = 12;
        tq = tq ? tq : policy_precision(nominal);
        g = delta_series(ring, 24 * tq + 2);
    } else if (name == "gell") {
        nominal = static_cast<int>(ell) + 1 + static_cast<int>((ell * ell - 1) / 2);
        tq = tq ? tq : policy_precision(nominal);
        g = g_ell_series(ell, 24 * tq + 2);
    } else if (name.size() > 1 && name[0] == 'e') {
        long k = std::atol(name.c_str() + 1);
        if (k < 2 || k % 2) {
            std::cerr << "unknown filtration series: " << name << '\n';
            return 2;
        }
        nominal = static_cast<int>(k);
        tq = tq ? tq : policy_precision(nominal);
        g = reduce_series(eisenstein(ExactRing{}, static_cast<unsigned>(k), 24 * tq + 2), ell);
    } else {
        std::cerr << "unknown filtration series: " << name << " (expected delta, e<k>, gell)\n";
        return 2;
    }
    Filtration f = filtration(g, nominal, ell);
    std::cout << "filtration " << name << " ell=" << ell << " nominal=" << nominal << ' ';
    switch (f.status) {
        case FiltrationStatus::Zero:
            std::cout << "ZERO\n";
            break;
        case FiltrationStatus::NotMember:
            std::cout << "NOT-MEMBER\n";
            return 1;
        case FiltrationStatus::Value: {
            std::cout << "w=" << f.value << " combo=[";
            for (size_t i = 0; i < f.fit.combo.size(); ++i)
                std::cout << (i ? "," : "") << f.fit.combo[i];
            std::cout << "]";
            if (!f.below_space_empty) std::cout << " below-witness-q=" << f.below_witness_q;
            std::cout << '\n';
            break;
        }
    }
    return 0;
}

int run_scan(const ScanOptions& opt, bool serial, bool human) {
    CandidateTable table = opt.primes_only ? a_coefficients_with_primes(opt.candidates)
                                           : a_coefficients(opt.candidates);
    ScanReport rep = serial ? scan_range_serial(table, opt) : scan_range(table, opt);
    std::cout << rep.full_text();
    if (human) {
        std::cout << "# scanned " << rep.primes_scanned << " primes in [" << rep.lo << ", "
                  << rep.hi << "), " << rep.exceptional.size() << " exceptional\n";
        if (!rep.complete())
            std::cout << "# incomplete: resume from cursor " << rep.cursor
                      << " via --checkpoint\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spt congruence toolkit: q-series verdicts and the prime scan"};
    app.require_subcommand(1);

    // tables
    std::string table_kind = "a";
    long table_count = 50;
    auto* tables = app.add_subcommand("tables", "dump p(n), spt(n) or the candidate table a(n)");
    tables->add_option("--kind", table_kind, "p, spt or a");
    tables->add_option("--count", table_count, "largest index (or candidate count)");

    // series
    std::string series_name;
    long series_terms = 20;
    uint64_t series_ell = 0, series_mod = 0;
    std::string series_form = "rs";
    auto* series = app.add_subcommand("series", "print a series as 'exponent coefficient' lines");
    series->add_option("--name", series_name, "f, eta, delta, e<k>, f<k>, fell, gell")->required();
    series->add_option("--terms", series_terms, "q-expansion terms");
    series->add_option("--ell", series_ell, "prime for fell/gell");
    series->add_option("--mod", series_mod, "reduce an exact series mod this prime");
    series->add_option("--form", series_form, "F_k representation: rs or n");

    // verify
    std::string claim;
    long v_terms = 0;
    long v_ell = 0;
    int v_n = 0, v_samples = 0;
    uint64_t v_seed = 0x5eed5eedull;
    bool v_quick = false, v_human = false;
    auto* verify = app.add_subcommand("verify", "run one claim (or all) and print verdict lines");
    verify->add_option("claim", claim, "prop21-1, prop21-2, thm11, thm12, sec3, lemma22, prop51, all")
        ->required();
    verify->add_option("--terms", v_terms, "precision in q-terms (0: per-claim default)");
    verify->add_option("--ell", v_ell, "restrict to one prime");
    verify->add_option("--n", v_n, "bracket index for prop21-2");
    verify->add_option("--samples", v_samples, "sample count for lemma22");
    verify->add_option("--seed", v_seed, "random seed for lemma22");
    verify->add_flag("--quick", v_quick, "reduced precision for 'all'");
    verify->add_flag("--human", v_human, "human-oriented output");

    // filtration
    std::string filt_name;
    uint64_t filt_ell = 5;
    long filt_terms = 0;
    auto* filt = app.add_subcommand("filtration", "compute the filtration of a named series");
    filt->add_option("--name", filt_name, "delta, e<k>, gell")->required();
    filt->add_option("--ell", filt_ell, "prime >= 5")->required();
    filt->add_option("--terms", filt_terms, "q-precision (0: policy)");

    // scan
    ScanOptions sopt;
    sopt.workers = default_workers();
    bool scan_serial = false, scan_human = false;
    auto* scan = app.add_subcommand("scan", "search primes for spt congruence witnesses");
    scan->add_option("--from", sopt.lo, "range start (>= 5)")->required();
    scan->add_option("--to", sopt.hi, "range end (exclusive)")->required();
    scan->add_option("--candidates", sopt.candidates, "candidates per prime (default 50)");
    scan->add_option("--workers", sopt.workers, "worker threads (env SPTCONG_WORKERS)");
    scan->add_option("--checkpoint", sopt.checkpoint_path, "checkpoint file for resume");
    scan->add_option("--segment-width", sopt.segment_width, "numbers per segment");
    scan->add_option("--stop-after-segments", sopt.stop_after_segments,
                     "stop early after this many segments (testing)");
    scan->add_flag("--primes-only", sopt.primes_only, "restrict candidates to prime n = 23 (mod 24)");
    scan->add_flag("--serial", scan_serial, "use the serial reference kernel");
    scan->add_flag("--human", scan_human, "append a human summary");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tables) return run_tables(table_kind, table_count);
        if (*series)
            return run_series(series_name, series_terms, series_ell, series_mod, series_form);
        if (*verify)
            return run_verify(claim, v_terms, v_ell, v_n, v_samples, v_seed, v_quick, v_human);
        if (*filt) return run_filtration(filt_name, filt_ell, filt_terms);
        if (*scan) return run_scan(sopt, scan_serial, scan_human);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
