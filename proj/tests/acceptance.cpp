// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria cover exact P_ell(n) values at small n, construction and
// spectra identities, row-classification regimes, the counting-bound
// properties, oracle equivalence of the pruned search, classification round
// trips, and worker determinism.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "crossint/bounds.hpp"
#include "crossint/constructions.hpp"
#include "crossint/fam_io.hpp"
#include "crossint/search.hpp"
#include "crossint/spectra.hpp"

using namespace crossint;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const std::string& label, bool pass, const std::string& detail, double secs) {
    std::printf("%s criterion %2d: %s (%s, %.1fs)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::vector<CanonicalParams> legal_params(int n, int ell) {
    std::vector<CanonicalParams> out;
    for (int kappa : {2 * ell, 2 * ell - 1}) {
        for (int tau = 0; tau <= std::max(kappa, 0); ++tau) {
            for (int nprime = kappa + tau; nprime <= n; ++nprime) {
                CanonicalParams p{n, ell, kappa, tau, nprime};
                if (canonical_params_legal(p)) out.push_back(p);
            }
        }
    }
    return out;
}

// --- criteria 1-3: exact values -------------------------------------------

void exact_values(int id, int ell, int n_lo, int n_hi, double per_instance_limit,
                  long long (*expected)(int)) {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto ti = Clock::now();
        SearchConfig cfg;
        cfg.worker_count = 2;
        SearchReport rep = max_product(n, ell, cfg);
        double secs = seconds_since(ti);
        bool ok = rep.value == expected(n) && secs <= per_instance_limit;
        pass = pass && ok;
        detail += "P_" + std::to_string(ell) + "(" + std::to_string(n) + ")=" + std::to_string(rep.value) +
                  (ok ? "" : "!") + " ";
    }
    report(id, "exact values, ell=" + std::to_string(ell), pass, detail, seconds_since(t0));
}

void criterion_4_sandwich_and_sgall() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    long long p3[9] = {0};
    for (int n = 6; n <= 8; ++n) {
        SearchConfig cfg;
        cfg.worker_count = 2;
        SearchReport rep = max_product(n, 3, cfg);
        p3[n] = rep.value;
        long long lo = (binomial(6, 3) * BigInt::pow2(static_cast<unsigned>(n - 6))).to_int64();
        long long hi = (1ll << (n - 1));
        bool ok = lo <= rep.value && rep.value <= hi;
        pass = pass && ok;
        detail += "P_3(" + std::to_string(n) + ")=" + std::to_string(rep.value) + " in [" +
                  std::to_string(lo) + "," + std::to_string(hi) + "]" + (ok ? "" : "!") + " ";
    }
    report(4, "sandwich at unproven ell=3 (empirical values logged)", pass, detail, seconds_since(t0));

    // Sgall spot check: P_ell(n) non-increasing in ell at fixed n over the
    // searched range; reported, asserted only at theorem-backed ell <= 2
    auto ts = Clock::now();
    bool sgall_ok = true;
    std::string sg;
    for (int n = 6; n <= 8; ++n) {
        std::vector<long long> seq;
        for (int ell = 0; ell <= 3; ++ell) {
            SearchConfig cfg;
            cfg.worker_count = 2;
            seq.push_back(ell == 3 ? p3[n] : max_product(n, ell, cfg).value);
        }
        sg += "n=" + std::to_string(n) + ": ";
        for (long long v : seq) sg += std::to_string(v) + " ";
        sgall_ok = sgall_ok && seq[0] == (1ll << n) && seq[1] == (1ll << (n - 1)) &&
                   seq[2] == 3ll << (n - 3);
        for (size_t i = 1; i < seq.size(); ++i) sgall_ok = sgall_ok && seq[i] <= seq[i - 1];
    }
    std::printf("  info: Sgall monotonicity spot check: %s(%s, %.1fs)\n", sgall_ok ? "ok " : "VIOLATED ",
                sg.c_str(), seconds_since(ts));
    if (!sgall_ok) ++failures;
}

void criterion_5_construction_identity() {
    auto t0 = Clock::now();
    bool pass = true;
    long long count = 0;
    for (int ell = 0; ell <= 6; ++ell) {
        for (int n = 1; n <= 16; ++n) {
            for (const auto& prm : legal_params(n, ell)) {
                CrossPair p = canonical_pair(prm);
                BigInt product = BigInt(static_cast<long long>(p.a.size())) *
                                 BigInt(static_cast<long long>(p.b.size()));
                bool ok = product == binomial(prm.kappa, ell) * BigInt::pow2(static_cast<unsigned>(n - prm.kappa)) &&
                          product * BigInt::pow2(static_cast<unsigned>(2 * ell)) ==
                              binomial(2 * ell, ell) * BigInt::pow2(static_cast<unsigned>(n)) &&
                          is_cross_intersecting(p);
                pass = pass && ok;
                ++count;
            }
        }
    }
    double secs = seconds_since(t0);
    report(5, "construction identity over all legal parameters (ell<=6, n<=16)", pass && secs <= 60,
           std::to_string(count) + " pairs", secs);
}

void criterion_6_spectra_duality() {
    auto t0 = Clock::now();
    bool pass = true;
    long long count = 0;
    for (int ell = 1; ell <= 6; ++ell) {
        for (int n = 1; n <= 16; ++n) {
            for (const auto& prm : legal_params(n, ell)) {
                if (prm.nprime != n || prm.kappa + prm.tau != n) continue;
                CrossPair p = canonical_pair(prm);
                auto [k, h] = span_dims(p, 0);
                bool ok = k + h == n;
                if (ok) {
                    auto [ma, mb] = dual_forms(p, 0);
                    ok = duality_check(ma, mb);
                }
                pass = pass && ok;
                ++count;
            }
        }
    }
    double secs = seconds_since(t0);
    report(6, "spectra duality in the normalized regime (nprime=n, kappa+tau=n)", pass && secs <= 10,
           std::to_string(count) + " pairs", secs);
}

void criterion_7_row_classification() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;

    auto smallest_legal = [](MatrixVariant v, int count) {
        std::vector<MatrixFamilySpec> out;
        for (int ell = 1; ell <= 4 && static_cast<int>(out.size()) < count; ++ell) {
            for (int n = 1; n <= 16 && static_cast<int>(out.size()) < count; ++n) {
                bool any = false;
                for (int k = 1; k <= n && !any; ++k) any = matrix_spec_legal(v, ell, n, k);
                if (any) out.push_back(matrix_pair_spec(v, ell, n));
            }
        }
        return out;
    };

    for (const auto& s : smallest_legal(MatrixVariant::OmegaFamily, 3)) {
        auto rc = classify_rows(s.ma, SelectStrategy::MaxColumn);
        bool ok = rc.r_rows.empty() && static_cast<int>(rc.s_rows.size()) == s.k;
        pass = pass && ok;
        detail += "omega(" + std::to_string(s.ell) + "," + std::to_string(s.n) + "): r=" +
                  std::to_string(rc.r_rows.size()) + ",s=" + std::to_string(rc.s_rows.size()) +
                  (ok ? "" : "!") + " ";
    }
    for (const auto& s : smallest_legal(MatrixVariant::OFamily1, 3)) {
        auto rc = classify_rows(s.ma, SelectStrategy::MaxColumn);
        bool ok = rc.r_rows.size() + rc.s_rows.size() <= 2;
        pass = pass && ok;
        detail += "o1(" + std::to_string(s.ell) + "," + std::to_string(s.n) + "): r+s=" +
                  std::to_string(rc.r_rows.size() + rc.s_rows.size()) + (ok ? "" : "!") + " ";
    }
    report(7, "row-classification regimes at the three smallest legal sizes", pass, detail,
           seconds_since(t0));
}

void criterion_8_littlewood_offord() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(20260808);
    bool pass = true;
    for (int rep = 0; rep < 1000; ++rep) {
        int m = 1 + static_cast<int>(rng() % 14);
        std::vector<Rational> a;
        Rational delta;
        for (int i = 0; i < m; ++i) {
            long long num = static_cast<long long>(rng() % 25) - 12;
            if (num == 0) num = 13;
            long long den = 1 + static_cast<long long>(rng() % 6);
            Rational v{BigInt(num), BigInt(den)};
            a.push_back(v);
            if (i == 0 || v.abs() < delta) delta = v.abs();
        }
        int ivals = 1 + static_cast<int>(rng() % 4);
        std::vector<std::pair<Rational, Rational>> parts;
        Rational cursor(BigInt(-(static_cast<long long>(rng() % 10))), BigInt(1 + static_cast<long long>(rng() % 3)));
        for (int i = 0; i < ivals; ++i) {
            Rational w = delta * Rational(BigInt(1 + static_cast<long long>(rng() % 8)), BigInt(8));
            parts.emplace_back(cursor, cursor + w);
            cursor = cursor + w + Rational(BigInt(static_cast<long long>(rng() % 5)), BigInt(3));
        }
        long long cnt = lo_count(a, IntervalUnion(parts));
        pass = pass && BigInt(cnt) <= middle_binomial_sum(m, std::min(ivals, m + 1));
    }
    // tightness: seven +1 and seven -1 against [0,1) meets the bound exactly
    std::vector<Rational> tight;
    for (int i = 0; i < 7; ++i) tight.emplace_back(1);
    for (int i = 0; i < 7; ++i) tight.emplace_back(-1);
    long long c = lo_count(tight, IntervalUnion({{Rational(0), Rational(1)}}));
    pass = pass && BigInt(c) == middle_binomial_sum(14, 1) && c == 3432;
    double secs = seconds_since(t0);
    report(8, "Littlewood-Offord bound on 1000 random instances + tightness", pass && secs <= 30,
           "tight count 3432", secs);
}

void criterion_9_lym_bipartite() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(424242);
    bool pass = true;
    int accepted = 0;
    while (accepted < 1000) {
        int n = 2 + static_cast<int>(rng() % 9);  // n <= 10
        int u = static_cast<int>(rng() % (n + 1));
        int size = 1 + static_cast<int>(rng() % 8);
        std::vector<SubsetMask> ms;
        for (int i = 0; i < size; ++i)
            ms.push_back(SubsetMask(static_cast<uint32_t>(rng() & ((1u << n) - 1))));
        Family f(n, ms);
        // Prop 2.3 hypothesis: each pair incomparable on U or on V
        const uint32_t umask = u == 0 ? 0u : (1u << u) - 1u;
        auto incomparable = [](uint32_t x, uint32_t y) {
            return (x & y) != x && (x & y) != y;
        };
        bool hyp = true;
        for (size_t i = 0; i < f.size() && hyp; ++i) {
            for (size_t j = i + 1; j < f.size() && hyp; ++j) {
                uint32_t x = f.members()[i].bits, y = f.members()[j].bits;
                hyp = incomparable(x & umask, y & umask) || incomparable(x & ~umask, y & ~umask);
            }
        }
        if (!hyp) continue;
        ++accepted;
        pass = pass && lym_sum(f, u) <= Rational(1);
        pass = pass && BigInt(static_cast<long long>(f.size())) <= bipartite_bound(u, n);
        // when the stronger bipartite hypothesis also holds, the same bound applies
        if (bipartite_hypothesis(f, u)) {
            pass = pass && BigInt(static_cast<long long>(f.size())) <= bipartite_bound(u, n);
        }
    }
    double secs = seconds_since(t0);
    report(9, "LYM sum <= 1 and bipartite bound on 1000 rejection-sampled families", pass && secs <= 60,
           "1000 accepted", secs);
}

void criterion_10_oracle_equivalence() {
    auto t0 = Clock::now();
    bool pass = true;
    for (int n = 1; n <= 4; ++n) {
        for (int ell = 0; ell <= std::min(2, n); ++ell) {
            // independent oracle: close every subset of the universe, no
            // close-by-one, no canonicity, no pruning
            const uint32_t universe = 1u << n;
            auto beta = [&](const std::vector<uint32_t>& fam) {
                std::vector<uint32_t> out;
                for (uint32_t m = 0; m < universe; ++m) {
                    bool ok = true;
                    for (uint32_t x : fam) {
                        if (std::popcount(x & m) != ell) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) out.push_back(m);
                }
                return out;
            };
            long long naive = 0;
            for (uint32_t gen = 1; gen < (1u << universe); ++gen) {
                std::vector<uint32_t> fam;
                for (uint32_t m = 0; m < universe; ++m) {
                    if (gen & (1u << m)) fam.push_back(m);
                }
                auto b = beta(fam);
                if (b.empty()) continue;
                auto a = beta(b);
                naive = std::max(naive, static_cast<long long>(a.size()) * static_cast<long long>(b.size()));
            }
            SearchConfig cfg;
            cfg.prune_product = true;
            cfg.prune_dimension = true;
            pass = pass && max_product(n, ell, cfg).value == naive;
        }
    }
    double secs = seconds_since(t0);
    report(10, "pruned search equals naive closed-pair enumeration (n<=4, ell<=2)", pass && secs <= 60,
           "all pruning enabled", secs);
}

void criterion_11_classification_round_trip() {
    auto t0 = Clock::now();
    bool pass = true;
    long long count = 0;
    for (int ell = 0; ell <= 3; ++ell) {
        for (int n = 1; n <= 8; ++n) {
            for (const auto& prm : legal_params(n, ell)) {
                CrossPair p = canonical_pair(prm);
                ClassificationResult r = classify_extremal(p);
                bool ok = r.matched;
                if (ok) {
                    CrossPair rebuilt = apply_permutation(canonical_pair(r.params), r.relabeling, r.swapped);
                    ok = rebuilt.a == p.a && rebuilt.b == p.b;
                }
                pass = pass && ok;
                ++count;
            }
        }
    }
    double secs = seconds_since(t0);
    report(11, "classification round-trip for all legal parameters (n<=8, ell<=3)", pass && secs <= 300,
           std::to_string(count) + " parameter sets", secs);
}

void criterion_12_determinism() {
    auto t0 = Clock::now();
    bool pass = true;
    long long count = 0;
    auto run_suite = [&](int ell, int n_lo, int n_hi) {
        for (int n = n_lo; n <= n_hi; ++n) {
            SearchConfig one;
            one.worker_count = 1;
            SearchConfig four;
            four.worker_count = 4;
            SearchReport r1 = max_product(n, ell, one);
            SearchReport r4 = max_product(n, ell, four);
            bool ok = r1.value == r4.value && !r1.witnesses.empty() && !r4.witnesses.empty() &&
                      encode_pair(r1.witnesses.front()) == encode_pair(r4.witnesses.front());
            pass = pass && ok;
            ++count;
        }
    };
    run_suite(0, 1, 6);
    run_suite(1, 2, 6);
    run_suite(2, 4, 7);
    report(12, "worker determinism (value + canonical-minimal witness, ell<=2 suite)", pass,
           std::to_string(count) + " instances x {1,4} workers", seconds_since(t0));
}

}  // namespace

int main() {
    std::printf("crossint acceptance suite\n");
    auto t0 = Clock::now();

    exact_values(1, 0, 1, 6, 10.0, [](int n) { return 1ll << n; });
    exact_values(2, 1, 2, 6, 60.0, [](int n) { return 1ll << (n - 1); });
    exact_values(3, 2, 4, 7, 600.0, [](int n) { return 3ll << (n - 3); });
    criterion_4_sandwich_and_sgall();
    criterion_5_construction_identity();
    criterion_6_spectra_duality();
    criterion_7_row_classification();
    criterion_8_littlewood_offord();
    criterion_9_lym_bipartite();
    criterion_10_oracle_equivalence();
    criterion_11_classification_round_trip();
    criterion_12_determinism();

    std::printf("%s: %d failure(s), %.1fs total\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
                failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
