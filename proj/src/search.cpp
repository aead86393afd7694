#include "crossint/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

#include "crossint/fam_io.hpp"
#include "crossint/rational.hpp"

namespace crossint {

namespace {

// ---------------------------------------------------------------------------
// Bitset over the universe of all 2^n masks.
// ---------------------------------------------------------------------------

struct UniverseSet {
    std::vector<uint64_t> w;

    explicit UniverseSet(size_t bits = 0) : w((bits + 63) / 64, 0) {}

    void set(size_t i) { w[i >> 6] |= 1ull << (i & 63); }
    bool test(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1ull; }
    void fill_all(size_t bits) {
        std::fill(w.begin(), w.end(), ~0ull);
        if (bits & 63) w.back() = (1ull << (bits & 63)) - 1;
    }
    size_t count() const {
        size_t c = 0;
        for (uint64_t x : w) c += std::popcount(x);
        return c;
    }
    bool none() const {
        for (uint64_t x : w) {
            if (x != 0) return false;
        }
        return true;
    }
    // bits [0, c) equal?
    bool prefix_equal(const UniverseSet& o, size_t c) const {
        size_t full = c >> 6;
        for (size_t i = 0; i < full; ++i) {
            if (w[i] != o.w[i]) return false;
        }
        if (c & 63) {
            uint64_t m = (1ull << (c & 63)) - 1;
            if ((w[full] & m) != (o.w[full] & m)) return false;
        }
        return true;
    }
    template <typename F>
    void for_each(F f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            for (uint64_t x = w[i]; x != 0; x &= x - 1) {
                f((i << 6) + std::countr_zero(x));
            }
        }
    }
};

void and_or_of_rows(const std::vector<UniverseSet>& cross, const UniverseSet& sel, size_t nwords,
                    UniverseSet& conj, UniverseSet& disj) {
    conj.w.assign(nwords, ~0ull);
    disj.w.assign(nwords, 0);
    sel.for_each([&](size_t b) {
        const auto& row = cross[b].w;
        for (size_t i = 0; i < nwords; ++i) {
            conj.w[i] &= row[i];
            disj.w[i] |= row[i];
        }
    });
}

// ---------------------------------------------------------------------------
// Streaming rank over exact rationals (used by the dimension prune).
// ---------------------------------------------------------------------------

struct RatBasis {
    int n;
    std::vector<std::vector<Rational>> rows;  // reduced, each with a unit leading entry
    std::vector<int> lead;

    explicit RatBasis(int n_) : n(n_) {}
    int rank() const { return static_cast<int>(rows.size()); }

    bool add(std::vector<Rational> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Rational c = v[lead[r]];  // by value: the loop below writes v[lead[r]]
            if (c.is_zero()) continue;
            for (int j = 0; j < n; ++j) v[j] -= c * rows[r][j];
        }
        int l = -1;
        for (int j = 0; j < n; ++j) {
            if (!v[j].is_zero()) {
                l = j;
                break;
            }
        }
        if (l < 0) return false;
        const Rational inv = Rational(1) / v[l];
        for (int j = 0; j < n; ++j) v[j] *= inv;
        rows.push_back(std::move(v));
        lead.push_back(l);
        return true;
    }

    bool add_mask(uint32_t m) {
        std::vector<Rational> v(n);
        for (uint32_t x = m; x != 0; x &= x - 1) v[std::countr_zero(x)] = Rational(1);
        return add(std::move(v));
    }
};

// ---------------------------------------------------------------------------
// The close-by-one search.
//
// Discipline: closed A-sides are enumerated by extending with candidate masks
// in ascending numeric (canonical) order and closing; an extension at mask c
// is kept only when the closure adds nothing below c (the lexicographically
// least generator reaches each closed set exactly once). Root branches are
// handed to workers; they share one monotone incumbent, and pruning is
// strict (bound < incumbent), so every optimal closed pair is visited under
// any schedule; that is what pins the reported witness.
// ---------------------------------------------------------------------------

class Searcher {
   public:
    Searcher(int n, int ell, const SearchConfig& cfg)
        : n_(n), ell_(ell), cfg_(cfg), universe_(size_t{1} << n), nwords_((universe_ + 63) / 64) {
        cross_.reserve(universe_);
        cnt_.resize(universe_);
        for (size_t m = 0; m < universe_; ++m) {
            UniverseSet row(universe_);
            for (size_t b = 0; b < universe_; ++b) {
                if (std::popcount(static_cast<uint32_t>(m) & static_cast<uint32_t>(b)) == ell) row.set(b);
            }
            cnt_[m] = static_cast<long long>(row.count());
            cross_.push_back(std::move(row));
        }
    }

    // Seed the incumbent with a realized product (the single-set construction,
    // checked here, not assumed). Pruning is strict, so subtrees that merely
    // tie the seed still get explored and every optimum is still visited.
    void seed_incumbent() {
        if (n_ < 2 * ell_) return;
        CrossPair acz = acz_pair(n_, ell_);
        if (!is_cross_intersecting(acz)) return;
        bump_incumbent(static_cast<long long>(acz.a.size()) * static_cast<long long>(acz.b.size()));
    }

    SearchReport run() {
        const auto t0 = std::chrono::steady_clock::now();
        SearchReport rep;
        seed_incumbent();

        UniverseSet b_root(universe_);
        b_root.fill_all(universe_);
        UniverseSet a_root(universe_), disj(universe_);
        and_or_of_rows(cross_, b_root, nwords_, a_root, disj);

        std::vector<Local> locals(static_cast<size_t>(cfg_.worker_count));
        if (!a_root.none()) {
            visited_.fetch_add(1, std::memory_order_relaxed);
            record(locals[0], a_root, b_root);
        }

        std::atomic<size_t> next_root{0};
        auto work = [&](int wid) {
            Local& loc = locals[static_cast<size_t>(wid)];
            for (;;) {
                size_t c = next_root.fetch_add(1);
                if (c >= universe_) break;
                if (a_root.test(c)) continue;
                expand_child(a_root, b_root, c, loc);
            }
        };
        if (cfg_.worker_count == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int i = 0; i < cfg_.worker_count; ++i) pool.emplace_back(work, i);
            for (auto& t : pool) t.join();
        }

        rep.value = incumbent_.load();
        rep.nodes_visited = visited_.load();
        rep.nodes_pruned = pruned_.load();

        // deterministic merge: strict pruning visited every optimal closed
        // pair, so the encoding order is schedule-independent
        std::vector<std::pair<std::string, CrossPair>> winners;
        for (auto& loc : locals) {
            for (auto& [prod, enc, pair] : loc.optima) {
                if (prod == rep.value) winners.emplace_back(std::move(enc), std::move(pair));
            }
        }
        std::sort(winners.begin(), winners.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        if (!cfg_.enumerate_all_optima && winners.size() > 1)
            winners.erase(winners.begin() + 1, winners.end());
        for (auto& [enc, pair] : winners) rep.witnesses.push_back(std::move(pair));

        rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0);
        return rep;
    }

   private:
    struct Local {
        long long best = 0;
        std::vector<std::tuple<long long, std::string, CrossPair>> optima;
    };

    CrossPair to_pair(const UniverseSet& a, const UniverseSet& b) const {
        std::vector<SubsetMask> as, bs;
        a.for_each([&](size_t m) { as.push_back(SubsetMask(static_cast<uint32_t>(m))); });
        b.for_each([&](size_t m) { bs.push_back(SubsetMask(static_cast<uint32_t>(m))); });
        return CrossPair(Family(n_, std::move(as)), Family(n_, std::move(bs)), ell_, true);
    }

    void bump_incumbent(long long v) {
        long long cur = incumbent_.load();
        while (cur < v && !incumbent_.compare_exchange_weak(cur, v)) {
        }
    }

    void record(Local& loc, const UniverseSet& a, const UniverseSet& b) {
        if (a.none() || b.none()) return;
        const long long prod = static_cast<long long>(a.count()) * static_cast<long long>(b.count());
        const long long inc = incumbent_.load();
        if (prod < inc || prod < loc.best) return;
        if (prod > loc.best) {
            loc.best = prod;
            // drop entries that can no longer win
            std::erase_if(loc.optima, [&](const auto& t) { return std::get<0>(t) < prod; });
        }
        CrossPair p = to_pair(a, b);
        std::string enc = encode_pair(p);
        if (!cfg_.enumerate_all_optima) {
            // keep only the lexicographically least encoding at the best value
            bool keep = true;
            for (auto& t : loc.optima) {
                if (std::get<0>(t) == prod) {
                    if (std::get<1>(t) <= enc) {
                        keep = false;
                    }
                }
            }
            if (keep) {
                std::erase_if(loc.optima, [&](const auto& t) { return std::get<0>(t) == prod; });
                loc.optima.emplace_back(prod, std::move(enc), std::move(p));
            }
        } else {
            loc.optima.emplace_back(prod, std::move(enc), std::move(p));
        }
        bump_incumbent(prod);
    }

    // closure and bookkeeping for extending (a, b) with candidate c; recurses
    void expand_child(const UniverseSet& a, const UniverseSet& b, size_t c, Local& loc) {
        UniverseSet b2(universe_);
        {
            const auto& row = cross_[c].w;
            for (size_t i = 0; i < nwords_; ++i) b2.w[i] = b.w[i] & row[i];
        }
        if (b2.none()) return;  // no valid pair at or below this extension

        UniverseSet a2(universe_), compat(universe_);
        and_or_of_rows(cross_, b2, nwords_, a2, compat);
        if (!a2.prefix_equal(a, c)) return;  // non-canonical closure; seen elsewhere

        visited_.fetch_add(1, std::memory_order_relaxed);
        record(loc, a2, b2);

        const long long size_a = static_cast<long long>(a2.count());
        const long long size_b = static_cast<long long>(b2.count());
        if (cfg_.prune_product) {
            long long remaining = 0;
            long long max_a = 0;
            for (size_t i = (c + 1) >> 6; i < nwords_; ++i) {
                uint64_t x = compat.w[i] & ~a2.w[i];
                if (i == ((c + 1) >> 6) && ((c + 1) & 63)) x &= ~((1ull << ((c + 1) & 63)) - 1);
                remaining += std::popcount(x);
            }
            b2.for_each([&](size_t bb) { max_a = std::max(max_a, cnt_[bb]); });
            const long long ub = std::min(size_a + remaining, max_a) * size_b;
            if (ub < incumbent_.load()) {
                pruned_.fetch_add(1, std::memory_order_relaxed);
                return;
            }
        }
        if (cfg_.prune_dimension) {
            const long long ub = dimension_bound(a2, compat, b2, c);
            if (ub < incumbent_.load()) {
                pruned_.fetch_add(1, std::memory_order_relaxed);
                return;
            }
        }

        for (size_t c2 = c + 1; c2 < universe_; ++c2) {
            if (!a2.test(c2)) expand_child(a2, b2, c2, loc);
        }
    }

    // Sound span bound for every descendant of this node: descendants draw
    // A-side members from pool = A ∪ {compatible candidates past c} and
    // B-sides from subsets of b2, so |A'||B'| ≤ 2^{rank(pool) + diffrank(b2)}.
    long long dimension_bound(const UniverseSet& a2, const UniverseSet& compat, const UniverseSet& b2,
                              size_t c) const {
        RatBasis pool(n_);
        int k = 0;
        a2.for_each([&](size_t m) {
            if (k < n_ && pool.add_mask(static_cast<uint32_t>(m))) ++k;
        });
        if (k < n_) {
            for (size_t m = c + 1; m < universe_ && k < n_; ++m) {
                if (!a2.test(m) && compat.test(m) && pool.add_mask(static_cast<uint32_t>(m))) ++k;
            }
        }
        RatBasis diffs(n_);
        int h = 0;
        long long b1 = -1;
        b2.for_each([&](size_t m) {
            if (b1 < 0) {
                b1 = static_cast<long long>(m);
                return;
            }
            if (h >= n_) return;
            std::vector<Rational> v(n_);
            uint32_t mm = static_cast<uint32_t>(m), base = static_cast<uint32_t>(b1);
            for (int j = 0; j < n_; ++j) {
                int d = static_cast<int>((mm >> j) & 1u) - static_cast<int>((base >> j) & 1u);
                if (d != 0) v[j] = Rational(d);
            }
            if (diffs.add(std::move(v))) ++h;
        });
        if (k + h >= 62) return (1ll << 62);
        return 1ll << (k + h);
    }

    int n_;
    int ell_;
    SearchConfig cfg_;
    size_t universe_;
    size_t nwords_;
    std::vector<UniverseSet> cross_;
    std::vector<long long> cnt_;
    std::atomic<long long> incumbent_{0};
    std::atomic<uint64_t> visited_{0};
    std::atomic<uint64_t> pruned_{0};
};

}  // namespace

Family beta_operator(const Family& f, int ell) {
    const int n = f.n();
    std::vector<SubsetMask> out;
    const uint32_t full = n == 0 ? 0u : (1u << n) - 1u;
    for (uint32_t m = 0;; ++m) {
        bool ok = true;
        for (const auto& a : f.members()) {
            if (std::popcount(a.bits & m) != ell) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(SubsetMask(m));
        if (m == full) break;
    }
    return Family(n, std::move(out));
}

CrossPair closure(const Family& f, int ell) {
    Family b = beta_operator(f, ell);
    Family a = beta_operator(b, ell);
    return CrossPair(std::move(a), std::move(b), ell);
}

SearchReport max_product(int n, int ell, const SearchConfig& config) {
    if (n < 1 || n > kSearchHardCap) throw std::invalid_argument("max_product: n out of range");
    if (ell < 0 || ell > n) throw std::invalid_argument("max_product: ell out of range");
    if (config.worker_count < 1) throw std::invalid_argument("max_product: worker_count < 1");
    Searcher s(n, ell, config);
    return s.run();
}

// ---------------------------------------------------------------------------
// Classification against the canonical extremal family.
// ---------------------------------------------------------------------------

namespace {

// permutation search with (degree-in-A, degree-in-B) signatures as the
// branching invariant; candidates ascending so exact matches return the
// identity
class RelabelSearch {
   public:
    RelabelSearch(const Family& qa, const Family& qb, const Family& ta, const Family& tb)
        : n_(qa.n()), qa_(qa), qb_(qb), ta_(ta), tb_(tb) {}

    bool find(std::vector<int>& out) {
        if (signature_multisets_differ()) return false;
        assigned_.assign(n_, 0);
        used_.assign(n_, 0);
        target_mask_ = 0;
        source_mask_ = 0;
        if (!backtrack(0)) return false;
        out.resize(n_);
        for (int i = 0; i < n_; ++i) out[i] = assigned_[i] + 1;
        return true;
    }

   private:
    static std::vector<std::pair<int, int>> signatures(const Family& a, const Family& b) {
        std::vector<std::pair<int, int>> sig(a.n(), {0, 0});
        for (const auto& m : a.members()) {
            for (uint32_t x = m.bits; x != 0; x &= x - 1) sig[std::countr_zero(x)].first++;
        }
        for (const auto& m : b.members()) {
            for (uint32_t x = m.bits; x != 0; x &= x - 1) sig[std::countr_zero(x)].second++;
        }
        return sig;
    }

    bool signature_multisets_differ() {
        sig_q_ = signatures(qa_, qb_);
        sig_t_ = signatures(ta_, tb_);
        auto sq = sig_q_, st = sig_t_;
        std::sort(sq.begin(), sq.end());
        std::sort(st.begin(), st.end());
        return sq != st;
    }

    // every q-member's image, restricted to assigned targets, must be an
    // assigned-restriction of some target member
    bool partial_ok(const Family& qf, const Family& tf) const {
        for (const auto& m : qf.members()) {
            uint32_t img = 0;
            for (uint32_t x = m.bits & source_mask_; x != 0; x &= x - 1) {
                img |= 1u << assigned_[std::countr_zero(x)];
            }
            bool found = false;
            for (const auto& t : tf.members()) {
                if ((t.bits & target_mask_) == img) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    }

    bool full_match() const {
        std::vector<int> perm(n_);
        for (int i = 0; i < n_; ++i) perm[i] = assigned_[i] + 1;
        return apply_permutation(qa_, perm) == ta_ && apply_permutation(qb_, perm) == tb_;
    }

    bool backtrack(int src) {
        if (src == n_) return full_match();
        for (int t = 0; t < n_; ++t) {
            if (used_[t] || sig_q_[src] != sig_t_[t]) continue;
            assigned_[src] = t;
            used_[t] = 1;
            source_mask_ |= 1u << src;
            target_mask_ |= 1u << t;
            if (partial_ok(qa_, ta_) && partial_ok(qb_, tb_) && backtrack(src + 1)) return true;
            source_mask_ &= ~(1u << src);
            target_mask_ &= ~(1u << t);
            used_[t] = 0;
        }
        return false;
    }

    int n_;
    const Family& qa_;
    const Family& qb_;
    const Family& ta_;
    const Family& tb_;
    std::vector<std::pair<int, int>> sig_q_, sig_t_;
    std::vector<int> assigned_;
    std::vector<char> used_;
    uint32_t source_mask_ = 0, target_mask_ = 0;
};

bool find_relabeling(const Family& qa, const Family& qb, const Family& ta, const Family& tb,
                     std::vector<int>& out) {
    if (qa.size() != ta.size() || qb.size() != tb.size()) return false;
    RelabelSearch rs(qa, qb, ta, tb);
    return rs.find(out);
}

std::vector<CanonicalParams> params_in_order(int n, int ell) {
    std::vector<CanonicalParams> out;
    std::vector<int> kappas = ell == 0 ? std::vector<int>{0} : std::vector<int>{2 * ell, 2 * ell - 1};
    for (int kappa : kappas) {
        for (int tau = 0; tau <= kappa; ++tau) {
            for (int nprime = kappa + tau; nprime <= n; ++nprime) {
                CanonicalParams p{n, ell, kappa, tau, nprime};
                if (canonical_params_legal(p)) out.push_back(p);
            }
        }
    }
    return out;
}

}  // namespace

ClassificationResult classify_extremal(const CrossPair& p) {
    if (p.n > kSearchHardCap) throw std::invalid_argument("classify_extremal: n too large");
    ClassificationResult res;
    if (!is_cross_intersecting(p)) return res;  // canonical pairs all are; nothing can match
    for (const auto& params : params_in_order(p.n, p.ell)) {
        CrossPair q = canonical_pair(params);
        for (bool swapped : {false, true}) {
            const Family& ta = swapped ? p.b : p.a;
            const Family& tb = swapped ? p.a : p.b;
            std::vector<int> perm;
            if (find_relabeling(q.a, q.b, ta, tb, perm)) {
                res.matched = true;
                res.params = params;
                res.swapped = swapped;
                res.relabeling = std::move(perm);
                return res;
            }
        }
    }
    return res;
}

bool pairs_isomorphic(const CrossPair& p, const CrossPair& q) {
    if (p.n != q.n || p.ell != q.ell) return false;
    std::vector<int> perm;
    if (find_relabeling(p.a, p.b, q.a, q.b, perm)) return true;
    return find_relabeling(p.a, p.b, q.b, q.a, perm);
}

OptimaReport enumerate_optima(int n, int ell, int worker_count) {
    SearchConfig cfg;
    cfg.enumerate_all_optima = true;
    cfg.worker_count = worker_count;
    SearchReport rep = max_product(n, ell, cfg);

    OptimaReport out;
    out.value = rep.value;
    out.total_optima = rep.witnesses.size();
    for (const auto& w : rep.witnesses) {
        bool fresh = true;
        for (const auto& r : out.representatives) {
            if (pairs_isomorphic(w, r)) {
                fresh = false;
                break;
            }
        }
        if (fresh) out.representatives.push_back(w);
    }
    for (const auto& r : out.representatives) out.classifications.push_back(classify_extremal(r));
    return out;
}

}  // namespace crossint
