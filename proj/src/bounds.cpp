#include "crossint/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace crossint {

BigInt sperner_bound(int n) {
    if (n < 0) throw std::invalid_argument("sperner_bound: n < 0");
    return binomial(n, n / 2);
}

BigInt frankl_rodl_bound(int n, int ell) {
    if (n < 1) throw std::invalid_argument("frankl_rodl_bound: n < 1");
    return ell == 0 ? BigInt::pow2(n) : BigInt::pow2(n - 1);
}

BigInt conjectured_max(int n, int ell) {
    if (ell < 0) throw std::invalid_argument("conjectured_max: ell < 0");
    if (n < 2 * ell) throw std::invalid_argument("conjectured_max: n < 2*ell");
    return binomial(2 * ell, ell) * BigInt::pow2(n - 2 * ell);
}

Rational lym_sum(const Family& f, int u) {
    if (u < 0 || u > f.n()) throw std::invalid_argument("lym_sum: u out of range");
    const uint32_t umask = u == 0 ? 0u : (1u << u) - 1u;
    Rational sum;
    for (const auto& m : f.members()) {
        int au = std::popcount(m.bits & umask);
        int av = m.size() - au;
        sum += Rational(BigInt(1), binomial(u, au) * binomial(f.n() - u, av));
    }
    return sum;
}

bool bipartite_hypothesis(const Family& f, int u) {
    if (u < 0 || u > f.n()) throw std::invalid_argument("bipartite_hypothesis: u out of range");
    if (!is_antichain(f)) return false;
    const uint32_t umask = u == 0 ? 0u : (1u << u) - 1u;
    std::map<int, int> g;
    for (const auto& m : f.members()) {
        int au = std::popcount(m.bits & umask);
        int av = m.size() - au;
        auto [it, inserted] = g.emplace(au, av);
        if (!inserted && it->second != av) return false;  // not single-valued
    }
    int prev = -1;
    for (const auto& [au, av] : g) {
        if (av < prev) return false;  // not monotone
        prev = av;
    }
    return true;
}

BigInt bipartite_bound(int u, int n) {
    if (u < 0 || u > n) throw std::invalid_argument("bipartite_bound: u out of range");
    return binomial(u, u / 2) * binomial(n - u, (n - u) / 2);
}

BigInt middle_binomial_sum(int n, int m) {
    if (n < 0 || m < 0 || m > n + 1) throw std::invalid_argument("middle_binomial_sum: out of range");
    BigInt sum(0);
    int mid = n / 2;
    int taken = 0;
    for (int d = 0; taken < m; ++d) {
        if (d == 0) {
            sum += binomial(n, mid);
            ++taken;
            continue;
        }
        if (taken < m && mid + d <= n) {
            sum += binomial(n, mid + d);
            ++taken;
        }
        if (taken < m && mid - d >= 0) {
            sum += binomial(n, mid - d);
            ++taken;
        }
    }
    return sum;
}

IntervalUnion::IntervalUnion(std::vector<std::pair<Rational, Rational>> parts) : parts_(std::move(parts)) {
    for (const auto& [lo, hi] : parts_) {
        if (!(lo < hi)) throw std::invalid_argument("IntervalUnion: empty or inverted interval");
    }
    for (size_t i = 1; i < parts_.size(); ++i) {
        if (!(parts_[i - 1].second <= parts_[i].first))
            throw std::invalid_argument("IntervalUnion: intervals overlap or are unsorted");
    }
}

bool IntervalUnion::contains(const Rational& x) const {
    for (const auto& [lo, hi] : parts_) {
        if (lo <= x && x < hi) return true;
    }
    return false;
}

Rational IntervalUnion::max_width() const {
    Rational w;
    for (const auto& [lo, hi] : parts_) w = std::max(w, hi - lo);
    return w;
}

namespace {

// Gray-code walk over all subsets; one add/sub per step.
template <typename Num>
long long gray_count(const std::vector<Num>& vals,
                     const std::vector<std::pair<Num, Num>>& intervals) {
    auto in_union = [&](const Num& s) {
        for (const auto& [lo, hi] : intervals) {
            if (lo <= s && s < hi) return true;
        }
        return false;
    };
    const int m = static_cast<int>(vals.size());
    Num sum{};
    long long count = in_union(sum) ? 1 : 0;
    uint32_t gray = 0;
    const uint64_t total = 1ull << m;
    for (uint64_t i = 1; i < total; ++i) {
        uint32_t next = static_cast<uint32_t>(i ^ (i >> 1));
        uint32_t flipped = gray ^ next;
        int bit = std::countr_zero(flipped);
        if (next & flipped) {
            sum += vals[bit];
        } else {
            sum -= vals[bit];
        }
        gray = next;
        if (in_union(sum)) ++count;
    }
    return count;
}

}  // namespace

long long lo_count(const std::vector<Rational>& a, const IntervalUnion& t) {
    if (a.size() > 24) throw std::invalid_argument("lo_count: more than 24 summands");
    Rational delta;
    bool first = true;
    for (const auto& v : a) {
        if (v.is_zero()) throw std::invalid_argument("lo_count: zero summand");
        Rational av = v.abs();
        if (first || av < delta) delta = av;
        first = false;
    }
    if (!a.empty() && t.max_width() > delta)
        throw std::invalid_argument("lo_count: interval wider than min |a_i|");

    // common-denominator integer scaling keeps the inner loop cheap
    BigInt lcm(1);
    auto fold = [&lcm](const BigInt& d) { lcm = lcm / BigInt::gcd(lcm, d) * d; };
    for (const auto& v : a) fold(v.den());
    for (const auto& [lo, hi] : t.parts()) {
        fold(lo.den());
        fold(hi.den());
    }
    auto scaled = [&lcm](const Rational& v) { return v.num() * (lcm / v.den()); };

    std::vector<BigInt> big_vals;
    for (const auto& v : a) big_vals.push_back(scaled(v));
    std::vector<std::pair<BigInt, BigInt>> big_ints;
    for (const auto& [lo, hi] : t.parts()) big_ints.emplace_back(scaled(lo), scaled(hi));

    const BigInt limit = BigInt(1ll << 40);
    bool small = true;
    for (const auto& v : big_vals) small = small && v.abs() < limit;
    for (const auto& [lo, hi] : big_ints) small = small && lo.abs() < limit && hi.abs() < limit;

    if (small) {
        std::vector<long long> vals;
        for (const auto& v : big_vals) vals.push_back(v.to_int64());
        std::vector<std::pair<long long, long long>> ints;
        for (const auto& [lo, hi] : big_ints) ints.emplace_back(lo.to_int64(), hi.to_int64());
        return gray_count(vals, ints);
    }
    return gray_count(big_vals, big_ints);
}

std::set<Rational> sumset(const std::set<Rational>& a, const std::set<Rational>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("sumset: empty input");
    std::set<Rational> out;
    for (const auto& x : a) {
        for (const auto& y : b) out.insert(x + y);
    }
    return out;
}

}  // namespace crossint
