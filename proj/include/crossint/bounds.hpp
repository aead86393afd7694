#pragma once

// Counting bounds: Sperner, the Frankl–Rödl 2^{n-1} bound, the conjectured
// C(2ℓ,ℓ)2^{n-2ℓ} maximum, the generalized LYM sum, the bipartite antichain
// bound, Littlewood–Offord interval counts, and the sumset fact.

#include <set>
#include <vector>

#include "crossint/bigint.hpp"
#include "crossint/family.hpp"
#include "crossint/rational.hpp"

namespace crossint {

BigInt sperner_bound(int n);                  // C(n, ⌊n/2⌋)
BigInt frankl_rodl_bound(int n, int ell);     // 2^n for ℓ=0, else 2^{n-1}
BigInt conjectured_max(int n, int ell);       // C(2ℓ,ℓ)·2^{n-2ℓ}; requires n ≥ 2ℓ

// Σ_{A∈f} 1 / (C(u,|A∩U|)·C(n−u,|A∩V|)) with U = [u], V = [n]∖U.
Rational lym_sum(const Family& f, int u);

// f is an antichain and |A∩V| = g(|A∩U|) for a single-valued, weakly
// increasing g.
bool bipartite_hypothesis(const Family& f, int u);

BigInt bipartite_bound(int u, int n);  // C(u,⌊u/2⌋)·C(n−u,⌊(n−u)/2⌋)

// Sum of the m largest binomial coefficients C(n,·), selected symmetrically
// around ⌊n/2⌋: start at ⌊n/2⌋, then alternate outward beginning above.
BigInt middle_binomial_sum(int n, int m);

// Disjoint, sorted half-open intervals [lo, hi) with exact endpoints.
class IntervalUnion {
   public:
    explicit IntervalUnion(std::vector<std::pair<Rational, Rational>> parts);
    const std::vector<std::pair<Rational, Rational>>& parts() const { return parts_; }
    bool contains(const Rational& x) const;
    Rational max_width() const;

   private:
    std::vector<std::pair<Rational, Rational>> parts_;
};

// Number of subset sums Σ_{i∈I} a[i] (I ⊆ [|a|], including ∅) landing in t.
// All a[i] must be nonzero, every interval width ≤ min|a[i]|, |a| ≤ 24.
// Exhaustive enumeration; at most middle_binomial_sum(|a|, #intervals).
long long lo_count(const std::vector<Rational>& a, const IntervalUnion& t);

// {x + y : x ∈ a, y ∈ b}; size ≥ |a| + |b| − 1. Both inputs nonempty.
std::set<Rational> sumset(const std::set<Rational>& a, const std::set<Rational>& b);

}  // namespace crossint
