#include "crossint/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossint {

Family::Family(int n, std::vector<SubsetMask> members) : n_(n), members_(std::move(members)) {
    if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("Family: ground set size out of range");
    const uint32_t legal = n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1u);
    for (const auto& m : members_) {
        if ((m.bits & ~legal) != 0) throw std::invalid_argument("Family: member exceeds ground set");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(SubsetMask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

Family make_family(int n, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<SubsetMask> ms;
    for (const auto& s : sets) {
        SubsetMask m;
        for (int e : s) m = m.with(e);
        ms.push_back(m);
    }
    return Family(n, std::move(ms));
}

CrossPair::CrossPair(Family a_, Family b_, int ell_, bool verified_)
    : a(std::move(a_)), b(std::move(b_)), ell(ell_), n(a.n()), verified(verified_) {
    if (a.n() != b.n()) throw std::invalid_argument("CrossPair: mismatched ground sets");
    if (ell < 0) throw std::invalid_argument("CrossPair: negative ell");
}

bool is_cross_intersecting(const CrossPair& p) {
    for (const auto& a : p.a.members()) {
        for (const auto& b : p.b.members()) {
            if (intersect_size(a, b) != p.ell) return false;
        }
    }
    return true;
}

bool is_antichain(const Family& f) {
    const auto& ms = f.members();
    for (size_t i = 0; i < ms.size(); ++i) {
        for (size_t j = 0; j < ms.size(); ++j) {
            if (i == j) continue;
            if ((ms[i].bits & ms[j].bits) == ms[i].bits) return false;  // ms[i] ⊆ ms[j]
        }
    }
    return true;
}

SubsetMask support_union(const Family& f) {
    SubsetMask u;
    for (const auto& m : f.members()) u.bits |= m.bits;
    return u;
}

std::pair<CrossPair, ReductionTrace> normalize_pair(const CrossPair& p) {
    if (p.a.empty() || p.b.empty()) throw std::invalid_argument("normalize_pair: empty family");
    if (!is_cross_intersecting(p)) throw std::invalid_argument("normalize_pair: pair is not cross-intersecting");

    ReductionTrace trace;
    trace.original_n = p.n;
    const uint32_t ua = support_union(p.a).bits;
    const uint32_t ub = support_union(p.b).bits;
    uint32_t keep = 0;
    for (int i = 1; i <= p.n; ++i) {
        const uint32_t bit = 1u << (i - 1);
        if ((ub & bit) == 0) {
            trace.removed_from_a_side.push_back(i);
        } else if ((ua & bit) == 0) {
            trace.removed_from_b_side.push_back(i);
        } else {
            keep |= bit;
        }
    }
    const int reduced_n = std::popcount(keep);
    trace.reduced_n = reduced_n;

    // compact: surviving element j (1-based, ascending) becomes element rank(j)
    auto compact = [&](const Family& f) {
        std::vector<SubsetMask> out;
        out.reserve(f.size());
        for (const auto& m : f.members()) {
            uint32_t packed = 0;
            int pos = 0;
            for (uint32_t k = keep; k != 0; k &= k - 1) {
                if (m.bits & (k & -k)) packed |= 1u << pos;
                ++pos;
            }
            out.push_back(SubsetMask(packed));
        }
        return Family(reduced_n, std::move(out));
    };
    CrossPair reduced(compact(p.a), compact(p.b), p.ell, true);
    return {std::move(reduced), std::move(trace)};
}

Family apply_permutation(const Family& f, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != f.n()) throw std::invalid_argument("apply_permutation: size mismatch");
    std::vector<SubsetMask> out;
    out.reserve(f.size());
    for (const auto& m : f.members()) {
        uint32_t img = 0;
        for (uint32_t k = m.bits; k != 0; k &= k - 1) {
            img |= 1u << (perm[std::countr_zero(k)] - 1);
        }
        out.push_back(SubsetMask(img));
    }
    return Family(f.n(), std::move(out));
}

CrossPair apply_permutation(const CrossPair& p, const std::vector<int>& perm, bool swap_sides) {
    Family a = apply_permutation(swap_sides ? p.b : p.a, perm);
    Family b = apply_permutation(swap_sides ? p.a : p.b, perm);
    return CrossPair(std::move(a), std::move(b), p.ell, p.verified);
}

}  // namespace crossint
