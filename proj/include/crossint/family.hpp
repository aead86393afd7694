#pragma once

// Ground-set subsets as bit masks, deduplicated set families, and the
// exact-ℓ cross-intersection predicate with its normalization reduction.
//
// Element i of [n] (1-based externally) lives at bit i-1. Ground sets are
// capped at 24 elements so a mask always fits one machine word.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace crossint {

inline constexpr int kMaxGroundSet = 24;

struct SubsetMask {
    uint32_t bits = 0;

    SubsetMask() = default;
    explicit SubsetMask(uint32_t b) : bits(b) {}

    static SubsetMask of_elements(std::initializer_list<int> elems) {
        SubsetMask m;
        for (int e : elems) m.bits |= 1u << (e - 1);
        return m;
    }

    bool contains(int elem) const { return (bits >> (elem - 1)) & 1u; }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    SubsetMask with(int elem) const { return SubsetMask(bits | (1u << (elem - 1))); }
    SubsetMask without(int elem) const { return SubsetMask(bits & ~(1u << (elem - 1))); }

    // 1-based ascending element list
    std::vector<int> elements() const {
        std::vector<int> out;
        for (uint32_t m = bits; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    bool operator==(const SubsetMask& o) const { return bits == o.bits; }
    bool operator!=(const SubsetMask& o) const { return bits != o.bits; }
    bool operator<(const SubsetMask& o) const { return bits < o.bits; }
};

inline int intersect_size(SubsetMask a, SubsetMask b) { return std::popcount(a.bits & b.bits); }

// A deduplicated family of subsets of [n], members kept in ascending numeric
// mask order (the canonical encoding).
class Family {
   public:
    Family(int n, std::vector<SubsetMask> members);

    int n() const { return n_; }
    const std::vector<SubsetMask>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(SubsetMask m) const;

    bool operator==(const Family& o) const { return n_ == o.n_ && members_ == o.members_; }
    bool operator!=(const Family& o) const { return !(*this == o); }

   private:
    int n_;
    std::vector<SubsetMask> members_;
};

// Test convenience: make_family(3, {{1,3},{2}}); {} inside the list is ∅.
Family make_family(int n, std::initializer_list<std::initializer_list<int>> sets);

// Two families plus the required intersection size ℓ. `verified` means the
// cross property has been checked for this exact object.
struct CrossPair {
    Family a;
    Family b;
    int ell;
    int n;
    bool verified = false;

    CrossPair(Family a_, Family b_, int ell_, bool verified_ = false);
};

struct ReductionTrace {
    std::vector<int> removed_from_a_side;  // original 1-based indices in no B-member (A's 2^X factor)
    std::vector<int> removed_from_b_side;  // original 1-based indices in no A-member (B's 2^Y factor)
    int original_n = 0;
    int reduced_n = 0;

    bool empty() const { return removed_from_a_side.empty() && removed_from_b_side.empty(); }
};

// True iff |A ∩ B| = ℓ for every A ∈ a, B ∈ b (vacuously true when a side is empty).
bool is_cross_intersecting(const CrossPair& p);

// No member is contained in a distinct member.
bool is_antichain(const Family& f);

SubsetMask support_union(const Family& f);

// Peel every ground-set element that appears in no member of one side,
// ascending, then compact the ground set. The result has full support on
// both sides, and both families are antichains whenever the input was
// cross-intersecting (eq. the induction move: a chain in A forces a hole in
// B's support). Requires a cross-intersecting pair with both sides nonempty.
std::pair<CrossPair, ReductionTrace> normalize_pair(const CrossPair& p);

// perm[i-1] is the image of element i (1-based both ways).
Family apply_permutation(const Family& f, const std::vector<int>& perm);
CrossPair apply_permutation(const CrossPair& p, const std::vector<int>& perm, bool swap_sides);

}  // namespace crossint
