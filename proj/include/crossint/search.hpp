#pragma once

// Exact P_ℓ(n) at desk scale. The cross relation |A∩B| = ℓ on 2^[n] × 2^[n]
// induces a Galois connection whose closed pairs are the maximal
// cross-intersecting pairs; the search enumerates every closed pair once via
// close-by-one and keeps the best product. Optima are classified against the
// parametrized canonical extremal pair.

#include <chrono>
#include <cstdint>
#include <vector>

#include "crossint/constructions.hpp"
#include "crossint/family.hpp"

namespace crossint {

inline constexpr int kSearchHardCap = 12;  // masks-squared tables stop being fun past this

struct SearchConfig {
    bool prune_product = true;
    bool prune_dimension = false;
    bool enumerate_all_optima = false;
    int worker_count = 1;
};

struct SearchReport {
    long long value = 0;
    std::vector<CrossPair> witnesses;  // canonical-encoding-minimal first
    uint64_t nodes_visited = 0;
    uint64_t nodes_pruned = 0;
    std::chrono::milliseconds elapsed{0};
};

// All B ⊆ [n] with |A ∩ B| = ℓ for every A ∈ f; every subset when f is empty.
Family beta_operator(const Family& f, int ell);

// The closed pair generated by f: (β(β(f)), β(f)). Idempotent.
CrossPair closure(const Family& f, int ell);

// Exact maximum of |A|·|B| over ℓ-cross-intersecting pairs with both sides
// nonempty. 1 ≤ n ≤ 12 (n ≤ 8 is the supported envelope, above best-effort),
// 0 ≤ ℓ ≤ n.
SearchReport max_product(int n, int ell, const SearchConfig& config = {});

struct ClassificationResult {
    bool matched = false;
    CanonicalParams params;
    bool swapped = false;
    std::vector<int> relabeling;  // image of element i sits at [i-1]; 1-based
};

// Searches all legal parameters for p's (n, ell) in a fixed order (kappa
// descending {2l, 2l-1}, tau ascending, n' ascending, then swap) and all
// relabelings, returning the first match. Pairs that are not
// cross-intersecting match nothing.
ClassificationResult classify_extremal(const CrossPair& p);

// Equal up to a relabeling of [n] and swapping the two sides.
bool pairs_isomorphic(const CrossPair& p, const CrossPair& q);

struct OptimaReport {
    long long value = 0;
    uint64_t total_optima = 0;                           // closed optimal pairs found
    std::vector<CrossPair> representatives;              // deduplicated up to relabeling+swap
    std::vector<ClassificationResult> classifications;   // parallel to representatives
};

OptimaReport enumerate_optima(int n, int ell, int worker_count = 1);

}  // namespace crossint
