#pragma once

// Explicit extremal families: the single-set/ℓ-trace pair, the parametrized
// canonical pair built from τ element-pairs and κ−τ singletons with free
// 2^X / 2^Y factors, and the block-matrix families expanded from row spans.

#include <optional>
#include <string>

#include "crossint/family.hpp"
#include "crossint/matrix.hpp"

namespace crossint {

struct CanonicalParams {
    int n = 0;
    int ell = 0;
    int kappa = 0;
    int tau = 0;
    int nprime = 0;

    bool operator==(const CanonicalParams&) const = default;
};

// κ ∈ {2ℓ−1, 2ℓ} with κ ≥ 0 (so ℓ=0 admits only κ=0), 0 ≤ τ ≤ κ,
// κ+τ ≤ n' ≤ n, 1 ≤ n ≤ 24.
bool canonical_params_legal(const CanonicalParams& p);

// A = {[2ℓ]}, B = all sets meeting [2ℓ] in exactly ℓ elements.
// |A|·|B| = C(2ℓ,ℓ)·2^{n−2ℓ}. Requires n ≥ 2ℓ, ℓ ≥ 0.
CrossPair acz_pair(int n, int ell);

// The canonical extremal pair: objects are the pairs {i, κ+i} (i ≤ τ) and
// singletons {τ+1..κ}; A-members are unions of ℓ objects crossed with 2^X,
// B-members pick one element per pair plus all singletons, crossed with 2^Y,
// where X = {κ+τ+1..n'} and Y = {n'+1..n}.
CrossPair canonical_pair(const CanonicalParams& p);

enum class MatrixVariant { OmegaFamily, OFamily1, OFamily2 };

std::string variant_name(MatrixVariant v);

struct MatrixFamilySpec {
    MatrixVariant variant;
    int k = 0;
    int h = 0;
    int n = 0;
    int ell = 0;
    SubsetMask b1;
    RationalMatrix ma;
    RationalMatrix mb;
};

// The literal block matrices of the variant at (ℓ, n), including the
// k-dependent optional trailing rows/columns. When k is not given, the first
// shape-legal k is chosen (omega: {2ℓ, 2ℓ−1}; o-families: larger h first).
// Illegal (variant, ℓ, n, k) combinations throw std::invalid_argument.
MatrixFamilySpec matrix_pair_spec(MatrixVariant variant, int ell, int n,
                                  std::optional<int> k = std::nullopt);

bool matrix_spec_legal(MatrixVariant variant, int ell, int n, int k);

// All {0,1}^n points of rowspace(ma) / of χ_{b1} + rowspace(mb), filtered to
// the maximal exactly-ℓ-cross-intersecting sub-pair (A first, then B).
// Requires full row rank on both matrices.
CrossPair expand_matrix_pair(const RationalMatrix& ma, const RationalMatrix& mb, SubsetMask b1, int ell);

}  // namespace crossint
