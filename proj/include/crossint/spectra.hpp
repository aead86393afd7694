#pragma once

// Characteristic-vector linear algebra for a cross pair: the A-side span,
// the B-side difference span χ_B − χ_{B₁}, their dimensions (k, h), and the
// shared-column-order echelon pair used for the duality identity.

#include <utility>

#include "crossint/family.hpp"
#include "crossint/matrix.hpp"

namespace crossint {

// |f| × n matrix of 0/1 rows in canonical family order.
RationalMatrix char_matrix(const Family& f);

// |f| × n matrix of rows χ_B − χ_{B₁}, B in canonical order (the B₁ row is
// included and is zero). b1_index indexes the canonical order.
RationalMatrix difference_matrix(const Family& f, int b1_index);

// (k, h) = (dim span A, dim diff-span B). For a cross-intersecting pair the
// two spans are orthogonal, so k + h ≤ n.
std::pair<int, int> span_dims(const CrossPair& p, int b1_index = 0);

// Echelon forms over ONE column order: ma = (I_k | *) from the A-side rows,
// mb eliminated so its pivots land past column k. With k + h = n this gives
// mb = (* | I_h) and the pair is ready for duality_check.
std::pair<EchelonForm, EchelonForm> dual_forms(const CrossPair& p, int b1_index = 0);

}  // namespace crossint
