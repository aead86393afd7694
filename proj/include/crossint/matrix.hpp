#pragma once

// Exact rational matrices, Gauss-Jordan echelon forms, and the repeated
// column-selection process that partitions echelon rows into R / S / C.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "crossint/rational.hpp"

namespace crossint {

class RationalMatrix {
   public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix from_int(std::initializer_list<std::initializer_list<long long>> rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

   private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Result of exact Gauss-Jordan elimination. `pivot_cols` are 0-based column
// indices of the *input* matrix, ascending in pivot order. When a column
// permutation was requested, `matrix` is stored with `col_perm` applied, so
// its leading rank×rank block is the identity; col_perm[j] = input column
// shown at position j. Without permutation, col_perm is the identity.
struct EchelonForm {
    RationalMatrix matrix;
    std::vector<int> pivot_cols;
    std::vector<int> col_perm;
    int rank = 0;
};

// Gauss-Jordan over exact rationals. With allow_col_perm, pivot columns are
// moved to the front so the result reads (I_rank | *).
EchelonForm rref(const RationalMatrix& m, bool allow_col_perm);

// Same elimination, but columns are *scanned* in the given order (all
// columns must appear). Used to force the B-side pivots past column k so the
// two echelon forms share one column layout.
EchelonForm rref_scan_order(const RationalMatrix& m, const std::vector<int>& scan_order);

int rank_of(const RationalMatrix& m);

// Every row of ma ⊥ every row of mb (zero dot products). Vacuous for empty.
bool orthogonal(const RationalMatrix& ma, const RationalMatrix& mb);

// Entrywise duality (M_A)_{i,k+j} == −(M_B)_{j,i} for echelon forms sharing
// a column order with k + h = n, ma = (I_k | *), mb = (* | I_h).
// Shape violations throw std::invalid_argument.
bool duality_check(const EchelonForm& ma, const EchelonForm& mb);

enum class SelectStrategy { MaxColumn, FirstColumn };

// Partition of the row set produced by repeatedly selecting a column with at
// least two nonzero entries among still-active rows and retiring those rows
// into R. Of the surviving rows, C holds those in {0,±1}^n with a −1 entry
// and S holds the rest ({0,1}-rows, or rows with an entry outside {0,±1}).
struct RowClassification {
    std::vector<int> r_rows;
    std::vector<int> s_rows;
    std::vector<int> c_rows;
    // (column chosen, rows removed at that step), in order
    std::vector<std::pair<int, std::vector<int>>> selection_log;
};

RowClassification classify_rows(const RationalMatrix& m, SelectStrategy strategy);

// Replay: run the process selecting exactly the given columns in order.
RowClassification classify_rows_replay(const RationalMatrix& m, const std::vector<int>& columns);

// 2^rank(m); any {0,1}-point family spanned by m has at most this many members.
uint64_t coefficient_bound(const RationalMatrix& m);

}  // namespace crossint
