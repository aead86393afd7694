#include "crossint/matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace crossint {

RationalMatrix RationalMatrix::from_int(std::initializer_list<std::initializer_list<long long>> rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows.begin()->size();
    RationalMatrix m(r, c);
    size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("RationalMatrix: ragged rows");
        size_t j = 0;
        for (long long v : row) m.at(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

namespace {

EchelonForm eliminate(const RationalMatrix& in, const std::vector<int>& scan, bool move_pivots_front) {
    EchelonForm out;
    RationalMatrix m = in;
    const size_t rows = m.rows(), cols = m.cols();
    size_t next_row = 0;
    for (int col : scan) {
        if (next_row >= rows) break;
        size_t piv = next_row;
        while (piv < rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != next_row) {
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(next_row, j));
        }
        const Rational inv = Rational(1) / m.at(next_row, col);
        for (size_t j = 0; j < cols; ++j) m.at(next_row, j) *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == next_row || m.at(r, col).is_zero()) continue;
            const Rational f = m.at(r, col);
            for (size_t j = 0; j < cols; ++j) m.at(r, j) -= f * m.at(next_row, j);
        }
        out.pivot_cols.push_back(col);
        ++next_row;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());

    out.col_perm.resize(cols);
    std::iota(out.col_perm.begin(), out.col_perm.end(), 0);
    if (move_pivots_front) {
        std::vector<char> is_pivot(cols, 0);
        for (int c : out.pivot_cols) is_pivot[c] = 1;
        std::vector<int> perm;
        perm.reserve(cols);
        for (int c : out.pivot_cols) perm.push_back(c);
        for (size_t c = 0; c < cols; ++c) {
            if (!is_pivot[c]) perm.push_back(static_cast<int>(c));
        }
        RationalMatrix permuted(rows, cols);
        for (size_t r = 0; r < rows; ++r) {
            for (size_t j = 0; j < cols; ++j) permuted.at(r, j) = m.at(r, perm[j]);
        }
        m = std::move(permuted);
        out.col_perm = std::move(perm);
    }
    out.matrix = std::move(m);
    return out;
}

bool row_in_pm1_with_minus(const RationalMatrix& m, size_t r) {
    bool has_minus = false;
    for (size_t j = 0; j < m.cols(); ++j) {
        const Rational& v = m.at(r, j);
        if (v.is_zero() || v == Rational(1)) continue;
        if (v == Rational(-1)) {
            has_minus = true;
        } else {
            return false;
        }
    }
    return has_minus;
}

RowClassification run_selection(const RationalMatrix& m,
                                const std::function<int(const std::vector<int>&)>& pick,
                                const std::vector<int>* forced_columns) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<char> active(rows, 1);
    RowClassification out;

    auto nonzero_count = [&](size_t col) {
        int cnt = 0;
        for (size_t r = 0; r < rows; ++r) {
            if (active[r] && !m.at(r, col).is_zero()) ++cnt;
        }
        return cnt;
    };

    size_t forced_at = 0;
    for (;;) {
        int col = -1;
        if (forced_columns != nullptr) {
            if (forced_at >= forced_columns->size()) break;
            col = (*forced_columns)[forced_at++];
        } else {
            std::vector<int> counts(cols, 0);
            for (size_t c = 0; c < cols; ++c) counts[c] = nonzero_count(c);
            col = pick(counts);
            if (col < 0) break;
        }
        std::vector<int> removed;
        for (size_t r = 0; r < rows; ++r) {
            if (active[r] && !m.at(r, col).is_zero()) {
                removed.push_back(static_cast<int>(r));
                active[r] = 0;
            }
        }
        out.selection_log.emplace_back(col, removed);
        for (int r : removed) out.r_rows.push_back(r);
    }
    std::sort(out.r_rows.begin(), out.r_rows.end());
    for (size_t r = 0; r < rows; ++r) {
        if (!active[r]) continue;
        if (row_in_pm1_with_minus(m, r)) {
            out.c_rows.push_back(static_cast<int>(r));
        } else {
            out.s_rows.push_back(static_cast<int>(r));
        }
    }
    return out;
}

}  // namespace

EchelonForm rref(const RationalMatrix& m, bool allow_col_perm) {
    std::vector<int> scan(m.cols());
    std::iota(scan.begin(), scan.end(), 0);
    return eliminate(m, scan, allow_col_perm);
}

EchelonForm rref_scan_order(const RationalMatrix& m, const std::vector<int>& scan_order) {
    if (scan_order.size() != m.cols()) throw std::invalid_argument("rref_scan_order: bad scan order");
    return eliminate(m, scan_order, false);
}

int rank_of(const RationalMatrix& m) { return rref(m, false).rank; }

bool orthogonal(const RationalMatrix& ma, const RationalMatrix& mb) {
    if (ma.rows() == 0 || mb.rows() == 0) return true;
    if (ma.cols() != mb.cols()) throw std::invalid_argument("orthogonal: column count mismatch");
    for (size_t i = 0; i < ma.rows(); ++i) {
        for (size_t j = 0; j < mb.rows(); ++j) {
            Rational dot;
            for (size_t c = 0; c < ma.cols(); ++c) dot += ma.at(i, c) * mb.at(j, c);
            if (!dot.is_zero()) return false;
        }
    }
    return true;
}

bool duality_check(const EchelonForm& ma, const EchelonForm& mb) {
    const size_t k = ma.matrix.rows();
    const size_t h = mb.matrix.rows();
    const size_t n = ma.matrix.cols();
    if (mb.matrix.cols() != n || k + h != n) throw std::invalid_argument("duality_check: k+h != n");
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (ma.matrix.at(i, j) != Rational(i == j ? 1 : 0))
                throw std::invalid_argument("duality_check: ma not in (I_k | *) shape");
        }
    }
    for (size_t i = 0; i < h; ++i) {
        for (size_t j = 0; j < h; ++j) {
            if (mb.matrix.at(i, k + j) != Rational(i == j ? 1 : 0))
                throw std::invalid_argument("duality_check: mb not in (* | I_h) shape");
        }
    }
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < h; ++j) {
            if (ma.matrix.at(i, k + j) != -mb.matrix.at(j, i)) return false;
        }
    }
    return true;
}

RowClassification classify_rows(const RationalMatrix& m, SelectStrategy strategy) {
    auto pick_max = [](const std::vector<int>& counts) {
        int best = -1, best_cnt = 1;
        for (size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] > best_cnt) {  // ties: lowest column index
                best_cnt = counts[c];
                best = static_cast<int>(c);
            }
        }
        return best;
    };
    auto pick_first = [](const std::vector<int>& counts) {
        for (size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] >= 2) return static_cast<int>(c);
        }
        return -1;
    };
    return run_selection(m, strategy == SelectStrategy::MaxColumn ? std::function<int(const std::vector<int>&)>(pick_max)
                                                                  : std::function<int(const std::vector<int>&)>(pick_first),
                         nullptr);
}

RowClassification classify_rows_replay(const RationalMatrix& m, const std::vector<int>& columns) {
    return run_selection(m, nullptr, &columns);
}

uint64_t coefficient_bound(const RationalMatrix& m) {
    const int r = rank_of(m);
    return 1ull << r;
}

}  // namespace crossint
