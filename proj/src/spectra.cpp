#include "crossint/spectra.hpp"

#include <numeric>
#include <stdexcept>

namespace crossint {

RationalMatrix char_matrix(const Family& f) {
    if (f.empty()) throw std::invalid_argument("char_matrix: empty family");
    RationalMatrix m(f.size(), f.n());
    for (size_t i = 0; i < f.size(); ++i) {
        const SubsetMask& s = f.members()[i];
        for (int j = 0; j < f.n(); ++j) {
            if (s.contains(j + 1)) m.at(i, j) = Rational(1);
        }
    }
    return m;
}

RationalMatrix difference_matrix(const Family& f, int b1_index) {
    if (f.empty()) throw std::invalid_argument("difference_matrix: empty family");
    if (b1_index < 0 || static_cast<size_t>(b1_index) >= f.size())
        throw std::out_of_range("difference_matrix: b1 index out of range");
    const SubsetMask b1 = f.members()[b1_index];
    RationalMatrix m(f.size(), f.n());
    for (size_t i = 0; i < f.size(); ++i) {
        const SubsetMask& s = f.members()[i];
        for (int j = 0; j < f.n(); ++j) {
            int v = (s.contains(j + 1) ? 1 : 0) - (b1.contains(j + 1) ? 1 : 0);
            if (v != 0) m.at(i, j) = Rational(v);
        }
    }
    return m;
}

std::pair<int, int> span_dims(const CrossPair& p, int b1_index) {
    if (p.a.empty() || p.b.empty()) throw std::invalid_argument("span_dims: empty family");
    int k = rank_of(char_matrix(p.a));
    int h = rank_of(difference_matrix(p.b, b1_index));
    return {k, h};
}

std::pair<EchelonForm, EchelonForm> dual_forms(const CrossPair& p, int b1_index) {
    EchelonForm ma = rref(char_matrix(p.a), /*allow_col_perm=*/true);
    const int n = p.n;
    const int k = ma.rank;

    // drop zero rows so ma.matrix is exactly k × n = (I_k | *)
    RationalMatrix trimmed(static_cast<size_t>(k), static_cast<size_t>(n));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) trimmed.at(i, j) = ma.matrix.at(i, j);
    }
    ma.matrix = std::move(trimmed);

    // B-side differences in ma's column order, pivots searched past column k
    RationalMatrix diffs = difference_matrix(p.b, b1_index);
    RationalMatrix permuted(diffs.rows(), diffs.cols());
    for (size_t r = 0; r < diffs.rows(); ++r) {
        for (int j = 0; j < n; ++j) permuted.at(r, j) = diffs.at(r, ma.col_perm[j]);
    }
    std::vector<int> scan;
    scan.reserve(n);
    for (int j = k; j < n; ++j) scan.push_back(j);
    for (int j = 0; j < k; ++j) scan.push_back(j);
    EchelonForm mb = rref_scan_order(permuted, scan);
    mb.col_perm = ma.col_perm;

    RationalMatrix btrim(static_cast<size_t>(mb.rank), static_cast<size_t>(n));
    for (int i = 0; i < mb.rank; ++i) {
        for (int j = 0; j < n; ++j) btrim.at(i, j) = mb.matrix.at(i, j);
    }
    mb.matrix = std::move(btrim);
    return {std::move(ma), std::move(mb)};
}

}  // namespace crossint
