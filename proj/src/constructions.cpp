#include "crossint/constructions.hpp"

#include <stdexcept>

namespace crossint {

namespace {

// all submasks of `space`, including 0, ascending
std::vector<uint32_t> submasks_of(uint32_t space) {
    std::vector<uint32_t> out;
    uint32_t s = 0;
    for (;;) {
        out.push_back(s);
        if (s == space) break;
        s = (s - space) & space;  // next submask
    }
    return out;
}

}  // namespace

bool canonical_params_legal(const CanonicalParams& p) {
    if (p.n < 1 || p.n > kMaxGroundSet || p.ell < 0) return false;
    if (p.kappa != 2 * p.ell && p.kappa != 2 * p.ell - 1) return false;
    if (p.kappa < 0) return false;
    if (p.kappa == 2 * p.ell - 1 && p.kappa < 1) return false;
    if (p.tau < 0 || p.tau > p.kappa) return false;
    if (p.nprime < p.kappa + p.tau || p.nprime > p.n) return false;
    return true;
}

CrossPair acz_pair(int n, int ell) {
    if (ell < 0 || n < 2 * ell || n < 1 || n > kMaxGroundSet)
        throw std::invalid_argument("acz_pair: need 1 <= n <= 24 and n >= 2*ell");
    const uint32_t core = ell == 0 ? 0u : (1u << (2 * ell)) - 1u;
    const uint32_t rest = ((n == 32 ? ~0u : (1u << n) - 1u)) & ~core;

    std::vector<SubsetMask> bs;
    for (uint32_t s = 0; s <= core; ++s) {
        if ((s & ~core) != 0 || std::popcount(s) != ell) continue;
        for (uint32_t t : submasks_of(rest)) bs.push_back(SubsetMask(s | t));
    }
    return CrossPair(Family(n, {SubsetMask(core)}), Family(n, std::move(bs)), ell, true);
}

CrossPair canonical_pair(const CanonicalParams& p) {
    if (!canonical_params_legal(p)) throw std::invalid_argument("canonical_pair: illegal parameters");

    // disjoint objects: tau pairs {i, kappa+i}, then singletons {tau+1..kappa}
    std::vector<uint32_t> objects;
    for (int i = 1; i <= p.tau; ++i) objects.push_back((1u << (i - 1)) | (1u << (p.kappa + i - 1)));
    for (int j = p.tau + 1; j <= p.kappa; ++j) objects.push_back(1u << (j - 1));

    uint32_t xmask = 0;
    for (int e = p.kappa + p.tau + 1; e <= p.nprime; ++e) xmask |= 1u << (e - 1);
    uint32_t ymask = 0;
    for (int e = p.nprime + 1; e <= p.n; ++e) ymask |= 1u << (e - 1);

    const auto xsubs = submasks_of(xmask);
    const auto ysubs = submasks_of(ymask);

    std::vector<SubsetMask> as;
    const int kobj = static_cast<int>(objects.size());
    for (uint32_t choice = 0; choice < (1u << kobj); ++choice) {
        if (std::popcount(choice) != p.ell) continue;
        uint32_t u = 0;
        for (int i = 0; i < kobj; ++i) {
            if (choice & (1u << i)) u |= objects[i];
        }
        for (uint32_t x : xsubs) as.push_back(SubsetMask(u | x));
    }

    uint32_t singletons = 0;
    for (int j = p.tau + 1; j <= p.kappa; ++j) singletons |= 1u << (j - 1);
    std::vector<SubsetMask> bs;
    for (uint32_t pick = 0; pick < (1u << p.tau); ++pick) {
        uint32_t l = 0;
        for (int i = 1; i <= p.tau; ++i) {
            l |= (pick & (1u << (i - 1))) ? (1u << (i - 1)) : (1u << (p.kappa + i - 1));
        }
        for (uint32_t y : ysubs) bs.push_back(SubsetMask(l | singletons | y));
    }

    return CrossPair(Family(p.n, std::move(as)), Family(p.n, std::move(bs)), p.ell, true);
}

std::string variant_name(MatrixVariant v) {
    switch (v) {
        case MatrixVariant::OmegaFamily: return "omega";
        case MatrixVariant::OFamily1: return "o1";
        case MatrixVariant::OFamily2: return "o2";
    }
    return "?";
}

bool matrix_spec_legal(MatrixVariant variant, int ell, int n, int k) {
    if (ell < 1 || n < 1 || n > kMaxGroundSet) return false;
    const int h = n - k;
    switch (variant) {
        case MatrixVariant::OmegaFamily:
            return (k == 2 * ell || k == 2 * ell - 1) && k >= 1 && h >= 0 && h <= k;
        case MatrixVariant::OFamily1:
            return (h == 2 * ell - 1 || h == 2 * ell - 2) && h >= 1 && k >= 1 && (k - h == 0 || k - h == 1) &&
                   ell <= h;
        case MatrixVariant::OFamily2:
            return (h == 2 * ell - 1 || h == 2 * ell - 2) && h >= 1 && k >= 2 && k - h >= 0 && k - h <= 2 &&
                   ell <= h;
    }
    return false;
}

MatrixFamilySpec matrix_pair_spec(MatrixVariant variant, int ell, int n, std::optional<int> k_opt) {
    int k = -1;
    if (k_opt) {
        k = *k_opt;
        if (!matrix_spec_legal(variant, ell, n, k))
            throw std::invalid_argument("matrix_pair_spec: illegal (variant, ell, n, k)");
    } else {
        std::vector<int> candidates;
        if (variant == MatrixVariant::OmegaFamily) {
            candidates = {2 * ell, 2 * ell - 1};
        } else {
            candidates = {n - (2 * ell - 2), n - (2 * ell - 1)};  // larger k first
        }
        for (int c : candidates) {
            if (matrix_spec_legal(variant, ell, n, c)) {
                k = c;
                break;
            }
        }
        if (k < 0) throw std::invalid_argument("matrix_pair_spec: no legal k for (variant, ell, n)");
    }
    const int h = n - k;

    MatrixFamilySpec spec;
    spec.variant = variant;
    spec.k = k;
    spec.h = h;
    spec.n = n;
    spec.ell = ell;

    RationalMatrix ma(static_cast<size_t>(k), static_cast<size_t>(n));
    RationalMatrix mb(static_cast<size_t>(h), static_cast<size_t>(n));
    auto set = [](RationalMatrix& m, int r, int c, int v) { m.at(r - 1, c - 1) = Rational(v); };

    switch (variant) {
        case MatrixVariant::OmegaFamily: {
            // ma = (I_h 0 I_h / 0 I_{k-h} 0), mb = (-I_h 0 I_h), B1 = [k]
            for (int i = 1; i <= h; ++i) {
                set(ma, i, i, 1);
                set(ma, i, k + i, 1);
            }
            for (int i = h + 1; i <= k; ++i) set(ma, i, i, 1);
            for (int i = 1; i <= h; ++i) {
                set(mb, i, i, -1);
                set(mb, i, k + i, 1);
            }
            uint32_t b1 = k == 0 ? 0u : (1u << k) - 1u;
            spec.b1 = SubsetMask(b1);
            break;
        }
        case MatrixVariant::OFamily1: {
            for (int i = 1; i <= k - 1; ++i) {
                set(ma, i, i, 1);
                set(ma, i, k + i, -1);
            }
            set(ma, k, k, 1);
            for (int c = k + 1; c <= n; ++c) set(ma, k, c, 1);
            for (int i = 1; i <= k - 1; ++i) {
                set(mb, i, i, 1);
                set(mb, i, k, -1);
                set(mb, i, k + i, 1);
            }
            if (h == k) {  // optional last row, present when n = 2k
                set(mb, h, k, -1);
                set(mb, h, n, 1);
            }
            uint32_t b1 = 0;
            for (int i = 1; i <= ell; ++i) b1 |= (1u << (i - 1)) | (1u << (k + i - 1));
            spec.b1 = SubsetMask(b1);
            break;
        }
        case MatrixVariant::OFamily2: {
            const int m = h - (k - 2);  // optional rows of mb / trailing columns of ma
            for (int i = 1; i <= k - 2; ++i) {
                set(ma, i, i, 1);
                set(ma, i, k + i, -1);
            }
            set(ma, k - 1, k - 1, 1);
            set(ma, k, k, 1);
            for (int c = k + 1; c <= 2 * k - 2; ++c) {
                set(ma, k - 1, c, 1);
                set(ma, k, c, 1);
            }
            for (int j = 1; j <= m; ++j) {
                set(ma, k - 1, 2 * k - 2 + j, 1);
                set(ma, k, 2 * k - 2 + j, 1);
            }
            for (int i = 1; i <= k - 2; ++i) {
                set(mb, i, i, 1);
                set(mb, i, k - 1, -1);
                set(mb, i, k, -1);
                set(mb, i, k + i, 1);
            }
            for (int j = 1; j <= m; ++j) {
                set(mb, k - 2 + j, k - 1, -1);
                set(mb, k - 2 + j, k, -1);
                set(mb, k - 2 + j, 2 * k - 2 + j, 1);
            }
            uint32_t b1 = 0;
            for (int i = 1; i <= ell; ++i) b1 |= (1u << (i - 1)) | (1u << (k + i - 1));
            spec.b1 = SubsetMask(b1);
            break;
        }
    }
    spec.ma = std::move(ma);
    spec.mb = std::move(mb);
    return spec;
}

CrossPair expand_matrix_pair(const RationalMatrix& ma, const RationalMatrix& mb, SubsetMask b1, int ell) {
    const int n = static_cast<int>(ma.cols());
    if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("expand_matrix_pair: bad column count");
    if (mb.rows() > 0 && mb.cols() != ma.cols())
        throw std::invalid_argument("expand_matrix_pair: column count mismatch");
    EchelonForm ea = rref(ma, false);
    EchelonForm eb = rref(mb, false);
    if (ea.rank != static_cast<int>(ma.rows()) || eb.rank != static_cast<int>(mb.rows()))
        throw std::invalid_argument("expand_matrix_pair: rank-deficient input");
    const int k = ea.rank, h = eb.rank;
    if (k > 20 || h > 20) throw std::invalid_argument("expand_matrix_pair: rank too large to expand");

    // {0,1}-points of a span: the coefficient of echelon row i is the point's
    // value at pivot column i, so two choices per row suffice.
    auto lattice_points = [n](const EchelonForm& e, const std::vector<Rational>& base,
                              const std::vector<std::pair<Rational, Rational>>& coeff_choices) {
        std::vector<SubsetMask> out;
        const int r = e.rank;
        std::vector<Rational> v(n);
        for (uint32_t sel = 0; sel < (1u << r); ++sel) {
            for (int j = 0; j < n; ++j) v[j] = base[j];
            for (int i = 0; i < r; ++i) {
                const Rational& c = (sel & (1u << i)) ? coeff_choices[i].second : coeff_choices[i].first;
                if (c.is_zero()) continue;
                for (int j = 0; j < n; ++j) v[j] += c * e.matrix.at(i, j);
            }
            uint32_t mask = 0;
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                if (v[j] == Rational(1)) {
                    mask |= 1u << j;
                } else if (!v[j].is_zero()) {
                    ok = false;
                }
            }
            if (ok) out.push_back(SubsetMask(mask));
            if (r == 0) break;
        }
        return out;
    };

    std::vector<Rational> zero(n), chi(n);
    for (int j = 0; j < n; ++j) chi[j] = Rational(b1.contains(j + 1) ? 1 : 0);
    std::vector<std::pair<Rational, Rational>> ca(k, {Rational(0), Rational(1)});
    std::vector<std::pair<Rational, Rational>> cb;
    for (int i = 0; i < h; ++i) {
        int piv = eb.pivot_cols[i];
        Rational base = chi[piv];
        cb.emplace_back(Rational(0) - base, Rational(1) - base);
    }

    std::vector<SubsetMask> araw = lattice_points(ea, zero, ca);
    std::vector<SubsetMask> braw = lattice_points(eb, chi, cb);

    // one Galois application: filter A against all raw B, then B against A
    std::vector<SubsetMask> af;
    for (const auto& a : araw) {
        bool ok = true;
        for (const auto& b : braw) {
            if (intersect_size(a, b) != ell) {
                ok = false;
                break;
            }
        }
        if (ok) af.push_back(a);
    }
    std::vector<SubsetMask> bf;
    for (const auto& b : braw) {
        bool ok = true;
        for (const auto& a : af) {
            if (intersect_size(a, b) != ell) {
                ok = false;
                break;
            }
        }
        if (ok) bf.push_back(b);
    }
    return CrossPair(Family(n, std::move(af)), Family(n, std::move(bf)), ell, true);
}

}  // namespace crossint
