#include <doctest.h>

#include <random>

#include "crossint/constructions.hpp"
#include "crossint/search.hpp"
#include "crossint/spectra.hpp"

using namespace crossint;

TEST_CASE("char_matrix") {
    CHECK(char_matrix(make_family(3, {{1, 3}, {2}})) == RationalMatrix::from_int({{0, 1, 0}, {1, 0, 1}}));
    CHECK(char_matrix(make_family(2, {{}})) == RationalMatrix::from_int({{0, 0}}));
    CHECK(char_matrix(make_family(3, {{1, 2, 3}})) == RationalMatrix::from_int({{1, 1, 1}}));
    CHECK_THROWS_AS(char_matrix(make_family(3, {})), std::invalid_argument);
}

TEST_CASE("span_dims fixtures") {
    // omega-family expansion at (ell=1, n=3), B1 = {1,2}
    MatrixFamilySpec s = matrix_pair_spec(MatrixVariant::OmegaFamily, 1, 3);
    CrossPair p = expand_matrix_pair(s.ma, s.mb, s.b1, 1);
    // B = {{1,2},{2,3}}: canonical order puts {1,2} (mask 3) first
    auto [k, h] = span_dims(p, 0);
    CHECK(k == 2);
    CHECK(h == 1);
    CHECK(k + h == 3);

    CrossPair acz = acz_pair(4, 1);
    auto [k2, h2] = span_dims(acz, 0);  // B1 = {1}, the canonically smallest member
    CHECK(k2 == 1);
    CHECK(h2 == 3);

    CrossPair tiny(make_family(1, {{1}}), make_family(1, {{1}}), 1);
    auto [k3, h3] = span_dims(tiny, 0);
    CHECK(k3 == 1);
    CHECK(h3 == 0);

    CHECK_THROWS_AS(span_dims(acz, 99), std::out_of_range);
}

TEST_CASE("span_dims h is independent of the B1 choice") {
    CrossPair p = canonical_pair({5, 2, 4, 1, 5});
    auto [k0, h0] = span_dims(p, 0);
    for (int i = 1; i < static_cast<int>(p.b.size()); ++i) {
        auto [k, h] = span_dims(p, i);
        CHECK(k == k0);
        CHECK(h == h0);
    }
}

TEST_CASE("orthogonality and the 2^{k+h} cardinality bound on a cross corpus") {
    std::vector<CrossPair> corpus;
    corpus.push_back(acz_pair(4, 1));
    corpus.push_back(acz_pair(5, 2));
    corpus.push_back(canonical_pair({3, 1, 2, 1, 3}));
    corpus.push_back(canonical_pair({5, 1, 2, 0, 4}));
    corpus.push_back(canonical_pair({6, 2, 4, 2, 6}));
    corpus.push_back(canonical_pair({6, 3, 5, 1, 6}));
    {
        MatrixFamilySpec s = matrix_pair_spec(MatrixVariant::OFamily1, 2, 5);
        corpus.push_back(expand_matrix_pair(s.ma, s.mb, s.b1, 2));
    }
    for (const auto& p : corpus) {
        REQUIRE(is_cross_intersecting(p));
        auto [k, h] = span_dims(p, 0);
        CHECK(k + h <= p.n);
        CHECK(orthogonal(char_matrix(p.a), difference_matrix(p.b, 0)));
        CHECK(p.a.size() <= coefficient_bound(char_matrix(p.a)));
        CHECK(p.b.size() <= (1ull << h));
    }
}

TEST_CASE("coefficient_bound tight on the acz B-side differences") {
    CrossPair acz = acz_pair(4, 1);
    RationalMatrix d = difference_matrix(acz.b, 0);
    CHECK(coefficient_bound(d) == 8);
    CHECK(acz.b.size() == 8);
}

TEST_CASE("dual_forms satisfies the duality identity whenever k+h = n") {
    // the canonical normalized regime: nprime = n, kappa + tau = n
    for (auto prm : {CanonicalParams{3, 1, 2, 1, 3}, CanonicalParams{4, 2, 3, 1, 4},
                     CanonicalParams{6, 2, 4, 2, 6}, CanonicalParams{6, 3, 5, 1, 6},
                     CanonicalParams{8, 3, 6, 2, 8}}) {
        CrossPair p = canonical_pair(prm);
        auto [k, h] = span_dims(p, 0);
        REQUIRE(k + h == p.n);
        auto [ma, mb] = dual_forms(p, 0);
        CHECK(ma.rank == k);
        CHECK(mb.rank == h);
        CHECK(duality_check(ma, mb));
    }
}

TEST_CASE("dual_forms on closures of random families (k+h = n cases)") {
    std::mt19937_64 rng(808);
    int checked = 0;
    for (int rep = 0; rep < 400 && checked < 40; ++rep) {
        int n = 2 + static_cast<int>(rng() % 4);
        int ell = 1 + static_cast<int>(rng() % 2);
        std::vector<SubsetMask> ms;
        for (int i = 0; i < 2; ++i) ms.push_back(SubsetMask(static_cast<uint32_t>(rng() & ((1u << n) - 1))));
        CrossPair cl = closure(Family(n, ms), ell);
        if (cl.a.empty() || cl.b.empty()) continue;
        REQUIRE(is_cross_intersecting(cl));
        auto [k, h] = span_dims(cl, 0);
        CHECK(k + h <= cl.n);
        if (k + h != cl.n) continue;
        auto [ma, mb] = dual_forms(cl, 0);
        CHECK(duality_check(ma, mb));
        ++checked;
    }
    CHECK(checked >= 10);
}
