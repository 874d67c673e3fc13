#include <catch2/catch_amalgamated.hpp>

#include <harmonia/liealg.hpp>

#include <random>

using namespace harmonia;

namespace {

const std::vector<Family> kFamilies{Family::su, Family::so_even, Family::so_odd};

RatMatrix coordinate_matrix(const MatrixLieAlgebra& g) {
    RatMatrix m(g.dim_g(), g.size * g.size);
    for (int a = 0; a < g.dim_g(); ++a)
        for (int i = 0; i < g.size; ++i)
            for (int j = 0; j < g.size; ++j) m.at(a, i * g.size + j) = g.basis[a].mat.at(i, j);
    return m;
}

bool in_span(const MatrixLieAlgebra& g, const RatMatrix& x, bool k_only, bool p_only) {
    std::vector<Rational> coords;
    try {
        coords = span_coordinates(g, x);
    } catch (const std::domain_error&) {
        return false;
    }
    for (int a = 0; a < g.dim_g(); ++a) {
        if (k_only && !g.is_k_index(a) && coords[a] != 0) return false;
        if (p_only && g.is_k_index(a) && coords[a] != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("dimension table for n = 1..4") {
    // family, n, dim g, dim k, ell, k
    const int table[][6] = {
        {0, 1, 3, 1, 1, 1},   {0, 2, 8, 4, 2, 2},   {0, 3, 15, 9, 3, 3},  {0, 4, 24, 16, 4, 4},
        {1, 1, 3, 1, 1, 1},   {1, 2, 10, 6, 2, 2},  {1, 3, 21, 15, 3, 3}, {1, 4, 36, 28, 4, 4},
        {2, 1, 6, 3, 2, 1},   {2, 2, 15, 10, 3, 2}, {2, 3, 28, 21, 4, 3}, {2, 4, 45, 36, 5, 4},
    };
    for (const auto& row : table) {
        MatrixLieAlgebra g = build_algebra(kFamilies[row[0]], row[1]);
        INFO(family_name(g.family) << " n=" << row[1]);
        CHECK(g.dim_g() == row[2]);
        CHECK(g.dim_k == row[3]);
        CHECK(g.rank_g == row[4]);
        CHECK(g.rank_k == row[5]);
    }
}

TEST_CASE("basis elements are independent members") {
    for (Family f : kFamilies)
        for (int n = 1; n <= 3; ++n) {
            MatrixLieAlgebra g = build_algebra(f, n);
            INFO(family_name(f) << " n=" << n);
            for (const auto& b : g.basis) CHECK(is_member(g, b.mat));
            CHECK(rank(coordinate_matrix(g)) == g.dim_g());
        }
}

TEST_CASE("cartan decomposition closes correctly under brackets") {
    for (Family f : kFamilies)
        for (int n = 1; n <= 2; ++n) {
            MatrixLieAlgebra g = build_algebra(f, n);
            INFO(family_name(f) << " n=" << n);
            for (int a = 0; a < g.dim_g(); ++a)
                for (int b = a + 1; b < g.dim_g(); ++b) {
                    RatMatrix br = bracket(g.basis[a].mat, g.basis[b].mat);
                    bool ak = g.is_k_index(a), bk = g.is_k_index(b);
                    if (ak && bk) CHECK(in_span(g, br, true, false));    // [k,k] in k
                    else if (ak != bk) CHECK(in_span(g, br, false, true));  // [k,p] in p
                    else CHECK(in_span(g, br, true, false));             // [p,p] in k
                }
        }
}

TEST_CASE("stored weights match the adjoint torus action") {
    for (Family f : kFamilies)
        for (int n = 1; n <= 3; ++n) {
            MatrixLieAlgebra g = build_algebra(f, n);
            INFO(family_name(f) << " n=" << n);
            for (int i = 0; i < g.rank_k; ++i)
                for (int a = 0; a < g.dim_g(); ++a) {
                    RatMatrix br = bracket(g.basis[i].mat, g.basis[a].mat);
                    RatMatrix scaled = g.basis[a].mat;
                    for (int r = 0; r < g.size; ++r)
                        for (int c = 0; c < g.size; ++c) scaled.at(r, c) *= g.basis[a].weight[i];
                    CHECK(br == scaled);
                }
        }
}

TEST_CASE("span_coordinates inverts realize") {
    std::mt19937 rng(21);
    for (Family f : kFamilies) {
        MatrixLieAlgebra g = build_algebra(f, 2);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rational> coords(g.dim_g());
            for (auto& c : coords) c = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
            CHECK(span_coordinates(g, g.realize(coords)) == coords);
        }
    }
    // a matrix outside the span must be rejected
    MatrixLieAlgebra g = build_algebra(Family::su, 1);
    RatMatrix bad(2, 2);
    bad.at(0, 0) = 1;  // nonzero trace
    CHECK_THROWS_AS(span_coordinates(g, bad), std::domain_error);
    CHECK_FALSE(is_member(g, bad));
}

TEST_CASE("theta projections split every member") {
    std::mt19937 rng(23);
    for (Family f : kFamilies) {
        MatrixLieAlgebra g = build_algebra(f, 2);
        std::vector<Rational> coords(g.dim_g());
        for (auto& c : coords) c = Rational(static_cast<int>(rng() % 9) - 4);
        RatMatrix x = g.realize(coords);
        RatMatrix xk = project_to_k(g, x);
        RatMatrix xp = project_to_p(g, x);
        CHECK(xk + xp == x);
        CHECK(in_span(g, xk, true, false));
        CHECK(in_span(g, xp, false, true));
        // projections are idempotent
        CHECK(project_to_k(g, xk) == xk);
        CHECK(project_to_p(g, xp) == xp);
    }
}

TEST_CASE("gram matrix is the trace form") {
    for (Family f : kFamilies) {
        MatrixLieAlgebra g = build_algebra(f, 2);
        for (int a = 0; a < g.dim_g(); ++a)
            for (int b = 0; b < g.dim_g(); ++b) {
                CHECK(g.gram.at(a, b) == (g.basis[a].mat * g.basis[b].mat).trace());
                CHECK(g.gram.at(a, b) == g.gram.at(b, a));
            }
        CHECK(g.gram * g.gram_inv == RatMatrix::identity(g.dim_g()));
    }
}

TEST_CASE("coadjoint_derivation satisfies the Leibniz rule") {
    std::mt19937 rng(29);
    for (Family fam : kFamilies) {
        MatrixLieAlgebra g = build_algebra(fam, 1);
        int D = g.dim_g();
        auto rnd_poly = [&rng, D](int deg) {
            Polynomial p(D);
            for (const auto& m : homogeneous_basis(D, deg))
                p.add_term(m, Rational(static_cast<int>(rng() % 5) - 2));
            return p;
        };
        for (int z = 0; z < g.dim_k; ++z) {
            Polynomial f = rnd_poly(2), h = rnd_poly(1);
            Polynomial lhs = coadjoint_derivation(g, z, f * h);
            Polynomial rhs = coadjoint_derivation(g, z, f) * h + f * coadjoint_derivation(g, z, h);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("torus derivations scale monomials by their weight") {
    for (Family fam : kFamilies) {
        MatrixLieAlgebra g = build_algebra(fam, 2);
        for (const auto& m : homogeneous_basis(g.dim_g(), 2)) {
            Polynomial mono = Polynomial::monomial(g.dim_g(), m, Rational(1));
            std::vector<int> w = monomial_torus_weight(g, m);
            for (int i = 0; i < g.rank_k; ++i)
                CHECK(coadjoint_derivation(g, i, mono) == mono.scale(-w[i]));
        }
    }
}

TEST_CASE("coordinate weight classes refine the monomial basis") {
    MatrixLieAlgebra g = build_algebra(Family::su, 2);
    auto tw = torus_weights(g);
    REQUIRE(tw.size() == static_cast<std::size_t>(g.dim_g()));
    for (int a = 0; a < g.dim_g(); ++a) {
        for (int i = 0; i < g.rank_k; ++i) CHECK(tw[a][i] == g.basis[a].weight[i]);
        // the coordinate function dual to basis vector a carries the negated weight
        Monomial m(g.dim_g(), 0);
        m[a] = 1;
        auto cw = monomial_torus_weight(g, m);
        for (int i = 0; i < g.rank_k; ++i) CHECK(cw[i] == -tw[a][i]);
    }
}
