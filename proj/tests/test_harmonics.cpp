#include <catch2/catch_amalgamated.hpp>

#include <harmonia/harmonics.hpp>

#include <random>

using namespace harmonia;

namespace {

// test-side series expansion of prod (1 - t^d_i) / (1 - t)^dim:
// numerator by direct convolution, then dim repeated prefix sums
std::vector<Int> series_by_prefix_sums(const std::vector<int>& degs, int dim, int cutoff) {
    std::vector<Int> c(cutoff + 1, 0);
    c[0] = 1;
    for (int d : degs)
        for (int j = cutoff; j >= d; --j) c[j] -= c[j - d];
    for (int rep = 0; rep < dim; ++rep)
        for (int j = 1; j <= cutoff; ++j) c[j] += c[j - 1];
    return c;
}

}  // namespace

TEST_CASE("dualize on the rank-one unitary pair") {
    MatrixLieAlgebra g = build_algebra(Family::su, 1);
    // basis order: compact Cartan, then the two off-diagonal elements;
    // trace form is diag(2) on the Cartan and swaps the other two
    auto c = [&g](int a) { return Polynomial::variable(g.dim_g(), a); };
    CHECK(dualize(g, c(0)) == c(0).scale(Rational(1, 2)));
    CHECK(dualize(g, c(1)) == c(2));
    CHECK(dualize(g, c(2)) == c(1));
    // linear, multiplicative on products
    CHECK(dualize(g, c(1) * c(2)) == c(1) * c(2));
    CHECK(dualize(g, c(1) + c(0)) == c(2) + c(0).scale(Rational(1, 2)));
}

TEST_CASE("weight classes partition the monomial basis") {
    for (Family f : {Family::su, Family::so_odd}) {
        MatrixLieAlgebra g = build_algebra(f, 1);
        for (int d = 0; d <= 3; ++d) {
            auto classes = weight_classes(g, d);
            std::size_t total = 0;
            for (const auto& [w, monos] : classes) {
                total += monos.size();
                for (const auto& m : monos) CHECK(monomial_torus_weight(g, m) == w);
            }
            CHECK(Int(total) == monomial_count(g.dim_g(), d));
        }
    }
}

TEST_CASE("harmonic spaces on the rank-one unitary pair") {
    MatrixLieAlgebra g = build_algebra(Family::su, 1);
    InvariantSet inv = generator_polynomials(g);
    auto c = [&g](int a) { return Polynomial::variable(g.dim_g(), a); };

    HarmonicSpace h0 = harmonic_space(g, inv, 0);
    REQUIRE(h0.dimension() == 1);
    CHECK(h0.basis[0] == Polynomial::constant(g.dim_g(), 1));

    for (int d = 1; d <= 5; ++d) {
        HarmonicSpace h = harmonic_space(g, inv, d);
        REQUIRE(h.dimension() == 2);
        // the two pure powers of the off-diagonal coordinates
        Polynomial a = c(1), b = c(2);
        Polynomial pa = a, pb = b;
        for (int i = 1; i < d; ++i) {
            pa = pa * a;
            pb = pb * b;
        }
        CHECK((h.basis[0] == pa || h.basis[1] == pa));
        CHECK((h.basis[0] == pb || h.basis[1] == pb));
    }
}

TEST_CASE("kernel members are annihilated by every dual generator operator") {
    for (Family f : {Family::su, Family::so_odd}) {
        MatrixLieAlgebra g = build_algebra(f, 1);
        InvariantSet inv = generator_polynomials(g);
        for (int d = 0; d <= 3; ++d) {
            HarmonicSpace h = harmonic_space(g, inv, d);
            for (const auto& hb : h.basis)
                for (const auto& gen : inv.gens) {
                    Polynomial op = dualize(g, gen.poly);
                    CHECK(apply_operator(op, hb).is_zero());
                }
        }
    }
}

TEST_CASE("harmonics pair to zero against the dualized ideal") {
    MatrixLieAlgebra g = build_algebra(Family::su, 1);
    InvariantSet inv = generator_polynomials(g);
    int d = 3;
    HarmonicSpace h = harmonic_space(g, inv, d);
    for (const auto& gen : inv.gens) {
        if (gen.degree > d) continue;
        for (const auto& m : homogeneous_basis(g.dim_g(), d - gen.degree)) {
            Polynomial ideal_elt = gen.poly * Polynomial::monomial(g.dim_g(), m, Rational(1));
            for (const auto& hb : h.basis) CHECK(pairing(dualize(g, ideal_elt), hb) == 0);
        }
    }
}

TEST_CASE("direct sum holds degree by degree") {
    struct Case {
        Family f;
        int n;
        int max_d;
        std::vector<int> dims;
    };
    const std::vector<Case> cases{
        {Family::su, 1, 5, {1, 2, 2, 2, 2, 2}},
        {Family::so_odd, 1, 3, {1, 6, 18, 38}},
        {Family::so_even, 1, 4, {1, 2, 2, 2, 2}},
        {Family::su, 2, 3, {1, 7, 26, 69}},
    };
    for (const auto& cs : cases) {
        MatrixLieAlgebra g = build_algebra(cs.f, cs.n);
        InvariantSet inv = generator_polynomials(g);
        INFO(family_name(cs.f) << " n=" << cs.n);
        for (int d = 0; d <= cs.max_d; ++d) {
            DirectSumReport rep = verify_direct_sum(g, inv, d);
            CHECK(rep.ok());
            CHECK(rep.harmonic_dim == cs.dims[d]);
            CHECK(Int(rep.dim_p) == monomial_count(g.dim_g(), d));
            CHECK(rep.ideal_dim + rep.harmonic_dim == rep.dim_p);
            CHECK(rep.ideal_dim == ideal_dimension(g, inv, d));
        }
    }
}

TEST_CASE("hilbert coefficients against an independent expansion") {
    // rank-one unitary pair: (1-t)(1-t^2)/(1-t)^3 = (1+t)/(1-t)
    auto su1 = hilbert_coefficients({2, 1}, 3, 6);
    for (int d = 0; d <= 6; ++d) CHECK(su1[d] == (d == 0 ? 1 : 2));

    const std::vector<std::pair<std::vector<int>, int>> shapes{
        {{2, 3, 1, 2}, 8},    // su n=2
        {{2, 2, 2}, 6},       // so-odd n=1
        {{2, 4, 2, 2}, 10},   // so-even n=2
        {{2, 4, 3, 2, 4}, 15} // so-odd n=2
    };
    for (const auto& [degs, dim] : shapes) {
        auto got = hilbert_coefficients(degs, dim, 8);
        auto want = series_by_prefix_sums(degs, dim, 8);
        for (int d = 0; d <= 8; ++d) CHECK(got[d] == want[d]);
    }

    // frozen rows
    auto su2 = hilbert_coefficients({2, 3, 1, 2}, 8, 5);
    CHECK(su2 == std::vector<Int>{1, 7, 26, 69, 148, 275});
    auto so1 = hilbert_coefficients({2, 2, 2}, 6, 3);
    CHECK(so1 == std::vector<Int>{1, 6, 18, 38});
    auto soe2 = hilbert_coefficients({2, 4, 2, 2}, 10, 3);
    CHECK(soe2 == std::vector<Int>{1, 10, 52, 190});
}

TEST_CASE("harmonic basis is deterministic and echelonized") {
    MatrixLieAlgebra g = build_algebra(Family::su, 2);
    InvariantSet inv = generator_polynomials(g);
    HarmonicSpace a = harmonic_space(g, inv, 2);
    HarmonicSpace b = harmonic_space(g, inv, 2);
    REQUIRE(a.dimension() == b.dimension());
    for (int i = 0; i < a.dimension(); ++i) CHECK(a.basis[i] == b.basis[i]);
    // leading monomials strictly descend in the grading order
    for (int i = 0; i + 1 < a.dimension(); ++i)
        CHECK(grlex_less(a.basis[i + 1].leading_monomial(), a.basis[i].leading_monomial()));
}
