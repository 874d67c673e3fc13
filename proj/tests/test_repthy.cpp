#include <catch2/catch_amalgamated.hpp>

#include <harmonia/repthy.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>

using namespace harmonia;

namespace {

TorusCharacter tensor(int rank, const TorusCharacter& a, const TorusCharacter& b) {
    TorusCharacter out;
    out.rank = rank;
    for (const auto& [wa, ma] : a.mult)
        for (const auto& [wb, mb] : b.mult) {
            Weight w(wa);
            for (int i = 0; i < rank; ++i) w[i] += wb[i];
            out.add(w, ma * mb);
        }
    return out;
}

}  // namespace

TEST_CASE("weyl group orders") {
    // type A on r letters is the symmetric group S_r
    CHECK(weyl_group_elements(WeylType::A, 1).size() == 1);
    CHECK(weyl_group_elements(WeylType::A, 2).size() == 2);
    CHECK(weyl_group_elements(WeylType::A, 3).size() == 6);
    CHECK(weyl_group_elements(WeylType::A, 4).size() == 24);
    CHECK(weyl_group_elements(WeylType::B, 1).size() == 2);
    CHECK(weyl_group_elements(WeylType::B, 2).size() == 8);
    CHECK(weyl_group_elements(WeylType::B, 3).size() == 48);
    CHECK(weyl_group_elements(WeylType::D, 1).size() == 1);
    CHECK(weyl_group_elements(WeylType::D, 2).size() == 4);
    CHECK(weyl_group_elements(WeylType::D, 3).size() == 24);
}

TEST_CASE("signed permutations act and carry determinants") {
    auto els = weyl_group_elements(WeylType::B, 2);
    int plus = 0, minus = 0;
    for (const auto& e : els) {
        (e.det > 0 ? plus : minus)++;
        Weight w = e.apply({3, 1});
        CHECK((std::abs(w[0]) == 3 || std::abs(w[0]) == 1));
    }
    CHECK(plus == 4);
    CHECK(minus == 4);
}

TEST_CASE("dominance per type") {
    CHECK(is_dominant(WeylType::A, {3, 1}));
    CHECK_FALSE(is_dominant(WeylType::A, {1, 3}));
    CHECK(is_dominant(WeylType::A, {1, -2}));
    CHECK(is_dominant(WeylType::B, {2, 1}));
    CHECK_FALSE(is_dominant(WeylType::B, {2, -1}));
    CHECK(is_dominant(WeylType::D, {2, -1}));   // last entry may be negative
    CHECK_FALSE(is_dominant(WeylType::D, {1, 2}));
    CHECK(is_dominant(WeylType::D, {-5}));      // rank one: torus, everything dominant
}

TEST_CASE("dimension formula on known representations") {
    CHECK(weyl_dimension(WeylType::A, {0, 0}) == 1);
    CHECK(weyl_dimension(WeylType::A, {3, 0}) == 4);
    CHECK(weyl_dimension(WeylType::A, {2, -2}) == 5);
    CHECK(weyl_dimension(WeylType::A, {1, 0, 0}) == 3);
    CHECK(weyl_dimension(WeylType::A, {1, 1, 0}) == 3);
    CHECK(weyl_dimension(WeylType::A, {2, 1, 0}) == 8);
    CHECK(weyl_dimension(WeylType::B, {4}) == 9);
    CHECK(weyl_dimension(WeylType::B, {1, 0}) == 5);
    CHECK(weyl_dimension(WeylType::B, {1, 1}) == 10);
    CHECK(weyl_dimension(WeylType::B, {2, 0}) == 14);
    CHECK(weyl_dimension(WeylType::D, {1, 0}) == 4);
    CHECK(weyl_dimension(WeylType::D, {1, 1}) == 3);
    CHECK(weyl_dimension(WeylType::D, {1, -1}) == 3);
    CHECK(weyl_dimension(WeylType::D, {1, 0, 0}) == 6);
    CHECK(weyl_dimension(WeylType::D, {1, 1, 0}) == 15);
}

TEST_CASE("irreducible characters list the expected weights") {
    TorusCharacter c = irreducible_character(WeylType::A, {2, 0});
    CHECK(c.total() == 3);
    CHECK(c.at({2, 0}) == 1);
    CHECK(c.at({1, 1}) == 1);
    CHECK(c.at({0, 2}) == 1);
    CHECK(c.at({2, 1}) == 0);

    TorusCharacter b = irreducible_character(WeylType::B, {2});
    CHECK(b.total() == 5);
    for (int m = -2; m <= 2; ++m) CHECK(b.at({m}) == 1);

    TorusCharacter d = irreducible_character(WeylType::D, {1, 0});
    CHECK(d.total() == 4);
    CHECK(d.at({1, 0}) == 1);
    CHECK(d.at({-1, 0}) == 1);
    CHECK(d.at({0, 1}) == 1);
    CHECK(d.at({0, -1}) == 1);
}

TEST_CASE("contragredients") {
    CHECK(contragredient_weight(WeylType::A, {3, 1}) == Weight{-1, -3});
    CHECK(contragredient_weight(WeylType::B, {2, 1}) == Weight{2, 1});
    CHECK(contragredient_weight(WeylType::D, {2, 1}) == Weight{2, 1});
    CHECK(contragredient_weight(WeylType::D, {2, 1, 1}) == Weight{2, 1, -1});
}

TEST_CASE("highest-weight peeling recovers tensor product decompositions") {
    // gl(2): standard x standard = sym + alt
    TorusCharacter std2 = irreducible_character(WeylType::A, {1, 0});
    auto dec = decompose(WeylType::A, tensor(2, std2, std2));
    CHECK(dec.size() == 2);
    CHECK(dec.at({2, 0}) == 1);
    CHECK(dec.at({1, 1}) == 1);

    // so(3): vector x vector = spin 0 + spin 1 + spin 2
    TorusCharacter v = irreducible_character(WeylType::B, {1});
    auto decb = decompose(WeylType::B, tensor(1, v, v));
    CHECK(decb.size() == 3);
    CHECK(decb.at({0}) == 1);
    CHECK(decb.at({1}) == 1);
    CHECK(decb.at({2}) == 1);

    // so(4): vector x vector = trivial + two halves of the adjoint + symmetric
    TorusCharacter vd = irreducible_character(WeylType::D, {1, 0});
    auto decd = decompose(WeylType::D, tensor(2, vd, vd));
    CHECK(decd.size() == 4);
    CHECK(decd.at({0, 0}) == 1);
    CHECK(decd.at({1, 1}) == 1);
    CHECK(decd.at({1, -1}) == 1);
    CHECK(decd.at({2, 0}) == 1);
}

TEST_CASE("decompose rejects characters that are not representations") {
    TorusCharacter bad;
    bad.rank = 2;
    bad.add({0, 1}, 1);  // not dominant for type A
    CHECK_THROWS_AS(decompose(WeylType::A, bad), std::domain_error);
}

TEST_CASE("polynomial character counts all monomials") {
    MatrixLieAlgebra g = build_algebra(Family::su, 2);
    for (int d = 0; d <= 3; ++d)
        CHECK(Int(polynomial_character(g, d).total()) == monomial_count(g.dim_g(), d));
}

TEST_CASE("kernel and series paths give the same graded character") {
    for (Family f : {Family::su, Family::so_odd, Family::so_even}) {
        MatrixLieAlgebra g = build_algebra(f, 1);
        InvariantSet inv = generator_polynomials(g);
        INFO(family_name(f));
        for (int d = 0; d <= 4; ++d) {
            TorusCharacter a = graded_harmonic_character_kernel(g, inv, d);
            TorusCharacter b = graded_harmonic_character_series(g, inv, d);
            CHECK(a == b);
        }
    }
}

TEST_CASE("multiplicity ledger for the rank-one unitary pair is saturated") {
    MatrixLieAlgebra g = build_algebra(Family::su, 1);
    InvariantSet inv = generator_polynomials(g);
    MultiplicityLedger led = multiplicity_report(g, inv, 8);
    CHECK(led.bound_ok);
    CHECK(led.fully_saturated());
    CHECK(led.cumulative.size() == 17);  // torus weights 0, +-2, ..., +-16
    for (const auto& [w, m] : led.cumulative) {
        CHECK(m == 1);
        CHECK(led.dims.at(w) == 1);
        CHECK(w[0] % 2 == 0);
        CHECK(std::abs(w[0]) <= 16);
    }
}

TEST_CASE("multiplicity ledger for the odd orthogonal rank-one pair") {
    MatrixLieAlgebra g = build_algebra(Family::so_odd, 1);
    InvariantSet inv = generator_polynomials(g);
    MultiplicityLedger led = multiplicity_report(g, inv, 4);
    CHECK(led.bound_ok);
    const std::map<Weight, long long> want{{{0}, 1}, {{1}, 3}, {{2}, 5}, {{3}, 7}, {{4}, 5}};
    CHECK(led.cumulative == want);
    // spins 0..3 saturated at dimension 2s+1, spin 4 still short
    std::vector<Weight> sat{{0}, {1}, {2}, {3}};
    CHECK(led.saturated == sat);

    // per-degree rows
    auto dec1 = decompose(WeylType::B, graded_harmonic_character_kernel(g, inv, 1));
    CHECK(dec1 == std::map<Weight, long long>{{{1}, 2}});
    auto dec2 = decompose(WeylType::B, graded_harmonic_character_kernel(g, inv, 2));
    CHECK(dec2 == std::map<Weight, long long>{{{1}, 1}, {{2}, 3}});
    auto dec3 = decompose(WeylType::B, graded_harmonic_character_kernel(g, inv, 3));
    CHECK(dec3 == std::map<Weight, long long>{{{2}, 2}, {{3}, 4}});
    auto dec4 = decompose(WeylType::B, graded_harmonic_character_kernel(g, inv, 4));
    CHECK(dec4 == std::map<Weight, long long>{{{3}, 3}, {{4}, 5}});
}

TEST_CASE("multiplicity ledger for the rank-two unitary pair") {
    MatrixLieAlgebra g = build_algebra(Family::su, 2);
    InvariantSet inv = generator_polynomials(g);

    auto dec1 = decompose(WeylType::A, graded_harmonic_character_kernel(g, inv, 1));
    CHECK(dec1 == std::map<Weight, long long>{{{2, 1}, 1}, {{1, -1}, 1}, {{-1, -2}, 1}});

    auto dec2 = decompose(WeylType::A, graded_harmonic_character_kernel(g, inv, 2));
    const std::map<Weight, long long> want2{{{-2, -4}, 1}, {{-1, -2}, 1}, {{0, -3}, 1},
                                            {{1, -1}, 1},  {{2, -2}, 1},  {{2, 1}, 1},
                                            {{3, 0}, 1},   {{4, 2}, 1}};
    CHECK(dec2 == want2);
    Int total = 0;
    for (const auto& [w, m] : dec2) total += Int(m) * weyl_dimension(WeylType::A, w);
    CHECK(total == 26);

    MultiplicityLedger led = multiplicity_report(g, inv, 4);
    CHECK(led.bound_ok);
    CHECK(led.cumulative.at({0, 0}) == 1);
    CHECK(led.cumulative.at({2, 1}) == 2);
    CHECK(led.cumulative.at({-1, -2}) == 2);
    CHECK(led.cumulative.at({1, -1}) == 3);
    auto saturated_has = [&led](const Weight& w) {
        return std::find(led.saturated.begin(), led.saturated.end(), w) != led.saturated.end();
    };
    CHECK(saturated_has({0, 0}));
    CHECK(saturated_has({2, 1}));
    CHECK(saturated_has({-1, -2}));
    CHECK(saturated_has({1, -1}));
}

TEST_CASE("regular closure totals") {
    MatrixLieAlgebra g = build_algebra(Family::su, 1);
    InvariantSet inv = generator_polynomials(g);
    MultiplicityLedger led = multiplicity_report(g, inv, 8);
    std::vector<KTypeCount> v;
    for (const auto& [w, m] : led.cumulative) v.push_back({w, led.dims.at(w).convert_to<long long>()});
    RegularClosureReport rep = regular_closure_check(led, v);
    CHECK(rep.all_contragredients_saturated);
    CHECK(rep.equality);
    CHECK(rep.computed == 17);
    CHECK(rep.dim_v == 17);

    // a target containing an unsaturated type leaves the check open
    MatrixLieAlgebra g2 = build_algebra(Family::so_odd, 1);
    InvariantSet inv2 = generator_polynomials(g2);
    MultiplicityLedger led2 = multiplicity_report(g2, inv2, 4);
    std::vector<KTypeCount> v2{{{4}, 1}};
    RegularClosureReport rep2 = regular_closure_check(led2, v2);
    CHECK_FALSE(rep2.all_contragredients_saturated);
    CHECK(rep2.computed == 5);
    CHECK(rep2.dim_v == 9);
}
