#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "ssv/harmonic.hpp"

using namespace ssv;

namespace {

const ZPoly* poly_for(const HarmonicBasis& hb, const std::vector<int>& tuple) {
    for (size_t i = 0; i < hb.size(); ++i)
        if (hb.tuples[i] == tuple) return &hb.polys[i];
    return nullptr;
}

const ExteriorElement* wedge_for(const HarmonicBasis& hb, const std::vector<int>& sub) {
    for (size_t i = 0; i < hb.size(); ++i)
        if (hb.tuples[i] == sub) return &hb.wedges[i];
    return nullptr;
}

} // namespace

TEST_CASE("exterior elements normalize words and differentiate from the left") {
    ExteriorElement a = ExteriorElement::word({4, 1});
    CHECK(a == ExteriorElement::word({1, 4}) * Rational(-1));
    CHECK(ExteriorElement::word({2, 2}).is_zero());
    CHECK((ExteriorElement::generator(1) * ExteriorElement::generator(1)).is_zero());

    ExteriorElement ab = ExteriorElement::generator(1) * ExteriorElement::generator(2);
    ExteriorElement ba = ExteriorElement::generator(2) * ExteriorElement::generator(1);
    CHECK(ab + ba == ExteriorElement());

    // the sign of a derivative counts the letters passed over
    ExteriorElement w = ExteriorElement::word({1, 2, 3});
    CHECK(w.derivative(1) == ExteriorElement::word({2, 3}));
    CHECK(w.derivative(2) == ExteriorElement::word({1, 3}) * Rational(-1));
    CHECK(w.derivative(3) == ExteriorElement::word({1, 2}));
    CHECK(w.derivative(4).is_zero());

    CHECK((ab - ba).str() == "2*zeta[1]*zeta[2]");
}

TEST_CASE("orthogonal harmonic bases match the closed forms") {
    SECTION("odd rank one, degree one") {
        HarmonicBasis hb = harmonic_basis(AlgebraSpec(Family::B, 1), 1);
        REQUIRE(hb.size() == 3);
        CHECK(hb.polys[0] == z(1));
        CHECK(hb.polys[1] == z(2));
        CHECK(hb.polys[2] == z(3));
    }
    SECTION("odd rank one, degree two") {
        HarmonicBasis hb = harmonic_basis(AlgebraSpec(Family::B, 1), 2);
        REQUIRE(hb.size() == 5);
        const ZPoly* p = poly_for(hb, {1, 0, 1});
        REQUIRE(p != nullptr);
        CHECK(*p == z(1) * z(3) - z(2) * z(2));
        const ZPoly* q = poly_for(hb, {2, 0, 0});
        REQUIRE(q != nullptr);
        CHECK(*q == z(1) * z(1) * Rational(1, 2));
    }
    SECTION("even rank two excludes tuples with both corner entries") {
        HarmonicBasis hb = harmonic_basis(AlgebraSpec(Family::D, 2), 2);
        CHECK(poly_for(hb, {0, 1, 1, 0}) == nullptr);
        const ZPoly* p = poly_for(hb, {1, 1, 0, 0});
        REQUIRE(p != nullptr);
        CHECK(*p == z(1) * z(2));
        // a mirrored outer pair pushes the correction into the corner
        const ZPoly* q = poly_for(hb, {1, 0, 0, 1});
        REQUIRE(q != nullptr);
        CHECK(*q == z(1) * z(4) - z(2) * z(3));
    }
}

TEST_CASE("laplacians reproduce the hand examples") {
    SECTION("odd orthogonal includes the half middle term") {
        AlgebraSpec g(Family::B, 1);
        CHECK(laplacian(g, z(2) * z(2)) == ZPoly(1));
        CHECK(laplacian(g, z(1) * z(3) - z(2) * z(2)).is_zero());
    }
    SECTION("even orthogonal pairs mirrored variables") {
        AlgebraSpec g(Family::D, 2);
        CHECK(laplacian(g, z(1) * z(4)) == ZPoly(1));
        CHECK(laplacian(g, z(2) * z(3)) == ZPoly(1));
        CHECK(laplacian(g, z(1) * z(2)).is_zero());
    }
    SECTION("symplectic contracts mirrored wedge pairs") {
        AlgebraSpec g(Family::C, 2);
        ExteriorElement plus =
            ExteriorElement::word({1, 4}) + ExteriorElement::word({2, 3});
        ExteriorElement minus =
            ExteriorElement::word({1, 4}) - ExteriorElement::word({2, 3});
        CHECK(laplacian(g, minus).is_zero());
        // the magnitude is forced; the sign pins the left-derivative order
        CHECK(laplacian(g, plus) == ExteriorElement(Rational(-2)));
    }
}

TEST_CASE("symplectic basis vectors carry one admissible word each") {
    HarmonicBasis hb = harmonic_basis(AlgebraSpec(Family::C, 2), 2);
    REQUIRE(hb.size() == 5);
    const ExteriorElement* v = wedge_for(hb, {1, 4});
    REQUIRE(v != nullptr);
    CHECK(*v == ExteriorElement::word({1, 4}) - ExteriorElement::word({2, 3}));
    const ExteriorElement* y = wedge_for(hb, {1, 2});
    REQUIRE(y != nullptr);
    CHECK(*y == ExteriorElement::word({1, 2}));
}

TEST_CASE("refinement removes stray admissible words at rank five") {
    // smallest case where a raw vector picks up a second admissible word:
    // {1,2,9,10} gets replacements (4,5), and the (2,9)(4,7) word qualifies
    int n = 5;
    std::vector<int> sub{1, 2, 9, 10}, stray{2, 4, 7, 9};
    ExteriorElement raw = detail::harmonic_wedge_raw(sub, n);
    CHECK_FALSE(raw.coeff(stray).is_zero());
    CHECK(detail::admissible_word(stray, n));

    AlgebraSpec g(Family::C, n);
    HarmonicBasis hb = harmonic_basis(g, 4);
    const ExteriorElement* v = wedge_for(hb, sub);
    REQUIRE(v != nullptr);
    CHECK(v->coeff(stray).is_zero());
    long admissible = 0;
    for (const auto& [w, c] : v->terms())
        if (detail::admissible_word(w, n)) ++admissible;
    CHECK(admissible == 1);
    CHECK(laplacian(g, *v).is_zero());
}

TEST_CASE("verification grid passes for the small ranks") {
    auto run = [](Family f, int n, int m) {
        BasisReport rep = verify_basis(AlgebraSpec(f, n), m);
        INFO("family " << family_letter(f) << " n=" << n << " m=" << m << ": " << rep.str());
        CHECK(rep.pass());
        return rep;
    };
    for (int m = 1; m <= 3; ++m) run(Family::B, 1, m);
    for (int m = 1; m <= 3; ++m) run(Family::B, 2, m);
    for (int m = 1; m <= 3; ++m) run(Family::D, 2, m);
    run(Family::D, 1, 2);
    run(Family::C, 1, 1);
    for (int m = 1; m <= 2; ++m) run(Family::C, 2, m);
    for (int m = 1; m <= 3; ++m) run(Family::C, 3, m);
    run(Family::C, 5, 4);

    CHECK(run(Family::B, 1, 2).count == 5);
    CHECK(run(Family::C, 2, 2).count == 5);
    CHECK(run(Family::D, 2, 2).count == 9);
}

TEST_CASE("tensor lifts spread monomials over arrangements") {
    AlgebraSpec b1(Family::B, 1);
    TensorVector sym = tensor_lift(b1, 2, z(1) * z(2));
    TensorVector expect_sym{{encode_multi_index({1, 2}, 3), Rational(1, 2)},
                            {encode_multi_index({2, 1}, 3), Rational(1, 2)}};
    CHECK(sym == expect_sym);
    CHECK(tensor_lift(b1, 2, z(1) * z(1)) ==
          TensorVector{{encode_multi_index({1, 1}, 3), Rational(1)}});

    AlgebraSpec c2(Family::C, 2);
    TensorVector alt = tensor_lift(c2, 2, ExteriorElement::word({1, 4}));
    TensorVector expect_alt{{encode_multi_index({1, 4}, 4), Rational(1, 2)},
                            {encode_multi_index({4, 1}, 4), Rational(-1, 2)}};
    CHECK(alt == expect_alt);
}

TEST_CASE("basis vectors are fixed points of the symmetrizer") {
    SECTION("orthogonal") {
        for (auto [f, n, mmax] : {std::tuple{Family::B, 1, 3}, {Family::D, 2, 3},
                                  {Family::B, 2, 3}}) {
            AlgebraSpec g(f, n);
            for (int m = 1; m <= mmax; ++m) {
                TensorOperator s = brauer_symmetrizer(g, m);
                HarmonicBasis hb = harmonic_basis(g, m);
                for (size_t i = 0; i < hb.size(); ++i) {
                    TensorVector v = tensor_lift(g, m, hb.polys[i]);
                    INFO("family " << family_letter(f) << " n=" << n << " m=" << m
                                   << " vector " << i);
                    CHECK(apply_to_vector(s, v) == v);
                }
            }
        }
    }
    SECTION("symplectic") {
        for (auto [n, mmax] : {std::pair{1, 1}, {2, 2}}) {
            AlgebraSpec g(Family::C, n);
            for (int m = 1; m <= mmax; ++m) {
                TensorOperator s = brauer_symmetrizer(g, m);
                HarmonicBasis hb = harmonic_basis(g, m);
                for (size_t i = 0; i < hb.size(); ++i) {
                    TensorVector v = tensor_lift(g, m, hb.wedges[i]);
                    INFO("n=" << n << " m=" << m << " vector " << i);
                    CHECK(apply_to_vector(s, v) == v);
                }
            }
        }
    }
}

TEST_CASE("harmonic interfaces reject bad parameters") {
    CHECK_THROWS_AS(harmonic_basis(AlgebraSpec(Family::A, 2), 1), FamilyError);
    CHECK_THROWS_AS(harmonic_basis(AlgebraSpec(Family::B, 1), 0), RangeError);
    CHECK_THROWS_AS(harmonic_basis(AlgebraSpec(Family::C, 2), 3), RangeError);
    CHECK_THROWS_AS(laplacian(AlgebraSpec(Family::C, 2), z(1)), FamilyError);
    CHECK_THROWS_AS(laplacian(AlgebraSpec(Family::B, 1), ExteriorElement::word({1})),
                    FamilyError);
    CHECK_THROWS_AS(tensor_lift(AlgebraSpec(Family::B, 1), 2, z(1)), RangeError);
    CHECK_THROWS_AS(verify_basis(AlgebraSpec(Family::A, 3), 1), FamilyError);
}
