#include <catch2/catch_amalgamated.hpp>

#include "ssv/serialize.hpp"

using namespace ssv;

TEST_CASE("rationals are quoted p/q strings") {
    CHECK(to_json(Rational(-2, 3)).dump() == "\"-2/3\"");
    CHECK(to_json(Rational(5)).dump() == "\"5\"");
    CHECK(to_json(Rational(0)).dump() == "\"0\"");
}

TEST_CASE("element terms carry tagged factor arrays") {
    AlgebraSpec b1(Family::B, 1);
    UElement e = UElement::generator(b1, 1, 1, -1) * UElement::tau(b1) * Rational(-2, 3);
    CHECK(to_json(e).dump() ==
          R"({"terms":[{"coeff":"-2/3","monomial":[["F",1,1,-1],["tau"]]}]})");

    AlgebraSpec a2(Family::A, 2);
    UElement x = UElement::generator(a2, 1, 2, -1);
    CHECK(to_json(x).dump() == R"({"terms":[{"coeff":"1","monomial":[["E",1,2,-1]]}]})");
    CHECK(to_json(UElement(a2)).dump() == R"({"terms":[]})");

    // tau powers repeat the factor
    UElement t2 = UElement::tau(b1, 2);
    CHECK(to_json(t2).dump() == R"({"terms":[{"coeff":"1","monomial":[["tau"],["tau"]]}]})");
}

TEST_CASE("pi0 polynomials use mu atoms with depth") {
    MuPoly p = mu(1) * mu(2, -1) * Rational(1, 2);
    CHECK(to_json(p).dump() ==
          R"({"terms":[{"coeff":"1/2","monomial":[["mu",1,0],["mu",2,-1]]}]})");

    Pi0Tau x = Pi0Tau(mu(1)) * Pi0Tau::tau(2);
    CHECK(to_json(x).dump() ==
          R"({"terms":[{"coeff":"1","monomial":[["mu",1,0],["tau"],["tau"]]}]})");
}

TEST_CASE("harmonic atoms") {
    CHECK(to_json(z(1) * z(2) * Rational(2)).dump() ==
          R"({"terms":[{"coeff":"2","monomial":[["z",1],["z",2]]}]})");
    ExteriorElement w = ExteriorElement::word({2, 1});
    CHECK(to_json(w).dump() ==
          R"({"terms":[{"coeff":"-1","monomial":[["zeta",1],["zeta",2]]}]})");
}

TEST_CASE("tensor operators export sparse word triplets") {
    Json j = to_json(TensorOperator::perm(2, 2, 1, 2));
    CHECK(j["m"] == 2);
    CHECK(j["N"] == 2);
    CHECK(j["entries"].size() == 4);
    // the swap sends column (1,2) to row (2,1)
    Json triple = Json::array({Json::array({2, 1}), Json::array({1, 2}), "1"});
    bool found = false;
    for (const auto& e : j["entries"]) found = found || e == triple;
    CHECK(found);
}

TEST_CASE("tau polynomials keep the power layout explicit") {
    Json j = to_json(phi_coefficients(AlgebraSpec(Family::B, 1), 1));
    CHECK(j["degree"] == 1);
    CHECK(j["coeffs"].size() == 2);
    CHECK(j["coeffs"][0]["tau_power"] == 1);
    CHECK(j["coeffs"][1]["tau_power"] == 0);
}

TEST_CASE("report shapes") {
    VerifyReport r = verify_main_theorem(AlgebraSpec(Family::B, 1), 1);
    Json j = to_json(r);
    CHECK(j["match"] == true);
    CHECK(j["diff"] == "0");
    CHECK(j.contains("lhs"));
    CHECK(j.contains("rhs"));

    Json cs = to_json(char_sum(AlgebraSpec(Family::C, 2), 2));
    CHECK(cs["count"] == 5);
    CHECK(cs["words"].size() == 5);

    Json br = to_json(verify_basis(AlgebraSpec(Family::B, 1), 1));
    CHECK(br["pass"] == true);
    CHECK(br["count"] == 3);

    Json ar = to_json(verify_annihilation(Family::A, 2, {mu(1, -1) + mu(2, -1)}));
    CHECK(ar["match"] == true);
    CHECK(ar["nonzero"].empty());

    Json cr = to_json(verify_casimir(AlgebraSpec(Family::B, 1), 1));
    CHECK(cr["pass"] == true);
    CHECK(cr["image_str"] == mu_str(multiset_image(AlgebraSpec(Family::B, 1), 1)));
}
