#include <catch2/catch_amalgamated.hpp>

#include "ssv/pi0tau.hpp"
#include "ssv/poly.hpp"

using namespace ssv;

TEST_CASE("polynomial ring basics") {
    MuPoly x = mu(1, -1), y = mu(2, -1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + Rational(2) * x * y + y * y);
    CHECK((x - x).is_zero());
    CHECK(MuPoly(0).is_zero());
    CHECK((x * MuPoly(Rational(0))).is_zero());
    CHECK(MuPoly(1).constant_term().is_one());
    CHECK((x + MuPoly(3)).coeff({}) == Rational(3));
    CHECK(x.total_degree() == 1);
    CHECK((x * x * y + x).total_degree() == 3);
}

TEST_CASE("polynomial printing is deterministic") {
    MuPoly p = mu(1) * mu(1) * Rational(2) + mu(2, -3) - MuPoly(Rational(1, 2));
    CHECK(mu_str(p) == "-1/2 + 2*mu[1]^2 + mu[2;-3]");
    CHECK(mu_str(MuPoly()) == "0");
    CHECK(mu_str(-mu(1)) == "-mu[1]");
}

TEST_CASE("derivative and evaluation") {
    MuPoly x = mu(1), y = mu(2);
    MuPoly p = x * x * y + y * Rational(3);
    CHECK(p.derivative(MuVar{1, 0}) == Rational(2) * x * y);
    CHECK(p.derivative(MuVar{2, 0}) == x * x + MuPoly(3));
    CHECK(p.derivative(MuVar{3, 0}).is_zero());
    std::map<MuVar, Rational> pt{{MuVar{1, 0}, Rational(2)}, {MuVar{2, 0}, Rational(-1, 2)}};
    CHECK(p.evaluate(pt) == Rational(-7, 2));
    CHECK_THROWS_AS(p.evaluate({}), Error);
}

TEST_CASE("substitute and rename") {
    MuPoly x = mu(1), y = mu(2);
    CHECK((x * x).substitute(MuVar{1, 0}, y + MuPoly(1)) ==
          y * y + Rational(2) * y + MuPoly(1));
    MuPoly q = (x + y).rename([](const MuVar& v) { return MuVar{v.i + 10, v.r}; });
    CHECK(q == mu(11) + mu(12));
}

TEST_CASE("translation is a derivation lowering depth") {
    MuPoly a = mu(1, -1);
    CHECK(translate(a) == mu(1, -2));
    CHECK(translate(mu(1, -2)) == Rational(2) * mu(1, -3));
    CHECK(translate(a * a) == Rational(2) * a * mu(1, -2));
    CHECK(translate(MuPoly(5)).is_zero());
    CHECK(translate(a * mu(2, -1)) == mu(1, -2) * mu(2, -1) + a * mu(2, -2));
    CHECK(translate_pow(a, 2) == Rational(2) * mu(1, -3));
    CHECK_THROWS_AS(translate(mu(1, 0)), DepthError);
}

TEST_CASE("tau commutation in pi0[tau]") {
    Pi0Tau t = Pi0Tau::tau();
    Pi0Tau m1 = MuPoly(mu(1, -1));
    CHECK(t * m1 - m1 * t == Pi0Tau(mu(1, -2)));
    CHECK((t * t) * m1 ==
          m1 * t * t + Rational(2) * Pi0Tau(mu(1, -2)) * t + Pi0Tau(Rational(2) * mu(1, -3)));
    CHECK(Pi0Tau::tau(2) == t * t);
    CHECK((t + m1) * (t - m1) == t * t - m1 * m1 - Pi0Tau(mu(1, -2)));
}

TEST_CASE("two step Miura product") {
    // (tau + mu_2[-1])(tau + mu_1[-1]) = tau^2 + (mu_1+mu_2)tau + mu_2 mu_1 + mu_1[-2]
    Pi0Tau t = Pi0Tau::tau();
    Pi0Tau prod = (t + Pi0Tau(mu(2, -1))) * (t + Pi0Tau(mu(1, -1)));
    CHECK(prod.coeff(2) == MuPoly(1));
    CHECK(prod.coeff(1) == mu(1, -1) + mu(2, -1));
    CHECK(prod.coeff(0) == mu(2, -1) * mu(1, -1) + mu(1, -2));
    CHECK(prod.apply_to_one() == mu(2, -1) * mu(1, -1) + mu(1, -2));
    CHECK(prod.tau_degree() == 2);
}

TEST_CASE("pi0tau printing") {
    Pi0Tau t = Pi0Tau::tau();
    Pi0Tau x = (t + Pi0Tau(mu(1, -1))) * (t + Pi0Tau(mu(1, -1)));
    CHECK(x.str() == "tau^2 + (2*mu[1;-1])*tau + mu[1;-2] + mu[1;-1]^2");
}
