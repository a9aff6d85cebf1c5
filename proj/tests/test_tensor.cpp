#include <catch2/catch_amalgamated.hpp>

#include "ssv/tensor.hpp"

using namespace ssv;

namespace {

bool commutes_to_zero(const TensorOperator& s, const TensorOperator& q) {
    return (s * q).is_zero() && (q * s).is_zero();
}

} // namespace

TEST_CASE("multi-index codec") {
    CHECK(encode_multi_index({1, 1, 1}, 5) == 0);
    CHECK(encode_multi_index({2, 1, 1}, 5) == 1);
    CHECK(encode_multi_index({1, 2, 1}, 5) == 5);
    CHECK(decode_multi_index(encode_multi_index({3, 1, 4}, 5), 5, 3) == std::vector<int>{3, 1, 4});
    CHECK_THROWS_AS(encode_multi_index({0, 1}, 5), IndexError);
    CHECK_THROWS_AS(encode_multi_index({6}, 5), IndexError);
}

TEST_CASE("permutation and q operators") {
    AlgebraSpec b1(Family::B, 1); // o_3
    int N = 3;
    TensorOperator p = TensorOperator::perm(N, 2, 1, 2);
    TensorOperator q = TensorOperator::q_form(b1, 2, 1, 2);
    TensorOperator id = TensorOperator::identity(N, 2);
    CHECK(p * p == id);
    CHECK(q * q == q * Rational(N));
    CHECK(p * q == q);
    CHECK(q * p == q);
    CHECK(q.trace() == Rational(N));
    CHECK(p.trace() == Rational(N));

    AlgebraSpec c2(Family::C, 2); // sp_4
    TensorOperator pc = TensorOperator::perm(4, 2, 1, 2);
    TensorOperator qc = TensorOperator::q_form(c2, 2, 1, 2);
    CHECK(qc * qc == qc * Rational(4));
    CHECK(pc * qc == qc * Rational(-1));
    CHECK(qc * pc == qc * Rational(-1));
    CHECK(qc.trace() == Rational(4));
}

TEST_CASE("h and a projectors") {
    for (int N : {2, 3}) {
        for (int m : {2, 3}) {
            TensorOperator h = symmetrizer_h(N, m);
            TensorOperator a = antisymmetrizer(N, m);
            CHECK(h * h == h);
            CHECK(a * a == a);
            CHECK((h * a).is_zero());
            CHECK(h.trace() == gen_binomial(N + m - 1, m));
            CHECK(a.trace() == gen_binomial(N, m));
            CHECK(h.rank() == h.trace().to_long());
            CHECK(a.rank() == a.trace().to_long());
            // P_ab H = H, P_ab A = -A
            TensorOperator p = TensorOperator::perm(N, m, 1, 2);
            CHECK(p * h == h);
            CHECK(p * a == a * Rational(-1));
        }
    }
}

TEST_CASE("brauer symmetrizer is an idempotent killing q") {
    struct Case {
        Family f;
        int n, m;
    };
    for (const Case& c : {Case{Family::B, 1, 2}, Case{Family::B, 1, 3}, Case{Family::B, 1, 4},
                          Case{Family::B, 2, 2}, Case{Family::B, 2, 3}, Case{Family::C, 2, 2},
                          Case{Family::C, 3, 2}, Case{Family::C, 3, 3}, Case{Family::D, 2, 2},
                          Case{Family::D, 2, 3}, Case{Family::D, 3, 2}}) {
        AlgebraSpec g(c.f, c.n);
        INFO(to_string(c.f) << " n=" << c.n << " m=" << c.m);
        TensorOperator s = brauer_symmetrizer(g, c.m);
        CHECK(s * s == s);
        CHECK(s.trace() == brauer_symmetrizer_rank(g, c.m));
        for (int b = 2; b <= c.m; ++b) {
            CHECK(commutes_to_zero(s, TensorOperator::q_form(g, c.m, 1, b)));
            TensorOperator p = TensorOperator::perm(g.matrix_size(), c.m, 1, b);
            CHECK(s * p == (g.orthogonal() ? s : s * Rational(-1)));
            CHECK(p * s == (g.orthogonal() ? s : s * Rational(-1)));
        }
    }
}

TEST_CASE("rank of the symmetrizer matches its trace") {
    for (auto [f, n, m] : {std::tuple{Family::B, 1, 2}, {Family::B, 1, 3}, {Family::C, 2, 2},
                           {Family::D, 2, 2}}) {
        AlgebraSpec g(f, n);
        TensorOperator s = brauer_symmetrizer(g, m);
        INFO(to_string(f) << " n=" << n << " m=" << m);
        CHECK(s.rank() == s.trace().to_long());
    }
}

TEST_CASE("symplectic symmetrizer vanishes at the critical degree") {
    AlgebraSpec c1(Family::C, 1);
    CHECK(brauer_symmetrizer(c1, 2).is_zero()); // S^(n+1), n = 1
    AlgebraSpec c2(Family::C, 2);
    CHECK(brauer_symmetrizer(c2, 3).is_zero());
    CHECK_THROWS_AS(brauer_symmetrizer(c1, 3), RangeError);
}

TEST_CASE("product form agrees with the projector expansion") {
    for (auto [f, n, m] : {std::tuple{Family::B, 1, 2}, {Family::B, 1, 3}, {Family::B, 2, 2},
                           {Family::C, 2, 2}, {Family::C, 3, 3}, {Family::D, 2, 2},
                           {Family::D, 2, 3}}) {
        AlgebraSpec g(f, n);
        INFO(to_string(f) << " n=" << n << " m=" << m);
        CHECK(brauer_symmetrizer(g, m) == brauer_symmetrizer_expanded(g, m));
    }
}

TEST_CASE("partial traces collapse with gamma ratios") {
    for (auto [f, n, m] : {std::tuple{Family::B, 1, 3}, {Family::B, 1, 4}, {Family::B, 2, 3},
                           {Family::C, 2, 2}, {Family::C, 3, 3}, {Family::D, 2, 3},
                           {Family::D, 3, 2}}) {
        AlgebraSpec g(f, n);
        TensorOperator s = brauer_symmetrizer(g, m);
        Rational om = g.omega();
        for (int k = 1; k < m; ++k) {
            INFO(to_string(f) << " n=" << n << " m=" << m << " k=" << k);
            TensorOperator lhs = s.partial_trace_to(k);
            Rational top = g.orthogonal() ? Rational(g.matrix_size() + m - 2)
                                          : Rational(2 * g.rank() - k + 1);
            Rational c = gamma_factor(om, k) / gamma_factor(om, m) * gen_binomial(top, m - k) /
                         gen_binomial(m, k);
            CHECK(lhs == brauer_symmetrizer(g, k) * c);
        }
        // k = 0: the full trace against the dimension formula is covered above
    }
}

TEST_CASE("tensor shape mismatches are rejected") {
    TensorOperator a(3, 2), b(3, 3);
    CHECK_THROWS_AS(a + b, RangeError);
    CHECK_THROWS_AS(TensorOperator::perm(3, 2, 2, 1), RangeError);
    CHECK_THROWS_AS(TensorOperator::q_form(AlgebraSpec(Family::A, 3), 2, 1, 2), FamilyError);
}
