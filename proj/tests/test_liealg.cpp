#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "ssv/liealg.hpp"

using namespace ssv;

namespace {

using Coef = std::map<IndexPair, Rational>;

Coef as_map(const std::vector<GenTerm>& v) {
    Coef m;
    for (const auto& [p, c] : v) m[p] += c;
    for (auto it = m.begin(); it != m.end();)
        it = it->second.is_zero() ? m.erase(it) : std::next(it);
    return m;
}

Coef bracket_lin(const AlgebraSpec& g, const Coef& a, const IndexPair& b) {
    Coef out;
    for (const auto& [p, c] : a)
        for (const auto& [q, d] : g.bracket_pairs(p, b)) out[q] += c * d;
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::vector<AlgebraSpec> small_algebras() {
    return {AlgebraSpec(Family::A, 2), AlgebraSpec(Family::A, 3), AlgebraSpec(Family::B, 1),
            AlgebraSpec(Family::B, 2), AlgebraSpec(Family::C, 1), AlgebraSpec(Family::C, 2),
            AlgebraSpec(Family::D, 2), AlgebraSpec(Family::D, 3)};
}

} // namespace

TEST_CASE("dimensions of the classical algebras") {
    CHECK(AlgebraSpec(Family::A, 3).dim() == 9);
    CHECK(AlgebraSpec(Family::B, 1).dim() == 3);  // o_3
    CHECK(AlgebraSpec(Family::B, 2).dim() == 10); // o_5
    CHECK(AlgebraSpec(Family::B, 3).dim() == 21); // o_7
    CHECK(AlgebraSpec(Family::C, 1).dim() == 3);  // sp_2
    CHECK(AlgebraSpec(Family::C, 2).dim() == 10); // sp_4
    CHECK(AlgebraSpec(Family::C, 3).dim() == 21); // sp_6
    CHECK(AlgebraSpec(Family::D, 2).dim() == 6);  // o_4
    CHECK(AlgebraSpec(Family::D, 3).dim() == 15); // o_6
    CHECK(AlgebraSpec(Family::D, 4).dim() == 28); // o_8
}

TEST_CASE("canonical index set shape") {
    AlgebraSpec b2(Family::B, 2); // N = 5
    CHECK_FALSE(b2.canonical(1, 5));
    CHECK_FALSE(b2.canonical(3, 3));
    CHECK(b2.canonical(2, 3));
    CHECK(b2.zero_pair(2, 4));
    CHECK(b2.resolve(2, 4).empty());

    AlgebraSpec c2(Family::C, 2); // N = 4
    CHECK(c2.canonical(1, 4));
    CHECK(c2.canonical(4, 1));
    CHECK(c2.canonical(3, 2));
    CHECK_FALSE(c2.canonical(2, 4));

    // F_{ij} = -theta F_{j'i'} for non-canonical pairs
    auto r = c2.resolve(2, 4); // prime(4)=1, prime(2)=3
    REQUIRE(r.size() == 1);
    CHECK(r[0].first == IndexPair{1, 3});
    CHECK(r[0].second == Rational(-c2.theta(2, 4)));

    AlgebraSpec d2(Family::D, 2);
    auto r2 = d2.resolve(3, 4); // theta = 1, prime(4)=1, prime(3)=2
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].first == IndexPair{1, 2});
    CHECK(r2[0].second == Rational(-1));
}

TEST_CASE("generator classes partition the basis") {
    for (const auto& g : small_algebras()) {
        int raising = 0, cartan = 0, lowering = 0;
        for (const auto& [i, j] : g.canonical_index_set()) {
            switch (g.gen_class(i, j)) {
                case GenClass::Raising: ++raising; break;
                case GenClass::Cartan: ++cartan; break;
                case GenClass::Lowering: ++lowering; break;
            }
        }
        INFO(to_string(g.family()) << " n=" << g.rank());
        CHECK(raising == lowering);
        CHECK(cartan == (g.is_gl() ? g.matrix_size() : g.rank()));
        CHECK(raising + cartan + lowering == g.dim());
    }
}

TEST_CASE("chi and top orders are opposite on non-cartan classes") {
    for (const auto& g : small_algebras()) {
        for (const auto& [i, j] : g.canonical_index_set()) {
            GenClass c = g.gen_class(i, j);
            for (const auto& [k, l] : g.canonical_index_set()) {
                if (g.gen_class(k, l) != GenClass::Cartan || c == GenClass::Cartan) continue;
                bool chi_less = g.ord_chi(i, j) < g.ord_chi(k, l);
                bool top_less = g.ord_top(i, j) < g.ord_top(k, l);
                CHECK(chi_less != top_less);
                CHECK(chi_less == (c == GenClass::Raising));
            }
        }
    }
}

TEST_CASE("o_3 structure constants") {
    AlgebraSpec g(Family::B, 1);
    auto br = [&](int a, int b, int c, int d) { return as_map(g.bracket_pairs({a, b}, {c, d})); };
    CHECK(br(1, 2, 2, 1) == Coef{{{1, 1}, Rational(1)}});
    CHECK(br(1, 1, 1, 2) == Coef{{{1, 2}, Rational(1)}});
    CHECK(br(1, 1, 2, 1) == Coef{{{2, 1}, Rational(-1)}});
    CHECK(br(1, 2, 1, 2).empty());
}

TEST_CASE("sp_2 structure constants") {
    AlgebraSpec g(Family::C, 1);
    auto br = [&](int a, int b, int c, int d) { return as_map(g.bracket_pairs({a, b}, {c, d})); };
    CHECK(br(1, 2, 2, 1) == Coef{{{1, 1}, Rational(4)}});
    CHECK(br(1, 1, 1, 2) == Coef{{{1, 2}, Rational(2)}});
    CHECK(br(1, 1, 2, 1) == Coef{{{2, 1}, Rational(-2)}});
}

TEST_CASE("bracket is antisymmetric") {
    for (const auto& g : small_algebras())
        for (const auto& a : g.canonical_index_set())
            for (const auto& b : g.canonical_index_set()) {
                Coef ab = as_map(g.bracket_pairs(a, b));
                for (auto& [p, c] : as_map(g.bracket_pairs(b, a))) ab[p] += c;
                for (const auto& [p, c] : ab) {
                    INFO(to_string(g.family()) << g.rank());
                    CHECK(c.is_zero());
                }
            }
}

TEST_CASE("Jacobi identity") {
    for (const auto& g : small_algebras()) {
        const auto& basis = g.canonical_index_set();
        for (const auto& a : basis)
            for (const auto& b : basis)
                for (const auto& c : basis) {
                    Coef total = bracket_lin(g, as_map(g.bracket_pairs(a, b)), c);
                    for (auto& [p, v] : bracket_lin(g, as_map(g.bracket_pairs(b, c)), a))
                        total[p] += v;
                    for (auto& [p, v] : bracket_lin(g, as_map(g.bracket_pairs(c, a)), b))
                        total[p] += v;
                    for (const auto& [p, v] : total) {
                        INFO(to_string(g.family()) << g.rank());
                        CHECK(v.is_zero());
                    }
                }
    }
}

TEST_CASE("bracket terms carry the sum of the weights") {
    for (const auto& g : small_algebras())
        for (const auto& a : g.canonical_index_set())
            for (const auto& b : g.canonical_index_set()) {
                std::vector<long> expect = g.weight(a.first, a.second);
                const auto& wb = g.weight(b.first, b.second);
                for (size_t t = 0; t < expect.size(); ++t) expect[t] += wb[t];
                for (const auto& [p, c] : g.bracket_pairs(a, b))
                    CHECK(g.weight(p.first, p.second) == expect);
            }
}

TEST_CASE("loop degrees add in the bracket") {
    AlgebraSpec g(Family::C, 2);
    auto terms = g.bracket(Gen{1, 1, -2}, Gen{1, 3, -1});
    REQUIRE_FALSE(terms.empty());
    for (const auto& [t, c] : terms) CHECK(t.r == -3);
}

TEST_CASE("weights of distinguished generators") {
    AlgebraSpec b2(Family::B, 2); // N=5, middle index 3
    CHECK(b2.weight(1, 1) == std::vector<long>{0, 0}); // cartan
    CHECK(b2.weight(1, 3) == std::vector<long>{1, 0}); // middle index weightless
    CHECK(b2.weight(1, 4) == std::vector<long>{1, 1}); // e_1 - (-e_2)
    CHECK(b2.gen_class(4, 1) == GenClass::Lowering);
    CHECK(b2.weight(4, 1) == std::vector<long>{-1, -1});

    AlgebraSpec c1(Family::C, 1);
    CHECK(c1.weight(1, 2) == std::vector<long>{2});
    CHECK(c1.gen_class(1, 2) == GenClass::Raising);
    CHECK(c1.gen_class(2, 1) == GenClass::Lowering);

    AlgebraSpec gl(Family::A, 3);
    CHECK(gl.weight(2, 3) == std::vector<long>{0, 1, -1});
    CHECK(gl.gen_class(2, 3) == GenClass::Raising);
    CHECK(gl.gen_class(3, 1) == GenClass::Lowering);
}

TEST_CASE("spec scalars") {
    CHECK(AlgebraSpec(Family::B, 2).omega() == Rational(5));
    CHECK(AlgebraSpec(Family::C, 3).omega() == Rational(-6));
    CHECK(AlgebraSpec(Family::B, 2).kappa() == Rational(3, 2));
    CHECK(AlgebraSpec(Family::C, 3).kappa() == Rational(4));
    CHECK(AlgebraSpec(Family::D, 3).kappa() == Rational(2));
    CHECK(AlgebraSpec(Family::B, 1).gen_name(Gen{1, 2, -1}) == "F[1,2;-1]");
    CHECK(AlgebraSpec(Family::A, 2).gen_name(Gen{1, 2, 0}) == "E[1,2;0]");
}
