#ifndef SSV_SERIALIZE_HPP
#define SSV_SERIALIZE_HPP

#include <utility>

#include <json.hpp>

#include "ssv/casimir.hpp"
#include "ssv/characters.hpp"
#include "ssv/envu.hpp"
#include "ssv/harmonic.hpp"
#include "ssv/sugawara.hpp"
#include "ssv/tensor.hpp"
#include "ssv/walg.hpp"

// JSON views of the value types, shared by the CLI and the golden files.
// Conventions: rationals are the strings "p/q" ("p" when the denominator is
// one), a monomial is the array of its factors with multiplicity spelled out
// by repetition, and atoms are tagged arrays ["F",i,j,r], ["E",i,j,r],
// ["mu",i,r], ["z",i], ["zeta",i], ["tau"].

namespace ssv {

using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return r.str(); }

namespace detail {

template <typename Var, typename Atoms>
Json poly_json(const Poly<Var>& p, Atoms&& atoms) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::array();
        for (const auto& [v, e] : m)
            for (long t = 0; t < e; ++t) atoms(mono, v);
        terms.push_back(Json{{"coeff", c.str()}, {"monomial", std::move(mono)}});
    }
    return Json{{"terms", std::move(terms)}};
}

} // namespace detail

inline Json to_json(const MuPoly& p) {
    return detail::poly_json(
        p, [](Json& mono, const MuVar& v) { mono.push_back(Json::array({"mu", v.i, v.r})); });
}

inline Json to_json(const ZPoly& p) {
    return detail::poly_json(
        p, [](Json& mono, const ZVar& v) { mono.push_back(Json::array({"z", v.i})); });
}

inline Json to_json(const ExteriorElement& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms()) {
        Json mono = Json::array();
        for (int i : w) mono.push_back(Json::array({"zeta", i}));
        terms.push_back(Json{{"coeff", c.str()}, {"monomial", std::move(mono)}});
    }
    return Json{{"terms", std::move(terms)}};
}

inline Json to_json(const UElement& e) {
    const char* letter = e.spec().is_gl() ? "E" : "F";
    Json terms = Json::array();
    for (const auto& [m, c] : e.terms()) {
        Json mono = Json::array();
        for (const Gen& x : m.word) mono.push_back(Json::array({letter, x.i, x.j, x.r}));
        for (long t = 0; t < m.tau; ++t) mono.push_back(Json::array({"tau"}));
        terms.push_back(Json{{"coeff", c.str()}, {"monomial", std::move(mono)}});
    }
    return Json{{"terms", std::move(terms)}};
}

inline Json to_json(const Pi0Tau& x) {
    Json terms = Json::array();
    for (const auto& [a, p] : x.parts())
        for (const auto& [m, c] : p.terms()) {
            Json mono = Json::array();
            for (const auto& [v, e] : m)
                for (long t = 0; t < e; ++t) mono.push_back(Json::array({"mu", v.i, v.r}));
            for (long t = 0; t < a; ++t) mono.push_back(Json::array({"tau"}));
            terms.push_back(Json{{"coeff", c.str()}, {"monomial", std::move(mono)}});
        }
    return Json{{"terms", std::move(terms)}};
}

// coeffs[a] multiplies tau^(degree - a), matching the stored layout
inline Json to_json(const TauPolynomial& p) {
    Json coeffs = Json::array();
    for (size_t a = 0; a < p.coeffs.size(); ++a)
        coeffs.push_back(Json{{"tau_power", p.degree() - static_cast<long>(a)},
                              {"element", to_json(p.coeffs[a])}});
    return Json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

// sparse triplets [row word, column word, value] with 1-based letters
inline Json to_json(const TensorOperator& s) {
    Json entries = Json::array();
    for (const auto& [rc, v] : s.entries())
        entries.push_back(Json::array({decode_multi_index(rc.first, s.matrix_size(), s.factors()),
                                       decode_multi_index(rc.second, s.matrix_size(), s.factors()),
                                       v.str()}));
    return Json{{"m", s.factors()}, {"N", s.matrix_size()}, {"entries", std::move(entries)}};
}

inline Json to_json(const CharSum& cs) { return Json{{"count", cs.count}, {"words", cs.words}}; }

inline Json to_json(const VerifyReport& r) {
    return Json{{"match", r.match}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"diff", r.diff}};
}

inline Json to_json(const AnnihilationReport& r) {
    Json nz = Json::array();
    for (const auto& [e, i] : r.nonzero) nz.push_back(Json::array({e, i}));
    return Json{{"match", r.match}, {"nonzero", std::move(nz)}};
}

inline Json to_json(const BasisReport& r) {
    return Json{{"count", r.count},          {"dimension", r.dimension.str()},
                {"harmonic", r.harmonic},    {"count_match", r.count_match},
                {"independent", r.independent}, {"leading_unique", r.leading_unique},
                {"pass", r.pass()}};
}

inline Json to_json(const CasimirReport& r) {
    return Json{{"image", to_json(r.image)},
                {"image_str", mu_str(r.image)},
                {"trace_match", r.trace_match},
                {"factorial_match", r.factorial_match},
                {"top_match", r.top_match},
                {"weyl_symmetric", r.weyl_symmetric},
                {"vanishing", r.vanishing},
                {"pass", r.pass()}};
}

} // namespace ssv

#endif
