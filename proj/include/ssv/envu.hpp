#ifndef SSV_ENVU_HPP
#define SSV_ENVU_HPP

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ssv/liealg.hpp"
#include "ssv/pi0tau.hpp"
#include "ssv/poly.hpp"

namespace ssv {

// Normal orderings for PBW monomials.  Chi reads raising < cartan < lowering
// left to right, top is the reverse; projections onto the cartan part become
// monomial filters in the matching order.
enum class PBWOrder { Chi, Top };

namespace detail {

struct GenCmp {
    const AlgebraSpec* g;
    PBWOrder order;
    long rank(const Gen& x) const {
        return order == PBWOrder::Chi ? g->ord_chi(x.i, x.j) : g->ord_top(x.i, x.j);
    }
    // strict "out of order" test for adjacent symbols
    bool inverted(const Gen& a, const Gen& b) const {
        long ra = rank(a), rb = rank(b);
        if (ra != rb) return ra > rb;
        return a.r > b.r;
    }
};

using Word = std::vector<Gen>;
using WordTerms = std::vector<std::pair<Word, Rational>>;

// PBW straightening of an arbitrary word, memoized per algebra and order.
// Each step either swaps one adjacent inversion (same length, one inversion
// fewer) or replaces the pair by its bracket (shorter word), so the
// rewriting terminates.
inline const WordTerms& straighten_word(const AlgebraSpec& g, PBWOrder order, const Word& w) {
    using Key = std::tuple<char, int, PBWOrder, Word>;
    static std::map<Key, WordTerms> memo;
    Key key{family_letter(g.family()), g.rank(), order, w};
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    GenCmp cmp{&g, order};
    size_t k = 0;
    bool ordered = true;
    for (; k + 1 < w.size(); ++k)
        if (cmp.inverted(w[k], w[k + 1])) {
            ordered = false;
            break;
        }
    WordTerms result;
    if (ordered) {
        result.push_back({w, Rational(1)});
    } else {
        std::map<Word, Rational> acc;
        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        for (const auto& [sw, sc] : straighten_word(g, order, swapped)) acc[sw] += sc;
        // w[k] w[k+1] = w[k+1] w[k] + [w[k], w[k+1]]
        for (const auto& [h, c] : g.bracket(w[k], w[k + 1])) {
            Word shorter(w.begin(), w.begin() + k);
            shorter.push_back(h);
            shorter.insert(shorter.end(), w.begin() + k + 2, w.end());
            for (const auto& [sw, sc] : straighten_word(g, order, shorter)) acc[sw] += c * sc;
        }
        for (auto& [sw, sc] : acc)
            if (!sc.is_zero()) result.push_back({sw, sc});
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

} // namespace detail

// Element of U(g[t,t^-1]) extended by the translation symbol tau with
// [tau, X[r]] = -r X[r-1].  Monomials are kept straightened in chi order
// with the tau power on the right.
class UElement {
public:
    using Word = detail::Word;
    struct Monomial {
        Word word;
        long tau = 0;
        friend bool operator==(const Monomial&, const Monomial&) = default;
        friend auto operator<=>(const Monomial&, const Monomial&) = default;
    };
    using TermMap = std::map<Monomial, Rational>;

    explicit UElement(const AlgebraSpec& g) : g_(g) {}

    static UElement constant(const AlgebraSpec& g, const Rational& c) {
        UElement e(g);
        if (!c.is_zero()) e.terms_[Monomial{}] = c;
        return e;
    }
    static UElement one(const AlgebraSpec& g) { return constant(g, Rational(1)); }

    // F_{ij}[r]; non-canonical pairs are rewritten, so this may be a signed
    // canonical generator or zero.
    static UElement generator(const AlgebraSpec& g, int i, int j, long r) {
        UElement e(g);
        for (const auto& [p, c] : g.resolve(i, j))
            e.terms_[Monomial{{Gen{p.first, p.second, r}}, 0}] = c;
        return e;
    }

    static UElement tau(const AlgebraSpec& g, long a = 1) {
        if (a < 0) throw RangeError("UElement: negative tau power");
        UElement e(g);
        e.terms_[Monomial{{}, a}] = 1;
        return e;
    }

    const AlgebraSpec& spec() const { return g_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    UElement& operator+=(const UElement& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    UElement& operator-=(const UElement& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend UElement operator+(UElement a, const UElement& b) { a += b; return a; }
    friend UElement operator-(UElement a, const UElement& b) { a -= b; return a; }
    friend UElement operator-(const UElement& a) {
        UElement r(a.g_);
        r -= a;
        return r;
    }
    friend UElement operator*(UElement a, const Rational& s) {
        if (s.is_zero()) a.terms_.clear();
        for (auto& [m, c] : a.terms_) c *= s;
        return a;
    }
    friend UElement operator*(const Rational& s, UElement a) { return std::move(a) * s; }

    friend UElement operator*(const UElement& a, const UElement& b) {
        a.check_same(b);
        UElement r(a.g_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.accumulate_product(ma, mb, ca * cb);
        return r;
    }
    UElement& operator*=(const UElement& o) { return *this = *this * o; }

    friend bool operator==(const UElement& a, const UElement& b) {
        return a.g_ == b.g_ && a.terms_ == b.terms_;
    }

    UElement pow(long e) const {
        if (e < 0) throw RangeError("UElement: negative power");
        UElement acc = one(g_), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // True when every monomial lies in the zero weight space.
    bool weight_zero() const {
        for (const auto& [m, c] : terms_) {
            std::vector<long> w(g_.is_gl() ? g_.matrix_size() : g_.rank(), 0);
            for (const Gen& x : m.word) {
                const auto& wx = g_.weight(x.i, x.j);
                for (size_t t = 0; t < w.size(); ++t) w[t] += wx[t];
            }
            for (long c2 : w)
                if (c2 != 0) return false;
        }
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string mono;
            for (const Gen& x : m.word) {
                if (!mono.empty()) mono += "*";
                mono += g_.gen_name(x);
            }
            if (m.tau > 0) {
                if (!mono.empty()) mono += "*";
                mono += m.tau == 1 ? "tau" : "tau^" + std::to_string(m.tau);
            }
            Rational a = c.abs();
            std::string lead = out.empty() ? (c.sign() < 0 ? "-" : "")
                                           : (c.sign() < 0 ? " - " : " + ");
            std::string body;
            if (mono.empty())
                body = a.str();
            else if (a.is_one())
                body = mono;
            else
                body = a.str() + "*" + mono;
            out += lead + body;
        }
        return out;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    void check_same(const UElement& o) const {
        if (!(g_ == o.g_)) throw Error("UElement: mixed algebras");
    }

    // (w1, a1) * (w2, a2): push tau^a1 through w2 picking up depth drops,
    // then straighten the concatenated word.
    void accumulate_product(const Monomial& ma, const Monomial& mb, const Rational& c0) {
        struct State {
            Rational c;
            Word acc;
            long tau_left;
        };
        std::vector<State> states{{c0, ma.word, ma.tau}};
        for (const Gen& x : mb.word) {
            std::vector<State> next;
            for (const State& s : states)
                for (long k = 0; k <= s.tau_left; ++k) {
                    // tau^a X[r] = sum_k binom(a,k) (-1)^k r(r-1)..(r-k+1) X[r-k] tau^(a-k)
                    Rational f = gen_binomial(s.tau_left, k) * Rational(sign_pow(k)) *
                                 falling_factorial(Rational(x.r), k);
                    if (f.is_zero()) continue;
                    State t = s;
                    t.c *= f;
                    t.acc.push_back(Gen{x.i, x.j, x.r - k});
                    t.tau_left = s.tau_left - k;
                    next.push_back(std::move(t));
                }
            states = std::move(next);
        }
        for (const State& s : states)
            for (const auto& [w, c] : detail::straighten_word(g_, PBWOrder::Chi, s.acc))
                add_term(Monomial{w, s.tau_left + mb.tau}, s.c * c);
    }

    AlgebraSpec g_;
    TermMap terms_;
};

namespace detail {

inline bool cartan_word(const AlgebraSpec& g, const Word& w) {
    for (const Gen& x : w)
        if (g.gen_class(x.i, x.j) != GenClass::Cartan) return false;
    return true;
}

inline MuPoly mu_image(const Word& w) {
    MuPoly p(1);
    for (const Gen& x : w) p *= mu(x.i, x.r);
    return p;
}

} // namespace detail

// Projection onto the cartan part along the span of monomials with the
// raising factors on the left (chi order).  Defined on the zero weight
// space only.
inline Pi0Tau hc_chi(const UElement& e) {
    if (!e.weight_zero()) throw NotInvariantError("hc_chi: element has nonzero weight");
    Pi0Tau out;
    for (const auto& [m, c] : e.terms())
        if (detail::cartan_word(e.spec(), m.word))
            out += Pi0Tau(detail::mu_image(m.word) * c) * Pi0Tau::tau(m.tau);
    return out;
}

// Projection with the lowering factors on the left: monomials are first
// restraightened into top order, then filtered.
inline Pi0Tau hc_top(const UElement& e) {
    if (!e.weight_zero()) throw NotInvariantError("hc_top: element has nonzero weight");
    Pi0Tau out;
    for (const auto& [m, c] : e.terms())
        for (const auto& [w, c2] : detail::straighten_word(e.spec(), PBWOrder::Top, m.word))
            if (detail::cartan_word(e.spec(), w))
                out += Pi0Tau(detail::mu_image(w) * (c * c2)) * Pi0Tau::tau(m.tau);
    return out;
}

// Classical projection for tau-free depth-zero elements.
inline MuPoly hc_classical(const UElement& e) {
    for (const auto& [m, c] : e.terms()) {
        if (m.tau != 0) throw DepthError("hc_classical: tau present");
        for (const Gen& x : m.word)
            if (x.r != 0) throw DepthError("hc_classical: nonzero loop degree");
    }
    return hc_top(e).apply_to_one();
}

// The automorphism F_{ij}[r] -> -F_{ji}[r], tau -> tau.
inline UElement apply_sigma(const UElement& e) {
    const AlgebraSpec& g = e.spec();
    UElement out(g);
    for (const auto& [m, c] : e.terms()) {
        UElement prod = UElement::constant(g, c);
        for (const Gen& x : m.word)
            prod *= -UElement::generator(g, x.j, x.i, x.r);
        prod *= UElement::tau(g, m.tau);
        out += prod;
    }
    return out;
}

// mu_i[r] -> -mu_i[r] on every part of a Pi0Tau element.
inline Pi0Tau negate_mu(const Pi0Tau& x) {
    Pi0Tau out;
    for (const auto& [a, p] : x.parts()) {
        MuPoly q;
        for (const auto& [mono, c] : p.terms()) {
            long deg = 0;
            for (const auto& [v, e2] : mono) deg += e2;
            q.add_term(mono, c * Rational(sign_pow(deg)));
        }
        out += Pi0Tau(q) * Pi0Tau::tau(a);
    }
    return out;
}

} // namespace ssv

#endif
