#ifndef SSV_POLY_HPP
#define SSV_POLY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ssv/errors.hpp"
#include "ssv/rational.hpp"

namespace ssv {

// Sparse multivariate polynomial over an ordered variable type.  A monomial
// is a sorted exponent vector with strictly positive exponents; the constant
// monomial is the empty vector.
template <class Var>
class Poly {
public:
    using Monomial = std::vector<std::pair<Var, long>>;
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(const Rational& c) {
        if (!c.is_zero()) terms_[{}] = c;
    }
    Poly(long c) : Poly(Rational(c)) {}

    static Poly variable(const Var& v, long e = 1) {
        Poly p;
        if (e < 0) throw RangeError("Poly: negative exponent");
        if (e == 0) return Poly(1);
        p.terms_[{{v, e}}] = 1;
        return p;
    }

    static Poly from_monomial(Monomial m, const Rational& c) {
        Poly p;
        if (!c.is_zero()) {
            normalize(m);
            if (!m.empty() || !c.is_zero()) p.terms_[std::move(m)] = c;
        }
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coeff({}); }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator-(const Poly& a) { Poly r; r -= a; return r; }
    friend Poly operator*(Poly a, const Rational& s) { a *= s; return a; }
    friend Poly operator*(const Rational& s, Poly a) { a *= s; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mul_monomials(ma, mb), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(long e) const {
        if (e < 0) throw RangeError("Poly: negative power");
        Poly acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    long total_degree() const {
        long d = 0;
        for (const auto& [m, c] : terms_) {
            long t = 0;
            for (const auto& [v, e] : m) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    Poly derivative(const Var& v) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            for (size_t k = 0; k < m.size(); ++k)
                if (m[k].first == v) {
                    Monomial dm = m;
                    Rational dc = c * Rational(m[k].second);
                    if (--dm[k].second == 0) dm.erase(dm.begin() + k);
                    r.add_term(dm, dc);
                }
        return r;
    }

    // Full evaluation; every variable that occurs must be assigned.
    Rational evaluate(const std::map<Var, Rational>& point) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m) {
                auto it = point.find(v);
                if (it == point.end()) throw Error("Poly::evaluate: unassigned variable");
                t *= it->second.pow(e);
            }
            total += t;
        }
        return total;
    }

    // Replace one variable by a polynomial.
    Poly substitute(const Var& v, const Poly& repl) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Poly t(c);
            for (const auto& [w, e] : m) {
                if (w == v)
                    t *= repl.pow(e);
                else
                    t *= variable(w, e);
            }
            r += t;
        }
        return r;
    }

    // Simultaneous variable renaming (must be injective on occurring vars).
    template <class F>
    Poly rename(F&& f) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            nm.reserve(m.size());
            for (const auto& [v, e] : m) nm.push_back({f(v), e});
            normalize(nm);
            r.add_term(nm, c);
        }
        return r;
    }

    std::string str(const std::function<std::string(const Var&)>& namer) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string mono;
            for (const auto& [v, e] : m) {
                if (!mono.empty()) mono += "*";
                mono += namer(v);
                if (e != 1) mono += "^" + std::to_string(e);
            }
            Rational a = c.abs();
            std::string lead;
            if (out.empty())
                lead = c.sign() < 0 ? "-" : "";
            else
                lead = c.sign() < 0 ? " - " : " + ";
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

private:
    static void normalize(Monomial& m) {
        std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Monomial out;
        for (const auto& [v, e] : m) {
            if (e == 0) continue;
            if (e < 0) throw RangeError("Poly: negative exponent");
            if (!out.empty() && out.back().first == v)
                out.back().second += e;
            else
                out.push_back({v, e});
        }
        m = std::move(out);
    }

    static Monomial mul_monomials(const Monomial& a, const Monomial& b) {
        Monomial m;
        m.reserve(a.size() + b.size());
        size_t x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
            if (a[x].first < b[y].first)
                m.push_back(a[x++]);
            else if (b[y].first < a[x].first)
                m.push_back(b[y++]);
            else {
                m.push_back({a[x].first, a[x].second + b[y].second});
                ++x;
                ++y;
            }
        }
        for (; x < a.size(); ++x) m.push_back(a[x]);
        for (; y < b.size(); ++y) m.push_back(b[y]);
        return m;
    }

    TermMap terms_;
};

// Variable mu_i[r]: the image of F_ii[r] under the Harish-Chandra map.
// Classical (depth-free) images use r = 0.
struct MuVar {
    int i = 0;
    long r = 0;
    friend bool operator==(const MuVar&, const MuVar&) = default;
    friend auto operator<=>(const MuVar&, const MuVar&) = default;
};

using MuPoly = Poly<MuVar>;

inline std::string mu_name(const MuVar& v) {
    std::string s = "mu[" + std::to_string(v.i);
    if (v.r != 0) s += ";" + std::to_string(v.r);
    return s + "]";
}

inline std::string mu_str(const MuPoly& p) {
    return p.str([](const MuVar& v) { return mu_name(v); });
}

inline MuPoly mu(int i, long r = 0) { return MuPoly::variable(MuVar{i, r}); }

// Derivation with T mu_i[r] = -r mu_i[r-1]; the translation operator on the
// classical W-algebra.
inline MuPoly translate(const MuPoly& p) {
    MuPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k].first.r == 0) throw DepthError("translate: depth-zero variable");
            MuPoly::Monomial dm = m;
            Rational dc = c * Rational(m[k].second) * Rational(-m[k].first.r);
            if (--dm[k].second == 0) dm.erase(dm.begin() + k);
            MuPoly piece = MuPoly::from_monomial(dm, dc);
            piece *= mu(m[k].first.i, m[k].first.r - 1);
            out += piece;
        }
    }
    return out;
}

inline MuPoly translate_pow(MuPoly p, long k) {
    for (long t = 0; t < k; ++t) p = translate(p);
    return p;
}

} // namespace ssv

#endif
