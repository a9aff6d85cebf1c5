#ifndef SSV_CASIMIR_HPP
#define SSV_CASIMIR_HPP

#include <string>
#include <vector>

#include "ssv/binomial.hpp"
#include "ssv/envu.hpp"
#include "ssv/errors.hpp"
#include "ssv/liealg.hpp"
#include "ssv/poly.hpp"
#include "ssv/tensor.hpp"

namespace ssv {

// gamma_{2k}(omega) tr S^(2k) (F_1 + c_1) ... (F_{2k} + c_{2k}) with depth-zero
// matrix entries and the scalar ladder c_a = -k+a-1 (orthogonal) or k-a+1
// (symplectic).  At 2k = n+1 the symplectic projector vanishes, so the zero
// element is returned without evaluating the gamma factor next to its pole.
inline UElement casimir_element(const AlgebraSpec& g, long k) {
    if (g.is_gl()) throw FamilyError("casimir_element: classical families only");
    if (k < 1) throw RangeError("casimir_element: k must be positive");
    const long m = 2 * k;
    if (g.symplectic() && m > g.rank() + 1)
        throw RangeError("casimir_element: 2k exceeds n+1 in the symplectic case");
    if (g.symplectic() && m == g.rank() + 1) return UElement(g);

    const int N = g.matrix_size();
    TensorOperator S = brauer_symmetrizer(g, static_cast<int>(m));
    std::vector<std::vector<UElement>> factor;
    factor.reserve(static_cast<size_t>(m));
    for (long a = 1; a <= m; ++a) {
        Rational c = g.orthogonal() ? Rational(-k + a - 1) : Rational(k - a + 1);
        std::vector<UElement> entry;
        entry.reserve(static_cast<size_t>(N) * N);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                UElement x = UElement::generator(g, i, j, 0);
                if (i == j) x += UElement::constant(g, c);
                entry.push_back(std::move(x));
            }
        factor.push_back(std::move(entry));
    }
    UElement total(g);
    for (const auto& [rc, v] : S.entries()) {
        std::vector<int> alpha = decode_multi_index(rc.first, N, static_cast<int>(m));
        std::vector<int> beta = decode_multi_index(rc.second, N, static_cast<int>(m));
        UElement prod = UElement::constant(g, v);
        for (long a = 0; a < m; ++a)
            prod *= factor[a][static_cast<size_t>(beta[a] - 1) * N + (alpha[a] - 1)];
        total += prod;
    }
    return total * gamma_factor(g.omega(), m);
}

// The explicit image as a sum over index words: weakly increasing multisets
// from {1..n, n'..1'} for the odd orthogonal case, the half sum of the two
// corner-avoiding variants for the even one, and strict subsets of
// {1..n, 0, n'..1'} for the symplectic case with mu_0 = 0.  Position a of a
// word carries the same scalar ladder as the Casimir element.
inline MuPoly multiset_image(const AlgebraSpec& g, long k) {
    if (g.is_gl()) throw FamilyError("multiset_image: classical families only");
    if (k < 1) throw RangeError("multiset_image: k must be positive");
    const int n = g.rank();
    const long m = 2 * k;

    std::vector<MuPoly> letters;
    for (int i = 1; i <= n; ++i) letters.push_back(mu(i));
    if (g.symplectic()) letters.push_back(MuPoly(0));
    for (int i = n; i >= 1; --i) letters.push_back(-mu(i));
    const int L = static_cast<int>(letters.size());
    const bool strict = g.symplectic();

    auto shifted = [&](int letter, long a) {
        Rational c = g.orthogonal() ? Rational(-k + a - 1) : Rational(k - a + 1);
        return letters[letter] + MuPoly(c);
    };
    // skip < 0 means no letter is excluded
    auto word_sum = [&](int skip) {
        MuPoly total;
        auto rec = [&](auto&& self, long a, int from, const MuPoly& acc) -> void {
            if (a > m) {
                total += acc;
                return;
            }
            for (int i = from; i < L; ++i) {
                if (i == skip) continue;
                self(self, a + 1, strict ? i + 1 : i, acc * shifted(i, a));
            }
        };
        rec(rec, 1, 0, MuPoly(1));
        return total;
    };

    if (g.family() == Family::D)
        return (word_sum(n - 1) + word_sum(n)) * Rational(1, 2);
    return word_sum(-1);
}

// The factorial symmetric function of the corollaries: a complete symmetric
// sum of the products (l_j^2 - offset^2) for the orthogonal families, an
// elementary one with the sign (-1)^k for the symplectic family.  The shifted
// variables are l_i = mu_i + n - i + e with e = 1/2, 0, 1 for B, D, C.
inline MuPoly factorial_sym(const AlgebraSpec& g, long k) {
    if (g.is_gl()) throw FamilyError("factorial_sym: classical families only");
    if (k < 1) throw RangeError("factorial_sym: k must be positive");
    const int n = g.rank();
    Rational e = g.family() == Family::B   ? Rational(1, 2)
                 : g.family() == Family::D ? Rational(0)
                                           : Rational(1);
    std::vector<MuPoly> lsq(static_cast<size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        MuPoly l = mu(j) + MuPoly(Rational(n - j) + e);
        lsq[j] = l * l;
    }
    auto offset = [&](int j, long t) {
        switch (g.family()) {
            case Family::B: return Rational(2 * (j + t) - 3, 2);
            case Family::D: return Rational(j + t - 2);
            default: return Rational(j - t + 1);
        }
    };
    const bool strict = g.symplectic();
    MuPoly total;
    auto rec = [&](auto&& self, long t, int from, const MuPoly& acc) -> void {
        if (t > k) {
            total += acc;
            return;
        }
        for (int j = from; j <= n; ++j) {
            Rational off = offset(j, t);
            self(self, t + 1, strict ? j + 1 : j, acc * (lsq[j] - MuPoly(off * off)));
        }
    };
    rec(rec, 1, 1, MuPoly(1));
    if (strict && k % 2 == 1) total *= Rational(-1);
    return total;
}

struct CasimirReport {
    MuPoly image;
    bool trace_match = false;
    bool factorial_match = false;
    bool top_match = false;
    bool weyl_symmetric = false;
    bool vanishing = false;
    bool pass() const {
        return trace_match && factorial_match && top_match && weyl_symmetric && vanishing;
    }
    std::string str() const {
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        return std::string("trace=") + yn(trace_match) + " factorial=" + yn(factorial_match) +
               " top=" + yn(top_match) + " weyl=" + yn(weyl_symmetric) +
               " vanishing=" + yn(vanishing);
    }
};

namespace detail {

// h_k or e_k of the squares mu_1^2 .. mu_n^2
inline MuPoly sym_of_squares(int n, long k, bool elementary) {
    MuPoly total;
    auto rec = [&](auto&& self, long t, int from, const MuPoly& acc) -> void {
        if (t > k) {
            total += acc;
            return;
        }
        for (int j = from; j <= n; ++j)
            self(self, t + 1, elementary ? j + 1 : j, acc * mu(j) * mu(j));
    };
    rec(rec, 1, 1, MuPoly(1));
    return total;
}

inline MuPoly degree_part(const MuPoly& p, long d) {
    MuPoly out;
    for (const auto& [mono, c] : p.terms()) {
        long t = 0;
        for (const auto& [v, e] : mono) t += e;
        if (t == d) out.add_term(mono, c);
    }
    return out;
}

inline void dominant_tuples(int n, long bound, std::vector<std::vector<long>>& out) {
    std::vector<long> t(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, long cap, long left) -> void {
        if (pos == n) {
            out.push_back(t);
            return;
        }
        for (long v = 0; v <= std::min(cap, left); ++v) {
            t[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, v, left - v);
        }
        t[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, bound, bound);
}

} // namespace detail

// Checks the corollary chain: the Harish-Chandra image of the trace element
// equals the word sum and the factorial function, the top degree part is the
// plain symmetric function of the squares, the image is symmetric under the
// shifted Weyl action, and it vanishes on every partition with |mu| < k.
inline CasimirReport verify_casimir(const AlgebraSpec& g, long k) {
    if (g.symplectic() && 2 * k > g.rank())
        throw RangeError("verify_casimir: the symplectic chain needs 2k <= n");
    CasimirReport rep;
    MuPoly a = hc_classical(casimir_element(g, k));
    MuPoly b = multiset_image(g, k);
    MuPoly c = factorial_sym(g, k);
    rep.image = b;
    rep.trace_match = a == b;
    rep.factorial_match = b == c;

    const int n = g.rank();
    MuPoly top_expect = detail::sym_of_squares(n, k, g.symplectic());
    if (g.symplectic()) top_expect *= Rational(sign_pow(k));
    rep.top_match = detail::degree_part(b, 2 * k) == top_expect;

    // move to the shifted variables; the image must be symmetric in the l_i
    // and even in each of them separately
    Rational e = g.family() == Family::B   ? Rational(1, 2)
                 : g.family() == Family::D ? Rational(0)
                                           : Rational(1);
    MuPoly q = b;
    for (int i = 1; i <= n; ++i)
        q = q.substitute(MuVar{i, 0}, mu(i) - MuPoly(Rational(n - i) + e));
    rep.weyl_symmetric = true;
    for (int i = 1; i < n; ++i) {
        MuPoly swapped = q.rename([i](const MuVar& v) {
            if (v.i == i) return MuVar{i + 1, v.r};
            if (v.i == i + 1) return MuVar{i, v.r};
            return v;
        });
        rep.weyl_symmetric = rep.weyl_symmetric && swapped == q;
    }
    for (int i = 1; i <= n; ++i)
        rep.weyl_symmetric =
            rep.weyl_symmetric && q.substitute(MuVar{i, 0}, -mu(i)) == q;

    rep.vanishing = true;
    std::vector<std::vector<long>> parts;
    detail::dominant_tuples(n, k - 1, parts);
    for (const auto& part : parts) {
        std::map<MuVar, Rational> point;
        for (int i = 1; i <= n; ++i) point[MuVar{i, 0}] = Rational(part[i - 1]);
        rep.vanishing = rep.vanishing && b.evaluate(point).is_zero() &&
                        c.evaluate(point).is_zero();
    }
    return rep;
}

} // namespace ssv

#endif
