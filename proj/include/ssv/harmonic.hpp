#ifndef SSV_HARMONIC_HPP
#define SSV_HARMONIC_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ssv/binomial.hpp"
#include "ssv/characters.hpp"
#include "ssv/errors.hpp"
#include "ssv/liealg.hpp"
#include "ssv/poly.hpp"
#include "ssv/tensor.hpp"

namespace ssv {

// Commuting variable z_i of the orthogonal harmonic model.
struct ZVar {
    int i = 0;
    friend bool operator==(const ZVar&, const ZVar&) = default;
    friend auto operator<=>(const ZVar&, const ZVar&) = default;
};

using ZPoly = Poly<ZVar>;

inline std::string z_name(const ZVar& v) { return "z[" + std::to_string(v.i) + "]"; }
inline std::string z_str(const ZPoly& p) {
    return p.str([](const ZVar& v) { return z_name(v); });
}
inline ZPoly z(int i) { return ZPoly::variable(ZVar{i}); }

// Element of the exterior algebra on ze_1..ze_2n: a combination of strictly
// increasing wedge words, with reordering signs normalized away.
class ExteriorElement {
public:
    using Word = std::vector<int>;
    using TermMap = std::map<Word, Rational>;

    ExteriorElement() = default;
    explicit ExteriorElement(const Rational& c) {
        if (!c.is_zero()) t_[{}] = c;
    }

    static ExteriorElement word(Word w, const Rational& c = Rational(1)) {
        ExteriorElement e;
        e.add_word(std::move(w), c);
        return e;
    }
    static ExteriorElement generator(int i) { return word({i}); }

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? Rational(0) : it->second;
    }

    // insertion sort with sign; a repeated letter kills the word
    void add_word(Word w, Rational c) {
        if (c.is_zero()) return;
        for (size_t i = 1; i < w.size(); ++i)
            for (size_t j = i; j > 0 && w[j] <= w[j - 1]; --j) {
                if (w[j] == w[j - 1]) return;
                std::swap(w[j], w[j - 1]);
                c = -c;
            }
        auto [it, fresh] = t_.emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    ExteriorElement& operator+=(const ExteriorElement& o) {
        for (const auto& [w, c] : o.t_) add_word(w, c);
        return *this;
    }
    ExteriorElement& operator-=(const ExteriorElement& o) {
        for (const auto& [w, c] : o.t_) add_word(w, -c);
        return *this;
    }
    ExteriorElement& operator*=(const Rational& s) {
        if (s.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [w, c] : t_) c *= s;
        return *this;
    }
    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) {
        a += b;
        return a;
    }
    friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) {
        a -= b;
        return a;
    }
    friend ExteriorElement operator*(ExteriorElement a, const Rational& s) {
        a *= s;
        return a;
    }

    // wedge product
    friend ExteriorElement operator*(const ExteriorElement& a, const ExteriorElement& b) {
        ExteriorElement r;
        for (const auto& [wa, ca] : a.t_)
            for (const auto& [wb, cb] : b.t_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_word(std::move(w), ca * cb);
            }
        return r;
    }
    ExteriorElement& operator*=(const ExteriorElement& o) { return *this = *this * o; }

    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
        return a.t_ == b.t_;
    }

    // left partial derivative: the sign is the parity of the letters skipped
    ExteriorElement derivative(int i) const {
        ExteriorElement r;
        for (const auto& [w, c] : t_)
            for (size_t k = 0; k < w.size(); ++k)
                if (w[k] == i) {
                    Word dw = w;
                    dw.erase(dw.begin() + k);
                    r.add_word(std::move(dw), (k % 2) ? -c : c);
                    break;
                }
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : t_) {
            std::string mono;
            for (int i : w) {
                if (!mono.empty()) mono += "*";
                mono += "zeta[" + std::to_string(i) + "]";
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

private:
    TermMap t_;
};

// ---------------------------------------------------------------------------
// Laplace operators of the three harmonic models.

inline ZPoly laplacian(const AlgebraSpec& g, const ZPoly& p) {
    if (!g.orthogonal()) throw FamilyError("laplacian: polynomial model is orthogonal");
    int N = g.matrix_size(), n = g.rank();
    ZPoly out;
    for (int i = 1; i <= n; ++i)
        out += p.derivative(ZVar{i}).derivative(ZVar{N + 1 - i});
    if (g.family() == Family::B)
        out += p.derivative(ZVar{n + 1}).derivative(ZVar{n + 1}) * Rational(1, 2);
    return out;
}

inline ExteriorElement laplacian(const AlgebraSpec& g, const ExteriorElement& v) {
    if (!g.symplectic()) throw FamilyError("laplacian: exterior model is symplectic");
    int n = g.rank();
    ExteriorElement out;
    for (int i = 1; i <= n; ++i) out += v.derivative(2 * n + 1 - i).derivative(i);
    return out;
}

// ---------------------------------------------------------------------------
// Basis construction.

struct HarmonicBasis {
    // B: (k_1..k_n, delta, l_n..l_1); D: (k_1..k_n, l_n..l_1); C: admissible
    // subsets in increasing order
    std::vector<std::vector<int>> tuples;
    std::vector<ZPoly> polys;
    std::vector<ExteriorElement> wedges;
    size_t size() const { return tuples.size(); }
};

namespace detail {

// tuple entries k_1..k_n map to z_1..z_n, l_n..l_1 to the primed block, and
// for odd size the middle entry is the z_{n+1} exponent
inline ZPoly harmonic_poly_b(int n, const std::vector<int>& t) {
    std::vector<int> k(t.begin(), t.begin() + n);
    int de = t[n];
    std::vector<int> l(n);
    for (int i = 0; i < n; ++i) l[i] = t[2 * n - i];
    ZPoly out;
    std::vector<int> a(n, 0);
    auto rec = [&](auto&& self, int i, long asum) -> void {
        if (i == n) {
            long zp = 2 * asum + de;
            Rational c = Rational(-2).pow(asum) * factorial(asum) / factorial(zp);
            ZPoly::Monomial mono;
            if (zp > 0) mono.push_back({ZVar{n + 1}, zp});
            for (int q = 0; q < n; ++q) {
                c /= factorial(k[q] - a[q]) * factorial(l[q] - a[q]);
                c /= factorial(a[q]);
                if (k[q] - a[q] > 0) mono.push_back({ZVar{q + 1}, k[q] - a[q]});
                if (l[q] - a[q] > 0) mono.push_back({ZVar{2 * n + 1 - q}, l[q] - a[q]});
            }
            std::sort(mono.begin(), mono.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            out.add_term(mono, c);
            return;
        }
        for (a[i] = 0; a[i] <= std::min(k[i], l[i]); ++a[i]) self(self, i + 1, asum + a[i]);
        a[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

inline ZPoly harmonic_poly_d(int n, const std::vector<int>& t) {
    std::vector<int> k(t.begin(), t.begin() + n);
    std::vector<int> l(n);
    for (int i = 0; i < n; ++i) l[i] = t[2 * n - 1 - i];
    ZPoly out;
    std::vector<int> a(n - 1, 0);
    auto rec = [&](auto&& self, int i, long asum) -> void {
        if (i == n - 1) {
            Rational c = Rational(asum % 2 ? -1 : 1) * factorial(asum) /
                         (factorial(asum + k[n - 1]) * factorial(asum + l[n - 1]));
            ZPoly::Monomial mono;
            if (asum + k[n - 1] > 0) mono.push_back({ZVar{n}, asum + k[n - 1]});
            if (asum + l[n - 1] > 0) mono.push_back({ZVar{n + 1}, asum + l[n - 1]});
            for (int q = 0; q < n - 1; ++q) {
                c /= factorial(k[q] - a[q]) * factorial(l[q] - a[q]);
                c /= factorial(a[q]);
                if (k[q] - a[q] > 0) mono.push_back({ZVar{q + 1}, k[q] - a[q]});
                if (l[q] - a[q] > 0) mono.push_back({ZVar{2 * n - q}, l[q] - a[q]});
            }
            std::sort(mono.begin(), mono.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            out.add_term(mono, c);
            return;
        }
        for (a[i] = 0; a[i] <= std::min(k[i], l[i]); ++a[i]) self(self, i + 1, asum + a[i]);
        a[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

// splits an admissible subset into full pairs a_1 < ... < a_k (unprimed
// representatives) and the remaining singletons b_1 < ... < b_l
inline void split_pairs(const std::vector<int>& sub, int n, std::vector<int>& pairs,
                        std::vector<int>& singles) {
    pairs.clear();
    singles.clear();
    auto in = [&](int v) { return std::binary_search(sub.begin(), sub.end(), v); };
    for (int v : sub) {
        if (v <= n && in(2 * n + 1 - v))
            pairs.push_back(v);
        else if (v > n && in(2 * n + 1 - v))
            continue;
        else
            singles.push_back(v);
    }
}

// the replacement letters of the admissible subset: scanning i = k..1, the
// largest c_i with a_i < c_i <= n, c_i < c_{i+1}, and c_i, c_i' free
inline std::vector<int> replacement_family(const std::vector<int>& sub, int n,
                                           const std::vector<int>& pairs) {
    auto in = [&](int v) { return std::binary_search(sub.begin(), sub.end(), v); };
    int k = static_cast<int>(pairs.size());
    std::vector<int> c(k, 0);
    int bound = n + 1;
    for (int i = k - 1; i >= 0; --i) {
        int pick = 0;
        for (int cand = std::min(n, bound - 1); cand > pairs[i]; --cand)
            if (!in(cand) && !in(2 * n + 1 - cand)) {
                pick = cand;
                break;
            }
        if (pick == 0) throw NotInvariantError("replacement family does not exist");
        c[i] = pick;
        bound = pick;
    }
    return c;
}

inline ExteriorElement harmonic_wedge_raw(const std::vector<int>& sub, int n) {
    std::vector<int> pairs, singles;
    split_pairs(sub, n, pairs, singles);
    std::vector<int> c = replacement_family(sub, n, pairs);
    int k = static_cast<int>(pairs.size());
    ExteriorElement y = ExteriorElement::word(singles);
    ExteriorElement out;
    // run over subsets d of the pair positions; sign by |d|
    for (long mask = 0; mask < (1L << k); ++mask) {
        ExteriorElement term(Rational(__builtin_popcountll(mask) % 2 ? -1 : 1));
        for (int i = 0; i < k; ++i)
            if (!(mask & (1L << i)))
                term *= ExteriorElement::word({pairs[i], 2 * n + 1 - pairs[i]});
        for (int i = 0; i < k; ++i)
            if (mask & (1L << i)) term *= ExteriorElement::word({c[i], 2 * n + 1 - c[i]});
        out += term * y;
    }
    return out;
}

// true when the increasing word is an admissible subset
inline bool word_admissible(const std::vector<int>& w, int n) {
    return admissible_word(w, n);
}

} // namespace detail

// The harmonic basis of the image of S^(m), in the polynomial model for the
// orthogonal families and the exterior model for the symplectic one.  The
// symplectic vectors are refined so each contains a unique admissible word.
inline HarmonicBasis harmonic_basis(const AlgebraSpec& g, int m) {
    if (g.is_gl()) throw FamilyError("harmonic_basis: classical families only");
    if (m < 1) throw RangeError("harmonic_basis: need m >= 1");
    int n = g.rank();
    HarmonicBasis hb;
    if (g.orthogonal()) {
        int N = g.matrix_size();
        std::vector<int> t(N, 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == N - 1) {
                t[pos] = left;
                bool mid_ok = g.family() == Family::D || t[n] <= 1;
                bool corner_ok =
                    g.family() == Family::B || std::min(t[n - 1], t[n]) == 0;
                if (mid_ok && corner_ok) hb.tuples.push_back(t);
                return;
            }
            for (t[pos] = 0; t[pos] <= left; ++t[pos]) self(self, pos + 1, left - t[pos]);
            t[pos] = 0;
        };
        rec(rec, 0, m);
        // colex order for reproducible listings
        std::sort(hb.tuples.begin(), hb.tuples.end(),
                  [](const std::vector<int>& x, const std::vector<int>& y) {
                      return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(),
                                                          y.rend());
                  });
        for (const auto& tup : hb.tuples)
            hb.polys.push_back(g.family() == Family::B ? detail::harmonic_poly_b(n, tup)
                                                       : detail::harmonic_poly_d(n, tup));
        return hb;
    }

    if (m > n) throw RangeError("harmonic_basis: symplectic model needs m <= n");
    hb.tuples = admissible_subsets(n, m);
    std::sort(hb.tuples.begin(), hb.tuples.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(),
                                                      y.rend());
              });
    for (const auto& sub : hb.tuples) hb.wedges.push_back(detail::harmonic_wedge_raw(sub, n));

    // eliminate extra admissible words: process own words in decreasing
    // lexicographic order so the later vectors are already clean
    std::map<std::vector<int>, size_t> by_subset;
    for (size_t i = 0; i < hb.tuples.size(); ++i) by_subset[hb.tuples[i]] = i;
    std::vector<size_t> order(hb.tuples.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return hb.tuples[y] < hb.tuples[x]; });
    for (size_t idx : order) {
        ExteriorElement& v = hb.wedges[idx];
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& [w, coeff] : v.terms()) {
                if (w == hb.tuples[idx] || !detail::word_admissible(w, n)) continue;
                auto it = by_subset.find(w);
                if (it == by_subset.end())
                    throw NotInvariantError("admissible word without a basis vector");
                const ExteriorElement& other = hb.wedges[it->second];
                v -= other * (coeff / other.coeff(w));
                changed = true;
                break;
            }
        }
    }
    return hb;
}

// ---------------------------------------------------------------------------
// Identification with the tensor module.

using TensorVector = std::map<uint32_t, Rational>;

inline TensorVector apply_to_vector(const TensorOperator& op, const TensorVector& vec) {
    TensorVector out;
    for (const auto& [rc, v] : op.entries()) {
        auto it = vec.find(rc.second);
        if (it == vec.end()) continue;
        Rational add = v * it->second;
        auto [jt, fresh] = out.emplace(rc.first, add);
        if (!fresh) {
            jt->second += add;
            if (jt->second.is_zero()) out.erase(jt);
        }
    }
    return out;
}

// the symmetric tensor mapping to the polynomial under the product
// identification: each degree-m monomial spreads over its arrangements with
// weight multiplicity / m!
inline TensorVector tensor_lift(const AlgebraSpec& g, int m, const ZPoly& p) {
    int N = g.matrix_size();
    TensorVector out;
    for (const auto& [mono, c] : p.terms()) {
        std::vector<int> letters;
        Rational norm = c;
        for (const auto& [v, e] : mono) {
            for (long q = 0; q < e; ++q) letters.push_back(v.i);
            norm *= factorial(e);
        }
        if (static_cast<int>(letters.size()) != m)
            throw RangeError("tensor_lift: inhomogeneous polynomial");
        norm /= factorial(m);
        std::sort(letters.begin(), letters.end());
        do {
            uint32_t code = encode_multi_index(letters, N);
            auto [it, fresh] = out.emplace(code, norm);
            if (!fresh) it->second += norm;
        } while (std::next_permutation(letters.begin(), letters.end()));
    }
    return out;
}

// the skew tensor mapping to the wedge element, spread with signs over all
// arrangements of each word
inline TensorVector tensor_lift(const AlgebraSpec& g, int m, const ExteriorElement& v) {
    int N = g.matrix_size();
    TensorVector out;
    for (const auto& [word, c] : v.terms()) {
        if (static_cast<int>(word.size()) != m)
            throw RangeError("tensor_lift: inhomogeneous element");
        std::vector<int> w = word;
        Rational norm = c / factorial(m);
        do {
            long inv = 0;
            for (size_t x = 0; x < w.size(); ++x)
                for (size_t y = x + 1; y < w.size(); ++y)
                    if (w[x] > w[y]) ++inv;
            uint32_t code = encode_multi_index(w, N);
            auto [it, fresh] = out.emplace(code, (inv % 2) ? -norm : norm);
            if (!fresh) it->second += (inv % 2) ? -norm : norm;
        } while (std::next_permutation(w.begin(), w.end()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification.

struct BasisReport {
    long count = 0;
    Rational dimension;
    bool harmonic = false;
    bool count_match = false;
    bool independent = false;
    bool leading_unique = false;
    bool pass() const { return harmonic && count_match && independent && leading_unique; }
    std::string str() const {
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        return "count=" + std::to_string(count) + " dim=" + dimension.str() +
               " harmonic=" + yn(harmonic) + " count_match=" + yn(count_match) +
               " independent=" + yn(independent) + " leading=" + yn(leading_unique);
    }
};

namespace detail {

inline long rational_rank(std::vector<std::vector<Rational>> rows) {
    long rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && rank < static_cast<long>(rows.size()); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            Rational f = rows[r][col] / rows[rank][col];
            for (size_t cc = col; cc < cols; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

// Checks the four defining properties of the basis family: annihilation by
// the Laplace operator, the dimension count, linear independence, and the
// one-leading-monomial triangular structure.
inline BasisReport verify_basis(const AlgebraSpec& g, int m) {
    HarmonicBasis hb = harmonic_basis(g, m);
    BasisReport rep;
    rep.count = static_cast<long>(hb.size());
    rep.dimension = brauer_symmetrizer_rank(g, m);
    rep.count_match = Rational(rep.count) == rep.dimension;
    int n = g.rank();

    if (g.orthogonal()) {
        int N = g.matrix_size();
        rep.harmonic = true;
        for (const auto& p : hb.polys) rep.harmonic = rep.harmonic && laplacian(g, p).is_zero();

        std::map<ZPoly::Monomial, size_t> col;
        for (const auto& p : hb.polys)
            for (const auto& [mono, c] : p.terms()) col.emplace(mono, col.size());
        std::vector<std::vector<Rational>> rows(hb.size(),
                                                std::vector<Rational>(col.size(), Rational(0)));
        for (size_t r = 0; r < hb.size(); ++r)
            for (const auto& [mono, c] : hb.polys[r].terms()) rows[r][col.at(mono)] = c;
        rep.independent = detail::rational_rank(std::move(rows)) == rep.count;

        // leading monomial: middle exponent at most 1 for odd size, corner
        // pair exponent product zero for even size; one per vector, matching
        // the tuple, with the factorial normalization
        rep.leading_unique = true;
        std::map<ZPoly::Monomial, int> seen;
        for (size_t r = 0; r < hb.size(); ++r) {
            const auto& t = hb.tuples[r];
            ZPoly::Monomial lead;
            Rational expect(1);
            for (int q = 0; q < n; ++q) {
                if (t[q] > 0) lead.push_back({ZVar{q + 1}, t[q]});
                expect /= factorial(t[q]);
            }
            if (g.family() == Family::B && t[n] > 0) lead.push_back({ZVar{n + 1}, t[n]});
            for (int q = n - 1; q >= 0; --q) {
                int lexp = t[N - 1 - q];
                if (lexp > 0) lead.push_back({ZVar{N - q}, lexp});
                expect /= factorial(lexp);
            }
            std::sort(lead.begin(), lead.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            long leadlike = 0;
            for (const auto& [mono, c] : hb.polys[r].terms()) {
                long midexp = 0, cexp = 0, cpexp = 0;
                for (const auto& [v, e] : mono) {
                    if (v.i == n + 1) midexp = e;
                    if (v.i == n) cexp = e;
                    if (v.i == n + 1) cpexp = e;
                }
                bool is_lead = g.family() == Family::B ? midexp <= 1
                                                       : std::min(cexp, cpexp) == 0;
                if (is_lead) {
                    ++leadlike;
                    if (!(mono == lead && c == expect)) rep.leading_unique = false;
                }
            }
            if (leadlike != 1) rep.leading_unique = false;
            if (++seen[lead] > 1) rep.leading_unique = false;
        }
    } else {
        rep.harmonic = true;
        for (const auto& v : hb.wedges)
            rep.harmonic = rep.harmonic && laplacian(g, v).is_zero();

        std::map<ExteriorElement::Word, size_t> col;
        for (const auto& v : hb.wedges)
            for (const auto& [w, c] : v.terms()) col.emplace(w, col.size());
        std::vector<std::vector<Rational>> rows(hb.size(),
                                                std::vector<Rational>(col.size(), Rational(0)));
        for (size_t r = 0; r < hb.size(); ++r)
            for (const auto& [w, c] : hb.wedges[r].terms()) rows[r][col.at(w)] = c;
        rep.independent = detail::rational_rank(std::move(rows)) == rep.count;

        // exactly one admissible word per vector: its own subset, lex-first
        // among all words, with a unit coefficient up to the wedge sign
        rep.leading_unique = true;
        for (size_t r = 0; r < hb.size(); ++r) {
            long admissible = 0;
            for (const auto& [w, c] : hb.wedges[r].terms()) {
                if (w < hb.tuples[r]) rep.leading_unique = false;
                if (detail::word_admissible(w, n)) {
                    ++admissible;
                    if (!(w == hb.tuples[r] && c.abs().is_one())) rep.leading_unique = false;
                }
            }
            if (admissible != 1) rep.leading_unique = false;
        }
    }
    return rep;
}

} // namespace ssv

#endif
