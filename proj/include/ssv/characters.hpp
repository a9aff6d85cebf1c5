#ifndef SSV_CHARACTERS_HPP
#define SSV_CHARACTERS_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ssv/binomial.hpp"
#include "ssv/errors.hpp"
#include "ssv/liealg.hpp"
#include "ssv/poly.hpp"

namespace ssv {

// Variable la_i^(r): image of the depth-r diagonal loop generator in the
// shifted-weight algebra.  Its filtration degree is r - 1.
struct LamVar {
    int i = 0;
    long r = 0;
    friend bool operator==(const LamVar&, const LamVar&) = default;
    friend auto operator<=>(const LamVar&, const LamVar&) = default;
};

using LamPoly = Poly<LamVar>;

inline std::string lam_name(const LamVar& v) {
    return "la[" + std::to_string(v.i) + ";" + std::to_string(v.r) + "]";
}

inline std::string lam_str(const LamPoly& p) {
    return p.str([](const LamVar& v) { return lam_name(v); });
}

inline LamPoly lam(int i, long r) { return LamPoly::variable(LamVar{i, r}); }

inline long lam_degree(const LamPoly::Monomial& m) {
    long d = 0;
    for (const auto& [v, e] : m) d += e * (v.r - 1);
    return d;
}

// ---------------------------------------------------------------------------
// Index words of the character sums.

struct CharSum {
    std::vector<std::vector<int>> words;
    long count = 0;
};

namespace detail {

// weakly increasing orthogonal words with the middle restriction of the family
inline void orth_words(const AlgebraSpec& g, int from, long left, std::vector<int>& word,
                       std::vector<std::vector<int>>& out) {
    if (left == 0) {
        out.push_back(word);
        return;
    }
    int N = g.matrix_size(), n = g.rank();
    for (int i = from; i <= N; ++i) {
        if (g.family() == Family::B && i == n + 1 && !word.empty() && word.back() == i)
            continue;
        if (g.family() == Family::D && i == n + 1 && !word.empty() && word.back() == n)
            continue;
        word.push_back(i);
        orth_words(g, i, left - 1, word, out);
        word.pop_back();
    }
}

// depth condition on strictly increasing symplectic words: a pair i < i' at
// positions r < s is only admitted when s - r <= n - i
inline bool admissible_word(const std::vector<int>& w, int n) {
    for (size_t r = 0; r < w.size(); ++r) {
        int i = w[r];
        if (i > n) continue;
        for (size_t s = r + 1; s < w.size(); ++s)
            if (w[s] == 2 * n + 1 - i && static_cast<long>(s - r) > n - i) return false;
    }
    return true;
}

} // namespace detail

inline std::vector<std::vector<int>> admissible_subsets(int n, long m) {
    if (n < 1) throw RangeError("admissible_subsets: rank must be positive");
    if (m < 0 || m > 2 * n) throw RangeError("admissible_subsets: size out of range");
    std::vector<std::vector<int>> out;
    std::vector<int> w;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<long>(w.size()) == m) {
            if (detail::admissible_word(w, n)) out.push_back(w);
            return;
        }
        for (int i = from; i <= 2 * n; ++i) {
            w.push_back(i);
            self(self, i + 1);
            w.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Index words of the trace-of-symmetrizer character sum.  Orthogonal words
// are weakly increasing and read the points u, u+1, ..., u+m-1; symplectic
// words are strictly increasing on u, u-1, ..., u-m+1 and only exist for
// m <= n.
inline CharSum char_sum(const AlgebraSpec& g, long m) {
    if (g.is_gl()) throw FamilyError("char_sum: classical families only");
    if (m < 0) throw RangeError("char_sum: negative length");
    CharSum cs;
    if (g.symplectic()) {
        if (m > g.rank()) throw RangeError("char_sum: symplectic length exceeds rank");
        cs.words = admissible_subsets(g.rank(), m);
    } else {
        std::vector<int> word;
        detail::orth_words(g, 1, m, word, cs.words);
    }
    cs.count = static_cast<long>(cs.words.size());
    return cs;
}

// ---------------------------------------------------------------------------
// Numeric check of the symplectic extended-index identity: with the diagonal
// series related by the triangular relations and the middle pair defined by
// its functional equation, the length-m extended sum matches the character
// sum for m <= n and vanishes identically at m = n + 1.

namespace detail {

// One random assignment on the integer offset lattice around a generic base
// point.  Free values are drawn positive, so the derived quotients exist;
// a zero divisor still raises and the caller redraws.
class KappaAssignment {
public:
    KappaAssignment(int n, std::mt19937_64& rng) : n_(n), rng_(rng) {}

    // la_i at base point + t for index i in 1..2n; i <= n free, rest derived
    Rational lambda(int i, long t) {
        if (i <= n_) return draw(free_, std::make_pair(i, t));
        auto key = std::make_pair(i, t);
        if (auto it = derived_.find(key); it != derived_.end()) return it->second;
        int N = 2 * n_, ip = N - i + 1;
        long kap = n_ + 1;
        Rational val;
        if (ip == 1) {
            val = Rational(1) / nonzero(lambda(1, t + kap));
        } else {
            int j = ip - 1;
            val = lambda(j, t + kap - j) * lambda(N - j + 1, t) /
                  nonzero(lambda(j + 1, t + kap - j));
        }
        derived_.emplace(key, val);
        return val;
    }

    // the middle pair, seeded at offset zero and chained away from the seed
    // through ka(v) ka(v+1) = la_n(v+1) la_n'(v)
    Rational middle(long t) {
        if (auto it = mid_.find(t); it != mid_.end()) return it->second;
        Rational val;
        if (t == 0)
            val = draw(mid_, t);
        else if (t < 0)
            val = lambda(n_, t + 1) * lambda(n_ + 1, t) / nonzero(middle(t + 1));
        else
            val = lambda(n_, t) * lambda(n_ + 1, t - 1) / nonzero(middle(t - 1));
        mid_[t] = val;
        return val;
    }

    Rational extended(int i, long t) {
        if (i <= n_) return lambda(i, t);
        if (i == n_ + 1) return middle(t);
        if (i == n_ + 2) return -middle(t);
        return lambda(i - 2, t);
    }

private:
    template <class Map, class Key>
    Rational draw(Map& cache, const Key& key) {
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::uniform_int_distribution<int> num(1, 40), den(1, 11);
        Rational v(num(rng_), den(rng_));
        cache.emplace(key, v);
        return v;
    }

    static const Rational& nonzero(const Rational& v) {
        if (v.is_zero())
            throw DegenerateAssignmentError("kappa assignment hit a zero divisor");
        return v;
    }

    int n_;
    std::mt19937_64& rng_;
    std::map<std::pair<int, long>, Rational> free_;
    std::map<std::pair<int, long>, Rational> derived_;
    std::map<long, Rational> mid_;
};

} // namespace detail

inline bool kappa_vanishing_check(int n, int trials, unsigned long long seed = 20240817ULL) {
    if (n < 1) throw RangeError("kappa_vanishing_check: rank must be positive");
    if (trials < 1) throw RangeError("kappa_vanishing_check: need at least one trial");
    std::mt19937_64 rng(seed);
    AlgebraSpec c(Family::C, n);
    for (int trial = 0; trial < trials; ++trial) {
        for (int attempt = 0;; ++attempt) {
            try {
                detail::KappaAssignment as(n, rng);
                // extended sums over strictly increasing words of length <= n+1
                // in 1..2n+2, the q-th letter read at offset -q
                std::vector<Rational> ext(static_cast<size_t>(n) + 2, Rational(0));
                std::vector<int> word;
                auto rec = [&](auto&& self, int from) -> void {
                    long m = static_cast<long>(word.size());
                    if (m > 0) {
                        Rational p(1);
                        for (long q = 0; q < m; ++q) p *= as.extended(word[q], -q);
                        ext[m] += p;
                    }
                    if (m == n + 1) return;
                    for (int i = from; i <= 2 * n + 2; ++i) {
                        word.push_back(i);
                        self(self, i + 1);
                        word.pop_back();
                    }
                };
                rec(rec, 1);
                if (!ext[n + 1].is_zero()) return false;
                for (long m = 1; m <= n; ++m) {
                    Rational plain(0);
                    for (const auto& w : char_sum(c, m).words) {
                        Rational p(1);
                        for (long q = 0; q < m; ++q) p *= as.lambda(w[q], -q);
                        plain += p;
                    }
                    if (plain != ext[m]) return false;
                }
                break;
            } catch (const DegenerateAssignmentError&) {
                if (attempt > 100) throw;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Truncated series and operator algebra for the infinite vanishing
// identities.

namespace detail {

// series 1 + sum_{r >= 1} c_r u^-r with polynomial coefficients, cut at a
// fixed depth
struct USeries {
    long depth;
    std::vector<LamPoly> c;

    explicit USeries(long d) : depth(d), c(static_cast<size_t>(d) + 1) {}

    static USeries one(long d) {
        USeries s(d);
        s.c[0] = LamPoly(1);
        return s;
    }
    static USeries free_series(int i, long d) {
        USeries s = one(d);
        for (long r = 1; r <= d; ++r) s.c[r] = lam(i, r);
        return s;
    }

    friend USeries operator*(const USeries& a, const USeries& b) {
        USeries out(a.depth);
        for (long r = 0; r <= a.depth; ++r)
            for (long j = 0; j <= r; ++j)
                if (!a.c[j].is_zero() && !b.c[r - j].is_zero()) out.c[r] += a.c[j] * b.c[r - j];
        return out;
    }

    // substitute u -> u + s and re-expand; shifts only deepen the u-powers
    USeries shifted(const Rational& s) const {
        USeries out(depth);
        for (long r = 0; r <= depth; ++r) {
            if (c[r].is_zero()) continue;
            Rational pw(1);
            for (long k = r; k <= depth; ++k) {
                Rational w = gen_binomial(Rational(-r), k - r) * pw;
                if (!w.is_zero()) out.c[k] += c[r] * w;
                pw *= s;
            }
        }
        return out;
    }

    // multiplicative inverse; the constant coefficient must be 1
    USeries inverse() const {
        if (!(c[0] == LamPoly(1))) throw RangeError("USeries: inverse needs unit constant");
        USeries out = one(depth);
        for (long r = 1; r <= depth; ++r) {
            LamPoly acc;
            for (long j = 1; j <= r; ++j)
                if (!c[j].is_zero() && !out.c[r - j].is_zero()) acc -= c[j] * out.c[r - j];
            out.c[r] = acc;
        }
        return out;
    }

    friend bool operator==(const USeries& a, const USeries& b) {
        return a.depth == b.depth && a.c == b.c;
    }
};

// Diagonal series with the triangular relations imposed: indices 1..n free,
// the reflected ones derived top-down, and for odd orthogonal size the
// middle series solved from its functional equation.  Entry 0 is unused.
inline std::vector<USeries> lambda_system(Family f, int n, long depth) {
    if (f == Family::A) throw FamilyError("lambda_system: classical families only");
    if (n < 1) throw RangeError("lambda_system: rank must be positive");
    int N = f == Family::B ? 2 * n + 1 : 2 * n;
    Rational kap = f == Family::C ? Rational(N, 2) + 1 : Rational(N, 2) - 1;
    std::vector<USeries> out(static_cast<size_t>(N) + 1, USeries::one(depth));
    for (int i = 1; i <= n; ++i) out[i] = USeries::free_series(i, depth);
    out[N] = out[1].shifted(kap).inverse();
    for (int i = 1; i < n; ++i)
        out[N - i] = out[i].shifted(kap - Rational(i)) * out[N + 1 - i] *
                     out[i + 1].shifted(kap - Rational(i)).inverse();
    if (f == Family::B) {
        // x(u + c) x(u) = rhs with c = kap - n = -1/2; coefficient r of the
        // left side is 2 x_r plus terms in x_j for j < r, so solve upward
        Rational cshift = kap - Rational(n);
        USeries rhs = out[n].shifted(cshift) * out[n + 2];
        USeries x = USeries::one(depth);
        for (long r = 1; r <= depth; ++r) {
            USeries prod = x.shifted(cshift) * x;
            x.c[r] = (rhs.c[r] - prod.c[r]) * Rational(1, 2);
        }
        if (!(x.shifted(cshift) * x == rhs))
            throw Error("lambda_system: middle equation solve failed");
        out[n + 1] = x;
    }
    return out;
}

// Operator element: sum of P(la) u^-p d^k terms with displacements
// normal-ordered to the right.  Terms are kept only when the filtration
// degree of the monomial is >= -dbound and every variable has depth
// <= rwin; products never raise degrees and never remove variables, so
// both cuts are stable under multiplication.
class SigmaOp {
public:
    SigmaOp(long dbound, long rwin) : dbound_(dbound), rwin_(rwin) {}

    static SigmaOp unit(long dbound, long rwin) {
        SigmaOp e(dbound, rwin);
        e.t_[{0, 0}] = LamPoly(1);
        return e;
    }

    const std::map<std::pair<long, long>, LamPoly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(long p, long k, const LamPoly& poly) {
        LamPoly kept;
        for (const auto& [m, c] : poly.terms()) {
            if (lam_degree(m) - p - k < -dbound_) continue;
            bool shallow = true;
            for (const auto& [v, e] : m) shallow = shallow && v.r <= rwin_;
            if (shallow) kept.add_term(m, c);
        }
        if (kept.is_zero()) return;
        auto [it, fresh] = t_.emplace(std::make_pair(p, k), kept);
        if (!fresh) {
            it->second += kept;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    SigmaOp& scaled_add(const SigmaOp& o, const Rational& s) {
        if (s.is_zero()) return *this;
        for (const auto& [key, poly] : o.t_) add(key.first, key.second, poly * s);
        return *this;
    }
    SigmaOp& operator+=(const SigmaOp& o) { return scaled_add(o, Rational(1)); }

    friend bool operator==(const SigmaOp& a, const SigmaOp& b) { return a.t_ == b.t_; }

    // composition; d^k u^-p = sum_j binom(k, j) (-p)(-p-1)...(-p-j+1) u^-p-j d^k-j
    friend SigmaOp operator*(const SigmaOp& a, const SigmaOp& b) {
        SigmaOp out(a.dbound_, a.rwin_);
        for (const auto& [ka, pa] : a.t_)
            for (const auto& [kb, pb] : b.t_) {
                LamPoly prod = pa * pb;
                if (prod.is_zero()) continue;
                for (long j = 0; j <= ka.second; ++j) {
                    Rational w = gen_binomial(Rational(ka.second), j) *
                                 falling_factorial(Rational(-kb.first), j);
                    if (!w.is_zero())
                        out.add(ka.first + kb.first + j, ka.second - j + kb.second, prod * w);
                }
            }
        return out;
    }

private:
    long dbound_, rwin_;
    std::map<std::pair<long, long>, LamPoly> t_;
};

// la(u) e^d - 1 in cut operator form; every surviving term has degree <= -1
inline SigmaOp sigma_op(const USeries& s, long dbound, long rwin) {
    SigmaOp e(dbound, rwin);
    Rational inv_fact(1);
    for (long k = 0; k <= dbound; ++k) {
        if (k > 0) inv_fact /= Rational(k);
        for (long p = 0; p <= s.depth; ++p)
            if (!s.c[p].is_zero()) e.add(p, k, s.c[p] * inv_fact);
    }
    e.add(0, 0, LamPoly(-1));
    return e;
}

// sums over ordered products sig[0]^a0 sig[1]^a1 ... grouped by the total
// exponent: out[t] = sum over compositions a of t
inline std::vector<SigmaOp> composition_sums(const std::vector<SigmaOp>& sig, long tmax,
                                             const SigmaOp& unit) {
    SigmaOp empty = unit;
    empty.scaled_add(unit, Rational(-1));
    std::vector<SigmaOp> out(static_cast<size_t>(tmax) + 1, empty);
    auto rec = [&](auto&& self, size_t i, long total, const SigmaOp& acc) -> void {
        if (i == sig.size()) {
            out[total] += acc;
            return;
        }
        SigmaOp cur = acc;
        for (long a = 0;; ++a) {
            self(self, i + 1, total + a, cur);
            if (total + a == tmax) break;
            cur = cur * sig[i];
        }
    };
    rec(rec, 0, 0, unit);
    return out;
}

// Assembles the truncated orthogonal vanishing series from a full vector of
// diagonal series (indexed 1..N).  Exposed separately so the identity can
// also be probed with unconstrained coefficients, where it must fail.
inline SigmaOp assemble_vanishing_series(Family f, int n, long D, long rwin,
                                         const std::vector<USeries>& lams) {
    const int N = f == Family::B ? 2 * n + 1 : 2 * n;

    // sigma variables in the word order 1..n, n'..1'
    std::vector<SigmaOp> sig;
    for (int i = 1; i <= n; ++i) sig.push_back(sigma_op(lams[i], D, rwin));
    for (int i = n; i >= 1; --i) sig.push_back(sigma_op(lams[N + 1 - i], D, rwin));

    const SigmaOp unit = SigmaOp::unit(D, rwin);
    SigmaOp total(D, rwin);

    if (f == Family::B) {
        // first branch: words over all 2n letters, prefactor indexed by the
        // word length; second branch: the doubled middle letter spliced in,
        // prefactor indexed by one more than the flanking length
        const long rmax = D + 1;
        SigmaOp mid2 = sigma_op(lams[n + 1], D, rwin);
        mid2.scaled_add(unit, Rational(2));
        std::vector<SigmaOp> left(sig.begin(), sig.begin() + n);
        std::vector<SigmaOp> right(sig.begin() + n, sig.end());
        auto lsum = composition_sums(left, rmax, unit);
        auto rsum = composition_sums(right, rmax, unit);
        Rational a = Rational(N, 2) - 2;
        for (long lt = 0; lt <= rmax; ++lt) {
            SigmaOp lmid = lsum[lt] * mid2;
            for (long rt = 0; lt + rt <= rmax; ++rt) {
                long r = lt + rt;
                total.scaled_add(lsum[lt] * rsum[rt], gen_binomial(a, N + r - 3));
                total.scaled_add(lmid * rsum[rt], gen_binomial(a, N + r - 2));
            }
        }
    } else {
        // the weight of a word depends on its length and on which of the two
        // middle letters occur, so sum the ends and expand the middle powers
        const long rmax = D;
        std::vector<SigmaOp> left(sig.begin(), sig.begin() + (n - 1));
        std::vector<SigmaOp> right(sig.begin() + (n + 1), sig.end());
        auto lsum = composition_sums(left, rmax, unit);
        auto rsum = composition_sums(right, rmax, unit);
        std::vector<SigmaOp> pn{unit}, pnp{unit};
        for (long b = 1; b <= rmax; ++b) {
            pn.push_back(pn.back() * sig[n - 1]);
            pnp.push_back(pnp.back() * sig[n]);
        }
        for (long la = 0; la <= rmax; ++la)
            for (long b = 0; la + b <= rmax; ++b) {
                SigmaOp lb = lsum[la] * pn[b];
                for (long bp = 0; la + b + bp <= rmax; ++bp) {
                    if (b > 0 && bp > 0) continue;
                    SigmaOp lbp = lb * pnp[bp];
                    for (long rc = 0; la + b + bp + rc <= rmax; ++rc) {
                        long r = la + b + bp + rc;
                        if (r == 0) continue;
                        Rational cr = d_word_norm(n, r) / Rational(n + r - 1);
                        Rational w = (b == 0 && bp == 0) ? -Rational(r) * cr
                                                         : Rational(n - 1) * cr;
                        total.scaled_add(lbp * rsum[rc], w);
                    }
                }
            }
    }
    return total;
}

} // namespace detail

// Exactness check of the two infinite orthogonal vanishing series: assembled
// over words of bounded length in cut operator arithmetic, every kept
// filtration component down to degree -degree_bound must vanish.  The check
// is honest in that the identity fails for unconstrained series
// coefficients; it holds only with the triangular relations imposed.
inline bool vanishing_series_check(Family f, int n, long degree_bound) {
    if (f != Family::B && f != Family::D)
        throw FamilyError("vanishing_series_check: orthogonal families only");
    if (n < 1) throw RangeError("vanishing_series_check: rank must be positive");
    if (f == Family::D && n < 2) throw RangeError("vanishing_series_check: D needs n >= 2");
    if (degree_bound < 1) throw RangeError("vanishing_series_check: bound must be positive");

    // every sigma component has degree <= -1, so words longer than the
    // degree bound cannot reach the kept range; u-powers beyond
    // degree_bound * rwin are likewise unreachable
    const long D = degree_bound, rwin = D, depth = D * rwin;
    auto lams = detail::lambda_system(f, n, depth);
    return detail::assemble_vanishing_series(f, n, D, rwin, lams).is_zero();
}

} // namespace ssv

#endif
