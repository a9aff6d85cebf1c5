#ifndef SSV_SUGAWARA_HPP
#define SSV_SUGAWARA_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ssv/binomial.hpp"
#include "ssv/envu.hpp"
#include "ssv/tensor.hpp"

namespace ssv {

// c_0 tau^m + ... + c_m with tau-free coefficients in U; coeffs[a] is the
// coefficient of tau^(m-a).
struct TauPolynomial {
    std::vector<UElement> coeffs;
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

// Split a straightened element into tau-power layers.  deg must bound the
// actual tau degree.
inline TauPolynomial collect_tau(const UElement& x, long deg) {
    if (deg < 0) throw RangeError("collect_tau: negative degree");
    TauPolynomial out;
    out.coeffs.assign(static_cast<size_t>(deg) + 1, UElement(x.spec()));
    for (const auto& [m, c] : x.terms()) {
        if (m.tau > deg) throw RangeError("collect_tau: tau power exceeds degree");
        out.coeffs[static_cast<size_t>(deg - m.tau)].add_term({m.word, 0}, c);
    }
    return out;
}

namespace detail {

// tr S X_1 ... X_m for the one-factor matrix X_{ij} = delta_ij tau + s F_{ij}[-1].
// Entries of the operator product multiply in factor order, so the (alpha,beta)
// entry of S contributes S_{alpha beta} X_{beta_1 alpha_1} ... X_{beta_m alpha_m}.
inline UElement symmetrized_trace(const AlgebraSpec& g, const TensorOperator& S,
                                  const Rational& s) {
    const int N = g.matrix_size();
    const int m = S.factors();
    std::vector<UElement> entry;
    entry.reserve(static_cast<size_t>(N) * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            UElement x = UElement::generator(g, i, j, -1) * s;
            if (i == j) x += UElement::tau(g);
            entry.push_back(std::move(x));
        }
    UElement total(g);
    for (const auto& [rc, v] : S.entries()) {
        std::vector<int> alpha = decode_multi_index(rc.first, N, m);
        std::vector<int> beta = decode_multi_index(rc.second, N, m);
        UElement prod = UElement::constant(g, v);
        for (int k = 0; k < m; ++k)
            prod *= entry[static_cast<size_t>(beta[k] - 1) * N + (alpha[k] - 1)];
        total += prod;
    }
    return total;
}

} // namespace detail

// gamma_m(omega) tr S^(m) (tau + F[-1])_1 ... (tau + F[-1])_m collected by tau
// power.  At m = n+1 in the symplectic case the symmetrizer vanishes, so the
// product with the gamma prefactor is zero despite the pole of the factor
// alone; the zero polynomial is returned without evaluating either.
inline TauPolynomial phi_coefficients(const AlgebraSpec& g, long m) {
    if (g.is_gl()) throw FamilyError("phi_coefficients: use gl_phi_coefficients for gl");
    if (m < 1) throw RangeError("phi_coefficients: m must be positive");
    if (g.symplectic() && m > g.rank() + 1)
        throw RangeError("phi_coefficients: m exceeds n+1 in the symplectic case");
    if (g.symplectic() && m == g.rank() + 1) {
        TauPolynomial zero;
        zero.coeffs.assign(static_cast<size_t>(m) + 1, UElement(g));
        return zero;
    }
    TensorOperator S = brauer_symmetrizer(g, static_cast<int>(m));
    UElement x = detail::symmetrized_trace(g, S, Rational(1));
    return collect_tau(x * gamma_factor(g.omega(), m), m);
}

enum class GlKind { A, H };

// Antisymmetrized or symmetrized trace for gl_N; no gamma prefactor.
inline TauPolynomial gl_phi_coefficients(int N, long m, GlKind kind) {
    if (m < 1) throw RangeError("gl_phi_coefficients: m must be positive");
    if (kind == GlKind::A && m > N)
        throw RangeError("gl_phi_coefficients: antisymmetrizer vanishes for m > N");
    AlgebraSpec g(Family::A, N);
    TensorOperator S = kind == GlKind::A ? antisymmetrizer(N, static_cast<int>(m))
                                         : symmetrizer_h(N, static_cast<int>(m));
    return collect_tau(detail::symmetrized_trace(g, S, Rational(1)), m);
}

// Noncommutative complete / elementary symmetric functions.  h_m sums the
// products x_{i_1} ... x_{i_m} over weakly increasing index words, e_m over
// strictly decreasing ones; m = 0 gives the unit.
enum class SymKind { Complete, Elementary };

template <class Elem>
Elem nc_sym_generic(SymKind kind, const std::vector<Elem>& atoms, long m, Elem unit) {
    if (m < 0) throw RangeError("nc_sym: negative degree");
    Elem total = unit;
    if (m == 0) return total;
    total -= unit;
    const long n = static_cast<long>(atoms.size());
    std::function<void(long, long, const Elem&)> rec = [&](long i, long left, const Elem& prod) {
        Elem next = prod * atoms[static_cast<size_t>(i)];
        if (left == 1) {
            total += next;
            return;
        }
        if (kind == SymKind::Complete) {
            for (long j = i; j < n; ++j) rec(j, left - 1, next);
        } else {
            for (long j = 0; j < i; ++j) rec(j, left - 1, next);
        }
    };
    for (long i = 0; i < n; ++i) {
        if (kind == SymKind::Elementary && i < m - 1) continue;
        rec(i, m, unit);
    }
    return total;
}

inline Pi0Tau nc_sym(SymKind kind, const std::vector<Pi0Tau>& atoms, long m) {
    return nc_sym_generic(kind, atoms, m, Pi0Tau(Rational(1)));
}

namespace detail {

inline Pi0Tau tau_plus_mu(int i, int sign) {
    return Pi0Tau::tau() + Pi0Tau(mu(i, -1) * Rational(sign));
}

} // namespace detail

// Predicted image of phi_{m0} tau^m + ... + phi_{mm} in pi_0[tau]: a complete
// symmetric function of the 2n atoms tau +- mu_i[-1] for B, the half sum of
// its two (2n-1)-atom variants for D, an elementary symmetric function with a
// bare tau atom inserted for C.
inline Pi0Tau main_theorem_rhs(const AlgebraSpec& g, long m) {
    if (g.is_gl()) throw FamilyError("main_theorem_rhs: classical types only");
    if (m < 1) throw RangeError("main_theorem_rhs: m must be positive");
    const int n = g.rank();
    std::vector<Pi0Tau> atoms;
    switch (g.family()) {
        case Family::B: {
            for (int i = 1; i <= n; ++i) atoms.push_back(detail::tau_plus_mu(i, 1));
            for (int i = n; i >= 1; --i) atoms.push_back(detail::tau_plus_mu(i, -1));
            return nc_sym(SymKind::Complete, atoms, m);
        }
        case Family::D: {
            std::vector<Pi0Tau> drop_plus, drop_minus;
            for (int i = 1; i <= n - 1; ++i) drop_plus.push_back(detail::tau_plus_mu(i, 1));
            for (int i = n; i >= 1; --i) drop_plus.push_back(detail::tau_plus_mu(i, -1));
            for (int i = 1; i <= n; ++i) drop_minus.push_back(detail::tau_plus_mu(i, 1));
            for (int i = n - 1; i >= 1; --i) drop_minus.push_back(detail::tau_plus_mu(i, -1));
            return (nc_sym(SymKind::Complete, drop_plus, m) +
                    nc_sym(SymKind::Complete, drop_minus, m)) *
                   Rational(1, 2);
        }
        case Family::C: {
            if (m > n) throw RangeError("main_theorem_rhs: symplectic m exceeds n");
            for (int i = 1; i <= n; ++i) atoms.push_back(detail::tau_plus_mu(i, 1));
            atoms.push_back(Pi0Tau::tau());
            for (int i = n; i >= 1; --i) atoms.push_back(detail::tau_plus_mu(i, -1));
            return nc_sym(SymKind::Elementary, atoms, m);
        }
        default:
            throw FamilyError("main_theorem_rhs: classical types only");
    }
}

struct VerifyReport {
    bool match = false;
    std::string lhs, rhs, diff;
};

// Compare the projection of the trace coefficients with the predicted
// symmetric function, tau layer by tau layer.
inline VerifyReport verify_main_theorem(const AlgebraSpec& g, long m) {
    if (g.symplectic() && m > g.rank())
        throw RangeError("verify_main_theorem: symplectic m exceeds n");
    TauPolynomial phi = phi_coefficients(g, m);
    Pi0Tau lhs;
    for (long a = 0; a <= m; ++a)
        lhs += hc_chi(phi.coeffs[static_cast<size_t>(a)]) * Pi0Tau::tau(m - a);
    Pi0Tau rhs = main_theorem_rhs(g, m);
    Pi0Tau diff = lhs - rhs;
    return {diff.is_zero(), lhs.str(), rhs.str(), diff.str()};
}

// Same comparison for gl_N: the antisymmetrized trace projects onto e_m of
// the atoms tau + mu_i[-1], the symmetrized one onto h_m.
inline VerifyReport verify_glN_images(int N, long m, GlKind kind) {
    TauPolynomial phi = gl_phi_coefficients(N, m, kind);
    Pi0Tau lhs;
    for (long a = 0; a <= m; ++a)
        lhs += hc_chi(phi.coeffs[static_cast<size_t>(a)]) * Pi0Tau::tau(m - a);
    std::vector<Pi0Tau> atoms;
    for (int i = 1; i <= N; ++i) atoms.push_back(detail::tau_plus_mu(i, 1));
    Pi0Tau rhs =
        nc_sym(kind == GlKind::A ? SymKind::Elementary : SymKind::Complete, atoms, m);
    Pi0Tau diff = lhs - rhs;
    return {diff.is_zero(), lhs.str(), rhs.str(), diff.str()};
}

// Pfaffian of the skew-symmetric matrix F~_{ij}[-1] = F_{ij'}[-1] in type D:
// (1/2^n n!) sum over S_2n of sgn(sigma) F~_{s1 s2}[-1] ... F~_{s(2n-1) s(2n)}[-1].
inline UElement pfaffian_ssv(const AlgebraSpec& g) {
    if (g.family() != Family::D) throw FamilyError("pfaffian_ssv: type D only");
    const int n = g.rank();
    const int N = 2 * n;
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 1);
    UElement total(g);
    do {
        long inv = 0;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (perm[a] > perm[b]) ++inv;
        UElement prod = UElement::constant(g, Rational(sign_pow(inv)));
        for (int k = 0; k < n; ++k)
            prod *= UElement::generator(g, perm[2 * k], g.prime(perm[2 * k + 1]), -1);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational norm(1);
    for (int k = 1; k <= n; ++k) norm *= Rational(1, 2 * k);
    return total * norm;
}

// (mu_1[-1] - tau) ... (mu_n[-1] - tau) applied to 1.
inline MuPoly pfaffian_rhs(int n) {
    Pi0Tau prod{Rational(1)};
    for (int i = 1; i <= n; ++i) prod *= Pi0Tau(mu(i, -1)) - Pi0Tau::tau();
    return prod.apply_to_one();
}

inline VerifyReport verify_pfaffian_image(const AlgebraSpec& g) {
    Pi0Tau lhs = hc_chi(pfaffian_ssv(g));
    Pi0Tau rhs{pfaffian_rhs(g.rank())};
    Pi0Tau diff = lhs - rhs;
    return {diff.is_zero(), lhs.str(), rhs.str(), diff.str()};
}

// The involution of type D swapping the indices n and n'; odd on the
// pfaffian generator, even on the symmetrized traces.
inline UElement apply_tilde(const UElement& e) {
    const AlgebraSpec& g = e.spec();
    if (g.family() != Family::D) throw FamilyError("apply_tilde: type D only");
    const int n = g.rank();
    auto swap_n = [&](int k) { return k == n ? n + 1 : (k == n + 1 ? n : k); };
    UElement out(g);
    for (const auto& [m, c] : e.terms()) {
        UElement prod = UElement::constant(g, c);
        for (const Gen& x : m.word) prod *= UElement::generator(g, swap_n(x.i), swap_n(x.j), x.r);
        prod *= UElement::tau(g, m.tau);
        out += prod;
    }
    return out;
}

// Formal sums sum c_{p,k} u^(-p) del^k with coefficients from a ring that the
// symbols commute with; moving del^k past u^(-p') costs Leibniz corrections
// del^j u^(-p') = (-p')(-p'-1)...(-p'-j+1) u^(-p'-j).
template <class Coeff>
class DiffSeries {
public:
    using Terms = std::map<std::pair<long, long>, Coeff>;

    explicit DiffSeries(Coeff zero) : zero_(std::move(zero)) {}

    static DiffSeries del(const Coeff& unit, long k = 1) {
        Coeff zero = unit;
        zero -= unit;
        DiffSeries s(std::move(zero));
        s.add(0, k, unit);
        return s;
    }

    const Terms& terms() const { return t_; }
    const Coeff& zero() const { return zero_; }
    bool is_zero() const { return t_.empty(); }

    Coeff coeff(long p, long k) const {
        auto it = t_.find({p, k});
        return it == t_.end() ? zero_ : it->second;
    }

    void add(long p, long k, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(std::pair{p, k}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    DiffSeries& operator+=(const DiffSeries& o) {
        for (const auto& [pk, c] : o.t_) add(pk.first, pk.second, c);
        return *this;
    }
    DiffSeries& operator-=(const DiffSeries& o) {
        for (const auto& [pk, c] : o.t_) {
            Coeff neg = zero_;
            neg -= c;
            add(pk.first, pk.second, neg);
        }
        return *this;
    }
    friend DiffSeries operator+(DiffSeries a, const DiffSeries& b) { a += b; return a; }
    friend DiffSeries operator-(DiffSeries a, const DiffSeries& b) { a -= b; return a; }

    friend DiffSeries operator*(const DiffSeries& a, const DiffSeries& b) {
        DiffSeries r(a.zero_);
        for (const auto& [pk, c] : a.t_)
            for (const auto& [pk2, c2] : b.t_)
                for (long j = 0; j <= pk.second; ++j) {
                    Rational f = gen_binomial(pk.second, j) *
                                 falling_factorial(Rational(-pk2.first), j);
                    if (f.is_zero()) continue;
                    r.add(pk.first + pk2.first + j, pk.second - j + pk2.second,
                          (c * c2) * f);
                }
        return r;
    }
    DiffSeries& operator*=(const DiffSeries& o) { return *this = *this * o; }
    friend DiffSeries operator*(DiffSeries a, const Rational& s) {
        if (s.is_zero()) a.t_.clear();
        for (auto& [pk, c] : a.t_) c = c * s;
        return a;
    }

    friend bool operator==(const DiffSeries& a, const DiffSeries& b) {
        return a.t_ == b.t_;
    }

    template <class Printer>
    std::string str(Printer coeff_str) const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [pk, c] : t_) {
            if (!out.empty()) out += " + ";
            out += "(" + coeff_str(c) + ")";
            if (pk.first != 0) out += "*u^-" + std::to_string(pk.first);
            if (pk.second != 0)
                out += "*del" + (pk.second == 1 ? "" : "^" + std::to_string(pk.second));
        }
        return out;
    }

private:
    Coeff zero_;
    Terms t_;
};

using UDiffSeries = DiffSeries<UElement>;
using MuDiffSeries = DiffSeries<MuPoly>;

namespace detail {

// del + s sum_{0 <= r < d} F_ij[r] u^(-r-1) entrywise trace against S.
inline UDiffSeries current_trace(const AlgebraSpec& g, const TensorOperator& S,
                                 const Rational& s, long d) {
    const int N = g.matrix_size();
    const int m = S.factors();
    std::vector<UDiffSeries> entry;
    entry.reserve(static_cast<size_t>(N) * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            UDiffSeries x{UElement(g)};
            if (i == j) x.add(0, 1, UElement::one(g));
            for (long r = 0; r < d; ++r)
                x.add(r + 1, 0, UElement::generator(g, i, j, r) * s);
            entry.push_back(std::move(x));
        }
    UDiffSeries total{UElement(g)};
    for (const auto& [rc, v] : S.entries()) {
        std::vector<int> alpha = decode_multi_index(rc.first, N, m);
        std::vector<int> beta = decode_multi_index(rc.second, N, m);
        UDiffSeries prod{UElement(g)};
        prod.add(0, 0, UElement::constant(g, v));
        for (int k = 0; k < m; ++k)
            prod *= entry[static_cast<size_t>(beta[k] - 1) * N + (alpha[k] - 1)];
        total += prod;
    }
    return total;
}

inline MuDiffSeries mu_current_atom(int i, int sign, long d) {
    MuDiffSeries x{MuPoly()};
    x.add(0, 1, MuPoly(1));
    for (long r = 0; r < d; ++r) x.add(r + 1, 0, mu(i, r) * Rational(sign));
    return x;
}

} // namespace detail

// Projection of gamma_m(omega) tr S^(m)(del + F(u))_1 ... (del + F(u))_m onto
// the cartan part, with loop depths truncated below d, against the h_m / e_m
// prediction in the atoms del +- mu_i(u).  The symplectic trace carries
// (del - F(u)) factors.  Truncating F(u) at u^(-d) only corrupts u-powers
// p > d, but the comparison window is kept at p < d - m.
inline VerifyReport current_algebra_verify(const AlgebraSpec& g, long m, long d) {
    if (g.is_gl()) throw FamilyError("current_algebra_verify: classical types only");
    if (m < 1) throw RangeError("current_algebra_verify: m must be positive");
    if (d < m) throw RangeError("current_algebra_verify: depth below factor count");
    if (g.symplectic() && m > g.rank())
        throw RangeError("current_algebra_verify: symplectic m exceeds n");
    const int n = g.rank();

    TensorOperator S = brauer_symmetrizer(g, static_cast<int>(m));
    Rational s = g.symplectic() ? Rational(-1) : Rational(1);
    UDiffSeries raw = detail::current_trace(g, S, s, d);
    MuDiffSeries lhs{MuPoly()};
    for (const auto& [pk, c] : raw.terms())
        lhs.add(pk.first, pk.second, hc_top(c).apply_to_one() * gamma_factor(g.omega(), m));

    std::vector<MuDiffSeries> atoms;
    std::vector<MuDiffSeries> alt;
    switch (g.family()) {
        case Family::B:
            for (int i = 1; i <= n; ++i) atoms.push_back(detail::mu_current_atom(i, 1, d));
            for (int i = n; i >= 1; --i) atoms.push_back(detail::mu_current_atom(i, -1, d));
            break;
        case Family::D:
            for (int i = 1; i <= n - 1; ++i) atoms.push_back(detail::mu_current_atom(i, 1, d));
            for (int i = n; i >= 1; --i) atoms.push_back(detail::mu_current_atom(i, -1, d));
            for (int i = 1; i <= n; ++i) alt.push_back(detail::mu_current_atom(i, 1, d));
            for (int i = n - 1; i >= 1; --i) alt.push_back(detail::mu_current_atom(i, -1, d));
            break;
        case Family::C:
            for (int i = 1; i <= n; ++i) atoms.push_back(detail::mu_current_atom(i, 1, d));
            atoms.push_back(MuDiffSeries::del(MuPoly(1)));
            for (int i = n; i >= 1; --i) atoms.push_back(detail::mu_current_atom(i, -1, d));
            break;
        default:
            throw FamilyError("current_algebra_verify: classical types only");
    }
    MuDiffSeries unit{MuPoly()};
    unit.add(0, 0, MuPoly(1));
    MuDiffSeries rhs = g.symplectic()
                           ? nc_sym_generic(SymKind::Elementary, atoms, m, unit)
                           : nc_sym_generic(SymKind::Complete, atoms, m, unit);
    if (g.family() == Family::D)
        rhs = (rhs + nc_sym_generic(SymKind::Complete, alt, m, unit)) * Rational(1, 2);

    // restrict all three reported series to the sound window
    auto window = [&](const MuDiffSeries& x) {
        MuDiffSeries w{MuPoly()};
        for (const auto& [pk, c] : x.terms())
            if (pk.first < d - m) w.add(pk.first, pk.second, c);
        return w;
    };
    MuDiffSeries wl = window(lhs), wr = window(rhs), diff = window(lhs - rhs);
    auto printer = [](const MuPoly& p) { return mu_str(p); };
    return {diff.is_zero(), wl.str(printer), wr.str(printer), diff.str(printer)};
}

// Pairwise commutators of the trace coefficients for two degrees; all must
// vanish in U.
inline bool phi_coefficients_commute(const AlgebraSpec& g, long m1, long m2) {
    TauPolynomial a = phi_coefficients(g, m1);
    TauPolynomial b = phi_coefficients(g, m2);
    for (const UElement& x : a.coeffs)
        for (const UElement& y : b.coeffs)
            if (!(x * y - y * x).is_zero()) return false;
    return true;
}

} // namespace ssv

#endif
