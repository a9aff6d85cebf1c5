#ifndef SSV_ACCEPTANCE_HPP
#define SSV_ACCEPTANCE_HPP

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ssv/casimir.hpp"
#include "ssv/characters.hpp"
#include "ssv/harmonic.hpp"
#include "ssv/sugawara.hpp"
#include "ssv/walg.hpp"

// The acceptance matrix: every identity the artifact is pinned to, grouped
// into one named check per claim.  The CLI's `verify all` and the
// acceptance binary both run this list, so a change that breaks a pinned
// value fails in both places.

namespace ssv {

struct AcceptanceOutcome {
    std::string name;
    bool pass = false;
    std::string detail; // coverage summary, or the first failure
    long long millis = 0;
};

struct AcceptanceCheck {
    std::string name;
    std::function<std::pair<bool, std::string>()> run;
};

namespace detail {

using CheckResult = std::pair<bool, std::string>;

inline CheckResult check_fail(std::string what) { return {false, std::move(what)}; }
inline CheckResult check_pass(std::string what) { return {true, std::move(what)}; }

inline std::string place(const AlgebraSpec& g, long m) {
    return to_string(g.family()) + std::to_string(g.rank()) + " m=" + std::to_string(m);
}

inline CheckResult check_main_theorem_b() {
    int done = 0;
    for (auto [n, m_max] : {std::pair{1, 4}, {2, 3}}) {
        AlgebraSpec g(Family::B, n);
        for (long m = 1; m <= m_max; ++m) {
            VerifyReport r = verify_main_theorem(g, m);
            if (!r.match) return check_fail(place(g, m) + " diff=" + r.diff);
            ++done;
        }
    }
    return check_pass(std::to_string(done) + " trace images");
}

inline CheckResult check_main_theorem_d() {
    AlgebraSpec g(Family::D, 2);
    for (long m = 1; m <= 3; ++m) {
        VerifyReport r = verify_main_theorem(g, m);
        if (!r.match) return check_fail(place(g, m) + " diff=" + r.diff);
    }
    for (int n : {2, 3}) {
        VerifyReport r = verify_pfaffian_image(AlgebraSpec(Family::D, n));
        if (!r.match)
            return check_fail("pfaffian n=" + std::to_string(n) + " diff=" + r.diff);
    }
    return check_pass("3 trace images + pfaffian images n=2,3");
}

inline CheckResult check_main_theorem_c() {
    for (auto [n, m] : {std::pair{1, 1L}, {2, 1L}, {2, 2L}}) {
        AlgebraSpec g(Family::C, n);
        VerifyReport r = verify_main_theorem(g, m);
        if (!r.match) return check_fail(place(g, m) + " diff=" + r.diff);
    }
    if (!brauer_symmetrizer(AlgebraSpec(Family::C, 1), 2).is_zero())
        return check_fail("sp_2 S^(2) is nonzero");
    if (!brauer_symmetrizer(AlgebraSpec(Family::C, 2), 3).is_zero())
        return check_fail("sp_4 S^(3) is nonzero");
    return check_pass("3 trace images + critical-degree vanishing");
}

inline CheckResult check_gl_images() {
    int done = 0;
    for (int N : {2, 3})
        for (long m = 1; m <= 3; ++m)
            for (GlKind kind : {GlKind::A, GlKind::H}) {
                // the antisymmetrized family stops at m = N
                if (kind == GlKind::A && m > N) continue;
                VerifyReport r = verify_glN_images(N, m, kind);
                if (!r.match)
                    return check_fail("gl_" + std::to_string(N) + " m=" + std::to_string(m) +
                                      (kind == GlKind::A ? " kind=A" : " kind=H") +
                                      " diff=" + r.diff);
                ++done;
            }
    return check_pass(std::to_string(done) + " images, both kinds");
}

inline CheckResult check_current_algebra() {
    int done = 0;
    for (auto [f, n] : {std::pair{Family::B, 1}, {Family::C, 1}, {Family::D, 2}}) {
        AlgebraSpec g(f, n);
        // the symplectic comparison exists only for m <= n
        long m_max = g.symplectic() ? std::min(2L, static_cast<long>(n)) : 2;
        for (long m = 1; m <= m_max; ++m) {
            VerifyReport r = current_algebra_verify(g, m, 4);
            if (!r.match) return check_fail(place(g, m) + " diff=" + r.diff);
            ++done;
        }
    }
    return check_pass(std::to_string(done) + " series identities at depth 4");
}

inline CheckResult check_symmetrizer() {
    // dimension anchors
    for (auto [f, n, m, want] :
         {std::tuple{Family::B, 1, 2, 5L}, {Family::B, 2, 2, 14L}, {Family::C, 2, 2, 5L}}) {
        AlgebraSpec g(f, n);
        if (brauer_symmetrizer(g, m).trace() != Rational(want))
            return check_fail(place(g, m) + " trace != " + std::to_string(want));
    }
    int done = 0;
    for (auto [f, n] : {std::pair{Family::B, 1}, {Family::B, 2}, {Family::C, 1},
                        {Family::C, 2}, {Family::D, 2}}) {
        AlgebraSpec g(f, n);
        int m_max = g.symplectic() ? std::min(4, n + 1) : 4;
        for (int m = 1; m <= m_max; ++m) {
            TensorOperator s = brauer_symmetrizer(g, m);
            if (!(s == brauer_symmetrizer_expanded(g, m)))
                return check_fail(place(g, m) + " product != expansion");
            if (!(s * s == s)) return check_fail(place(g, m) + " not idempotent");
            if (s.trace() != brauer_symmetrizer_rank(g, m))
                return check_fail(place(g, m) + " trace != rank formula");
            for (int b = 2; b <= m; ++b) {
                TensorOperator q = TensorOperator::q_form(g, m, 1, b);
                if (!(s * q).is_zero() || !(q * s).is_zero())
                    return check_fail(place(g, m) + " q_1" + std::to_string(b) + " survives");
                TensorOperator p = TensorOperator::perm(g.matrix_size(), m, 1, b);
                TensorOperator sp = g.orthogonal() ? s : s * Rational(-1);
                if (!(s * p == sp) || !(p * s == sp))
                    return check_fail(place(g, m) + " wrong permutation symmetry");
            }
            if (!g.symplectic() || m <= n) {
                // below the symplectic pole of the gamma ratio
                for (int k = 1; k < m; ++k) {
                    Rational top = g.orthogonal() ? Rational(g.matrix_size() + m - 2)
                                                  : Rational(2 * n - k + 1);
                    Rational c = gamma_factor(g.omega(), k) / gamma_factor(g.omega(), m) *
                                 gen_binomial(top, m - k) / gen_binomial(m, k);
                    if (!(s.partial_trace_to(k) == brauer_symmetrizer(g, k) * c))
                        return check_fail(place(g, m) + " partial trace k=" + std::to_string(k));
                }
            }
            ++done;
        }
    }
    return check_pass(std::to_string(done) + " symmetrizers, all relations");
}

inline CheckResult check_w_algebra() {
    for (int N = 2; N <= 3; ++N) {
        auto e = miura_generators(Family::A, N, N);
        std::vector<MuPoly> elems(e.begin() + 1, e.end());
        for (long m = 1; m <= 6; ++m) elems.push_back(w_generators_hfamily(Family::A, N, m));
        AnnihilationReport rep = verify_annihilation(Family::A, N, elems);
        if (!rep.match) return check_fail("gl_" + std::to_string(N) + ": " + rep.str());
    }
    for (Family f : {Family::B, Family::C})
        for (int n = 1; n <= 2; ++n) {
            auto e = miura_generators(f, n, f == Family::B ? 2 * n + 1 : 2 * n);
            std::vector<MuPoly> elems(e.begin() + 2, e.end());
            for (long m = 1; m <= 6; ++m) elems.push_back(w_generators_hfamily(f, n, m));
            AnnihilationReport rep = verify_annihilation(f, n, elems);
            if (!rep.match)
                return check_fail(to_string(f) + std::to_string(n) + ": " + rep.str());
        }
    {
        auto e = pseudo_diff_miura_D(2, 4);
        std::vector<MuPoly> elems(e.begin() + 2, e.end());
        elems.push_back(pfaffian_generator(2));
        for (long m = 1; m <= 6; ++m) elems.push_back(w_generators_hfamily(Family::D, 2, m));
        AnnihilationReport rep = verify_annihilation(Family::D, 2, elems);
        if (!rep.match) return check_fail("D2: " + rep.str());
    }
    // derivatives of generators stay invariant
    {
        auto b = miura_generators(Family::B, 2, 5);
        if (!verify_annihilation(Family::B, 2, {translate(b[2]), translate(b[5])}).match)
            return check_fail("B2 derivative elements");
        auto a = miura_generators(Family::A, 3, 3);
        if (!verify_annihilation(Family::A, 3, {translate(a[2]), translate(a[3])}).match)
            return check_fail("gl_3 derivative elements");
        auto d = pseudo_diff_miura_D(2, 3);
        if (!verify_annihilation(Family::D, 2, {translate(d[2]), translate(d[3])}).match)
            return check_fail("D2 derivative elements");
    }
    // Newton relation between the two gl families
    for (int N = 1; N <= 3; ++N) {
        std::vector<Pi0Tau> at;
        for (int i = 1; i <= N; ++i) at.push_back(Pi0Tau::tau() + Pi0Tau(mu(i, -1)));
        for (long m = 1; m <= 6; ++m) {
            Pi0Tau acc;
            for (long k = 0; k <= m; ++k) {
                Pi0Tau t =
                    nc_sym(SymKind::Elementary, at, k) * nc_sym(SymKind::Complete, at, m - k);
                if (k % 2)
                    acc -= t;
                else
                    acc += t;
            }
            if (!acc.is_zero())
                return check_fail("newton gl_" + std::to_string(N) + " m=" + std::to_string(m));
        }
    }
    return check_pass("all screening grids + derivative elements + newton m<=6");
}

inline CheckResult check_characters() {
    int done = 0;
    for (auto [f, n] : {std::pair{Family::B, 1}, {Family::B, 2}, {Family::C, 1},
                        {Family::C, 2}, {Family::D, 2}}) {
        AlgebraSpec g(f, n);
        long m_max = g.symplectic() ? n : 4;
        for (long m = 1; m <= m_max; ++m) {
            if (char_sum(g, m).count != brauer_symmetrizer_rank(g, m).to_long())
                return check_fail(place(g, m) + " count != rank");
            ++done;
        }
    }
    for (int n = 1; n <= 4; ++n)
        for (long m = 0; m <= n; ++m) {
            long want = (gen_binomial(2 * n, m) - gen_binomial(2 * n, m - 2)).to_long();
            if (static_cast<long>(admissible_subsets(n, m).size()) != want)
                return check_fail("admissible n=" + std::to_string(n) + " m=" +
                                  std::to_string(m));
            ++done;
        }
    for (int n = 1; n <= 3; ++n)
        if (!kappa_vanishing_check(n, 20))
            return check_fail("kappa vanishing n=" + std::to_string(n));
    for (auto [f, n] : {std::pair{Family::B, 1}, {Family::B, 2}, {Family::D, 2}})
        if (!vanishing_series_check(f, n, 4))
            return check_fail("series vanishing " + to_string(f) + std::to_string(n));
    return check_pass(std::to_string(done) + " counts + kappa n<=3 + series degree 4");
}

inline CheckResult check_harmonic() {
    int done = 0;
    auto run = [&](Family f, int n, long m_max) -> CheckResult {
        AlgebraSpec g(f, n);
        for (long m = 1; m <= m_max; ++m) {
            BasisReport r = verify_basis(g, m);
            if (!r.pass()) return check_fail(place(g, m) + " " + r.str());
            ++done;
        }
        return check_pass("");
    };
    for (int n = 1; n <= 2; ++n)
        if (auto r = run(Family::B, n, 3); !r.first) return r;
    if (auto r = run(Family::D, 2, 3); !r.first) return r;
    for (int n = 1; n <= 3; ++n)
        if (auto r = run(Family::C, n, std::min(3, n)); !r.first) return r;
    return check_pass(std::to_string(done) + " bases, all four properties");
}

inline CheckResult check_casimir() {
    for (auto [f, n, k] : {std::tuple{Family::B, 1, 1L}, {Family::B, 1, 2L}, {Family::D, 2, 1L},
                           {Family::B, 2, 1L}, {Family::C, 2, 1L}}) {
        AlgebraSpec g(f, n);
        CasimirReport r = verify_casimir(g, k);
        if (!r.pass())
            return check_fail(to_string(f) + std::to_string(n) + " k=" + std::to_string(k) +
                              " " + r.str());
    }
    if (multiset_image(AlgebraSpec(Family::B, 1), 1) != mu(1) * mu(1) + mu(1))
        return check_fail("o_3 k=1 anchor value");
    if (multiset_image(AlgebraSpec(Family::C, 2), 1) != factorial_sym(AlgebraSpec(Family::C, 2), 1))
        return check_fail("sp_4 k=1 factorial form");
    return check_pass("5 full reports + anchors");
}

inline CheckResult check_commutativity() {
    auto commute = [](const TauPolynomial& x, const TauPolynomial& y) {
        for (const UElement& a : x.coeffs)
            for (const UElement& b : y.coeffs)
                if (!(a * b - b * a).is_zero()) return false;
        return true;
    };
    AlgebraSpec b1(Family::B, 1);
    std::vector<TauPolynomial> phi;
    for (long m = 1; m <= 3; ++m) phi.push_back(phi_coefficients(b1, m));
    for (size_t i = 0; i < phi.size(); ++i)
        for (size_t j = i; j < phi.size(); ++j) {
            if (i + j + 2 > 4) continue;
            if (!commute(phi[i], phi[j]))
                return check_fail("B1 m=" + std::to_string(i + 1) + " m'=" +
                                  std::to_string(j + 1));
        }
    AlgebraSpec c2(Family::C, 2);
    for (long m = 1; m <= 2; ++m) {
        TauPolynomial p = phi_coefficients(c2, m);
        if (!commute(p, p)) return check_fail("C2 m=m'=" + std::to_string(m));
    }
    return check_pass("B1 m+m'<=4 and C2 m=m'<=2");
}

} // namespace detail

inline std::vector<AcceptanceCheck> acceptance_checks() {
    return {
        {"main-theorem-b", detail::check_main_theorem_b},
        {"main-theorem-d", detail::check_main_theorem_d},
        {"main-theorem-c", detail::check_main_theorem_c},
        {"gl-images", detail::check_gl_images},
        {"current-algebra", detail::check_current_algebra},
        {"symmetrizer", detail::check_symmetrizer},
        {"w-algebra", detail::check_w_algebra},
        {"characters", detail::check_characters},
        {"harmonic", detail::check_harmonic},
        {"casimir", detail::check_casimir},
        {"commutativity", detail::check_commutativity},
    };
}

inline AcceptanceOutcome run_check(const AcceptanceCheck& c) {
    auto t0 = std::chrono::steady_clock::now();
    auto [ok, detail] = c.run();
    auto t1 = std::chrono::steady_clock::now();
    return {c.name, ok, detail,
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()};
}

inline std::vector<AcceptanceOutcome> run_acceptance() {
    std::vector<AcceptanceOutcome> out;
    for (const AcceptanceCheck& c : acceptance_checks()) out.push_back(run_check(c));
    return out;
}

} // namespace ssv

#endif
