#ifndef SSV_BINOMIAL_HPP
#define SSV_BINOMIAL_HPP

#include <string>

#include "ssv/family.hpp"
#include "ssv/rational.hpp"

namespace ssv {

inline Rational factorial(long k) {
    if (k < 0) throw RangeError("factorial: negative argument");
    Rational acc = 1;
    for (long j = 2; j <= k; ++j) acc *= Rational(j);
    return acc;
}

// a (a-1) ... (a-k+1); empty product for k == 0.
inline Rational falling_factorial(const Rational& a, long k) {
    if (k < 0) throw RangeError("falling_factorial: negative length");
    Rational acc = 1, x = a;
    for (long j = 0; j < k; ++j) {
        acc *= x;
        x -= 1;
    }
    return acc;
}

// Binomial coefficient with arbitrary rational top argument; zero for k < 0.
inline Rational gen_binomial(const Rational& a, long k) {
    if (k < 0) return Rational(0);
    return falling_factorial(a, k) / factorial(k);
}

inline Rational gen_binomial(long a, long k) { return gen_binomial(Rational(a), k); }

inline long sign_pow(long e) { return (e & 1L) ? -1 : 1; }

// gamma_m(omega) = (omega + m - 2) / (omega + 2m - 2).  The denominator
// vanishes exactly at the symplectic critical degree; callers that know the
// product they multiply by vanishes there must branch before calling.
inline Rational gamma_factor(const Rational& omega, long m) {
    Rational den = omega + Rational(2 * m - 2);
    if (den.is_zero())
        throw PoleError("gamma_factor: pole at omega=" + omega.str() + ", m=" + std::to_string(m));
    return (omega + Rational(m - 2)) / den;
}

inline Rational gamma_factor(long omega, long m) { return gamma_factor(Rational(omega), m); }

namespace detail {

// Orthogonal odd case.  The alternating partial sums of the symmetrizer
// expansion coefficients telescope into a single gamma-weighted binomial;
// both closed forms below must agree with the sum.
inline bool resummation_b(long N, long m, long k) {
    Rational a = Rational(N, 2) - 2;
    Rational s = 0;
    for (long r = k; r <= m; ++r)
        s += Rational(sign_pow(r - k)) * gen_binomial(a, N + r - 3) * gen_binomial(N + r - 3, r - k);
    Rational f1 = gen_binomial(a, N + k - 3) * gen_binomial(Rational(N, 2) + (m - 1), m - k);
    Rational f2 = Rational(-2 * sign_pow(m - k)) * gamma_factor(N, k) * gen_binomial(a, N + m - 2) *
                  gen_binomial(N + m - 2, m - k);
    return s == f1 && s == f2;
}

// Symplectic case.  The second closed form has a genuine pole at k = n+1
// and is only asserted away from it.
inline bool resummation_c(long N, long m, long k) {
    long n = N / 2;
    Rational s = 0;
    for (long r = k; r <= m; ++r)
        s += Rational(sign_pow(r - k)) * gen_binomial(2 * n - r + 2, n + 1) *
             gen_binomial(2 * n + 2 - k, r - k);
    Rational f1 =
        Rational(sign_pow(m - k)) * gen_binomial(n - k, m - k) * gen_binomial(2 * n - k + 2, n + 1);
    if (s != f1) return false;
    if (-2 * n + 2 * k - 2 == 0) return true;
    Rational f2 = Rational(2 * sign_pow(m - k)) * gamma_factor(-2 * n, k) *
                  gen_binomial(2 * n - m + 1, n + 1) * gen_binomial(2 * n - k + 1, m - k);
    return s == f2;
}

inline Rational d_word_norm(long n, long r) {
    // (-1)^(r-1) / binom(2n+r-2, n-1)
    return Rational(sign_pow(r - 1)) / gen_binomial(2 * n + r - 2, n - 1);
}

// Orthogonal even case, two identities: (a) for words avoiding both middle
// letters, (b) for words containing exactly one of them (k >= 1 there).
inline bool resummation_d(long N, long m, long k) {
    long n = N / 2;
    auto b3 = [&](long r) { return gen_binomial(2 * n + r - 3, r - k); };
    auto b2 = [&](long r) { return gen_binomial(2 * n + r - 2, r - k); };
    Rational cm = d_word_norm(n, m);
    Rational rhs = Rational(2 * sign_pow(m - k)) * cm * gamma_factor(2 * n, k) * b2(m);

    Rational lhs_a = Rational(2 * sign_pow(m - k)) * cm * b2(m);
    for (long r = std::max(k, 1L); r <= m; ++r) {
        Rational cr = d_word_norm(n, r);
        Rational sgn = Rational(sign_pow(r - k));
        lhs_a -= sgn * Rational(r) * cr / Rational(n + r - 1) * b3(r);
        lhs_a += sgn * Rational(2 * (n - 1)) * cr / Rational(n + r - 1) * (b2(r) - b3(r));
    }
    if (lhs_a != rhs) return false;

    if (k >= 1) {
        Rational lhs_b = Rational(sign_pow(m - k)) * cm * b2(m);
        for (long r = k; r <= m; ++r) {
            Rational cr = d_word_norm(n, r);
            lhs_b += Rational(sign_pow(r - k) * (n - 1)) * cr / Rational(n + r - 1) * b2(r);
        }
        if (lhs_b != rhs) return false;
    }
    return true;
}

} // namespace detail

// Checks the binomial resummation identities that collapse symmetrizer trace
// expansions into single gamma-weighted terms.  N is the matrix size of the
// family (odd for B, even for C and D).
inline bool verify_resummation_identity(Family f, long N, long m, long k) {
    if (m < 0 || k < 0 || k > m) throw RangeError("verify_resummation_identity: need 0 <= k <= m");
    switch (f) {
        case Family::B:
            if (N < 3 || N % 2 == 0) throw RangeError("family B needs odd N >= 3");
            return detail::resummation_b(N, m, k);
        case Family::C:
            if (N < 2 || N % 2 != 0) throw RangeError("family C needs even N >= 2");
            return detail::resummation_c(N, m, k);
        case Family::D:
            if (N < 4 || N % 2 != 0) throw RangeError("family D needs even N >= 4");
            return detail::resummation_d(N, m, k);
        case Family::A:
            throw FamilyError("no resummation identity for family A");
    }
    throw FamilyError("bad family");
}

} // namespace ssv

#endif
