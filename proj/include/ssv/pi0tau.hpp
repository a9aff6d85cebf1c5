#ifndef SSV_PI0TAU_HPP
#define SSV_PI0TAU_HPP

#include <map>
#include <string>

#include "ssv/binomial.hpp"
#include "ssv/poly.hpp"

namespace ssv {

// The algebra pi_0[tau]: polynomials in mu_i[r] with an adjoined symbol tau
// obeying [tau, P] = T(P).  Elements are stored as sum_a P_a tau^a with the
// polynomial part on the left.
class Pi0Tau {
public:
    Pi0Tau() = default;
    Pi0Tau(const MuPoly& p) {
        if (!p.is_zero()) c_[0] = p;
    }
    Pi0Tau(const Rational& r) : Pi0Tau(MuPoly(r)) {}
    Pi0Tau(long r) : Pi0Tau(MuPoly(r)) {}

    static Pi0Tau tau(long a = 1) {
        if (a < 0) throw RangeError("Pi0Tau: negative tau power");
        Pi0Tau t;
        t.c_[a] = MuPoly(1);
        return t;
    }

    const std::map<long, MuPoly>& parts() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long tau_degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

    MuPoly coeff(long a) const {
        auto it = c_.find(a);
        return it == c_.end() ? MuPoly() : it->second;
    }

    // Value as a differential operator acting on the constant 1.
    MuPoly apply_to_one() const { return coeff(0); }

    Pi0Tau& operator+=(const Pi0Tau& o) {
        for (const auto& [a, p] : o.c_) add_part(a, p);
        return *this;
    }
    Pi0Tau& operator-=(const Pi0Tau& o) {
        for (const auto& [a, p] : o.c_) add_part(a, -p);
        return *this;
    }
    friend Pi0Tau operator+(Pi0Tau a, const Pi0Tau& b) { a += b; return a; }
    friend Pi0Tau operator-(Pi0Tau a, const Pi0Tau& b) { a -= b; return a; }
    friend Pi0Tau operator-(const Pi0Tau& a) { Pi0Tau r; r -= a; return r; }

    friend Pi0Tau operator*(const Pi0Tau& x, const Pi0Tau& y) {
        // (P tau^a)(Q tau^b) = sum_k binom(a,k) P T^k(Q) tau^(a+b-k)
        Pi0Tau r;
        for (const auto& [a, p] : x.c_)
            for (const auto& [b, q] : y.c_) {
                MuPoly shifted = q;
                for (long k = 0; k <= a; ++k) {
                    Rational bin = gen_binomial(a, k);
                    if (!bin.is_zero()) r.add_part(a + b - k, (p * shifted) * bin);
                    if (k < a) shifted = translate(shifted);
                }
            }
        return r;
    }
    Pi0Tau& operator*=(const Pi0Tau& o) { return *this = *this * o; }
    friend Pi0Tau operator*(Pi0Tau a, const Rational& s) {
        for (auto& [p, q] : a.c_) q *= s;
        if (s.is_zero()) a.c_.clear();
        return a;
    }
    friend Pi0Tau operator*(const Rational& s, Pi0Tau a) { return std::move(a) * s; }

    friend bool operator==(const Pi0Tau& a, const Pi0Tau& b) { return a.c_ == b.c_; }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            std::string p = mu_str(it->second);
            if (it->first == 0) {
                out += p;
            } else {
                std::string t = it->first == 1 ? "tau" : "tau^" + std::to_string(it->first);
                if (p == "1")
                    out += t;
                else
                    out += "(" + p + ")*" + t;
            }
        }
        return out;
    }

private:
    void add_part(long a, const MuPoly& p) {
        if (p.is_zero()) return;
        auto [it, fresh] = c_.emplace(a, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    std::map<long, MuPoly> c_;
};

} // namespace ssv

#endif
