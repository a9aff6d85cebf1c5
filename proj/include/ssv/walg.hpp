#ifndef SSV_WALG_HPP
#define SSV_WALG_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ssv/sugawara.hpp"

namespace ssv {

// Screening operators act on polynomials in mu_i[r], r < 0.  Nodes
// 1..count-1 are the standard two-variable ones; the last node depends on
// the family (single variable for B and C, doubled coefficient series for C,
// paired variables for D).  For gl the rank parameter is N and there are
// N-1 nodes.
inline int screening_count(Family f, int n) {
    if (n < 1) throw RangeError("screening_count: bad rank");
    return f == Family::A ? n - 1 : n;
}

namespace detail {

// Logarithmic derivative data of the screening series: the polynomial c_k
// with sum V_[r] z^r = exp sum_k c_k z^k / k.
inline MuPoly screening_source(Family f, int n, int i, long k) {
    if (i < 1 || i > screening_count(f, n))
        throw IndexError("screening node out of range");
    if (f == Family::D && n < 2)
        throw IndexError("type D screenings need n >= 2");
    if (f == Family::A || i < n) return mu(i, -k) - mu(i + 1, -k);
    switch (f) {
        case Family::B: return mu(n, -k);
        case Family::C: return mu(n, -k) * Rational(2);
        default: return mu(n - 1, -k) + mu(n, -k);
    }
}

// V_[0..rmax] by the exponential recurrence r V_[r] = sum_k c_k V_[r-k].
inline std::vector<MuPoly> screening_series(Family f, int n, int i, long rmax) {
    std::vector<MuPoly> v{MuPoly(1)};
    for (long r = 1; r <= rmax; ++r) {
        MuPoly acc;
        for (long k = 1; k <= r; ++k)
            acc += screening_source(f, n, i, k) * v[static_cast<size_t>(r - k)];
        v.push_back(acc * Rational(1, r));
    }
    return v;
}

// Differentiation targets of node i with signs.
inline std::vector<std::pair<int, int>> screening_targets(Family f, int n, int i) {
    if (i < 1 || i > screening_count(f, n))
        throw IndexError("screening node out of range");
    if (f == Family::D && n < 2)
        throw IndexError("type D screenings need n >= 2");
    if (f == Family::A || i < n) return {{i, 1}, {i + 1, -1}};
    switch (f) {
        case Family::B:
        case Family::C: return {{n, 1}};
        default: return {{n - 1, 1}, {n, 1}};
    }
}

} // namespace detail

inline MuPoly screening_coefficient(Family f, int n, int i, long r) {
    if (r < 0) throw IndexError("screening_coefficient: negative order");
    return detail::screening_series(f, n, i, r).back();
}

// First-order coefficient; also the shift entering V_i tau = (tau + shift) V_i.
inline MuPoly screening_shift(Family f, int n, int i) {
    return detail::screening_source(f, n, i, 1);
}

// V_i P = sum_r V_[r] (d/dmu_a[-r-1] - d/dmu_b[-r-1]) P with the node's
// targets; the r-sum stops at the deepest variable present in P.
inline MuPoly screening_apply(Family f, int n, int i, const MuPoly& P) {
    long rmax = -1;
    for (const auto& [m, c] : P.terms())
        for (const auto& [v, e] : m) rmax = std::max(rmax, -v.r - 1);
    if (rmax < 0) return MuPoly();
    std::vector<MuPoly> series = detail::screening_series(f, n, i, rmax);
    MuPoly out;
    for (const auto& [idx, sign] : detail::screening_targets(f, n, i))
        for (long r = 0; r <= rmax; ++r) {
            MuPoly d = P.derivative(MuVar{idx, -r - 1});
            if (!d.is_zero()) out += series[static_cast<size_t>(r)] * d * Rational(sign);
        }
    return out;
}

// Coefficient-wise action on pi_0[tau]; tau is transparent to the screenings.
inline Pi0Tau screening_apply(Family f, int n, int i, const Pi0Tau& x) {
    Pi0Tau out;
    for (const auto& [a, p] : x.parts())
        out += Pi0Tau(screening_apply(f, n, i, p)) * Pi0Tau::tau(a);
    return out;
}

struct AnnihilationReport {
    bool match = true;
    // (element position, node) pairs with a nonzero screening image
    std::vector<std::pair<size_t, int>> nonzero;

    std::string str() const {
        if (match) return "all screenings annihilate";
        std::string out = "nonzero screening images:";
        for (const auto& [e, i] : nonzero)
            out += " (element " + std::to_string(e) + ", node " + std::to_string(i) + ")";
        return out;
    }
};

inline AnnihilationReport verify_annihilation(Family f, int n,
                                              const std::vector<MuPoly>& elements) {
    AnnihilationReport rep;
    for (size_t e = 0; e < elements.size(); ++e)
        for (int i = 1; i <= screening_count(f, n); ++i)
            if (!screening_apply(f, n, i, elements[e]).is_zero()) {
                rep.match = false;
                rep.nonzero.push_back({e, i});
            }
    return rep;
}

// Coefficients of the Miura factorization, indexed by subscript: out[m] is
// the coefficient of tau^(len - m) in the ordered product, out[0] = 1.  The
// tau^(len-1) coefficient vanishes for B and C, so out[1] is zero there.
inline std::vector<MuPoly> miura_generators(Family f, int n, long m_max) {
    if (m_max < 0) throw RangeError("miura_generators: negative bound");
    long len;
    Pi0Tau prod{Rational(1)};
    switch (f) {
        case Family::A:
            len = n;
            for (int i = n; i >= 1; --i) prod *= Pi0Tau::tau() + Pi0Tau(mu(i, -1));
            break;
        case Family::B:
        case Family::C: {
            len = f == Family::B ? 2 * n + 1 : 2 * n;
            for (int i = 1; i <= n; ++i) prod *= Pi0Tau::tau() - Pi0Tau(mu(i, -1));
            if (f == Family::B) prod *= Pi0Tau::tau();
            for (int i = n; i >= 1; --i) prod *= Pi0Tau::tau() + Pi0Tau(mu(i, -1));
            break;
        }
        default:
            throw FamilyError("miura_generators: type D expands through pseudo_diff_miura_D");
    }
    if (m_max > len) throw RangeError("miura_generators: bound exceeds expansion length");
    std::vector<MuPoly> out;
    for (long m = 0; m <= m_max; ++m) out.push_back(prod.coeff(len - m));
    return out;
}

// Laurent expansion sum_{a <= top} P_a tau^a truncated below a fixed floor.
// Right multiplication moves tau powers past polynomials with the usual
// Leibniz corrections tau^a Q = sum_j binom(a,j) T^j(Q) tau^(a-j); for a < 0
// the series is infinite and stops at the floor, which is what makes the
// truncation necessary in the first place.
class PseudoDiff {
public:
    explicit PseudoDiff(long floor) : floor_(floor) {}

    static PseudoDiff from(const Pi0Tau& x, long floor) {
        PseudoDiff p(floor);
        for (const auto& [a, q] : x.parts()) p.add(a, q);
        return p;
    }

    long floor() const { return floor_; }
    const std::map<long, MuPoly>& parts() const { return c_; }

    MuPoly coeff(long a) const {
        auto it = c_.find(a);
        return it == c_.end() ? MuPoly() : it->second;
    }

    void add(long a, const MuPoly& p) {
        if (a < floor_ || p.is_zero()) return;
        auto [it, fresh] = c_.emplace(a, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    // multiply by tau^d on the right; a pure shift of exponents
    PseudoDiff shifted(long d) const {
        PseudoDiff r(floor_);
        for (const auto& [a, p] : c_) r.add(a + d, p);
        return r;
    }

    friend PseudoDiff operator*(const PseudoDiff& x, const PseudoDiff& y) {
        if (x.floor_ != y.floor_) throw RangeError("PseudoDiff: mixed truncation floors");
        PseudoDiff r(x.floor_);
        for (const auto& [a, p] : x.c_)
            for (const auto& [b, q] : y.c_) {
                MuPoly shift = q;
                for (long j = 0;; ++j) {
                    if (a - j + b >= r.floor_) {
                        Rational bin = gen_binomial(a, j);
                        if (!bin.is_zero()) r.add(a - j + b, p * shift * bin);
                    }
                    // for a >= 0 the binomial dies at j = a; otherwise stop
                    // once every exponent this j can reach is below the floor
                    if (a >= 0 && j >= a) break;
                    if (a < 0 && a - j - 1 + b < r.floor_) break;
                    shift = translate(shift);
                    if (shift.is_zero()) break;
                }
            }
        return r;
    }

    friend PseudoDiff operator*(const PseudoDiff& x, const Pi0Tau& y) {
        return x * from(y, x.floor_);
    }

    friend bool operator==(const PseudoDiff& a, const PseudoDiff& b) {
        return a.floor_ == b.floor_ && a.c_ == b.c_;
    }

private:
    long floor_;
    std::map<long, MuPoly> c_;
};

// Coefficients of (tau - mu_1[-1])..(tau - mu_n[-1]) tau^-1 (tau + mu_n[-1])
// ..(tau + mu_1[-1]) = tau^(2n-1) + sum_{k>=2} E_k tau^(2n-k-1), exact for
// k <= k_max with the floor at -(k_max+1): the kept coefficient of tau^a
// only ever depends on exponents >= a - n during the n remaining raises.
inline std::vector<MuPoly> pseudo_diff_miura_D(int n, long k_max) {
    if (n < 1) throw RangeError("pseudo_diff_miura_D: bad rank");
    if (k_max < 0) throw RangeError("pseudo_diff_miura_D: negative bound");
    const long floor = -(k_max + 1);
    Pi0Tau left{Rational(1)};
    for (int i = 1; i <= n; ++i) left *= Pi0Tau::tau() - Pi0Tau(mu(i, -1));
    PseudoDiff prod = PseudoDiff::from(left, floor).shifted(-1);
    for (int i = n; i >= 1; --i)
        prod = prod * (Pi0Tau::tau() + Pi0Tau(mu(i, -1)));
    std::vector<MuPoly> out;
    for (long k = 0; k <= k_max; ++k) out.push_back(prod.coeff(2 * n - k - 1));
    return out;
}

// (mu_1[-1] - T) ... (mu_n[-1] - T) applied to 1; the image of the pfaffian
// generator.
inline MuPoly pfaffian_generator(int n) { return pfaffian_rhs(n); }

// Complete symmetric functions of the Miura atoms, applied to 1.  For D this
// is the half sum of the two lists with the n-th atom sign toggled.
inline MuPoly w_generators_hfamily(Family f, int n, long m) {
    if (m < 0) throw RangeError("w_generators_hfamily: negative degree");
    std::vector<Pi0Tau> atoms;
    auto tpm = [](int i, int sign) {
        return Pi0Tau::tau() + Pi0Tau(mu(i, -1) * Rational(sign));
    };
    switch (f) {
        case Family::A:
            for (int i = 1; i <= n; ++i) atoms.push_back(tpm(i, 1));
            return nc_sym(SymKind::Complete, atoms, m).apply_to_one();
        case Family::B:
            for (int i = 1; i <= n; ++i) atoms.push_back(tpm(i, 1));
            atoms.push_back(Pi0Tau::tau());
            for (int i = n; i >= 1; --i) atoms.push_back(tpm(i, -1));
            return nc_sym(SymKind::Complete, atoms, m).apply_to_one();
        case Family::C:
            for (int i = 1; i <= n; ++i) atoms.push_back(tpm(i, 1));
            for (int i = n; i >= 1; --i) atoms.push_back(tpm(i, -1));
            return nc_sym(SymKind::Complete, atoms, m).apply_to_one();
        default: {
            std::vector<Pi0Tau> alt;
            for (int i = 1; i <= n - 1; ++i) atoms.push_back(tpm(i, 1));
            for (int i = n; i >= 1; --i) atoms.push_back(tpm(i, -1));
            for (int i = 1; i <= n; ++i) alt.push_back(tpm(i, 1));
            for (int i = n - 1; i >= 1; --i) alt.push_back(tpm(i, -1));
            Pi0Tau sum = (nc_sym(SymKind::Complete, atoms, m) +
                          nc_sym(SymKind::Complete, alt, m)) *
                         Rational(1, 2);
            return sum.apply_to_one();
        }
    }
}

} // namespace ssv

#endif
