#ifndef SSV_TENSOR_HPP
#define SSV_TENSOR_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "ssv/binomial.hpp"
#include "ssv/liealg.hpp"

namespace ssv {

// Multi-index (i_1,...,i_m), entries 1..N, packed little-endian base N.
inline uint32_t encode_multi_index(const std::vector<int>& idx, int N) {
    uint32_t code = 0;
    for (size_t k = idx.size(); k-- > 0;) {
        if (idx[k] < 1 || idx[k] > N) throw IndexError("multi-index entry out of range");
        code = code * static_cast<uint32_t>(N) + static_cast<uint32_t>(idx[k] - 1);
    }
    return code;
}

inline std::vector<int> decode_multi_index(uint32_t code, int N, int m) {
    std::vector<int> idx(m);
    for (int k = 0; k < m; ++k) {
        idx[k] = static_cast<int>(code % static_cast<uint32_t>(N)) + 1;
        code /= static_cast<uint32_t>(N);
    }
    return idx;
}

// Sparse rational operator on (C^N)^{tensor m}.
class TensorOperator {
public:
    using Entries = std::map<std::pair<uint32_t, uint32_t>, Rational>;

    TensorOperator(int N, int m) : N_(N), m_(m) {
        if (N < 1 || m < 0) throw RangeError("TensorOperator: bad shape");
        double size = 1;
        for (int k = 0; k < m; ++k) size *= N;
        if (size > (1u << 30)) throw RangeError("TensorOperator: space too large");
    }

    static TensorOperator identity(int N, int m) {
        TensorOperator t(N, m);
        uint32_t total = t.space_dim();
        for (uint32_t a = 0; a < total; ++a) t.e_[{a, a}] = 1;
        return t;
    }

    // Transposition P_{ab} of tensor factors a < b (1-based).
    static TensorOperator perm(int N, int m, int a, int b) {
        TensorOperator t(N, m);
        t.check_positions(a, b);
        uint32_t total = t.space_dim();
        for (uint32_t col = 0; col < total; ++col) {
            std::vector<int> idx = decode_multi_index(col, N, m);
            std::swap(idx[a - 1], idx[b - 1]);
            t.e_[{encode_multi_index(idx, N), col}] = 1;
        }
        return t;
    }

    // Q_{ab} = sum eps_i eps_j E_ij^(a) E_i'j'^(b) for the bilinear form of
    // the algebra; rank one on each pair of slots.
    static TensorOperator q_form(const AlgebraSpec& g, int m, int a, int b) {
        if (g.is_gl()) throw FamilyError("Q is undefined for gl");
        int N = g.matrix_size();
        TensorOperator t(N, m);
        t.check_positions(a, b);
        uint32_t rest = 1;
        for (int k = 0; k < m - 2; ++k) rest *= static_cast<uint32_t>(N);
        // enumerate the spectator positions via an index over N^(m-2)
        for (uint32_t spec_code = 0; spec_code < rest; ++spec_code) {
            std::vector<int> spect = decode_multi_index(spec_code, N, m - 2);
            std::vector<int> row(m), col(m);
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j) {
                    int pos = 0;
                    for (int k = 0; k < m; ++k) {
                        if (k == a - 1 || k == b - 1) continue;
                        row[k] = col[k] = spect[pos++];
                    }
                    row[a - 1] = i;
                    row[b - 1] = g.prime(i);
                    col[a - 1] = j;
                    col[b - 1] = g.prime(j);
                    t.e_[{encode_multi_index(row, N), encode_multi_index(col, N)}] =
                        Rational(g.eps(i) * g.eps(j));
                }
        }
        return t;
    }

    int matrix_size() const { return N_; }
    int factors() const { return m_; }
    uint32_t space_dim() const {
        uint32_t d = 1;
        for (int k = 0; k < m_; ++k) d *= static_cast<uint32_t>(N_);
        return d;
    }
    const Entries& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }

    Rational entry(uint32_t r, uint32_t c) const {
        auto it = e_.find({r, c});
        return it == e_.end() ? Rational(0) : it->second;
    }

    void add_entry(uint32_t r, uint32_t c, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = e_.emplace(std::pair{r, c}, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) e_.erase(it);
        }
    }

    TensorOperator& operator+=(const TensorOperator& o) {
        check_shape(o);
        for (const auto& [rc, v] : o.e_) add_entry(rc.first, rc.second, v);
        return *this;
    }
    TensorOperator& operator-=(const TensorOperator& o) {
        check_shape(o);
        for (const auto& [rc, v] : o.e_) add_entry(rc.first, rc.second, -v);
        return *this;
    }
    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { a += b; return a; }
    friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { a -= b; return a; }
    friend TensorOperator operator*(TensorOperator a, const Rational& s) {
        if (s.is_zero()) a.e_.clear();
        for (auto& [rc, v] : a.e_) v *= s;
        return a;
    }
    friend TensorOperator operator*(const Rational& s, TensorOperator a) { return std::move(a) * s; }

    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
        a.check_shape(b);
        // group the right factor by row for the sparse product
        std::unordered_map<uint32_t, std::vector<std::pair<uint32_t, const Rational*>>> by_row;
        for (const auto& [rc, v] : b.e_) by_row[rc.first].push_back({rc.second, &v});
        TensorOperator r(a.N_, a.m_);
        for (const auto& [rc, v] : a.e_) {
            auto it = by_row.find(rc.second);
            if (it == by_row.end()) continue;
            for (const auto& [c2, v2] : it->second) r.add_entry(rc.first, c2, v * *v2);
        }
        return r;
    }

    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.N_ == b.N_ && a.m_ == b.m_ && a.e_ == b.e_;
    }

    Rational trace() const {
        Rational t = 0;
        for (const auto& [rc, v] : e_)
            if (rc.first == rc.second) t += v;
        return t;
    }

    // Trace over the last tensor factor; the result acts on m-1 factors.
    TensorOperator partial_trace_last() const {
        if (m_ == 0) throw RangeError("partial_trace_last: no factors");
        TensorOperator r(N_, m_ - 1);
        uint32_t rest = r.space_dim();
        for (const auto& [rc, v] : e_) {
            uint32_t rlow = rc.first % rest, rhigh = rc.first / rest;
            uint32_t clow = rc.second % rest, chigh = rc.second / rest;
            if (rhigh == chigh) r.add_entry(rlow, clow, v);
        }
        return r;
    }

    // Trace over factors k+1..m, leaving an operator on k factors.
    TensorOperator partial_trace_to(int k) const {
        if (k < 0 || k > m_) throw RangeError("partial_trace_to: bad k");
        TensorOperator r = *this;
        for (int t = m_; t > k; --t) r = r.partial_trace_last();
        return r;
    }

    // Matrix-vector product on sparse coordinate vectors.
    std::map<uint32_t, Rational> apply(const std::map<uint32_t, Rational>& v) const {
        std::map<uint32_t, Rational> out;
        for (const auto& [rc, w] : e_) {
            auto it = v.find(rc.second);
            if (it == v.end()) continue;
            Rational add = w * it->second;
            auto [slot, fresh] = out.emplace(rc.first, add);
            if (!fresh) {
                slot->second += add;
                if (slot->second.is_zero()) out.erase(slot);
            }
        }
        return out;
    }

    // Exact rank by fraction-free elimination; meant for small spaces.
    long rank() const {
        std::vector<std::map<uint32_t, Rational>> rows;
        {
            std::map<uint32_t, std::map<uint32_t, Rational>> by_row;
            for (const auto& [rc, v] : e_) by_row[rc.first][rc.second] = v;
            for (auto& [r, row] : by_row) rows.push_back(std::move(row));
        }
        long rank = 0;
        while (!rows.empty()) {
            // pick the row whose leading column is smallest
            size_t best = 0;
            for (size_t k = 1; k < rows.size(); ++k)
                if (rows[k].begin()->first < rows[best].begin()->first) best = k;
            std::map<uint32_t, Rational> pivot = std::move(rows[best]);
            rows.erase(rows.begin() + best);
            ++rank;
            uint32_t col = pivot.begin()->first;
            Rational lead = pivot.begin()->second;
            std::vector<std::map<uint32_t, Rational>> next;
            for (auto& row : rows) {
                auto it = row.find(col);
                if (it != row.end()) {
                    Rational f = it->second / lead;
                    for (const auto& [c, v] : pivot) {
                        auto [slot, fresh] = row.emplace(c, -f * v);
                        if (!fresh) {
                            slot->second -= f * v;
                            if (slot->second.is_zero()) row.erase(slot);
                        }
                    }
                }
                if (!row.empty()) next.push_back(std::move(row));
            }
            rows = std::move(next);
        }
        return rank;
    }

private:
    void check_shape(const TensorOperator& o) const {
        if (N_ != o.N_ || m_ != o.m_) throw RangeError("TensorOperator: shape mismatch");
    }
    void check_positions(int a, int b) const {
        if (a < 1 || b <= a || b > m_) throw RangeError("TensorOperator: need 1 <= a < b <= m");
    }

    int N_, m_;
    Entries e_;
};

// Full symmetrizer H^(m) as the ordered product of Yang R-matrix values.
inline TensorOperator symmetrizer_h(int N, int m) {
    if (m < 1) throw RangeError("symmetrizer_h: m >= 1");
    TensorOperator s = TensorOperator::identity(N, m);
    for (int a = 1; a < m; ++a)
        for (int b = a + 1; b <= m; ++b)
            s = s * (TensorOperator::identity(N, m) +
                     TensorOperator::perm(N, m, a, b) * Rational(1, b - a));
    Rational inv_fact = factorial(m).inverse();
    return s * inv_fact;
}

inline TensorOperator antisymmetrizer(int N, int m) {
    if (m < 1) throw RangeError("antisymmetrizer: m >= 1");
    TensorOperator s = TensorOperator::identity(N, m);
    for (int a = 1; a < m; ++a)
        for (int b = a + 1; b <= m; ++b)
            s = s * (TensorOperator::identity(N, m) -
                     TensorOperator::perm(N, m, a, b) * Rational(1, b - a));
    return s * factorial(m).inverse();
}

// Brauer-algebra symmetrizer S^(m): the joint harmonic projector cutting out
// the one-column (orthogonal) or one-row (symplectic) representation.  The
// factors are multiplied in lexicographic order on (a,b); in the symplectic
// case m <= n+1 is required and S^(n+1) = 0.
inline TensorOperator brauer_symmetrizer(const AlgebraSpec& g, int m) {
    if (g.is_gl()) throw FamilyError("brauer_symmetrizer: use symmetrizer_h/antisymmetrizer");
    if (m < 1) throw RangeError("brauer_symmetrizer: m >= 1");
    int N = g.matrix_size(), n = g.rank();
    if (g.symplectic() && m > n + 1)
        throw RangeError("brauer_symmetrizer: symplectic case needs m <= n+1");
    TensorOperator s = TensorOperator::identity(N, m);
    for (int a = 1; a < m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            TensorOperator factor = TensorOperator::identity(N, m);
            if (g.orthogonal()) {
                factor += TensorOperator::perm(N, m, a, b) * Rational(1, b - a);
                factor -= TensorOperator::q_form(g, m, a, b) *
                          (Rational(N, 2) + Rational(b - a - 1)).inverse();
            } else {
                factor -= TensorOperator::perm(N, m, a, b) * Rational(1, b - a);
                factor -= TensorOperator::q_form(g, m, a, b) * Rational(1, n - b + a + 1);
            }
            s = s * factor;
        }
    return s * factorial(m).inverse();
}

// Alternative expansion of S^(m) through H^(m) (orthogonal) or A^(m)
// (symplectic) and sums over disjoint Q-pairs; used as a cross check.
inline TensorOperator brauer_symmetrizer_expanded(const AlgebraSpec& g, int m) {
    if (g.is_gl()) throw FamilyError("brauer_symmetrizer_expanded: classical families only");
    if (m < 1) throw RangeError("brauer_symmetrizer_expanded: m >= 1");
    int N = g.matrix_size(), n = g.rank();
    TensorOperator total(N, m);
    // enumerate unordered sets of disjoint pairs {(a_1,b_1),...,(a_r,b_r)}
    std::vector<std::pair<int, int>> stack;
    std::vector<bool> used(m + 1, false);
    auto q_product = [&]() {
        TensorOperator q = TensorOperator::identity(N, m);
        for (const auto& [a, b] : stack) q = q * TensorOperator::q_form(g, m, a, b);
        return q;
    };
    auto weight = [&](long r) {
        Rational top = g.orthogonal() ? Rational(N, 2) + Rational(m - 2)
                                      : Rational(-n + m - 2);
        Rational c = gen_binomial(top, r);
        if (c.is_zero()) throw Error("brauer_symmetrizer_expanded: degenerate binomial");
        Rational w = Rational(1, 1);
        w /= Rational(2).pow(r) * factorial(r) * c;
        if (g.orthogonal() && (r & 1)) w = -w;
        return w;
    };
    // sets are listed with their left endpoints increasing
    std::function<void(int)> rec = [&](int min_a) {
        total += q_product() * weight(static_cast<long>(stack.size()));
        for (int a = min_a; a <= m; ++a) {
            if (used[a]) continue;
            for (int b = a + 1; b <= m; ++b) {
                if (used[b]) continue;
                used[a] = used[b] = true;
                stack.push_back({a, b});
                rec(a + 1);
                stack.pop_back();
                used[a] = used[b] = false;
            }
        }
    };
    rec(1);
    TensorOperator head = g.orthogonal() ? symmetrizer_h(N, m) : antisymmetrizer(N, m);
    return head * total;
}

// Representation dimension cut out by S^(m).
inline Rational brauer_symmetrizer_rank(const AlgebraSpec& g, int m) {
    int N = g.matrix_size(), n = g.rank();
    if (g.orthogonal())
        return Rational(N + 2 * m - 2, N + m - 2) * gen_binomial(N + m - 2, m);
    return gen_binomial(2 * n, m) - gen_binomial(2 * n, m - 2);
}

} // namespace ssv

#endif
