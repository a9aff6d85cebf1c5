#ifndef SSV_LIEALG_HPP
#define SSV_LIEALG_HPP

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ssv/binomial.hpp"
#include "ssv/errors.hpp"
#include "ssv/family.hpp"
#include "ssv/rational.hpp"

namespace ssv {

using IndexPair = std::pair<int, int>;
using GenTerm = std::pair<IndexPair, Rational>;

enum class GenClass { Raising, Cartan, Lowering };

// A loop-algebra basis element F_{ij}[r] (E_{ij}[r] in type A); r is the
// loop degree.  Ordering questions are delegated to AlgebraSpec since the
// normal-ordering rank of (i,j) depends on the family.
struct Gen {
    int i = 0, j = 0;
    long r = 0;
    friend bool operator==(const Gen&, const Gen&) = default;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

// One classical Lie algebra gl_N, o_N or sp_N with its canonical generator
// set, weights and cached structure constants.  Cheap to copy; copies share
// the bracket cache.
class AlgebraSpec {
public:
    AlgebraSpec(Family f, int rank)
        : family_(f),
          n_(rank),
          N_(family_matrix_size(f, rank)),
          cache_(std::make_shared<Cache>()) {
        build_tables();
    }

    Family family() const { return family_; }
    int rank() const { return n_; }
    int matrix_size() const { return N_; }
    bool is_gl() const { return family_ == Family::A; }
    bool orthogonal() const { return is_orthogonal(family_); }
    bool symplectic() const { return family_ == Family::C; }
    int dim() const { return static_cast<int>(canonical_.size()); }

    // Index reflected across the antidiagonal.
    int prime(int i) const { return N_ + 1 - i; }

    int eps(int i) const {
        check_index(i);
        return (symplectic() && i > n_) ? -1 : 1;
    }

    // Sign in F_{ij} = E_{ij} - theta_{ij} E_{j'i'}.
    int theta(int i, int j) const {
        check_index(i);
        check_index(j);
        if (is_gl()) throw FamilyError("theta undefined for gl");
        return symplectic() ? eps(i) * eps(j) : 1;
    }

    // gamma-factor parameter: +N orthogonal, -N symplectic.
    Rational omega() const {
        if (is_gl()) throw FamilyError("omega undefined for gl");
        return Rational(orthogonal() ? N_ : -N_);
    }

    // Critical shift N/2 -+ 1 entering the Harish-Chandra translations.
    Rational kappa() const {
        if (is_gl()) throw FamilyError("kappa undefined for gl");
        return Rational(N_, 2) + Rational(symplectic() ? 1 : -1);
    }

    bool canonical(int i, int j) const {
        if (i < 1 || i > N_ || j < 1 || j > N_) return false;
        if (is_gl()) return true;
        return i + j <= N_ || (symplectic() && i + j == N_ + 1);
    }

    // F_{ii'} vanishes identically in the orthogonal case.
    bool zero_pair(int i, int j) const { return orthogonal() && i + j == N_ + 1; }

    // Rewrites an arbitrary pair as (canonical pair, coefficient); empty for
    // the orthogonal zero pairs.  Encodes F_{ij} = -theta_{ij} F_{j'i'}.
    std::vector<GenTerm> resolve(int i, int j) const {
        check_index(i);
        check_index(j);
        if (is_gl() || canonical(i, j)) return {{{i, j}, Rational(1)}};
        if (zero_pair(i, j)) return {};
        return {{{prime(j), prime(i)}, Rational(-theta(i, j))}};
    }

    // Canonical pairs sorted by (i, j).
    const std::vector<IndexPair>& canonical_index_set() const { return canonical_; }

    // Weight in the e_1..e_n basis (e_1..e_N for gl).
    const std::vector<long>& weight(int i, int j) const {
        auto it = weights_.find({i, j});
        if (it == weights_.end()) throw IndexError(pair_str(i, j) + " not canonical");
        return it->second;
    }
    const std::vector<long>& weight(const Gen& g) const { return weight(g.i, g.j); }

    GenClass gen_class(int i, int j) const {
        const auto& w = weight(i, j);
        for (long c : w) {
            if (c > 0) return GenClass::Raising;
            if (c < 0) return GenClass::Lowering;
        }
        return GenClass::Cartan;
    }
    GenClass gen_class(const Gen& g) const { return gen_class(g.i, g.j); }

    // Normal-ordering ranks.  chi order reads raising < cartan < lowering,
    // so a straightened monomial with any non-cartan factor ends in a
    // lowering factor or starts with a raising one; top order is the
    // reverse.  Both projections become plain filters in their own order.
    int ord_chi(int i, int j) const { return ord(ord_chi_, i, j); }
    int ord_top(int i, int j) const { return ord(ord_top_, i, j); }

    // Structure constants on canonical pairs; loop degrees add, so only the
    // depth-zero bracket is tabulated.
    const std::vector<GenTerm>& bracket_pairs(const IndexPair& a, const IndexPair& b) const {
        std::array<int, 4> key{a.first, a.second, b.first, b.second};
        auto it = cache_->bracket.find(key);
        if (it != cache_->bracket.end()) return it->second;
        return cache_->bracket.emplace(key, compute_bracket(a, b)).first->second;
    }

    // [x[r], y[s]] for canonical generators, as terms at depth r+s.
    std::vector<std::pair<Gen, Rational>> bracket(const Gen& x, const Gen& y) const {
        std::vector<std::pair<Gen, Rational>> out;
        for (const auto& [p, c] : bracket_pairs({x.i, x.j}, {y.i, y.j}))
            out.push_back({Gen{p.first, p.second, x.r + y.r}, c});
        return out;
    }

    std::string gen_name(const Gen& g) const {
        return std::string(is_gl() ? "E" : "F") + "[" + std::to_string(g.i) + "," +
               std::to_string(g.j) + ";" + std::to_string(g.r) + "]";
    }

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
        return a.family_ == b.family_ && a.n_ == b.n_;
    }

private:
    struct Cache {
        std::map<std::array<int, 4>, std::vector<GenTerm>> bracket;
    };

    static std::string pair_str(int i, int j) {
        return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }

    void check_index(int i) const {
        if (i < 1 || i > N_) throw IndexError("index " + std::to_string(i) + " out of range");
    }

    int ord(const std::map<IndexPair, int>& table, int i, int j) const {
        auto it = table.find({i, j});
        if (it == table.end()) throw IndexError(pair_str(i, j) + " not canonical");
        return it->second;
    }

    std::vector<long> compute_weight(int i, int j) const {
        std::vector<long> w(is_gl() ? N_ : n_, 0);
        auto add = [&](int idx, long s) {
            if (is_gl()) {
                w[idx - 1] += s;
            } else if (idx <= n_) {
                w[idx - 1] += s;
            } else if (idx > N_ - n_) {
                w[prime(idx) - 1] -= s;
            } // middle index of odd orthogonal carries weight zero
        };
        add(i, 1);
        add(j, -1);
        return w;
    }

    void build_tables() {
        for (int i = 1; i <= N_; ++i)
            for (int j = 1; j <= N_; ++j)
                if (canonical(i, j)) {
                    canonical_.push_back({i, j});
                    weights_[{i, j}] = compute_weight(i, j);
                }
        auto rank_of = [&](const IndexPair& p, bool chi) {
            GenClass c = gen_class(p.first, p.second);
            int raising = chi ? 0 : 2, lowering = chi ? 2 : 0;
            return c == GenClass::Raising ? raising : (c == GenClass::Cartan ? 1 : lowering);
        };
        for (bool chi : {true, false}) {
            std::vector<IndexPair> sorted = canonical_;
            std::stable_sort(sorted.begin(), sorted.end(),
                             [&](const IndexPair& a, const IndexPair& b) {
                                 return rank_of(a, chi) < rank_of(b, chi);
                             });
            auto& table = chi ? ord_chi_ : ord_top_;
            for (size_t k = 0; k < sorted.size(); ++k) table[sorted[k]] = static_cast<int>(k);
        }
    }

    // Expansion of F (or E) into elementary matrices.
    std::vector<GenTerm> expand_gl(const IndexPair& p) const {
        if (is_gl()) return {{p, Rational(1)}};
        return {{p, Rational(1)},
                {{prime(p.second), prime(p.first)}, Rational(-theta(p.first, p.second))}};
    }

    std::vector<GenTerm> compute_bracket(const IndexPair& a, const IndexPair& b) const {
        if (!canonical(a.first, a.second) || !canonical(b.first, b.second))
            throw IndexError("bracket needs canonical pairs");
        std::map<IndexPair, Rational> ecoef;
        for (const auto& [p, cp] : expand_gl(a))
            for (const auto& [q, cq] : expand_gl(b)) {
                // [E_pq, E_cd] = delta E_pd - delta E_cq
                if (p.second == q.first) ecoef[{p.first, q.second}] += cp * cq;
                if (q.second == p.first) ecoef[{q.first, p.second}] -= cp * cq;
            }
        std::vector<GenTerm> out;
        for (const auto& [p, c] : ecoef) {
            if (c.is_zero()) continue;
            if (is_gl()) {
                out.push_back({p, c});
                continue;
            }
            if (zero_pair(p.first, p.second))
                throw Error("bracket: nonzero coefficient on a vanishing pair");
            if (!canonical(p.first, p.second)) {
                // partner entry must carry the reflected coefficient
                auto partner = ecoef.find({prime(p.second), prime(p.first)});
                if (partner == ecoef.end() ||
                    partner->second != -Rational(theta(p.first, p.second)) * c)
                    throw Error("bracket: result not in the algebra");
                continue;
            }
            bool diag = symplectic() && p.first + p.second == N_ + 1;
            out.push_back({p, diag ? c / 2 : c});
        }
        return out;
    }

    Family family_;
    int n_, N_;
    std::vector<IndexPair> canonical_;
    std::map<IndexPair, std::vector<long>> weights_;
    std::map<IndexPair, int> ord_chi_, ord_top_;
    std::shared_ptr<Cache> cache_;
};

} // namespace ssv

#endif
