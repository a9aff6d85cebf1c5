#ifndef SSV_FAMILY_HPP
#define SSV_FAMILY_HPP

#include <string>

#include "ssv/errors.hpp"

namespace ssv {

// Classical families.  A = gl_N, B = o_{2n+1}, C = sp_{2n}, D = o_{2n}.
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline std::string to_string(Family f) { return std::string(1, family_letter(f)); }

inline Family parse_family(const std::string& s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'A': case 'a': return Family::A;
            case 'B': case 'b': return Family::B;
            case 'C': case 'c': return Family::C;
            case 'D': case 'd': return Family::D;
            default: break;
        }
    }
    throw ParseError("unknown family '" + s + "' (expected A, B, C or D)");
}

inline bool is_orthogonal(Family f) { return f == Family::B || f == Family::D; }
inline bool is_symplectic(Family f) { return f == Family::C; }

// Matrix size N for rank parameter n.  For family A the rank parameter is
// N itself.
inline int family_matrix_size(Family f, int n) {
    if (n < 1) throw RangeError("rank must be positive");
    switch (f) {
        case Family::A: return n;
        case Family::B: return 2 * n + 1;
        case Family::C:
        case Family::D: return 2 * n;
    }
    throw FamilyError("bad family");
}

} // namespace ssv

#endif
