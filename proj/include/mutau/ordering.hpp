#ifndef MUTAU_ORDERING_HPP
#define MUTAU_ORDERING_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "mutau/errors.hpp"

namespace mutau {

// Exponent vector of a monomial x^a; length = number of ring variables.
using Exp = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exp& a) {
    std::uint64_t d = 0;
    for (auto e : a) d += e;
    return d;
}

inline bool divides(const Exp& a, const Exp& b) {  // x^a | x^b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exp exp_quotient(const Exp& b, const Exp& a) {  // x^b / x^a
    Exp q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

inline Exp exp_sum(const Exp& a, const Exp& b) {
    Exp s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
}

// Local monomial orderings: 1 is the largest monomial.
//   ds: negative degree reverse lexicographic (lower total degree larger,
//       ties by reverse lex).
//   ls: negative lexicographic.
enum class OrdKind { Ds, Ls };

// +1 if a > b in the ordering, 0 if equal, -1 if a < b.
inline int cmp_mono(OrdKind k, const Exp& a, const Exp& b) {
    if (a.size() != b.size()) throw RingMismatchError("exponent vectors of different length");
    switch (k) {
        case OrdKind::Ds: {
            std::uint64_t da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db ? 1 : -1;
            for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
        case OrdKind::Ls: {
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        }
    }
    return 0;
}

// Module monomial x^a e_j. Ordering: term over position, lower component
// index larger on ties.
struct ModMono {
    Exp m;
    int comp = 0;
};

inline int cmp_mod_mono(OrdKind k, const ModMono& a, const ModMono& b) {
    int c = cmp_mono(k, a.m, b.m);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
}

}  // namespace mutau

#endif
