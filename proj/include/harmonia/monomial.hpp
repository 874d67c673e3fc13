#pragma once

#include "rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace harmonia {

// A monomial in a fixed ambient set of variables is just its exponent
// vector. The ambient dimension is carried by the containing polynomial.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded lexicographic order: compare total degree first, then exponent
// vectors lexicographically. Within a fixed degree this is plain lex.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("grlex_less: mixed ambient dimensions");
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

// All monomials of the given total degree, ordered descending in grlex
// (equivalently, lex-descending within the degree). Two variables, degree
// two enumerates as x0^2, x0 x1, x1^2.
inline std::vector<Monomial> homogeneous_basis(int ambient, int degree) {
    if (ambient < 0 || degree < 0) throw std::invalid_argument("homogeneous_basis: negative argument");
    std::vector<Monomial> out;
    if (ambient == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    Monomial cur(ambient, 0);
    // Recurse on the leading exponent, largest first.
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == ambient - 1) {
            cur[var] = rem;
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rem - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

inline Int monomial_count(int ambient, int degree) {
    return binomial(ambient + degree - 1, degree);
}

// a! = prod a_i!  (the pairing normalization factor)
inline Int exponent_factorial(const Monomial& m) {
    Int r = 1;
    for (int e : m) r *= factorial(e);
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("divides: mixed ambient dimensions");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace harmonia
