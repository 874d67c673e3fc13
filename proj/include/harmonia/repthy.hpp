#pragma once

#include "harmonics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace harmonia {

using Weight = std::vector<int>;

// Weyl group flavor of the compact part: permutations (A), signed
// permutations (B), evenly-signed permutations (D).
enum class WeylType { A, B, D };

inline WeylType weyl_type(Family f) {
    switch (f) {
        case Family::su: return WeylType::A;
        case Family::so_even: return WeylType::D;
        case Family::so_odd: return WeylType::B;
    }
    throw std::logic_error("weyl_type");
}

struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign;  // +-1 per coordinate (all +1 for type A)
    int det;

    Weight apply(const Weight& w) const {
        Weight out(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) out[i] = sign[i] * w[perm[i]];
        return out;
    }
};

inline std::vector<SignedPerm> weyl_group_elements(WeylType type, int rank) {
    if (rank < 1) throw std::invalid_argument("weyl_group_elements: rank must be positive");
    if (rank > 4) throw std::invalid_argument("weyl_group_elements: rank cap exceeded");
    std::vector<int> p(rank);
    std::iota(p.begin(), p.end(), 0);
    std::vector<SignedPerm> out;
    do {
        int inversions = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j)
                if (p[i] > p[j]) ++inversions;
        int sgn = inversions % 2 == 0 ? 1 : -1;
        if (type == WeylType::A) {
            out.push_back({p, std::vector<int>(rank, 1), sgn});
            continue;
        }
        for (int mask = 0; mask < (1 << rank); ++mask) {
            int flips = __builtin_popcount(static_cast<unsigned>(mask));
            if (type == WeylType::D && flips % 2 != 0) continue;
            std::vector<int> s(rank, 1);
            for (int i = 0; i < rank; ++i)
                if (mask & (1 << i)) s[i] = -1;
            int det = flips % 2 == 0 ? sgn : -sgn;
            out.push_back({p, std::move(s), det});
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline bool is_dominant(WeylType type, const Weight& w) {
    int r = static_cast<int>(w.size());
    for (int i = 0; i + 1 < r; ++i)
        if (w[i] < w[i + 1]) return false;
    if (type == WeylType::B && w[r - 1] < 0) return false;
    // D with r == 1 is a torus: every weight is dominant
    if (type == WeylType::D && r >= 2 && w[r - 2] < std::abs(w[r - 1])) return false;
    return true;
}

inline Weight contragredient_weight(WeylType type, const Weight& w) {
    int r = static_cast<int>(w.size());
    Weight out = w;
    if (type == WeylType::A) {
        for (int i = 0; i < r; ++i) out[i] = -w[r - 1 - i];
    } else if (type == WeylType::D && r % 2 == 1) {
        out[r - 1] = -out[r - 1];
    }
    return out;
}

// rho, doubled so that type B stays integral
inline Weight rho_doubled(WeylType type, int rank) {
    Weight r(rank);
    for (int i = 0; i < rank; ++i) {
        if (type == WeylType::B) r[i] = 2 * (rank - i) - 1;
        else r[i] = 2 * (rank - 1 - i);
    }
    return r;
}

inline Int weyl_dimension(WeylType type, const Weight& lambda) {
    int r = static_cast<int>(lambda.size());
    if (!is_dominant(type, lambda)) throw std::invalid_argument("weyl_dimension: weight not dominant");
    Weight rho = rho_doubled(type, r);
    Weight top(r);
    for (int i = 0; i < r; ++i) top[i] = 2 * lambda[i] + rho[i];
    Rational prod = 1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            prod *= Rational(top[i] - top[j], rho[i] - rho[j]);
            if (type != WeylType::A) prod *= Rational(top[i] + top[j], rho[i] + rho[j]);
        }
    if (type == WeylType::B)
        for (int i = 0; i < r; ++i) prod *= Rational(top[i], rho[i]);
    if (denominator(prod) != 1) throw std::logic_error("weyl_dimension: non-integral result");
    return numerator(prod);
}

struct TorusCharacter {
    int rank = 0;
    std::map<Weight, long long> mult;

    void add(const Weight& w, long long m) {
        if (m == 0) return;
        auto it = mult.find(w);
        if (it == mult.end()) {
            mult.emplace(w, m);
        } else {
            it->second += m;
            if (it->second == 0) mult.erase(it);
        }
    }
    long long at(const Weight& w) const {
        auto it = mult.find(w);
        return it == mult.end() ? 0 : it->second;
    }
    long long total() const {
        long long t = 0;
        for (const auto& [w, m] : mult) t += m;
        return t;
    }
    bool operator==(const TorusCharacter& o) const { return rank == o.rank && mult == o.mult; }
    bool operator!=(const TorusCharacter& o) const { return !(*this == o); }
};

namespace detail {

// exact division of Laurent polynomials with lex leading terms
inline std::map<Weight, long long> laurent_divide(std::map<Weight, long long> num,
                                                  const std::map<Weight, long long>& den) {
    if (den.empty()) throw std::invalid_argument("laurent_divide: zero denominator");
    const Weight& dlead = den.rbegin()->first;
    long long dcoef = den.rbegin()->second;
    std::map<Weight, long long> q;
    int guard = 0;
    while (!num.empty()) {
        if (++guard > 2000000) throw std::logic_error("laurent_divide: runaway division");
        Weight e = num.rbegin()->first;
        long long c = num.rbegin()->second;
        if (c % dcoef != 0) throw std::logic_error("laurent_divide: inexact step");
        long long qc = c / dcoef;
        Weight qe(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) qe[i] = e[i] - dlead[i];
        q[qe] += qc;
        for (const auto& [de, dc] : den) {
            Weight t(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) t[i] = qe[i] + de[i];
            auto it = num.find(t);
            long long v = (it == num.end() ? 0 : it->second) - qc * dc;
            if (v == 0) {
                if (it != num.end()) num.erase(it);
            } else if (it == num.end()) {
                num.emplace(std::move(t), v);
            } else {
                it->second = v;
            }
        }
    }
    return q;
}

}  // namespace detail

// Character of the irreducible with the given dominant highest weight, as
// a quotient of alternants over the (signed-)permutation group.
inline TorusCharacter irreducible_character(WeylType type, const Weight& lambda) {
    int r = static_cast<int>(lambda.size());
    if (!is_dominant(type, lambda)) throw std::invalid_argument("irreducible_character: weight not dominant");
    auto group = weyl_group_elements(type, r);
    Weight rho = rho_doubled(type, r);
    Weight top(r);
    int scale = type == WeylType::B ? 2 : 1;
    for (int i = 0; i < r; ++i) top[i] = scale * lambda[i] + (type == WeylType::B ? rho[i] : rho[i] / 2);
    Weight rho_used(r);
    for (int i = 0; i < r; ++i) rho_used[i] = type == WeylType::B ? rho[i] : rho[i] / 2;

    std::map<Weight, long long> num, den;
    for (const auto& w : group) {
        num[w.apply(top)] += w.det;
        den[w.apply(rho_used)] += w.det;
    }
    for (auto it = num.begin(); it != num.end();) it = it->second == 0 ? num.erase(it) : std::next(it);
    for (auto it = den.begin(); it != den.end();) it = it->second == 0 ? den.erase(it) : std::next(it);

    auto q = detail::laurent_divide(std::move(num), den);
    TorusCharacter ch;
    ch.rank = r;
    for (auto& [e, c] : q) {
        Weight w = e;
        if (type == WeylType::B) {
            for (auto& v : w) {
                if (v % 2 != 0) throw std::logic_error("irreducible_character: odd doubled exponent");
                v /= 2;
            }
        }
        ch.add(w, c);
    }
    Int dim = weyl_dimension(type, lambda);
    if (Int(ch.total()) != dim) throw std::logic_error("irreducible_character: dimension mismatch");
    return ch;
}

// grlex on weights: total sum first, then lex
inline bool weight_grlex_less(const Weight& a, const Weight& b) {
    long long sa = 0, sb = 0;
    for (int v : a) sa += v;
    for (int v : b) sb += v;
    if (sa != sb) return sa < sb;
    return a < b;
}

// Peel highest weights greedily. Exact for genuine characters; throws if
// the input is not a non-negative integer combination of irreducibles.
inline std::map<Weight, long long> decompose(WeylType type, const TorusCharacter& ch) {
    std::map<Weight, long long> out;
    TorusCharacter rem = ch;
    while (!rem.mult.empty()) {
        auto best = rem.mult.begin();
        for (auto it = std::next(rem.mult.begin()); it != rem.mult.end(); ++it)
            if (weight_grlex_less(best->first, it->first)) best = it;
        Weight w = best->first;
        long long m = best->second;
        if (m < 0) throw std::domain_error("decompose: negative leading multiplicity");
        if (!is_dominant(type, w)) throw std::domain_error("decompose: non-dominant leading weight");
        TorusCharacter irr = irreducible_character(type, w);
        for (const auto& [ww, mm] : irr.mult) rem.add(ww, -m * mm);
        out[w] += m;
    }
    return out;
}

// character of the full degree-d coordinate space
inline TorusCharacter polynomial_character(const MatrixLieAlgebra& g, int degree) {
    TorusCharacter ch;
    ch.rank = g.rank_k;
    for (const auto& [w, monos] : weight_classes(g, degree)) ch.add(w, static_cast<long long>(monos.size()));
    return ch;
}

// Two independent roads to the character of the degree-d harmonic space.
inline TorusCharacter graded_harmonic_character_kernel(const MatrixLieAlgebra& g, const InvariantSet& inv,
                                                       int degree) {
    TorusCharacter ch;
    ch.rank = g.rank_k;
    for (const auto& p : harmonic_space(g, inv, degree).basis)
        ch.add(monomial_torus_weight(g, p.leading_monomial()), 1);
    return ch;
}

inline TorusCharacter graded_harmonic_character_series(const MatrixLieAlgebra& g, const InvariantSet& inv,
                                                       int degree) {
    std::vector<long long> numer(degree + 1, 0);  // prod_i (1 - t^{d_i}) truncated
    numer[0] = 1;
    for (int d : inv.degrees()) {
        if (d > degree) continue;
        for (int j = degree; j >= d; --j) numer[j] -= numer[j - d];
    }
    TorusCharacter ch;
    ch.rank = g.rank_k;
    for (int j = 0; j <= degree; ++j) {
        if (numer[j] == 0) continue;
        TorusCharacter pe = polynomial_character(g, degree - j);
        for (const auto& [w, m] : pe.mult) ch.add(w, numer[j] * m);
    }
    return ch;
}

struct MultiplicityLedger {
    WeylType type = WeylType::A;
    int max_degree = 0;
    std::map<Weight, std::vector<long long>> per_degree;  // mult of each K-type in H^0..H^D
    std::map<Weight, long long> cumulative;
    std::map<Weight, Int> dims;     // d(delta)
    bool bound_ok = true;           // cumulative <= dim everywhere
    std::vector<Weight> saturated;  // cumulative == dim

    bool fully_saturated() const { return saturated.size() == cumulative.size(); }
};

inline MultiplicityLedger multiplicity_report(const MatrixLieAlgebra& g, const InvariantSet& inv,
                                              int max_degree) {
    MultiplicityLedger led;
    led.type = weyl_type(g.family);
    led.max_degree = max_degree;
    for (int d = 0; d <= max_degree; ++d) {
        TorusCharacter ch = graded_harmonic_character_kernel(g, inv, d);
        for (const auto& [w, m] : decompose(led.type, ch)) {
            auto& row = led.per_degree[w];
            row.resize(max_degree + 1, 0);
            row[d] = m;
            led.cumulative[w] += m;
        }
    }
    for (auto& [w, row] : led.per_degree) row.resize(max_degree + 1, 0);
    for (const auto& [w, m] : led.cumulative) {
        Int dim = weyl_dimension(led.type, w);
        led.dims[w] = dim;
        if (Int(m) > dim) led.bound_ok = false;
        if (Int(m) == dim) led.saturated.push_back(w);
    }
    return led;
}

struct KTypeCount {
    Weight w;
    long long mult;
};

struct RegularClosureReport {
    Int computed = 0;   // sum over delta of m_D(delta) * n(delta*)
    Int dim_v = 0;
    bool all_contragredients_saturated = false;
    bool equality = false;
};

inline RegularClosureReport regular_closure_check(const MultiplicityLedger& led, const std::vector<KTypeCount>& v) {
    RegularClosureReport rep;
    rep.all_contragredients_saturated = true;
    for (const auto& kt : v) {
        if (kt.mult == 0) continue;
        if (kt.mult < 0) throw std::invalid_argument("regular_closure_check: negative multiplicity");
        Weight star = contragredient_weight(led.type, kt.w);
        rep.dim_v += Int(kt.mult) * weyl_dimension(led.type, kt.w);
        auto it = led.cumulative.find(star);
        long long m = it == led.cumulative.end() ? 0 : it->second;
        rep.computed += Int(kt.mult) * Int(m);
        bool sat = std::find(led.saturated.begin(), led.saturated.end(), star) != led.saturated.end();
        if (!sat) rep.all_contragredients_saturated = false;
    }
    rep.equality = rep.computed == rep.dim_v;
    return rep;
}

}  // namespace harmonia
