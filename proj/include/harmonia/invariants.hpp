#pragma once

#include "liealg.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harmonia {

inline Polynomial trace_of_product(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw std::invalid_argument("trace_of_product: shapes");
    Polynomial s(a.ambient());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero() && !b.at(j, i).is_zero()) s += a.at(i, j) * b.at(j, i);
    return s;
}

// Tr x^m without forming x^m itself: split as x^a x^b with a = ceil(m/2).
inline Polynomial trace_power(const PolyMatrix& x, int m) {
    if (x.rows() != x.cols()) throw std::invalid_argument("trace_power: not square");
    if (m < 1) throw std::invalid_argument("trace_power: exponent must be positive");
    if (m == 1) return x.trace();
    std::vector<PolyMatrix> pows = {x};
    int half = (m + 1) / 2;
    while (static_cast<int>(pows.size()) < half) pows.push_back(pows.back() * x);
    return trace_of_product(pows[half - 1], pows[m - half - 1]);
}

inline Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    int n = m.rows();
    if (n > 20) throw std::invalid_argument("determinant: size cap exceeded");
    if (n == 0) return Polynomial::constant(m.ambient(), 1);
    std::map<std::uint32_t, Polynomial> memo;
    auto rec = [&](auto&& self, std::uint32_t cols) -> const Polynomial& {
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        int remaining = __builtin_popcount(cols);
        int row = n - remaining;
        Polynomial d(m.ambient());
        if (remaining == 0) {
            d = Polynomial::constant(m.ambient(), 1);
        } else {
            int sign = 1;  // alternates over surviving columns only
            for (int j = 0; j < n; ++j) {
                if (!(cols & (1u << j))) continue;
                if (!m.at(row, j).is_zero()) {
                    Polynomial sub = self(self, cols & ~(1u << j));
                    if (sign < 0) sub = sub.scale(-1);
                    d += m.at(row, j) * sub;
                }
                sign = -sign;
            }
        }
        return memo.emplace(cols, std::move(d)).first->second;
    };
    std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    return rec(rec, all);
}

// Pfaffian of a skew-symmetric polynomial matrix, by expansion along the
// first remaining index. Pf([[0,a],[-a,0]]) = a, and Pf^2 = det.
inline Polynomial pfaffian(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: not square");
    int n = m.rows();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
    if (n > 20) throw std::invalid_argument("pfaffian: size cap exceeded");
    for (int i = 0; i < n; ++i) {
        if (!m.at(i, i).is_zero()) throw std::domain_error("pfaffian: nonzero diagonal");
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != -m.at(j, i)) throw std::domain_error("pfaffian: matrix is not skew-symmetric");
    }
    if (n == 0) return Polynomial::constant(m.ambient(), 1);
    std::map<std::uint32_t, Polynomial> memo;
    auto rec = [&](auto&& self, std::uint32_t idx) -> const Polynomial& {
        auto it = memo.find(idx);
        if (it != memo.end()) return it->second;
        Polynomial p(m.ambient());
        if (idx == 0) {
            p = Polynomial::constant(m.ambient(), 1);
        } else {
            int i0 = __builtin_ctz(idx);
            std::uint32_t rest = idx & ~(1u << i0);
            int sign = 1;
            for (int j = i0 + 1; j < n; ++j) {
                if (!(rest & (1u << j))) continue;
                if (!m.at(i0, j).is_zero()) {
                    Polynomial sub = self(self, rest & ~(1u << j));
                    if (sign < 0) sub = sub.scale(-1);
                    p += m.at(i0, j) * sub;
                }
                sign = -sign;
            }
        }
        return memo.emplace(idx, std::move(p)).first->second;
    };
    std::uint32_t all = (1u << n) - 1;
    return rec(rec, all);
}

struct GeneratorInfo {
    Polynomial poly;
    int degree;
    std::string label;
};

// The free generating set of the K-invariants: trace powers of the full
// generic element, trace powers of its compact block, and (orthogonal
// families) one Pfaffian. pf_square_sign records the constant c in
// Pf(...)^2 = c * det(...) for this realization.
struct InvariantSet {
    Family family = Family::su;
    int n = 0;
    std::vector<GeneratorInfo> gens;
    int pf_index = -1;
    int pf_square_sign = 0;

    std::vector<int> degrees() const {
        std::vector<int> d;
        for (const auto& g : gens) d.push_back(g.degree);
        return d;
    }
    int count() const { return static_cast<int>(gens.size()); }
};

inline InvariantSet generator_polynomials(const MatrixLieAlgebra& g) {
    InvariantSet inv;
    inv.family = g.family;
    inv.n = g.n;
    PolyMatrix x = g.generic_element(true, true);
    PolyMatrix xk = g.generic_element(true, false);
    int n = g.n;
    auto add = [&](Polynomial p, int deg, std::string label) {
        if (p.degree() != deg) throw std::logic_error("generator degree mismatch: " + label);
        inv.gens.push_back({std::move(p), deg, std::move(label)});
    };

    if (g.family == Family::su) {
        for (int i = 1; i <= n; ++i) add(trace_power(x, i + 1), i + 1, detail::idx_label("f", i));
        PolyMatrix b = xk.submatrix(0, 0, n, n);
        for (int j = 1; j <= n; ++j) add(trace_power(b, j), j, detail::idx_label("phi", j));
        return inv;
    }

    bool odd = g.family == Family::so_odd;
    for (int i = 1; i <= n; ++i) add(trace_power(x, 2 * i), 2 * i, detail::idx_label("f", i));
    if (odd) {
        // full form matrix times the generic element is skew
        PolyMatrix gm(g.size, g.size, g.dim_g());
        for (int i = 0; i < g.size; ++i)
            for (int j = 0; j < g.size; ++j)
                if (g.form.at(i, j) != 0) gm.at(i, j) = Polynomial::constant(g.dim_g(), g.form.at(i, j));
        inv.pf_index = inv.count();
        add(pfaffian(gm * x), n + 1, detail::idx_label("f", n + 1));
        inv.pf_square_sign = (n % 2 == 0) ? 1 : -1;  // det of the split form on 2n+2 coords
    }
    int bs = odd ? 2 * n + 1 : 2 * n;
    PolyMatrix b = xk.submatrix(0, 0, bs, bs);
    int phis = odd ? n : n - 1;
    for (int j = 1; j <= phis; ++j) add(trace_power(b, 2 * j), 2 * j, detail::idx_label("phi", j));
    if (!odd) {
        PolyMatrix gb(bs, bs, g.dim_g());
        for (int i = 0; i < bs; ++i)
            for (int j = 0; j < bs; ++j)
                if (g.form.at(i, j) != 0) gb.at(i, j) = Polynomial::constant(g.dim_g(), g.form.at(i, j));
        inv.pf_index = inv.count();
        add(pfaffian(gb * b), n, detail::idx_label("phi", n));
        inv.pf_square_sign = (n % 2 == 0) ? 1 : -1;  // det of the split form on 2n coords
    }
    return inv;
}

inline bool is_invariant(const MatrixLieAlgebra& g, const Polynomial& f) {
    for (int z = 0; z < g.dim_k; ++z)
        if (!coadjoint_derivation(g, z, f).is_zero()) return false;
    return true;
}

// dim of the K-invariant part of degree-d polynomials on g. Monomials of
// nonzero torus weight cannot contribute, so the computation restricts to
// the weight-zero block before imposing the non-torus derivations.
inline int invariant_dimension(const MatrixLieAlgebra& g, int degree) {
    if (degree < 0) throw std::invalid_argument("invariant_dimension: negative degree");
    std::vector<Monomial> zero_wt;
    std::vector<int> zero(g.rank_k, 0);
    for (auto& m : homogeneous_basis(g.dim_g(), degree))
        if (monomial_torus_weight(g, m) == zero) zero_wt.push_back(std::move(m));
    if (zero_wt.empty()) return 0;
    std::vector<std::function<Polynomial(const Polynomial&)>> maps;
    for (int z = g.rank_k; z < g.dim_k; ++z)
        maps.push_back([&g, z](const Polynomial& f) { return coadjoint_derivation(g, z, f); });
    if (maps.empty()) return static_cast<int>(zero_wt.size());
    return static_cast<int>(kernel_of_linear_maps(maps, zero_wt, g.dim_g()).size());
}

inline std::vector<Rational> generator_values(const MatrixLieAlgebra& g, const InvariantSet& inv,
                                              const RatMatrix& x) {
    std::vector<Rational> coords = span_coordinates(g, x);
    std::vector<Rational> vals;
    vals.reserve(inv.gens.size());
    for (const auto& gen : inv.gens) vals.push_back(gen.poly.evaluate(coords));
    return vals;
}

// Membership in the fiber of the invariant map over the given target values.
inline bool in_variety(const MatrixLieAlgebra& g, const InvariantSet& inv, const RatMatrix& x,
                       const std::vector<Rational>& targets) {
    if (targets.size() != inv.gens.size()) throw std::invalid_argument("in_variety: target count");
    return generator_values(g, inv, x) == targets;
}

// (x nilpotent, k-part of x nilpotent)
inline std::pair<bool, bool> nilpotency_check(const MatrixLieAlgebra& g, const RatMatrix& x) {
    if (x.rows() != g.size || x.cols() != g.size) throw std::invalid_argument("nilpotency_check: size");
    bool nx = x.pow(g.size).is_zero();
    bool nk = project_to_k(g, x).pow(g.size).is_zero();
    return {nx, nk};
}

// Rank of the Jacobian of the generator map at a random integer point.
// Retries on a wider box if the rank comes out deficient, which for a
// dominant map only happens on a thin subvariety.
inline int jacobian_generic_rank(const MatrixLieAlgebra& g, const InvariantSet& inv,
                                 std::uint64_t seed = 20240817u) {
    int D = g.dim_g();
    std::vector<std::vector<Polynomial>> partials(inv.gens.size());
    for (std::size_t i = 0; i < inv.gens.size(); ++i)
        for (int a = 0; a < D; ++a) partials[i].push_back(inv.gens[i].poly.derivative(a));
    std::mt19937_64 rng(seed);
    int best = 0;
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::int64_t box = 9 * (std::int64_t(1) << attempt);
        std::vector<Rational> pt(D);
        for (int a = 0; a < D; ++a)
            pt[a] = Rational(static_cast<std::int64_t>(rng() % (2 * box + 1)) - box);
        RatMatrix jac(static_cast<int>(inv.gens.size()), D);
        for (std::size_t i = 0; i < inv.gens.size(); ++i)
            for (int a = 0; a < D; ++a) jac.at(static_cast<int>(i), a) = partials[i][a].evaluate(pt);
        best = std::max(best, rank(jac));
        if (best == static_cast<int>(inv.gens.size())) return best;
    }
    return best;
}

}  // namespace harmonia
