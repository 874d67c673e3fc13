#pragma once

#include "invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace harmonia {

// Transport a polynomial function of the coordinates to an element of the
// symmetric algebra (a constant-coefficient operator) via the trace form:
// the coordinate c_a maps to sum_b (G^-1)_ab X_b, and X_b differentiates
// along c_b.
inline Polynomial dualize(const MatrixLieAlgebra& g, const Polynomial& f) {
    if (f.ambient() != g.dim_g()) throw std::invalid_argument("dualize: ambient mismatch");
    int D = g.dim_g();
    std::vector<Polynomial> images;
    images.reserve(D);
    for (int a = 0; a < D; ++a) {
        Polynomial img(D);
        for (int b = 0; b < D; ++b)
            if (g.gram_inv.at(a, b) != 0) img.add_term(g.unit_exponent(b), g.gram_inv.at(a, b));
        images.push_back(std::move(img));
    }
    return f.substitute(images);
}

inline std::vector<DifferentialOperator> dual_operators(const MatrixLieAlgebra& g, const InvariantSet& inv) {
    std::vector<DifferentialOperator> ops;
    ops.reserve(inv.gens.size());
    for (const auto& gen : inv.gens) ops.push_back({dualize(g, gen.poly)});
    return ops;
}

// Degree-d monomials grouped by torus weight. The invariant operators have
// weight zero, so every kernel and rank computation splits along these
// classes; the per-class reduced bases concatenate to the global one.
inline std::map<std::vector<int>, std::vector<Monomial>> weight_classes(const MatrixLieAlgebra& g,
                                                                        int degree) {
    std::map<std::vector<int>, std::vector<Monomial>> classes;
    for (auto& m : homogeneous_basis(g.dim_g(), degree))
        classes[monomial_torus_weight(g, m)].push_back(std::move(m));
    return classes;
}

struct HarmonicSpace {
    int degree = 0;
    std::vector<Polynomial> basis;  // reduced echelon rows, leading monomials descending
    int dimension() const { return static_cast<int>(basis.size()); }
};

inline HarmonicSpace harmonic_space(const MatrixLieAlgebra& g, const InvariantSet& inv, int degree) {
    if (degree < 0) throw std::invalid_argument("harmonic_space: negative degree");
    HarmonicSpace h;
    h.degree = degree;
    std::vector<std::function<Polynomial(const Polynomial&)>> maps;
    for (const auto& op : dual_operators(g, inv)) {
        if (op.symbol.degree() > degree) continue;  // kills everything of this degree anyway
        maps.push_back([op](const Polynomial& f) { return op.apply(f); });
    }
    if (maps.empty()) {
        for (const auto& m : homogeneous_basis(g.dim_g(), degree))
            h.basis.push_back(Polynomial::monomial(g.dim_g(), m));
        return h;
    }
    for (const auto& [w, monos] : weight_classes(g, degree))
        for (auto& p : kernel_of_linear_maps(maps, monos, g.dim_g())) h.basis.push_back(std::move(p));
    std::sort(h.basis.begin(), h.basis.end(), [](const Polynomial& a, const Polynomial& b) {
        return grlex_less(b.leading_monomial(), a.leading_monomial());
    });
    return h;
}

// dim of the degree-d part of the ideal generated by the invariant
// generators (equivalently, by the positive-degree invariants).
inline int ideal_dimension(const MatrixLieAlgebra& g, const InvariantSet& inv, int degree) {
    if (degree < 0) throw std::invalid_argument("ideal_dimension: negative degree");
    std::map<std::vector<int>, std::vector<std::vector<Rational>>> rows_by_class;
    std::map<std::vector<int>, std::map<Monomial, int, GrlexLess>> index_by_class;
    for (const auto& gen : inv.gens) {
        if (gen.degree > degree) continue;
        for (const auto& m : homogeneous_basis(g.dim_g(), degree - gen.degree)) {
            Polynomial prod = gen.poly * Polynomial::monomial(g.dim_g(), m);
            auto w = monomial_torus_weight(g, m);
            auto& index = index_by_class[w];
            auto& rows = rows_by_class[w];
            std::vector<Rational> row(index.size(), Rational(0));
            for (const auto& [mono, c] : prod.terms()) {
                auto [it, fresh] = index.emplace(mono, static_cast<int>(index.size()));
                if (fresh)
                    for (auto& r : rows) r.push_back(0);
                if (static_cast<int>(row.size()) < static_cast<int>(index.size())) row.resize(index.size(), Rational(0));
                row[it->second] = c;
            }
            row.resize(index.size(), Rational(0));
            rows.push_back(std::move(row));
        }
    }
    int total = 0;
    for (auto& [w, rows] : rows_by_class) {
        std::vector<std::vector<Int>> irows;
        irows.reserve(rows.size());
        std::size_t width = index_by_class[w].size();
        for (auto& r : rows) {
            r.resize(width, Rational(0));
            irows.push_back(clear_denominators(r));
        }
        total += integer_rref(std::move(irows)).rank();
    }
    return total;
}

struct DirectSumReport {
    int degree = 0;
    int dim_p = 0;         // dim of the full degree-d polynomial space
    int harmonic_dim = 0;
    int ideal_dim = 0;
    bool independent = false;  // ideal part meets harmonics trivially
    bool spans = false;        // together they exhaust the degree
    bool ok() const { return independent && spans; }
};

inline DirectSumReport verify_direct_sum(const MatrixLieAlgebra& g, const InvariantSet& inv, int degree) {
    DirectSumReport rep;
    rep.degree = degree;
    rep.dim_p = static_cast<int>(monomial_count(g.dim_g(), degree));
    HarmonicSpace h = harmonic_space(g, inv, degree);
    rep.harmonic_dim = h.dimension();
    rep.ideal_dim = ideal_dimension(g, inv, degree);

    // independence, classwise: stack ideal rows and harmonic rows and
    // compare the combined rank against the sum of the parts
    std::map<std::vector<int>, std::vector<std::vector<Rational>>> rows_by_class;
    std::map<std::vector<int>, std::map<Monomial, int, GrlexLess>> index_by_class;
    auto add_poly = [&](const Polynomial& p) {
        if (p.is_zero()) return;
        auto w = monomial_torus_weight(g, p.leading_monomial());
        auto& index = index_by_class[w];
        auto& rows = rows_by_class[w];
        std::vector<Rational> row(index.size(), Rational(0));
        for (const auto& [mono, c] : p.terms()) {
            auto [it, fresh] = index.emplace(mono, static_cast<int>(index.size()));
            if (fresh)
                for (auto& r : rows) r.push_back(0);
            if (row.size() < index.size()) row.resize(index.size(), Rational(0));
            row[it->second] = c;
        }
        rows.push_back(std::move(row));
    };
    for (const auto& gen : inv.gens) {
        if (gen.degree > degree) continue;
        for (const auto& m : homogeneous_basis(g.dim_g(), degree - gen.degree))
            add_poly(gen.poly * Polynomial::monomial(g.dim_g(), m));
    }
    for (const auto& p : h.basis) add_poly(p);
    int combined = 0;
    for (auto& [w, rows] : rows_by_class) {
        std::vector<std::vector<Int>> irows;
        std::size_t width = index_by_class[w].size();
        for (auto& r : rows) {
            r.resize(width, Rational(0));
            irows.push_back(clear_denominators(r));
        }
        combined += integer_rref(std::move(irows)).rank();
    }
    rep.independent = combined == rep.ideal_dim + rep.harmonic_dim;
    rep.spans = rep.ideal_dim + rep.harmonic_dim == rep.dim_p;
    return rep;
}

// Taylor coefficients of prod_i (1 - t^{d_i}) / (1 - t)^dim up to the cutoff.
inline std::vector<Int> hilbert_coefficients(const std::vector<int>& gen_degrees, int dim, int cutoff) {
    if (dim < 1 || cutoff < 0) throw std::invalid_argument("hilbert_coefficients: bad arguments");
    std::vector<Int> c(cutoff + 1);
    for (int j = 0; j <= cutoff; ++j) c[j] = binomial(dim - 1 + j, j);
    for (int d : gen_degrees) {
        if (d < 1) throw std::invalid_argument("hilbert_coefficients: generator degree");
        for (int j = cutoff; j >= d; --j) c[j] -= c[j - d];
    }
    return c;
}

}  // namespace harmonia
