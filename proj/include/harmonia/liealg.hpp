#pragma once

#include "linalg.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace harmonia {

// The three real-rank-one families, complexified and realized as explicit
// matrix Lie algebras:
//   su      : sl(n+1), maximal compact part gl(n) in the corner
//   so_even : so(2n+1) with split symmetric form, compact part so(2n)
//   so_odd  : so(2n+2) with split symmetric form, compact part so(2n+1)
enum class Family { su, so_even, so_odd };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::su: return "su";
        case Family::so_even: return "so-even";
        case Family::so_odd: return "so-odd";
    }
    return "?";
}

struct BasisElement {
    RatMatrix mat;
    std::vector<int> weight;  // ad-weight under the compact Cartan torus
    int prow = 0, pcol = 0;   // a matrix position occupied by this element alone
    Rational pval = 1;        // value there
    std::string label;
};

struct AlgebraDims {
    int dim_g, dim_k, rank_g, rank_k;
};

class MatrixLieAlgebra {
  public:
    Family family;
    int n;     // family parameter
    int size;  // matrix size of the realization

    std::vector<BasisElement> basis;  // k first (Cartan, then raising, then lowering), then p
    int dim_k = 0;
    int rank_g = 0, rank_k = 0;

    RatMatrix form;        // symmetric form defining the algebra (so families; empty for su)
    RatMatrix theta_sign;  // diagonal +-1 matrix; conjugation by it fixes k and negates p
    std::vector<int> g_cartan;  // basis indices spanning a Cartan subalgebra of g

    RatMatrix gram, gram_inv;  // trace form on the chosen basis

    int dim_g() const { return static_cast<int>(basis.size()); }
    int dim_p() const { return dim_g() - dim_k; }
    int torus_rank() const { return rank_k; }
    AlgebraDims dims() const { return {dim_g(), dim_k, rank_g, rank_k}; }

    bool is_k_index(int a) const { return a < dim_k; }

    const RatMatrix& element(int a) const { return basis[a].mat; }

    // x as a matrix from coordinates in the chosen basis
    RatMatrix realize(const std::vector<Rational>& coords) const {
        if (static_cast<int>(coords.size()) != dim_g()) throw std::invalid_argument("realize: coordinate count");
        RatMatrix x(size, size);
        for (int a = 0; a < dim_g(); ++a) {
            if (coords[a] == 0) continue;
            x = x + coords[a] * basis[a].mat;
        }
        return x;
    }

    // Generic element with coordinate variables, optionally restricted to k or p.
    PolyMatrix generic_element(bool include_k = true, bool include_p = true) const {
        PolyMatrix x(size, size, dim_g());
        for (int a = 0; a < dim_g(); ++a) {
            if (is_k_index(a) ? !include_k : !include_p) continue;
            const RatMatrix& m = basis[a].mat;
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    if (m.at(i, j) != 0)
                        x.at(i, j).add_term(unit_exponent(a), m.at(i, j));
        }
        return x;
    }

    Monomial unit_exponent(int a) const {
        Monomial m(dim_g(), 0);
        m[a] = 1;
        return m;
    }

  private:
    friend MatrixLieAlgebra build_algebra(Family, int);
};

namespace detail {

inline RatMatrix unit_pair(int size, int r1, int c1, int v1, int r2, int c2, int v2) {
    RatMatrix m(size, size);
    m.at(r1, c1) = v1;
    if (r2 >= 0) m.at(r2, c2) += v2;
    return m;
}

inline std::string idx_label(const char* stem, int i, int j = -1) {
    std::ostringstream os;
    os << stem << i;
    if (j >= 0) os << j;
    return os.str();
}

inline std::vector<int> wt(int rank) { return std::vector<int>(rank, 0); }

}  // namespace detail

inline MatrixLieAlgebra build_algebra(Family family, int n) {
    if (n < 1) throw std::invalid_argument("build_algebra: n must be positive");
    MatrixLieAlgebra g;
    g.family = family;
    g.n = n;
    using detail::idx_label;
    using detail::unit_pair;
    using detail::wt;

    if (family == Family::su) {
        int N = n + 1;
        g.size = N;
        g.rank_g = n;
        g.rank_k = n;
        g.theta_sign = RatMatrix::identity(N);
        g.theta_sign.at(n, n) = -1;
        // k = gl(n) in the upper-left corner (traceless completion on the corner entry)
        for (int i = 0; i < n; ++i) {  // Cartan
            BasisElement b;
            b.mat = unit_pair(N, i, i, 1, n, n, -1);
            b.weight = wt(n);
            b.prow = i; b.pcol = i;
            b.label = idx_label("H", i);
            g.basis.push_back(std::move(b));
        }
        for (int pass = 0; pass < 2; ++pass)  // raising, then lowering
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j || (pass == 0 ? i > j : i < j)) continue;
                    BasisElement b;
                    b.mat = unit_pair(N, i, j, 1, -1, -1, 0);
                    b.weight = wt(n);
                    b.weight[i] += 1;
                    b.weight[j] -= 1;
                    b.prow = i; b.pcol = j;
                    b.label = idx_label("E", i, j);
                    g.basis.push_back(std::move(b));
                }
        g.dim_k = static_cast<int>(g.basis.size());
        for (int i = 0; i < n; ++i) {  // p: last column, then last row
            BasisElement b;
            b.mat = unit_pair(N, i, n, 1, -1, -1, 0);
            b.weight = wt(n);
            for (int t = 0; t < n; ++t) b.weight[t] += 1;
            b.weight[i] += 1;
            b.prow = i; b.pcol = n;
            b.label = idx_label("P", i) + "+";
            g.basis.push_back(std::move(b));
        }
        for (int j = 0; j < n; ++j) {
            BasisElement b;
            b.mat = unit_pair(N, n, j, 1, -1, -1, 0);
            b.weight = wt(n);
            for (int t = 0; t < n; ++t) b.weight[t] -= 1;
            b.weight[j] -= 1;
            b.prow = n; b.pcol = j;
            b.label = idx_label("P", j) + "-";
            g.basis.push_back(std::move(b));
        }
        for (int i = 0; i < n; ++i) g.g_cartan.push_back(i);
    } else {
        // Split symmetric form: indices 0..n-1 paired with n..2n-1, plus
        // one (so_even) or two (so_odd) extra orthogonal coordinates.
        bool odd = family == Family::so_odd;
        int N = odd ? 2 * n + 2 : 2 * n + 1;
        g.size = N;
        g.rank_g = odd ? n + 1 : n;
        g.rank_k = n;
        g.form = RatMatrix::identity(N);
        for (int i = 0; i < n; ++i) {
            g.form.at(i, i) = 0;
            g.form.at(n + i, n + i) = 0;
            g.form.at(i, n + i) = 1;
            g.form.at(n + i, i) = 1;
        }
        g.theta_sign = RatMatrix::identity(N);
        g.theta_sign.at(N - 1, N - 1) = -1;

        auto push = [&](RatMatrix m, std::vector<int> w, int pr, int pc, std::string lab) {
            BasisElement b;
            b.mat = std::move(m);
            b.weight = std::move(w);
            b.prow = pr; b.pcol = pc;
            b.label = std::move(lab);
            g.basis.push_back(std::move(b));
        };

        for (int i = 0; i < n; ++i)  // Cartan of k
            push(unit_pair(N, i, i, 1, n + i, n + i, -1), wt(n), i, i, idx_label("A", i, i));
        for (int i = 0; i < n; ++i)  // e_i - e_j raising
            for (int j = 0; j < n; ++j) {
                if (i >= j) continue;
                auto w = wt(n); w[i] = 1; w[j] = -1;
                push(unit_pair(N, i, j, 1, n + j, n + i, -1), w, i, j, idx_label("A", i, j));
            }
        for (int i = 0; i < n; ++i)  // e_i + e_j
            for (int j = i + 1; j < n; ++j) {
                auto w = wt(n); w[i] = 1; w[j] = 1;
                push(unit_pair(N, i, n + j, 1, j, n + i, -1), w, i, n + j, idx_label("B", i, j));
            }
        if (odd)
            for (int i = 0; i < n; ++i) {  // e_i (short raising, k side)
                auto w = wt(n); w[i] = 1;
                push(unit_pair(N, i, 2 * n, 1, 2 * n, n + i, -1), w, i, 2 * n, idx_label("a", i));
            }
        for (int i = 0; i < n; ++i)  // e_j - e_i lowering
            for (int j = 0; j < n; ++j) {
                if (i <= j) continue;
                auto w = wt(n); w[i] = 1; w[j] = -1;
                push(unit_pair(N, i, j, 1, n + j, n + i, -1), w, i, j, idx_label("A", i, j));
            }
        for (int i = 0; i < n; ++i)  // -(e_i + e_j)
            for (int j = i + 1; j < n; ++j) {
                auto w = wt(n); w[i] = -1; w[j] = -1;
                push(unit_pair(N, n + i, j, 1, n + j, i, -1), w, n + i, j, idx_label("C", i, j));
            }
        if (odd)
            for (int i = 0; i < n; ++i) {  // -e_i (short lowering, k side)
                auto w = wt(n); w[i] = -1;
                push(unit_pair(N, n + i, 2 * n, 1, 2 * n, i, -1), w, n + i, 2 * n, idx_label("b", i));
            }
        g.dim_k = static_cast<int>(g.basis.size());

        int pc = N - 1;  // p couples everything to the last coordinate
        for (int i = 0; i < n; ++i) {
            auto w = wt(n); w[i] = 1;
            push(unit_pair(N, i, pc, 1, pc, n + i, -1), w, i, pc, idx_label(odd ? "c" : "a", i));
        }
        for (int i = 0; i < n; ++i) {
            auto w = wt(n); w[i] = -1;
            push(unit_pair(N, n + i, pc, 1, pc, i, -1), w, n + i, pc, idx_label(odd ? "d" : "b", i));
        }
        if (odd) push(unit_pair(N, 2 * n, 2 * n + 1, 1, 2 * n + 1, 2 * n, -1), wt(n), 2 * n, 2 * n + 1, "alpha");

        for (int i = 0; i < n; ++i) g.g_cartan.push_back(i);
        if (odd) g.g_cartan.push_back(g.dim_g() - 1);  // the alpha rotation extends the torus
    }

    int D = g.dim_g();
    g.gram = RatMatrix(D, D);
    for (int a = 0; a < D; ++a) {
        const RatMatrix& xa = g.basis[a].mat;
        for (int b = a; b < D; ++b) {
            const RatMatrix& xb = g.basis[b].mat;
            Rational t = 0;  // Tr(X_a X_b) using the sparsity of X_a
            for (int i = 0; i < g.size; ++i)
                for (int j = 0; j < g.size; ++j)
                    if (xa.at(i, j) != 0 && xb.at(j, i) != 0) t += xa.at(i, j) * xb.at(j, i);
            g.gram.at(a, b) = t;
            g.gram.at(b, a) = t;
        }
    }
    g.gram_inv = inverse(g.gram);
    return g;
}

inline bool is_member(const MatrixLieAlgebra& g, const RatMatrix& x) {
    if (x.rows() != g.size || x.cols() != g.size) return false;
    if (g.family == Family::su) {
        return x.trace() == 0;
    }
    return (x.transpose() * g.form + g.form * x).is_zero();
}

// Coordinates of x in the chosen basis; throws if x is outside the span.
inline std::vector<Rational> span_coordinates(const MatrixLieAlgebra& g, const RatMatrix& x) {
    if (x.rows() != g.size || x.cols() != g.size) throw std::invalid_argument("span_coordinates: size mismatch");
    std::vector<Rational> coords(g.dim_g());
    RatMatrix residual = x;
    for (int a = 0; a < g.dim_g(); ++a) {
        const auto& b = g.basis[a];
        coords[a] = x.at(b.prow, b.pcol) / b.pval;
        if (coords[a] != 0) residual = residual - coords[a] * b.mat;
    }
    if (!residual.is_zero()) throw std::domain_error("span_coordinates: element is not in the algebra");
    return coords;
}

inline RatMatrix project_to_k(const MatrixLieAlgebra& g, const RatMatrix& x) {
    RatMatrix sym = g.theta_sign * x * g.theta_sign;
    return Rational(1, 2) * (x + sym);
}

inline RatMatrix project_to_p(const MatrixLieAlgebra& g, const RatMatrix& x) {
    RatMatrix sym = g.theta_sign * x * g.theta_sign;
    return Rational(1, 2) * (x - sym);
}

inline Rational form_value(const MatrixLieAlgebra&, const RatMatrix& x, const RatMatrix& y) {
    return (x * y).trace();
}

// Infinitesimal action of z in k on polynomial functions of the coordinates:
// if [z, X_a] = sum_b M_ba X_b then z sends f to sum_{a,b} M_ba c_a df/dc_b,
// up to the overall sign convention (immaterial for kernels and invariance).
inline Polynomial coadjoint_derivation(const MatrixLieAlgebra& g, const RatMatrix& z, const Polynomial& f) {
    if (f.ambient() != g.dim_g()) throw std::invalid_argument("coadjoint_derivation: ambient mismatch");
    Polynomial out(f.ambient());
    std::vector<Polynomial> partials(g.dim_g(), Polynomial(f.ambient()));
    std::vector<bool> have(g.dim_g(), false);
    for (int a = 0; a < g.dim_g(); ++a) {
        RatMatrix br = bracket(z, g.basis[a].mat);
        if (br.is_zero()) continue;
        std::vector<Rational> mu = span_coordinates(g, br);
        Polynomial ca = Polynomial::variable(g.dim_g(), a);
        for (int b = 0; b < g.dim_g(); ++b) {
            if (mu[b] == 0) continue;
            if (!have[b]) {
                partials[b] = f.derivative(b);
                have[b] = true;
            }
            if (partials[b].is_zero()) continue;
            out += ca * partials[b].scale(mu[b]);
        }
    }
    return out;
}

inline Polynomial coadjoint_derivation(const MatrixLieAlgebra& g, int k_index, const Polynomial& f) {
    if (k_index < 0 || k_index >= g.dim_k) throw std::out_of_range("coadjoint_derivation: k index");
    return coadjoint_derivation(g, g.basis[k_index].mat, f);
}

// Ad-weights of the basis elements under the compact Cartan torus.
inline std::vector<std::vector<int>> torus_weights(const MatrixLieAlgebra& g) {
    std::vector<std::vector<int>> w;
    w.reserve(g.basis.size());
    for (const auto& b : g.basis) w.push_back(b.weight);
    return w;
}

// Weight of a coordinate monomial under the torus action on functions
// (coordinates transform by the negated ad-weight of their basis vector).
inline std::vector<int> monomial_torus_weight(const MatrixLieAlgebra& g, const Monomial& m) {
    std::vector<int> w(g.rank_k, 0);
    for (int a = 0; a < static_cast<int>(m.size()); ++a) {
        if (m[a] == 0) continue;
        for (int t = 0; t < g.rank_k; ++t) w[t] -= m[a] * g.basis[a].weight[t];
    }
    return w;
}

}  // namespace harmonia
