#pragma once

#include "invariants.hpp"

#include <stdexcept>
#include <vector>

namespace harmonia {

// Element built from a principal nilpotent compact part plus one coupling
// into the last coordinate; its centralizer in k is trivial, which is what
// makes the fiber carry the regular representation.
inline RatMatrix minimal_stabilizer_element(const MatrixLieAlgebra& g) {
    int n = g.n;
    RatMatrix x(g.size, g.size);
    if (g.family == Family::su) {
        for (int i = 0; i < n; ++i) x.at(i, i + 1) = 1;  // full Jordan block
        return x;
    }
    for (int i = 0; i + 1 < n; ++i) {  // J on the first block, -J^T on the paired block
        x.at(i, i + 1) = 1;
        x.at(n + i + 1, n + i) = -1;
    }
    if (g.family == Family::so_even) {
        if (n >= 2) {
            x.at(n - 2, n + (n - 1)) = 1;
            x.at(n - 1, n + (n - 2)) = -1;
        }
        x.at(n, 2 * n) = 1;  // the p coupling
        x.at(2 * n, 0) = -1;
        return x;
    }
    x.at(n - 1, 2 * n) = 1;  // short-root coupling inside k
    x.at(2 * n, 2 * n - 1) = -1;
    x.at(n, 2 * n + 1) = 1;  // the p coupling
    x.at(2 * n + 1, 0) = -1;
    return x;
}

// Compact part of the construction (for the orthogonal even family this is
// the element whose centralizer is an n-dimensional abelian pattern).
inline RatMatrix minimal_stabilizer_compact_part(const MatrixLieAlgebra& g) {
    return project_to_k(g, minimal_stabilizer_element(g));
}

inline std::vector<RatMatrix> centralizer_in_k(const MatrixLieAlgebra& g, const RatMatrix& x) {
    if (x.rows() != g.size || x.cols() != g.size) throw std::invalid_argument("centralizer_in_k: size");
    int N = g.size;
    RatMatrix m(N * N, g.dim_k);
    for (int a = 0; a < g.dim_k; ++a) {
        RatMatrix br = bracket(g.basis[a].mat, x);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m.at(i * N + j, a) = br.at(i, j);
    }
    std::vector<RatMatrix> out;
    for (const auto& coords : nullspace(m)) {
        RatMatrix z(N, N);
        for (int a = 0; a < g.dim_k; ++a)
            if (coords[a] != 0) z = z + coords[a] * g.basis[a].mat;
        out.push_back(std::move(z));
    }
    return out;
}

inline int orbit_dimension(const MatrixLieAlgebra& g, const RatMatrix& x) {
    return g.dim_k - static_cast<int>(centralizer_in_k(g, x).size());
}

// exp(tN) for nilpotent N, exactly
inline RatMatrix nilpotent_exp(const RatMatrix& nmat, const Rational& t) {
    if (nmat.rows() != nmat.cols()) throw std::invalid_argument("nilpotent_exp: not square");
    int size = nmat.rows();
    RatMatrix acc = RatMatrix::identity(size);
    RatMatrix pw = RatMatrix::identity(size);
    Rational coef = 1;
    for (int k = 1; k <= size; ++k) {
        pw = pw * nmat;
        if (pw.is_zero()) return acc;
        coef *= Rational(t) / k;
        acc = acc + coef * pw;
    }
    throw std::domain_error("nilpotent_exp: matrix is not nilpotent");
}

inline RatMatrix conjugate(const RatMatrix& e, const RatMatrix& x, const RatMatrix& e_inv) {
    return e * x * e_inv;
}

namespace detail {

struct PatternEntry {
    int row, col, alpha, coeff;  // alpha is 1-based
};

// Centralizer bases for the orthogonal even family at n = 6 and n = 7,
// entered literally; only the strict upper triangles of the B blocks are
// listed, the lower halves follow by antisymmetry.
inline const std::vector<PatternEntry>& pattern_a7() {
    static const std::vector<PatternEntry> v = {
        {0, 1, 7, 1}, {0, 3, 6, 1}, {0, 5, 5, 1}, {0, 6, 4, -1},
        {1, 2, 7, 1}, {1, 4, 6, 1}, {1, 6, 5, 1},
        {2, 3, 7, 1}, {2, 5, 6, 1},
        {3, 4, 7, 1}, {3, 6, 6, 1},
        {4, 5, 7, 1},
        {5, 6, 7, 1}};
    return v;
}
inline const std::vector<PatternEntry>& pattern_b7() {
    static const std::vector<PatternEntry> v = {
        {0, 1, 1, 1}, {0, 3, 2, 1}, {0, 5, 3, 1}, {0, 6, 4, 1},
        {1, 2, 2, -1}, {1, 4, 3, -1}, {1, 6, 5, 1},
        {2, 3, 3, 1}, {2, 5, 5, -2},
        {3, 4, 5, 2}, {3, 6, 6, 1},
        {4, 5, 6, -2},
        {5, 6, 7, 1}};
    return v;
}
inline const std::vector<PatternEntry>& pattern_a6() {
    static const std::vector<PatternEntry> v = {
        {0, 1, 6, 1}, {0, 3, 5, 1}, {0, 5, 4, 1}, {0, 5, 3, -1},
        {1, 2, 6, 1}, {1, 4, 5, 1},
        {2, 3, 6, 1}, {2, 5, 5, 1},
        {3, 4, 6, 1},
        {4, 5, 6, 1}};
    return v;
}
inline const std::vector<PatternEntry>& pattern_b6() {
    static const std::vector<PatternEntry> v = {
        {0, 1, 1, 1}, {0, 3, 2, 1}, {0, 5, 3, 1},
        {1, 2, 2, -1}, {1, 4, 4, -1},
        {2, 3, 4, 1}, {2, 5, 5, 1},
        {3, 4, 5, -2},
        {4, 5, 6, 1}};
    return v;
}

// Z = [[A, B, 0], [0, -A^T, 0], [0, 0, 0]] for the alpha unit vector
inline RatMatrix pattern_element(int n, int alpha) {
    const auto& pa = n == 7 ? pattern_a7() : pattern_a6();
    const auto& pb = n == 7 ? pattern_b7() : pattern_b6();
    RatMatrix z(2 * n + 1, 2 * n + 1);
    for (const auto& e : pa) {
        if (e.alpha != alpha) continue;
        z.at(e.row, e.col) += e.coeff;
        z.at(n + e.col, n + e.row) += -e.coeff;
    }
    for (const auto& e : pb) {
        if (e.alpha != alpha) continue;
        z.at(e.row, n + e.col) += e.coeff;
        z.at(e.col, n + e.row) += -e.coeff;
    }
    return z;
}

}  // namespace detail

struct CentralizerStructure {
    int n = 0;
    int computed_dim = 0;
    int expected_dim = 0;
    bool dim_ok = false;
    bool block_pattern_ok = false;     // no lower-left coupling, strictly upper A blocks
    bool printed_pattern_checked = false;
    bool printed_pattern_ok = false;   // literal n=6 / n=7 bases commute and span
    bool ok() const { return dim_ok && block_pattern_ok && (!printed_pattern_checked || printed_pattern_ok); }
};

// Structure of the centralizer of the compact-part element for the
// orthogonal even family.
inline CentralizerStructure verify_centralizer_structure(const MatrixLieAlgebra& g) {
    if (g.family != Family::so_even) throw std::invalid_argument("verify_centralizer_structure: even orthogonal family only");
    int n = g.n;
    CentralizerStructure out;
    out.n = n;
    out.expected_dim = n;
    RatMatrix x0 = minimal_stabilizer_compact_part(g);
    auto cz = centralizer_in_k(g, x0);
    out.computed_dim = static_cast<int>(cz.size());
    out.dim_ok = out.computed_dim == out.expected_dim;

    // the inner-entry pattern is only determined for n >= 4; below that the
    // dimension count is the whole statement
    out.block_pattern_ok = true;
    if (n >= 4) {
        for (const auto& z : cz) {
            for (int i = 0; i < n && out.block_pattern_ok; ++i)
                for (int j = 0; j <= i; ++j)
                    if (z.at(i, j) != 0 || z.at(n + i, j) != 0) {  // A strictly upper, C block empty
                        out.block_pattern_ok = false;
                        break;
                    }
        }
    }

    if (n == 6 || n == 7) {
        out.printed_pattern_checked = true;
        out.printed_pattern_ok = true;
        std::vector<std::vector<Rational>> span_rows;
        for (const auto& z : cz) span_rows.push_back(span_coordinates(g, z));
        for (int alpha = 1; alpha <= n; ++alpha) {
            RatMatrix z = detail::pattern_element(n, alpha);
            if (!bracket(z, x0).is_zero() || !is_member(g, z)) {
                out.printed_pattern_ok = false;
                break;
            }
            span_rows.push_back(span_coordinates(g, z));
        }
        if (out.printed_pattern_ok) {
            RatMatrix all(static_cast<int>(span_rows.size()), g.dim_g());
            for (std::size_t i = 0; i < span_rows.size(); ++i)
                for (int j = 0; j < g.dim_g(); ++j) all.at(static_cast<int>(i), j) = span_rows[i][j];
            // printed elements must lie in the computed centralizer and span it
            out.printed_pattern_ok = rank(all) == out.computed_dim && out.computed_dim == n;
            RatMatrix printed_only(n, g.dim_g());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < g.dim_g(); ++j)
                    printed_only.at(i, j) = span_rows[span_rows.size() - n + i][j];
            out.printed_pattern_ok = out.printed_pattern_ok && rank(printed_only) == n;
        }
    }
    return out;
}

struct StabilizerReport {
    bool member = false;
    int centralizer_dim = -1;
    int orbit_dim = -1;
    int dim_k = 0;
    bool compact_step_ok = true;   // so_even: centralizer of the compact part has dim n
    bool conjugation_stable = true;
    bool ok() const {
        return member && centralizer_dim == 0 && orbit_dim == dim_k && compact_step_ok && conjugation_stable;
    }
};

inline StabilizerReport verify_minimal_stabilizer(const MatrixLieAlgebra& g) {
    StabilizerReport rep;
    rep.dim_k = g.dim_k;
    RatMatrix x = minimal_stabilizer_element(g);
    rep.member = is_member(g, x);
    auto cz = centralizer_in_k(g, x);
    rep.centralizer_dim = static_cast<int>(cz.size());
    rep.orbit_dim = g.dim_k - rep.centralizer_dim;
    if (g.family == Family::so_even)
        rep.compact_step_ok = static_cast<int>(centralizer_in_k(g, minimal_stabilizer_compact_part(g)).size()) == g.n;

    // conjugating by a unipotent group element must not change the
    // centralizer dimension
    if (g.dim_k > g.rank_k) {
        const RatMatrix& nil = g.basis[g.rank_k].mat;  // first raising element
        RatMatrix e = nilpotent_exp(nil, 1);
        RatMatrix e_inv = nilpotent_exp(nil, -1);
        RatMatrix conj = conjugate(e, x, e_inv);
        rep.conjugation_stable = static_cast<int>(centralizer_in_k(g, conj).size()) == rep.centralizer_dim;
    }
    return rep;
}

}  // namespace harmonia
