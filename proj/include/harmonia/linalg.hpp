#pragma once

#include "polynomial.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace harmonia {

// Dense matrix over Q. Sizes in this library stay small (a few hundred rows
// at most), so a flat vector is plenty.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative size");
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Rational trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace: not square");
        Rational s = 0;
        for (int i = 0; i < rows_; ++i) s += at(i, i);
        return s;
    }

    friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
        x.check_same_shape(y);
        RatMatrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
        x.check_same_shape(y);
        RatMatrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        RatMatrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const Rational& v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const Rational& w = y.at(k, j);
                    if (w != 0) r.at(i, j) += v * w;
                }
            }
        return r;
    }
    friend RatMatrix operator*(const Rational& c, RatMatrix m) {
        for (auto& v : m.a_) v *= c;
        return m;
    }

    RatMatrix pow(int e) const {
        if (rows_ != cols_) throw std::invalid_argument("pow: not square");
        if (e < 0) throw std::invalid_argument("pow: negative exponent");
        RatMatrix r = identity(rows_);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

  private:
    void check_same_shape(const RatMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rational> a_;
};

inline RatMatrix bracket(const RatMatrix& x, const RatMatrix& y) { return x * y - y * x; }

// --- fraction-free reduced echelon form -----------------------------------
//
// Rows are primitive integer vectors. Pivots are chosen deterministically:
// leftmost nonzero column, then the candidate row with smallest |pivot|
// (lowest index on ties). Each cross-multiplication step is followed by a
// content strip, which keeps entries small without ever leaving Z.

struct EchelonForm {
    std::vector<std::vector<Int>> rows;  // primitive, pivot entries positive, sorted by pivot column
    std::vector<int> pivot_cols;         // one per row, strictly increasing
    int rank() const { return static_cast<int>(rows.size()); }
};

namespace detail {

inline void make_primitive(std::vector<Int>& row) {
    Int g = 0;
    for (const auto& v : row) {
        g = gcd_int(g, v);
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& v : row) v /= g;
}

}  // namespace detail

inline EchelonForm integer_rref(std::vector<std::vector<Int>> rows) {
    std::size_t cols = 0;
    for (const auto& r : rows) cols = std::max(cols, r.size());
    for (auto& r : rows) {
        r.resize(cols, Int(0));
        detail::make_primitive(r);
    }
    EchelonForm out;
    std::vector<bool> used(rows.size(), false);
    std::vector<int> pivot_row;
    for (std::size_t col = 0; col < cols; ++col) {
        int pick = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i][col] == 0) continue;
            if (pick < 0 || abs_int(rows[i][col]) < abs_int(rows[pick][col])) pick = static_cast<int>(i);
        }
        if (pick < 0) continue;
        used[pick] = true;
        auto& p = rows[pick];
        if (p[col] < 0)
            for (auto& v : p) v = -v;
        // eliminate in every other row, pivot rows included, so the result
        // is fully reduced and each pivot column is zero off its own row
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == pick || rows[i][col] == 0) continue;
            auto& r = rows[i];
            Int g = gcd_int(p[col], r[col]);
            Int mp = r[col] / g, mr = p[col] / g;
            for (std::size_t j = 0; j < cols; ++j) r[j] = mr * r[j] - mp * p[j];
            detail::make_primitive(r);
        }
        out.pivot_cols.push_back(static_cast<int>(col));
        pivot_row.push_back(pick);
    }
    for (int i : pivot_row) out.rows.push_back(std::move(rows[i]));
    return out;  // pivot columns were visited left to right, so rows are already sorted
}

inline std::vector<std::vector<Int>> to_integer_rows(const RatMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows());
    std::vector<Rational> buf(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) buf[j] = m.at(i, j);
        rows[i] = clear_denominators(buf);
    }
    return rows;
}

inline int rank(const RatMatrix& m) { return integer_rref(to_integer_rows(m)).rank(); }

// Canonical basis of the right null space: the unique reduced echelon basis
// (computed by re-reducing the free-variable kernel vectors), so the result
// is independent of row order in the input.
inline std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
    EchelonForm ech = integer_rref(to_integer_rows(m));
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Int>> kernel_rows;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free_col] = 1;
        for (int r = 0; r < ech.rank(); ++r) {
            const auto& row = ech.rows[r];
            if (row[free_col] != 0) v[ech.pivot_cols[r]] = -Rational(row[free_col], row[ech.pivot_cols[r]]);
        }
        kernel_rows.push_back(clear_denominators(v));
    }
    EchelonForm canon = integer_rref(std::move(kernel_rows));
    std::vector<std::vector<Rational>> out;
    for (int r = 0; r < canon.rank(); ++r) {
        std::vector<Rational> v(n);
        Rational piv(canon.rows[r][canon.pivot_cols[r]]);
        for (int j = 0; j < n; ++j) v[j] = Rational(canon.rows[r][j]) / piv;
        out.push_back(std::move(v));
    }
    return out;
}

inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pick = -1;
        for (int i = col; i < n; ++i)
            if (aug.at(i, col) != 0) { pick = i; break; }
        if (pick < 0) throw std::domain_error("inverse: singular matrix");
        if (pick != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(pick, j), aug.at(col, j));
        Rational p = aug.at(col, col);
        for (int j = 0; j < 2 * n; ++j) aug.at(col, j) /= p;
        for (int i = 0; i < n; ++i) {
            if (i == col || aug.at(i, col) == 0) continue;
            Rational f = aug.at(i, col);
            for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(col, j);
        }
    }
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Joint kernel of a family of linear maps on the span of `domain` monomials
// (all of one degree). Kernel vectors come back as polynomials in reduced
// echelon form with respect to the given monomial order.
inline std::vector<Polynomial> kernel_of_linear_maps(
    const std::vector<std::function<Polynomial(const Polynomial&)>>& maps,
    const std::vector<Monomial>& domain, int ambient) {
    if (domain.empty()) return {};
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : maps) {
        std::map<Monomial, int, GrlexLess> local;  // target monomial -> row within this map's block
        std::vector<std::vector<Rational>> block;
        for (std::size_t j = 0; j < domain.size(); ++j) {
            Polynomial img = f(Polynomial::monomial(ambient, domain[j]));
            for (const auto& [m, c] : img.terms()) {
                auto [it, fresh] = local.emplace(m, static_cast<int>(local.size()));
                if (fresh) block.emplace_back(domain.size(), Rational(0));
                block[it->second][j] = c;
            }
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }
    RatMatrix constraint(static_cast<int>(rows.size()), static_cast<int>(domain.size()));
    for (int i = 0; i < constraint.rows(); ++i)
        for (int j = 0; j < constraint.cols(); ++j) constraint.at(i, j) = rows[i][j];
    auto vecs = nullspace(constraint);
    std::vector<Polynomial> out;
    for (const auto& v : vecs) {
        Polynomial p(ambient);
        for (std::size_t j = 0; j < domain.size(); ++j) p.add_term(domain[j], v[j]);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace harmonia
