#pragma once

#include "monomial.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmonia {

// Sparse multivariate polynomial over Q with a fixed ambient variable count.
// Terms are kept in a grlex-ordered map and zero coefficients are never
// stored, so equal polynomials compare equal structurally.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() : ambient_(0) {}
    explicit Polynomial(int ambient) : ambient_(ambient) {
        if (ambient < 0) throw std::invalid_argument("Polynomial: negative ambient");
    }

    static Polynomial constant(int ambient, const Rational& c) {
        Polynomial p(ambient);
        if (c != 0) p.terms_[Monomial(ambient, 0)] = c;
        return p;
    }

    static Polynomial variable(int ambient, int index) {
        if (index < 0 || index >= ambient) throw std::out_of_range("Polynomial::variable: index");
        Polynomial p(ambient);
        Monomial m(ambient, 0);
        m[index] = 1;
        p.terms_[m] = 1;
        return p;
    }

    static Polynomial monomial(int ambient, const Monomial& m, const Rational& c = 1) {
        if (static_cast<int>(m.size()) != ambient) throw std::invalid_argument("Polynomial::monomial: size");
        Polynomial p(ambient);
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    int ambient() const { return ambient_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (static_cast<int>(m.size()) != ambient_) throw std::invalid_argument("add_term: ambient mismatch");
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int t = total_degree(m);
            if (d == -1) d = t;
            else if (t != d) return false;
        }
        return true;
    }

    // Largest monomial in grlex order.
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::logic_error("leading_monomial of zero");
        return terms_.rbegin()->first;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r(ambient_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial r(a.ambient_);
        Monomial prod(a.ambient_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                for (int i = 0; i < a.ambient_; ++i) prod[i] = ma[i] + mb[i];
                r.add_term(prod, ca * cb);
            }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scale(const Rational& c) const {
        Polynomial r(ambient_);
        if (c != 0)
            for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scale(c); }

    bool operator==(const Polynomial& o) const { return ambient_ == o.ambient_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(int var) const {
        if (var < 0 || var >= ambient_) throw std::out_of_range("derivative: variable index");
        Polynomial r(ambient_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial d = m;
            d[var] -= 1;
            r.add_term(d, c * m[var]);
        }
        return r;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != ambient_) throw std::invalid_argument("evaluate: point size");
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < ambient_; ++i)
                for (int e = 0; e < m[i]; ++e) t *= point[i];
            total += t;
        }
        return total;
    }

    // Substitute variable i by images[i] (all sharing one target ambient)
    // and expand. Used for linear changes of coordinates, but the images
    // may be arbitrary polynomials.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != ambient_) throw std::invalid_argument("substitute: image count");
        int target = ambient_ == 0 ? 0 : images[0].ambient();
        for (const auto& g : images)
            if (g.ambient() != target) throw std::invalid_argument("substitute: mixed target ambients");
        Polynomial result(target);
        std::vector<std::vector<Polynomial>> powers(ambient_);  // powers[i][e] = images[i]^e
        for (int i = 0; i < ambient_; ++i) powers[i].push_back(Polynomial::constant(target, 1));
        for (const auto& [m, c] : terms_) {
            Polynomial term = Polynomial::constant(target, c);
            for (int i = 0; i < ambient_; ++i) {
                while (static_cast<int>(powers[i].size()) <= m[i])
                    powers[i].push_back(powers[i].back() * images[i]);
                if (m[i] > 0) term *= powers[i][m[i]];
            }
            result += term;
        }
        return result;
    }

    std::string str(const std::string& stem = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print grlex-descending, leading term first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            Rational a = c < 0 ? Rational(-c) : c;
            bool unit = (a == 1) && total_degree(it->first) > 0;
            if (!unit) os << a.str();
            bool any = false;
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                int e = it->first[i];
                if (e == 0) continue;
                if (any || !unit) os << "*";
                os << stem << i;
                if (e > 1) os << "^" << e;
                any = true;
            }
            first = false;
        }
        return os.str();
    }

  private:
    void check_same(const Polynomial& o) const {
        if (ambient_ != o.ambient_) throw std::invalid_argument("ambient mismatch");
    }

    int ambient_;
    TermMap terms_;
};

// Apply u, read as a constant-coefficient differential operator, to f:
// each monomial x^a of u acts as the iterated partial d^a.
inline Polynomial apply_operator(const Polynomial& u, const Polynomial& f) {
    if (u.ambient() != f.ambient()) throw std::invalid_argument("apply_operator: ambient mismatch");
    int n = u.ambient();
    Polynomial out(n);
    Monomial shifted(n);
    for (const auto& [a, ca] : u.terms()) {
        for (const auto& [b, cb] : f.terms()) {
            Rational factor = ca * cb;
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                if (b[i] < a[i]) { ok = false; break; }
                shifted[i] = b[i] - a[i];
                for (int e = b[i]; e > shifted[i]; --e) factor *= e;
            }
            if (ok) out.add_term(shifted, factor);
        }
    }
    return out;
}

// <u, f> = (d(u) f)(0).  On monomials: <x^a, x^b> = a! [a == b].
inline Rational pairing(const Polynomial& u, const Polynomial& f) {
    if (u.ambient() != f.ambient()) throw std::invalid_argument("pairing: ambient mismatch");
    Rational total = 0;
    for (const auto& [a, ca] : u.terms()) {
        Rational cf = f.coefficient(a);
        if (cf != 0) total += ca * cf * Rational(exponent_factorial(a));
    }
    return total;
}

// Wrapper making the "polynomial used as operator" role explicit in APIs.
struct DifferentialOperator {
    Polynomial symbol;
    Polynomial apply(const Polynomial& f) const { return apply_operator(symbol, f); }
};

// Matrix with polynomial entries, for generic (symbolic) algebra elements.
class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0), ambient_(0) {}
    PolyMatrix(int rows, int cols, int ambient)
        : rows_(rows), cols_(cols), ambient_(ambient),
          a_(static_cast<std::size_t>(rows) * cols, Polynomial(ambient)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int ambient() const { return ambient_; }

    Polynomial& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Polynomial& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    PolyMatrix submatrix(int r0, int c0, int rows, int cols) const {
        PolyMatrix s(rows, cols, ambient_);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) s.at(i, j) = at(r0 + i, c0 + j);
        return s;
    }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
        if (x.cols_ != y.rows_ || x.ambient_ != y.ambient_)
            throw std::invalid_argument("PolyMatrix product: shape or ambient mismatch");
        PolyMatrix r(x.rows_, y.cols_, x.ambient_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const Polynomial& v = x.at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j)
                    if (!y.at(k, j).is_zero()) r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }

    Polynomial trace() const {
        if (rows_ != cols_) throw std::invalid_argument("PolyMatrix trace: not square");
        Polynomial s(ambient_);
        for (int i = 0; i < rows_; ++i) s += at(i, i);
        return s;
    }

    bool is_zero() const {
        for (const auto& p : a_)
            if (!p.is_zero()) return false;
        return true;
    }

  private:
    int rows_, cols_, ambient_;
    std::vector<Polynomial> a_;
};

}  // namespace harmonia
