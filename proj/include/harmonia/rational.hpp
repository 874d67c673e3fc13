#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmonia {

// Exact scalars. All arithmetic in the library is over Q; nothing is ever
// rounded. cpp_rational keeps values normalized (lowest terms, positive
// denominator, 0 == 0/1), which is exactly the canonical form we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Scales a rational vector to a primitive integer vector (content 1).
// Zero vectors stay zero. The sign of the first nonzero entry is preserved.
inline std::vector<Int> clear_denominators(const std::vector<Rational>& row) {
    Int den = 1;
    for (const auto& q : row) den = lcm_int(den, denominator(q));
    std::vector<Int> out(row.size());
    Int content = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        out[i] = numerator(row[i]) * (den / denominator(row[i]));
        content = gcd_int(content, out[i]);
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace harmonia
