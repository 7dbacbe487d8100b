#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int r = 1;
    for (Int i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;  // exact at every step: r is C(n-kk+i, i)
    }
    return r;
}

inline Int ipow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// x^e for integer e of either sign; e < 0 requires x != 0
inline Rat rat_pow(const Rat& x, long e) {
    if (e >= 0) {
        Rat r = 1;
        Rat b = x;
        unsigned long k = (unsigned long)e;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }
    if (x == 0) throw precondition_error("rat_pow: 0 to a negative power");
    return Rat(1) / rat_pow(x, -e);
}

inline Int floor_rat(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (x < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (x > 0 && q * denominator(x) != numerator(x)) ++q;
    return q;
}

// floor of the square root
inline Int isqrt(const Int& x) {
    if (x < 0) throw precondition_error("isqrt of negative");
    return boost::multiprecision::sqrt(x);
}

// floor of the cube root (binary search; inputs here are never astronomical)
inline Int icbrt(const Int& x) {
    if (x < 0) throw precondition_error("icbrt of negative");
    if (x == 0) return 0;
    Int lo = 1, hi = Int(1) << (unsigned)(msb(x) / 3 + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (mid * mid * mid <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline bool is_perfect_square(const Int& x, Int* root = nullptr) {
    if (x < 0) return false;
    Int r = isqrt(x);
    if (root) *root = r;
    return r * r == x;
}

inline bool is_perfect_cube(const Int& x, Int* root = nullptr) {
    if (x < 0) return false;
    Int r = icbrt(x);
    if (root) *root = r;
    return r * r * r == x;
}

// "p" or "p/q"
inline Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw parse_error("not a rational: '" + s + "'"); };
    auto digits = [&](const std::string& t) {
        if (t.empty()) bad();
        size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) bad();
        for (; i < t.size(); ++i)
            if (!isdigit((unsigned char)t[i])) bad();
    };
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        digits(s);
        return Rat(Int(s));
    }
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    digits(p);
    digits(q);
    Int den(q);
    if (den == 0) throw parse_error("zero denominator: '" + s + "'");
    return Rat(Int(p), den);
}

inline std::string rat_str(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace ramsey
