#pragma once

#include <sstream>
#include <utility>

#include "errors.hpp"
#include "intmat.hpp"

namespace orthotopy {

// Strictly positive solution of |v*b - u*a| = 1. sign is v*b - u*a.
struct BezoutPair {
    Int u, v;
    int sign;
};

namespace detail {

inline Int floor_div(const Int& p, const Int& q) {
    // q > 0
    Int r = p % q;
    if (r < 0) r += q;
    return (p - r) / q;
}

inline Int ceil_div(const Int& p, const Int& q) { return floor_div(p + q - 1, q); }

// x, y with a*x + b*y = gcd(a, b).
inline void extended_gcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    x = x0;
    y = y0;
}

} // namespace detail

// The unique pair u, v >= 1 with |v*b - u*a| = 1 minimizing u + v, ties
// broken by minimal u. Both sign branches are considered; within a branch
// the solution set is (u0 + t*b, v0 + t*a), so the smallest admissible t
// gives the branch minimum.
inline BezoutPair positive_bezout(const Int& a, const Int& b) {
    if (a < 1 || b < 1) {
        std::ostringstream os;
        os << "positive_bezout: arguments must be >= 1, got a = " << a << ", b = " << b;
        throw OutOfRangeError(os.str());
    }
    if (gcd(a, b) != 1) {
        std::ostringstream os;
        os << "positive_bezout: " << a << " and " << b << " are not coprime (gcd = " << gcd(a, b)
           << ")";
        throw NotCoprimeError(os.str());
    }

    Int x, y;
    detail::extended_gcd(a, b, x, y); // a*x + b*y = 1

    BezoutPair best{0, 0, 0};
    bool have = false;
    for (int sign : {+1, -1}) {
        // v*b - u*a = sign with base solution (u0, v0).
        const Int u0 = sign > 0 ? Int(-x) : x;
        const Int v0 = sign > 0 ? y : Int(-y);
        const Int t = std::max(detail::ceil_div(1 - u0, b), detail::ceil_div(1 - v0, a));
        const Int u = u0 + t * b;
        const Int v = v0 + t * a;
        if (!have || u + v < best.u + best.v ||
            (u + v == best.u + best.v && u < best.u)) {
            best = {u, v, sign};
            have = true;
        }
    }
    return best;
}

} // namespace orthotopy
