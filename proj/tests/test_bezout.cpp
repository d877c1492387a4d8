#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include <orthotopy/bezout.hpp>
#include <orthotopy/oracle.hpp>

using orthotopy::BezoutPair;
using orthotopy::Int;
using orthotopy::positive_bezout;

namespace {

// Reference search: scan a box that provably contains the minimum. Any
// admissible (u, v) can be shifted by (b, a), so the minimal pair satisfies
// u <= b and v <= a (shifting down otherwise keeps both positive).
BezoutPair brute_force(long long a, long long b) {
    BezoutPair best{Int(0), Int(0), 0};
    bool found = false;
    for (long long u = 1; u <= 2 * b + 2; ++u)
        for (long long v = 1; v <= 2 * a + 2; ++v) {
            const long long val = v * b - u * a;
            if (val != 1 && val != -1) continue;
            if (!found || u + v < best.u + best.v ||
                (u + v == best.u + best.v && u < best.u)) {
                best = {Int(u), Int(v), val > 0 ? 1 : -1};
                found = true;
            }
        }
    REQUIRE(found);
    return best;
}

} // namespace

TEST_CASE("pinned small values") {
    {
        // |1*5 - 2*3| = 1 beats every pair with a larger coordinate sum.
        const BezoutPair p = positive_bezout(3, 5);
        REQUIRE(p.u == 2);
        REQUIRE(p.v == 1);
        REQUIRE(p.sign == -1);
    }
    {
        const BezoutPair p = positive_bezout(1, 1);
        REQUIRE(p.u == 1);
        REQUIRE(p.v == 2);
        REQUIRE(p.sign == 1);
    }
    {
        const BezoutPair p = positive_bezout(8, 3);
        REQUIRE(p.u == 1);
        REQUIRE(p.v == 3);
        REQUIRE(p.sign == 1);
    }
    {
        const BezoutPair p = positive_bezout(2, 3);
        REQUIRE(p.u == 1);
        REQUIRE(p.v == 1);
        REQUIRE(p.sign == 1);
    }
    {
        const BezoutPair p = positive_bezout(5, 1);
        REQUIRE(p.v * 1 - p.u * 5 == p.sign);
    }
}

TEST_CASE("input validation") {
    REQUIRE_THROWS_AS(positive_bezout(0, 5), orthotopy::OutOfRangeError);
    REQUIRE_THROWS_AS(positive_bezout(5, 0), orthotopy::OutOfRangeError);
    REQUIRE_THROWS_AS(positive_bezout(-3, 5), orthotopy::OutOfRangeError);
    REQUIRE_THROWS_AS(positive_bezout(6, 9), orthotopy::NotCoprimeError);
    REQUIRE_THROWS_AS(positive_bezout(4, 4), orthotopy::NotCoprimeError);
}

TEST_CASE("matches exhaustive search on all small coprime pairs") {
    for (long long a = 1; a <= 40; ++a)
        for (long long b = 1; b <= 40; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const BezoutPair got = positive_bezout(a, b);
            const BezoutPair want = brute_force(a, b);
            INFO("a=" << a << " b=" << b);
            REQUIRE(got.u == want.u);
            REQUIRE(got.v == want.v);
            REQUIRE(got.sign == want.sign);
        }
}

TEST_CASE("postconditions on random large pairs") {
    orthotopy::SplitMix64 rng(424242);
    int done = 0;
    while (done < 200) {
        const long long a = 1 + static_cast<long long>(rng.next() % 1000000);
        const long long b = 1 + static_cast<long long>(rng.next() % 1000000);
        if (std::gcd(a, b) != 1) continue;
        const BezoutPair p = positive_bezout(a, b);
        REQUIRE(p.u >= 1);
        REQUIRE(p.v >= 1);
        REQUIRE(p.v * b - p.u * a == p.sign);
        REQUIRE((p.sign == 1 || p.sign == -1));
        // Minimality within one period: stepping either coordinate down by a
        // full period would leave the positive quadrant.
        REQUIRE((p.u - b < 1 || p.v - a < 1));
        ++done;
    }
}
