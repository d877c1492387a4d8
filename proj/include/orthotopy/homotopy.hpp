#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "fgab.hpp"

namespace orthotopy {

// The four families of complex orthogonal-type groups.
enum class GroupFamily { O, SO, PO, PSO };

inline std::string to_string(GroupFamily f) {
    switch (f) {
        case GroupFamily::O: return "O";
        case GroupFamily::SO: return "SO";
        case GroupFamily::PO: return "PO";
        case GroupFamily::PSO: return "PSO";
    }
    return "?";
}

inline std::optional<GroupFamily> parse_family(const std::string& s) {
    if (s == "O") return GroupFamily::O;
    if (s == "SO") return GroupFamily::SO;
    if (s == "PO") return GroupFamily::PO;
    if (s == "PSO") return GroupFamily::PSO;
    return std::nullopt;
}

// Stable pi_i(O): period 8 in i.
// i = 0, 1 (mod 8) -> Z/2; i = 3, 7 (mod 8) -> Z; otherwise trivial.
inline FgAbGroup bott_stable(long long i) {
    if (i < 0) throw OutOfRangeError("bott_stable: degree must be >= 0");
    switch (i % 8) {
        case 0:
        case 1: return make_group({2});
        case 3:
        case 7: return make_group({0});
        default: return trivial_group();
    }
}

// Center of Spin(n), n >= 3: Z/2 for n odd, Z/2 + Z/2 for n = 0 (mod 4),
// Z/4 for n = 2 (mod 4). Also equal to pi_1(PSO(n)).
inline FgAbGroup spin_center(long long n) {
    if (n < 3) {
        std::ostringstream os;
        os << "spin_center: n = " << n << " is out of range (need n >= 3)";
        throw OutOfRangeError(os.str());
    }
    if (n % 2 == 1) return make_group({2});
    if (n % 4 == 0) return make_group({2, 2});
    return make_group({4});
}

// Structured value of the first unstable group pi_{n-1}(O(n)), n >= 2.
// kernel holds the summands killed by stabilization, stable equals
// bott_stable(n-1), and total is the positional concatenation
// kernel ++ stable. split is false only at n = 2: there the extension does
// not split, total is Z, the kernel slot is left empty, and stabilization
// is the reduction Z -> Z/2.
struct UnstablePi {
    FgAbGroup kernel, stable, total;
    bool split;
};

inline UnstablePi first_unstable(long long n) {
    if (n < 2) {
        std::ostringstream os;
        os << "first_unstable: n = " << n << " is out of range (need n >= 2)";
        throw OutOfRangeError(os.str());
    }
    if (n == 2) return {trivial_group(), make_group({2}), make_group({0}), false};
    if (n == 3 || n == 7) return {trivial_group(), trivial_group(), trivial_group(), true};
    FgAbGroup kernel;
    switch (n % 8) {
        case 0:
        case 2:
        case 4:
        case 6: kernel = make_group({0}); break;
        default: kernel = make_group({2}); break;
    }
    const FgAbGroup stable = bott_stable(n - 1);
    return {kernel, stable, direct_sum(kernel, stable), true};
}

struct PiQuery {
    GroupFamily family;
    long long n;
    long long i;
};

// pi_i of the family member of degree n, for 0 <= i <= n-1. Degrees above
// the first unstable one are refused. Small degrees use the exceptional
// identifications O(1) = S^0, SO(2) = S^1, PO(2) = O(2), PSO(2) = SO(2),
// and PO = PSO = SO in odd degree.
inline FgAbGroup pi(GroupFamily family, long long n, long long i) {
    if (n < 1) throw OutOfRangeError("pi: n must be >= 1");
    if (i < 0) throw OutOfRangeError("pi: i must be >= 0");
    if (i > n - 1) {
        std::ostringstream os;
        os << "pi_" << i << "(" << to_string(family) << "(" << n
           << ")) is outside the covered range: degrees stop at the first unstable degree n - 1 = "
           << (n - 1);
        throw UnsupportedRangeError(os.str());
    }

    if (family == GroupFamily::PO || family == GroupFamily::PSO) {
        if (n == 1) return trivial_group();
        if (n % 2 == 1) {
            family = GroupFamily::SO; // PO(odd) = PSO(odd) = SO(odd)
        } else if (n == 2) {
            family = family == GroupFamily::PO ? GroupFamily::O : GroupFamily::SO;
        }
    }

    if (i == 0) {
        switch (family) {
            case GroupFamily::O:
            case GroupFamily::PO: return make_group({2});
            default: return trivial_group();
        }
    }
    if (i == n - 1) return first_unstable(n).total;
    // 1 <= i < n - 1 forces n >= 3.
    if (i == 1 && (family == GroupFamily::PO || family == GroupFamily::PSO))
        return spin_center(n); // n even, n >= 4 here
    return bott_stable(i);
}

inline FgAbGroup pi(const PiQuery& q) { return pi(q.family, q.n, q.i); }

} // namespace orthotopy
