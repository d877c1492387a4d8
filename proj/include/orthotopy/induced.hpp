#pragma once

#include <sstream>

#include "errors.hpp"
#include "fgab.hpp"
#include "homotopy.hpp"

namespace orthotopy {

namespace detail {

inline void check_degree_at_most(long long i, long long bound, const char* what) {
    if (i < 0) throw OutOfRangeError("induced map: degree must be >= 0");
    if (i > bound) {
        std::ostringstream os;
        os << what << ": degree i = " << i << " exceeds the valid bound " << bound;
        throw UnsupportedRangeError(os.str());
    }
}

inline long long checked_product(long long a, long long b, const char* what) {
    const Int p = Int(a) * Int(b);
    if (p > Int(1) << 62) throw OutOfRangeError(std::string(what) + ": degree product overflows");
    return static_cast<long long>(p);
}

} // namespace detail

// Stabilization pi_i(O(n)) -> pi_i(O(target_degree)). Identity below the
// first unstable degree. At i = n-1 it is the projection onto the stable
// summand; for n = 2 the extension is non-split and the map is the
// reduction Z -> Z/2; for n = 3, 7 it is the zero map between trivial
// groups.
inline GroupHom stabilization(long long n, long long target_degree, long long i) {
    if (n < 1 || target_degree < n) {
        std::ostringstream os;
        os << "stabilization: need 1 <= n <= target degree, got n = " << n
           << ", target degree = " << target_degree;
        throw OutOfRangeError(os.str());
    }
    detail::check_degree_at_most(i, n - 1, "stabilization");
    const FgAbGroup source = pi(GroupFamily::O, n, i);
    if (target_degree == n) return identity_hom(source);
    const FgAbGroup target = pi(GroupFamily::O, target_degree, i);
    if (i < n - 1) return GroupHom(source, target, IntMat::identity(source.rank()));

    // i = n-1 < target_degree - 1: project away the unstable kernel. The
    // n = 2 case lands here as well: the kernel slot is empty and the
    // 1 x 1 identity block is the reduction Z -> Z/2.
    const UnstablePi u = first_unstable(n);
    IntMat m(u.stable.rank(), source.rank());
    const std::size_t kernel_rank = source.rank() - u.stable.rank();
    for (std::size_t r = 0; r < u.stable.rank(); ++r) m(r, kernel_rank + r) = 1;
    return GroupHom(source, target, m);
}

// Map on pi_i induced by the block sum O(m) x O(n) -> O(m+n):
// (x, y) -> s(x) + s(y).
inline GroupHom direct_sum_induced(long long m, long long n, long long i) {
    if (m < 1 || n < 1) throw OutOfRangeError("direct_sum_induced: degrees must be >= 1");
    detail::check_degree_at_most(i, std::min(m, n) - 1, "direct_sum_induced");
    return hom_hstack(stabilization(m, m + n, i), stabilization(n, m + n, i));
}

// Map on pi_i induced by the r-fold block sum O(n) -> O(rn): x -> r * s(x).
inline GroupHom r_fold_sum_induced(long long n, long long r, long long i) {
    if (n < 1 || r < 1) throw OutOfRangeError("r_fold_sum_induced: need n >= 1 and r >= 1");
    detail::check_degree_at_most(i, n - 1, "r_fold_sum_induced");
    const long long rn = detail::checked_product(r, n, "r_fold_sum_induced");
    return hom_scale(r, stabilization(n, rn, i));
}

// Map on pi_i induced by the tensor product O(m) x O(n) -> O(mn):
// (x, y) -> n * s(x) + m * s(y). At i = min(m,n) - 1 the smaller factor's
// stabilization is the stable projection.
inline GroupHom tensor_induced(long long m, long long n, long long i) {
    if (m < 1 || n < 1) throw OutOfRangeError("tensor_induced: degrees must be >= 1");
    detail::check_degree_at_most(i, std::min(m, n) - 1, "tensor_induced");
    const long long mn = detail::checked_product(m, n, "tensor_induced");
    return hom_hstack(hom_scale(n, stabilization(m, mn, i)),
                      hom_scale(m, stabilization(n, mn, i)));
}

// Map on pi_i induced by the r-fold tensor power O(n) -> O(n^r):
// x -> r * n^(r-1) * s(x).
inline GroupHom r_fold_tensor_induced(long long n, long long r, long long i) {
    if (n < 1 || r < 1) throw OutOfRangeError("r_fold_tensor_induced: need n >= 1 and r >= 1");
    detail::check_degree_at_most(i, n - 1, "r_fold_tensor_induced");
    long long nr = 1;
    Int coeff = r;
    for (long long k = 0; k < r - 1; ++k) {
        nr = detail::checked_product(nr, n, "r_fold_tensor_induced");
        coeff *= n;
    }
    nr = detail::checked_product(nr, n, "r_fold_tensor_induced");
    return hom_scale(coeff, stabilization(n, nr, i));
}

// Map on pi_i induced by the quotient tensor product PO(m) x SO(n) ->
// PO(mn) for m even, n odd. Degree 0 is the identity on Z/2. Degree 1
// depends on m mod 4:
//   m = 0 (4): (x + b, c) -> x on (Z/2+Z/2) x Z/2 -> Z/2+Z/2,
//   m = 2 (4), m > 2: (a, b) -> n*a on Z/4 x Z/2 -> Z/4,
//   m = 2: (x, y) -> n*s(x) + 2y on Z x Z/2 -> Z/4 with s the canonical
//          surjection Z -> Z/4.
// Above degree 1 the groups agree with the O-side ones and the map is the
// tensor formula n * s(x) + m * s(y).
inline GroupHom quotient_tensor_induced(long long m, long long n, long long i) {
    if (m < 1 || n < 1)
        throw OutOfRangeError("quotient_tensor_induced: degrees must be >= 1");
    if (m % 2 != 0 || n % 2 != 1) {
        std::ostringstream os;
        os << "quotient_tensor_induced: need m even and n odd, got m = " << m << ", n = " << n;
        throw WrongParityError(os.str());
    }
    detail::check_degree_at_most(i, std::min(m, n) - 1, "quotient_tensor_induced");
    const long long mn = detail::checked_product(m, n, "quotient_tensor_induced");

    if (i == 0)
        return GroupHom(direct_sum(pi(GroupFamily::PO, m, 0), pi(GroupFamily::SO, n, 0)),
                        pi(GroupFamily::PO, mn, 0), IntMat::from_rows({{1}}));

    if (i == 1) {
        const FgAbGroup source =
            direct_sum(pi(GroupFamily::PO, m, 1), pi(GroupFamily::SO, n, 1));
        const FgAbGroup target = pi(GroupFamily::PO, mn, 1);
        IntMat mat;
        if (m == 2) {
            mat = IntMat::from_rows({{n % 4, 2}});
        } else if (m % 4 == 0) {
            mat = IntMat::from_rows({{1, 0, 0}, {0, 1, 0}});
        } else {
            mat = IntMat::from_rows({{n % 4, 0}});
        }
        return GroupHom(source, target, mat);
    }

    // i >= 2: pi_i(PO) and pi_i(SO) agree with pi_i(O) as order lists, so
    // the materialized hom coincides with the plain tensor one.
    return tensor_induced(m, n, i);
}

} // namespace orthotopy
