#pragma once

#include <stdexcept>

namespace orthotopy {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A summand order was negative. Orders are 0 for Z and k >= 2 for Z/k.
struct InvalidOrderError : Error { using Error::Error; };

// A matrix entry violates well-definedness for the given source/target orders.
struct IllDefinedHomError : Error { using Error::Error; };

// Middle groups of a composition disagree.
struct CompositionError : Error { using Error::Error; };

// Element enumeration was requested for a group with an infinite summand.
struct NotFiniteError : Error { using Error::Error; };

// A parameter lies outside the tabulated range (e.g. spin_center for n < 3).
struct OutOfRangeError : Error { using Error::Error; };

// Homotopy degree beyond the first unstable degree i = n - 1.
struct UnsupportedRangeError : Error { using Error::Error; };

// gcd(m, n) != 1 where coprimality is required.
struct NotCoprimeError : Error { using Error::Error; };

// The parity pattern of (m, n) is neither odd/odd nor even/odd.
struct WrongParityError : Error { using Error::Error; };

// Matrix dimensions do not fit the requested operation.
struct ShapeError : Error { using Error::Error; };

// A matrix that must be invertible over Q has determinant zero.
struct SingularMatrixError : Error { using Error::Error; };

// A bilinear form matrix is neither symmetric nor antisymmetric.
struct NotInvolutionError : Error { using Error::Error; };

} // namespace orthotopy
