#ifndef DTEV_ERRORS_HPP
#define DTEV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dtev {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data that violates a documented precondition or type invariant
// (bad sizes, zero coefficients where nonzero is required, malformed files).
struct InvalidInput : Error {
    using Error::Error;
};

// The inverse problem has no solution for the given data: a Hankel
// determinant vanished. This is the exact (necessary and sufficient)
// solvability criterion of the Weyl-coefficient inverse problem.
struct HankelConditionViolated : Error {
    using Error::Error;
};

struct ZeroLeading : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct DegreeZero : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct DegreeMismatch : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct AmbiguousClustering : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct InsufficientCoefficients : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct SpectraNotDisjoint : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct LeadingMismatch : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Coefficient-recovery linear system is singular; the boundary polynomials
// are not relatively prime or the data is otherwise degenerate.
struct SingularSystem : Error {
    using Error::Error;
};

struct CommonRoot : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct ConfigMismatch : InvalidInput {
    using InvalidInput::InvalidInput;
};

// r0 == r1 (equivalently alpha_l == alpha_dot_l): the characteristic
// polynomial degenerates below full degree and the pipeline does not
// handle that case.
struct DegenerateLeading : InvalidInput {
    using InvalidInput::InvalidInput;
};

}  // namespace dtev

#endif  // DTEV_ERRORS_HPP
