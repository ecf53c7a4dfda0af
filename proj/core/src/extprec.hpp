#ifndef DTEV_SRC_EXTPREC_HPP
#define DTEV_SRC_EXTPREC_HPP

// Internal extended-precision kernels (not installed). The inverse map from
// eigenvalues to recurrence coefficients can carry condition numbers around
// 1e8 at desk scale; double data then caps the attainable accuracy, and
// double intermediates lose several more digits. Two countermeasures live
// here: characteristic functions evaluated straight from the recurrences in
// long double (so spectra can be polished to working precision without the
// coefficient-representation detour), and the coefficient-recovery pipeline
// run end-to-end in long double.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "dtev/forward.hpp"
#include "dtev/poly.hpp"

namespace dtev::detail {

using XC = std::complex<long double>;

struct ValDer {
    XC value;
    XC deriv;
};

// Characteristic function of the transmission pair at z, with derivative,
// via the joint (phi, phi') recursions.
ValDer char_transmission_at(const TransmissionInstance& T, XC z);

// Characteristic function R0(z) v1(z) - R1(z) v0(z) of the polynomial
// boundary problem, with derivative.
ValDer char_polybc_at(const StandardCoeffs& S, const BoundaryPolys& B, XC z);

// P_{l+1}(z) (zeros = mu) and Q_{l+1}(z) (zeros = nu), with derivatives.
ValDer char_mu_at(const StandardCoeffs& S, XC z);
ValDer char_nu_at(const StandardCoeffs& S, XC z);

// Newton-polish roots in place against f; a step is kept only while |f|
// strictly decreases, so clusters from multiple roots stay put.
void polish_roots(std::vector<Complex>& roots, const std::function<ValDer(XC)>& f,
                  int max_steps = 4);

// Coefficient recovery from boundary polynomials plus eigenvalues, whole
// pipeline in long double: E from its zeros, the v linear system, the
// Laurent expansion of v1/v0, and the Hankel systems. The Hankel
// solvability gate itself is evaluated in double, identically to
// solve_weyl. Throws SingularSystem / HankelConditionViolated.
StandardCoeffs solve_poly_bc_xp(const BoundaryPolys& B, const std::vector<Complex>& eigenvalues,
                                Complex leading);

// Same pipeline with the boundary polynomials built in long double from the
// dotted coefficients (R0 = alpha_l phi_dot_{l+1}, R1 = phi_dot_l); rounding
// them to double first would cost several digits on hard instances.
StandardCoeffs solve_transmission_reduced_xp(std::span<const Complex> alpha_dot,
                                             std::span<const Complex> beta_dot, Complex alpha_l,
                                             const std::vector<Complex>& eigenvalues);

// Two-spectra recovery in long double (mu, nu assumed validated).
StandardCoeffs solve_two_spectra_xp(const std::vector<Complex>& mu,
                                    const std::vector<Complex>& nu);

}  // namespace dtev::detail

#endif  // DTEV_SRC_EXTPREC_HPP
