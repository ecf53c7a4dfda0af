#ifndef DTEV_REDUCTION_HPP
#define DTEV_REDUCTION_HPP

#include <optional>
#include <span>
#include <vector>

#include "dtev/forward.hpp"
#include "dtev/poly.hpp"

namespace dtev {

// Symmetric Jacobi coefficients: A_{n-1} u_{n-1} + B_n u_n + A_n u_{n+1}
// = lambda u_n, n = 1..l, with the convention A_0 = A_l = 1 (those two
// entries are irrelevant to every spectrum considered here). A holds
// A_1..A_{l-1}, B holds B_1..B_l.
struct SymmetricJacobi {
    int l = 0;
    std::vector<Complex> A;
    std::vector<Complex> B;

    static SymmetricJacobi make(std::vector<Complex> A, std::vector<Complex> B);
    void validate() const;
};

struct VPair {
    Poly v0;
    Poly v1;
};

// Solve R0 * v1 - R1 * v0 = E for the unique monic v0 (degree L) and v1
// (degree L-1), as one (2L-1) x (2L-1) linear system over the unknown
// coefficients, monic leading terms moved to the right-hand side.
// Preconditions: deg E = 2L-1 and leading(E) = R0[L] - R1[L-1] (relative
// 1e-9, coefficient-of-power notation with out-of-range = 0); otherwise
// LeadingMismatch. A singular system (non-coprime or degenerate boundary
// data) throws SingularSystem.
VPair recover_v_linear(const BoundaryPolys& B, const Poly& E, int L);

// Same recovery through root data: at every root xi of R_j (multiplicity
// m), the scaled derivatives v_j^<nu>(xi), nu < m, follow from a
// triangular recursion in E and R_{1-j}; the monic v_j is then rebuilt by
// Hermite interpolation. Requires the full-degree layout. Throws
// CommonRoot when R_{1-j} vanishes at a root of R_j.
//
// Multiplicity detection needs a clustering tolerance well above the
// sqrt(eps)-sized split of computed multiple roots; the cluster mean then
// cancels the split to working precision.
VPair recover_v_hermite(const BoundaryPolys& B, const Poly& E, int L,
                        double cluster_rel_tol = 1e-6);

// Inverse problem with a polynomial boundary condition: build E from the
// given eigenvalues, recover v0/v1, expand M = v1/v0, and run the Weyl
// reconstruction. The full-degree layout computes the leading coefficient
// r0 - r1 itself and accepts no override; the hochstadt layout uses
// -leading(R1) unless an explicit value is supplied.
StandardCoeffs solve_poly_bc(const BoundaryPolys& B, const Spectrum& spectrum,
                             std::optional<Complex> leading = std::nullopt);

// Inverse transmission problem: the dotted coefficients and alpha_l are
// known a priori; the 2l-1 eigenvalues determine the remaining alpha_n and
// beta_n via the boundary-polynomial reduction.
TransmissionCoeffs solve_transmission(std::span<const Complex> alpha_dot,
                                      std::span<const Complex> beta_dot, Complex alpha_l,
                                      const Spectrum& spectrum);

// a_n = A_n^2, b_n = B_n (a_l = 1 since A_l = 1). Spectra are preserved.
StandardCoeffs symmetric_to_standard(const SymmetricJacobi& J);

// A_n = principal square root of a_n, B_n = b_n. A_n is determined by a_n
// only up to sign; the principal branch makes this a function, and real
// positive a_n round-trip exactly.
SymmetricJacobi standard_to_symmetric(const StandardCoeffs& S);

// Mixed-data reconstruction for odd l = 2m-1: given A_1..A_{m-1},
// B_1..B_{m-1} and the full spectrum mu, the tail solves a polynomial
// boundary problem of size m with R0 = P_{m-1}, R1 = P_m built from the
// known head. Complex A_n are permitted in the recovered tail.
SymmetricJacobi solve_hochstadt_mixed(std::span<const Complex> A_head,
                                      std::span<const Complex> B_head, const Spectrum& mu);

}  // namespace dtev

#endif  // DTEV_REDUCTION_HPP
