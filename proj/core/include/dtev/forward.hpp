#ifndef DTEV_FORWARD_HPP
#define DTEV_FORWARD_HPP

#include <span>
#include <vector>

#include "dtev/poly.hpp"

namespace dtev {

// Coefficients of the normalized three-term recurrence
//
//   a_n y_{n+1} + b_n y_n + y_{n-1} = lambda y_n,   n = 1..l,
//
// stored 0-based (a[0] is a_1). a_n != 0 for n < l and a_l == 1: the last
// coefficient multiplies y_{l+1} = 0 in every boundary problem considered
// here, so it carries no information and is pinned to 1.
struct StandardCoeffs {
    int l = 0;
    std::vector<Complex> a;
    std::vector<Complex> b;

    static StandardCoeffs make(std::vector<Complex> a, std::vector<Complex> b);
    void validate() const;
};

// Coefficients of the coupled pair of recurrences
//
//   alpha_n psi_{n+1} + beta_n psi_n + alpha_n psi_{n-1} = lambda psi_n,
//   alpha_dot_n psi*_{n+1} + beta_dot_n psi*_n + alpha_dot_n psi*_{n-1} = lambda psi*_n,
//
// with psi_0 = psi*_0 = 0 and the matching conditions psi_l = psi*_l,
// psi_{l+1} = psi*_{l+1}. All alpha's nonzero and alpha_l != alpha_dot_l.
struct TransmissionInstance {
    int l = 0;
    std::vector<Complex> alpha;
    std::vector<Complex> beta;
    std::vector<Complex> alpha_dot;
    std::vector<Complex> beta_dot;

    static TransmissionInstance make(std::vector<Complex> alpha, std::vector<Complex> beta,
                                     std::vector<Complex> alpha_dot, std::vector<Complex> beta_dot);
    void validate() const;
};

enum class FamilyKind { P, Q, v, phi, phi_dot };

// One solution of the recurrence as a sequence of polynomials in lambda,
// indexed n = 0..l+1.
//
//   P: P_0 = 0, P_1 = 1 (forward recursion)
//   Q: Q_0 = 1, Q_1 = 0 (forward recursion)
//   v: v_{l+1} = 0, v_l = 1 (backward recursion); each v_n is monic of
//      degree l-n
//   phi / phi_dot: phi_0 = 0, phi_1 = 1 for the transmission-form equation
struct SolutionFamily {
    FamilyKind kind;
    std::vector<Poly> polys;  // index n = 0..l+1

    const Poly& at(int n) const { return polys[static_cast<std::size_t>(n)]; }
};

SolutionFamily solution_family(const StandardCoeffs& S, FamilyKind kind);

// phi family for one equation of the transmission pair: phi_0 = 0,
// phi_1 = 1, alpha_n phi_{n+1} + beta_n phi_n + alpha_n phi_{n-1} = lambda phi_n.
SolutionFamily phi_family(std::span<const Complex> alpha, std::span<const Complex> beta,
                          FamilyKind kind = FamilyKind::phi);

// Multipliers of the change of variables y_{l+1-n} = d_n psi_n reducing the
// transmission form to the normalized recurrence; d[0] is d_1, d_{l+1} = 1.
struct GaugeSequence {
    std::vector<Complex> d;
};

// Truncated expansion M(lambda) = sum_{k>=1} M_k lambda^{-k} of the Weyl
// function -Q_{l+1}/P_{l+1}, together with the Hankel determinants
// Delta_n = det [M_{i+j-1}]_{i,j=1..n+1}, n = 1..l-1.
struct WeylData {
    int l = 0;
    std::vector<Complex> M;       // M_1..M_{2l}, M_1 = 1
    std::vector<Complex> deltas;  // Delta_1..Delta_{l-1}
};

// Eigenvalues mu of the boundary problem y_0 = y_{l+1} = 0 (zeros of
// P_{l+1}) and nu of y_1 = y_{l+1} = 0 (zeros of Q_{l+1}).
struct TwoSpectra {
    Spectrum mu;
    Spectrum nu;
};

enum class BoundaryConfig { full, hochstadt };

// Polynomials of the lambda-dependent boundary condition
// R0(lambda) y_1 - R1(lambda) y_0 = 0. Two degree layouts occur:
//
//   full:      deg R0 = L, deg R1 = L-1, leading coefficients r0 != r1;
//   hochstadt: deg R0 = L-2, deg R1 = L-1 (the half-data reduction).
//
// L is the size of the recurrence the condition closes.
struct BoundaryPolys {
    Poly R0;
    Poly R1;
    BoundaryConfig config = BoundaryConfig::full;

    // Size L implied by the degrees.
    int size() const;
    void validate(double coprime_tol = 1e-8) const;
};

WeylData weyl_forward(const StandardCoeffs& S);

TwoSpectra two_spectra_forward(const StandardCoeffs& S, double cluster_rel_tol = 1e-8);

// Eigenvalues of the transmission problem (zeros of D) and of the
// polynomial boundary problem (zeros of E). Roots start from the companion
// matrix of the characteristic polynomial and are then polished against
// the characteristic function evaluated straight from the recurrences in
// extended precision; the inverse problems are sensitive enough that
// spectra need full working accuracy.
Spectrum transmission_spectrum(const TransmissionInstance& T, double cluster_rel_tol = 1e-8);
Spectrum polybc_spectrum(const StandardCoeffs& S, const BoundaryPolys& B,
                         double cluster_rel_tol = 1e-8);

// Characteristic polynomial D = phi_l * phi_dot_{l+1} - phi_{l+1} * phi_dot_l
// of the transmission problem; degree exactly 2l-1.
Poly char_poly_transmission(const TransmissionInstance& T);

// Characteristic polynomial E = R0 * v_1 - R1 * v_0 of the polynomial
// boundary problem. Throws ConfigMismatch when the degrees of B do not fit
// S.l under B.config.
Poly char_poly_polybc(const StandardCoeffs& S, const BoundaryPolys& B);

// R0 = alpha_l * phi_dot_{l+1}, R1 = phi_dot_l, built from the known
// equation of the pair. Throws DegenerateLeading when r0 == r1 within
// relative tolerance (i.e. alpha_l == alpha_dot_l).
BoundaryPolys build_boundary_polys(std::span<const Complex> alpha_dot,
                                   std::span<const Complex> beta_dot, Complex alpha_l);

struct ReducedProblem {
    StandardCoeffs S;
    BoundaryPolys B;
    GaugeSequence gauge;
};

// Change of variables taking the transmission problem to the normalized
// recurrence with a polynomial boundary condition; spectra coincide.
ReducedProblem reduce_transmission(const TransmissionInstance& T);

struct TransmissionCoeffs {
    std::vector<Complex> alpha;
    std::vector<Complex> beta;
};

// Inverse of the reduction's coefficient map: recovers (alpha, beta) from
// the normalized coefficients and the known alpha_l.
TransmissionCoeffs lift_standard(const StandardCoeffs& S, Complex alpha_l);

}  // namespace dtev

#endif  // DTEV_FORWARD_HPP
