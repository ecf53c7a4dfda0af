#ifndef DTEV_WEYL_INVERSE_HPP
#define DTEV_WEYL_INVERSE_HPP

#include <vector>

#include "dtev/forward.hpp"
#include "dtev/poly.hpp"

namespace dtev {

// Columns of recovered recurrence polynomials: column n holds the
// ascending coefficients c_{0n}..c_{nn} of P_{n+1}, n = 0..l.
struct CTable {
    std::vector<std::vector<Complex>> columns;

    Poly poly(int n) const { return Poly(columns[static_cast<std::size_t>(n)]); }
};

struct HankelCheck {
    std::vector<Complex> deltas;  // Delta_1..Delta_{l-1}
    bool pass = false;
};

// Hankel determinants Delta_n, n = 1..l-1, of the Weyl coefficients.
// Passes iff every |Delta_n| > 1e-10 * (max |Hankel entry| at that n).
// Nonvanishing of all Delta_n is necessary and sufficient for M to be the
// Weyl coefficients of some recurrence; failure is a result, not an error.
HankelCheck hankel_condition(const std::vector<Complex>& M);

struct WeylSolution {
    StandardCoeffs S;
    CTable ctable;
};

// Recover {a_n}, {b_n} from Weyl coefficients M_1..M_{2l} (M_1 = 1).
//
// For n = 1..l-1, c_{.n} solves the Hankel system
//   sum_i c_{in} M_{i+k+1} = delta_{nk}, k = 0..n.
// The n = l column cannot be obtained the same way (the system would need
// the unknown M_{2l+1}); instead c_{ll} := c_{l-1,l-1} and the remaining
// entries solve the reduced l x l system with c_{ll} moved to the right
// side, which uses only M_1..M_{2l}. Then
//   a_n = c_{n-1,n-1}/c_{nn},
//   b_n = (c_{n-2,n-1} - a_n c_{n-1,n})/c_{n-1,n-1}   (c_{-1,0} = 0).
//
// Throws HankelConditionViolated when the solvability criterion fails.
WeylSolution solve_weyl(const std::vector<Complex>& M);

// Classical two-spectra inverse problem: M(lambda) =
// prod(lambda - nu_j) / prod(lambda - mu_j), expanded to 2l coefficients,
// then solve_weyl. Throws SpectraNotDisjoint when mu and nu overlap within
// the clustering tolerance.
StandardCoeffs solve_two_spectra(const TwoSpectra& spectra);

namespace detail {

// Literal Cramer prescription for the n = l column: c_{il} =
// (-1)^{l+i} minor(l, i) / Delta_l with Delta_l = Delta_{l-1}/c_{ll};
// deleting row l removes the unknown M_{2l+1}. Kept as a cross-check of
// the reduced-system route (asserted in debug builds, exercised by tests).
std::vector<Complex> cramer_tail_column(const std::vector<Complex>& M, int l, Complex c_ll,
                                        Complex delta_lm1);

}  // namespace detail

}  // namespace dtev

#endif  // DTEV_WEYL_INVERSE_HPP
