#ifndef DTEV_POLY_HPP
#define DTEV_POLY_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "dtev/errors.hpp"

namespace dtev {

using Complex = std::complex<double>;

// Dense complex polynomial, coefficients ascending by power:
// coeffs[k] multiplies lambda^k. Canonical form keeps no trailing
// coefficients of magnitude <= 1e-13 * max|coeff|; the zero polynomial
// has an empty coefficient vector and degree() == -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Complex> coeffs);
    Poly(std::initializer_list<Complex> coeffs);

    static Poly constant(Complex c);
    static Poly identity();  // the monomial lambda

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of lambda^k; zero when k is out of range.
    Complex coeff(int k) const;
    Complex leading() const;  // 0 for the zero polynomial

    Complex eval(Complex z) const;  // Horner

    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    Poly& operator*=(const Poly& q);

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator*(const Poly& p, const Poly& q);

  private:
    void trim();

    std::vector<Complex> coeffs_;
};

Poly scale(const Poly& p, Complex c);

// f^<nu> = (1/nu!) d^nu f / d lambda^nu. scaled_derivative(p, 0) == p.
Poly scaled_derivative(const Poly& p, int nu);

// Multiset of eigenvalues; repeats encode multiplicity. tol is the
// clustering tolerance under which two values count as coincident.
struct Spectrum {
    std::vector<Complex> values;
    double tol = 0.0;

    std::size_t size() const { return values.size(); }
};

// Distinct roots with their multiplicities, as produced by clustering.
struct RootMultiset {
    std::vector<Complex> distinct_roots;
    std::vector<int> multiplicities;
};

// leading * prod_j (lambda - roots[j]). Throws ZeroLeading.
Poly poly_from_roots(const Spectrum& roots, Complex leading);

// All degree(p) roots, with multiplicity, by eigenvalues of the balanced
// companion matrix of the monic-normalized polynomial plus one Newton
// polish per root. The returned Spectrum carries the clustering tolerance
// cluster_rel_tol * max(1, max|root|). Throws DegreeZero for constants.
Spectrum poly_roots(const Poly& p, double cluster_rel_tol = 1e-8);

// True iff no root of p lies within tol of a root of q. Constants have
// no roots, so any pair involving a nonzero constant is coprime.
bool poly_coprime(const Poly& p, const Poly& q, double tol);

// Greedy clustering of s.values into groups of pairwise distance <= tol;
// the representative is the cluster mean. Throws AmbiguousClustering when
// two cluster means land within 2*tol of each other.
RootMultiset cluster_roots(const Spectrum& s, double tol);

// First K coefficients of num/den = sum_k M_k lambda^{-k}, computed by
// power-series division on the reversed coefficients. Requires
// deg(num) == deg(den) - 1 (throws DegreeMismatch).
std::vector<Complex> laurent_expand(const Poly& num, const Poly& den, int K);

// Sort by real part, then imaginary part (test- and report-friendly order).
std::vector<Complex> sorted_values(std::vector<Complex> values);

}  // namespace dtev

#endif  // DTEV_POLY_HPP
