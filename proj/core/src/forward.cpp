#include "dtev/forward.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "dtev/linalg.hpp"
#include "dtev/weyl_inverse.hpp"
#include "extprec.hpp"

namespace dtev {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidInput(msg);
}

}  // namespace

StandardCoeffs StandardCoeffs::make(std::vector<Complex> a, std::vector<Complex> b) {
    StandardCoeffs S;
    S.l = static_cast<int>(a.size());
    S.a = std::move(a);
    S.b = std::move(b);
    S.validate();
    return S;
}

void StandardCoeffs::validate() const {
    require(l >= 1, "standard: size l must be at least 1");
    require(static_cast<int>(a.size()) == l, "standard: a must have l entries");
    require(static_cast<int>(b.size()) == l, "standard: b must have l entries");
    for (int n = 0; n + 1 < l; ++n)
        require(a[static_cast<std::size_t>(n)] != Complex(0.0), "standard: a_n is zero");
    require(a[static_cast<std::size_t>(l - 1)] == Complex(1.0), "standard: a_l must equal 1");
}

TransmissionInstance TransmissionInstance::make(std::vector<Complex> alpha,
                                                std::vector<Complex> beta,
                                                std::vector<Complex> alpha_dot,
                                                std::vector<Complex> beta_dot) {
    TransmissionInstance T;
    T.l = static_cast<int>(alpha.size());
    T.alpha = std::move(alpha);
    T.beta = std::move(beta);
    T.alpha_dot = std::move(alpha_dot);
    T.beta_dot = std::move(beta_dot);
    T.validate();
    return T;
}

void TransmissionInstance::validate() const {
    require(l >= 1, "transmission: size l must be at least 1");
    require(static_cast<int>(alpha.size()) == l, "transmission: alpha must have l entries");
    require(static_cast<int>(beta.size()) == l, "transmission: beta must have l entries");
    require(static_cast<int>(alpha_dot.size()) == l, "transmission: alpha_dot must have l entries");
    require(static_cast<int>(beta_dot.size()) == l, "transmission: beta_dot must have l entries");
    for (int n = 0; n < l; ++n) {
        require(alpha[static_cast<std::size_t>(n)] != Complex(0.0), "transmission: alpha_n is zero");
        require(alpha_dot[static_cast<std::size_t>(n)] != Complex(0.0),
                "transmission: alpha_dot_n is zero");
    }
    require(alpha[static_cast<std::size_t>(l - 1)] != alpha_dot[static_cast<std::size_t>(l - 1)],
            "transmission: alpha_l equals alpha_dot_l");
}

SolutionFamily solution_family(const StandardCoeffs& S, FamilyKind kind) {
    S.validate();
    const int l = S.l;
    SolutionFamily fam;
    fam.kind = kind;
    fam.polys.assign(static_cast<std::size_t>(l + 2), Poly());

    auto a = [&](int n) { return S.a[static_cast<std::size_t>(n - 1)]; };
    auto b = [&](int n) { return S.b[static_cast<std::size_t>(n - 1)]; };

    switch (kind) {
        case FamilyKind::P:
        case FamilyKind::Q: {
            fam.polys[0] = kind == FamilyKind::P ? Poly() : Poly::constant(Complex(1.0));
            fam.polys[1] = kind == FamilyKind::P ? Poly::constant(Complex(1.0)) : Poly();
            // y_{n+1} = ((lambda - b_n) y_n - y_{n-1}) / a_n
            for (int n = 1; n <= l; ++n) {
                const Poly t = Poly({-b(n), Complex(1.0)}) * fam.polys[static_cast<std::size_t>(n)];
                fam.polys[static_cast<std::size_t>(n + 1)] =
                    scale(t - fam.polys[static_cast<std::size_t>(n - 1)], Complex(1.0) / a(n));
            }
            break;
        }
        case FamilyKind::v: {
            fam.polys[static_cast<std::size_t>(l + 1)] = Poly();
            fam.polys[static_cast<std::size_t>(l)] = Poly::constant(Complex(1.0));
            // v_{n-1} = (lambda - b_n) v_n - a_n v_{n+1}
            for (int n = l; n >= 1; --n) {
                const Poly t = Poly({-b(n), Complex(1.0)}) * fam.polys[static_cast<std::size_t>(n)];
                fam.polys[static_cast<std::size_t>(n - 1)] =
                    t - scale(fam.polys[static_cast<std::size_t>(n + 1)], a(n));
            }
            break;
        }
        default:
            throw InvalidInput("solution_family: phi families take transmission coefficients");
    }
    return fam;
}

SolutionFamily phi_family(std::span<const Complex> alpha, std::span<const Complex> beta,
                          FamilyKind kind) {
    require(kind == FamilyKind::phi || kind == FamilyKind::phi_dot,
            "phi_family: kind must be phi or phi_dot");
    const int l = static_cast<int>(alpha.size());
    require(l >= 1 && static_cast<int>(beta.size()) == l,
            "phi_family: alpha and beta must have equal positive length");
    for (int n = 0; n < l; ++n)
        require(alpha[static_cast<std::size_t>(n)] != Complex(0.0), "phi_family: alpha_n is zero");

    SolutionFamily fam;
    fam.kind = kind;
    fam.polys.assign(static_cast<std::size_t>(l + 2), Poly());
    fam.polys[1] = Poly::constant(Complex(1.0));
    // phi_{n+1} = ((lambda - beta_n) phi_n - alpha_n phi_{n-1}) / alpha_n
    for (int n = 1; n <= l; ++n) {
        const Complex an = alpha[static_cast<std::size_t>(n - 1)];
        const Complex bn = beta[static_cast<std::size_t>(n - 1)];
        const Poly t = Poly({-bn, Complex(1.0)}) * fam.polys[static_cast<std::size_t>(n)];
        fam.polys[static_cast<std::size_t>(n + 1)] =
            scale(t - scale(fam.polys[static_cast<std::size_t>(n - 1)], an), Complex(1.0) / an);
    }
    return fam;
}

int BoundaryPolys::size() const {
    return config == BoundaryConfig::full ? R0.degree() : R1.degree() + 1;
}

void BoundaryPolys::validate(double coprime_tol) const {
    const int L = size();
    require(L >= 1, "boundary: implied size must be at least 1");
    if (config == BoundaryConfig::full) {
        require(R0.degree() == L && R1.degree() == L - 1,
                "boundary: full-degree layout needs deg R0 = L, deg R1 = L - 1");
        require(R0.leading() != Complex(0.0) && R1.leading() != Complex(0.0),
                "boundary: leading coefficients must be nonzero");
        const double sc = std::max(std::abs(R0.leading()), std::abs(R1.leading()));
        if (std::abs(R0.leading() - R1.leading()) <= 1e-10 * sc)
            throw DegenerateLeading("boundary: r0 equals r1");
    } else {
        require(R0.degree() == L - 2 && R1.degree() == L - 1,
                "boundary: hochstadt layout needs deg R0 = L - 2, deg R1 = L - 1");
    }
    if (!poly_coprime(R0, R1, coprime_tol))
        throw InvalidInput("boundary: R0 and R1 share a root");
}

namespace {

// Monic normalization with the leading coefficient pinned to exactly 1.
// -Q_{l+1} and P_{l+1} share the same leading coefficient, so normalizing
// both leaves the ratio unchanged and makes M_1 exactly 1.
Poly monic(const Poly& p) {
    std::vector<Complex> c = p.coeffs();
    const Complex lead = c.back();
    for (auto& z : c) z /= lead;
    c.back() = Complex(1.0);
    return Poly(std::move(c));
}

}  // namespace

WeylData weyl_forward(const StandardCoeffs& S) {
    const SolutionFamily P = solution_family(S, FamilyKind::P);
    const SolutionFamily Q = solution_family(S, FamilyKind::Q);

    WeylData W;
    W.l = S.l;
    W.M = laurent_expand(monic(scale(Q.at(S.l + 1), Complex(-1.0))), monic(P.at(S.l + 1)),
                         2 * S.l);
    W.deltas = hankel_condition(W.M).deltas;
    return W;
}

TwoSpectra two_spectra_forward(const StandardCoeffs& S, double cluster_rel_tol) {
    const SolutionFamily P = solution_family(S, FamilyKind::P);
    const SolutionFamily Q = solution_family(S, FamilyKind::Q);

    TwoSpectra out;
    out.mu = poly_roots(P.at(S.l + 1), cluster_rel_tol);
    detail::polish_roots(out.mu.values,
                         [&](detail::XC z) { return detail::char_mu_at(S, z); });
    if (S.l >= 2) {
        out.nu = poly_roots(Q.at(S.l + 1), cluster_rel_tol);
        detail::polish_roots(out.nu.values,
                             [&](detail::XC z) { return detail::char_nu_at(S, z); });
    }
    return out;
}

Spectrum transmission_spectrum(const TransmissionInstance& T, double cluster_rel_tol) {
    Spectrum sp = poly_roots(char_poly_transmission(T), cluster_rel_tol);
    detail::polish_roots(sp.values,
                         [&](detail::XC z) { return detail::char_transmission_at(T, z); });
    return sp;
}

Spectrum polybc_spectrum(const StandardCoeffs& S, const BoundaryPolys& B,
                         double cluster_rel_tol) {
    Spectrum sp = poly_roots(char_poly_polybc(S, B), cluster_rel_tol);
    detail::polish_roots(sp.values,
                         [&](detail::XC z) { return detail::char_polybc_at(S, B, z); });
    return sp;
}

Poly char_poly_transmission(const TransmissionInstance& T) {
    T.validate();
    const SolutionFamily phi = phi_family(T.alpha, T.beta, FamilyKind::phi);
    const SolutionFamily phid = phi_family(T.alpha_dot, T.beta_dot, FamilyKind::phi_dot);
    return phi.at(T.l) * phid.at(T.l + 1) - phi.at(T.l + 1) * phid.at(T.l);
}

Poly char_poly_polybc(const StandardCoeffs& S, const BoundaryPolys& B) {
    const int L = B.size();
    if (L != S.l) throw ConfigMismatch("char_poly_polybc: boundary size does not match l");
    if (B.config == BoundaryConfig::full) {
        if (B.R0.degree() != S.l || B.R1.degree() != S.l - 1)
            throw ConfigMismatch("char_poly_polybc: full-degree layout degree mismatch");
    } else {
        if (B.R0.degree() != S.l - 2 || B.R1.degree() != S.l - 1)
            throw ConfigMismatch("char_poly_polybc: hochstadt layout degree mismatch");
    }
    const SolutionFamily v = solution_family(S, FamilyKind::v);
    return B.R0 * v.at(1) - B.R1 * v.at(0);
}

BoundaryPolys build_boundary_polys(std::span<const Complex> alpha_dot,
                                   std::span<const Complex> beta_dot, Complex alpha_l) {
    require(alpha_l != Complex(0.0), "boundary: alpha_l is zero");
    const int l = static_cast<int>(alpha_dot.size());
    const SolutionFamily phid = phi_family(alpha_dot, beta_dot, FamilyKind::phi_dot);

    BoundaryPolys B;
    B.R0 = scale(phid.at(l + 1), alpha_l);
    B.R1 = phid.at(l);
    B.config = BoundaryConfig::full;

    const Complex r0 = B.R0.leading();
    const Complex r1 = B.R1.leading();
    const double sc = std::max(std::abs(r0), std::abs(r1));
    if (std::abs(r0 - r1) <= 1e-10 * sc)
        throw DegenerateLeading("boundary: alpha_l equals alpha_dot_l (r0 = r1)");
    return B;
}

ReducedProblem reduce_transmission(const TransmissionInstance& T) {
    T.validate();
    const int l = T.l;
    auto alpha = [&](int n) { return T.alpha[static_cast<std::size_t>(n - 1)]; };
    auto beta = [&](int n) { return T.beta[static_cast<std::size_t>(n - 1)]; };

    // d_{l+1} = 1, d_n = d_{n+1} / alpha_n downward.
    std::vector<Complex> d(static_cast<std::size_t>(l + 1));  // d[n-1] = d_n, n = 1..l+1
    d[static_cast<std::size_t>(l)] = Complex(1.0);
    for (int n = l; n >= 1; --n)
        d[static_cast<std::size_t>(n - 1)] = d[static_cast<std::size_t>(n)] / alpha(n);

    std::vector<Complex> a(static_cast<std::size_t>(l));
    std::vector<Complex> b(static_cast<std::size_t>(l));
    a[static_cast<std::size_t>(l - 1)] = Complex(1.0);
    for (int n = 2; n <= l; ++n)
        a[static_cast<std::size_t>(l - n)] =
            d[static_cast<std::size_t>(n - 1)] * alpha(n) / d[static_cast<std::size_t>(n - 2)];
    for (int n = 1; n <= l; ++n) b[static_cast<std::size_t>(l - n)] = beta(n);

    ReducedProblem out;
    out.S = StandardCoeffs::make(std::move(a), std::move(b));
    out.B = build_boundary_polys(T.alpha_dot, T.beta_dot, T.alpha[static_cast<std::size_t>(l - 1)]);
    out.gauge.d = std::move(d);
    return out;
}

TransmissionCoeffs lift_standard(const StandardCoeffs& S, Complex alpha_l) {
    S.validate();
    require(alpha_l != Complex(0.0), "lift: alpha_l is zero");
    const int l = S.l;

    std::vector<Complex> d(static_cast<std::size_t>(l + 1));  // d[n-1] = d_n
    d[static_cast<std::size_t>(l)] = Complex(1.0);
    d[static_cast<std::size_t>(l - 1)] = Complex(1.0) / alpha_l;
    for (int n = l; n >= 2; --n)
        d[static_cast<std::size_t>(n - 2)] =
            d[static_cast<std::size_t>(n)] / S.a[static_cast<std::size_t>(l - n)];

    TransmissionCoeffs out;
    out.alpha.resize(static_cast<std::size_t>(l));
    out.beta.resize(static_cast<std::size_t>(l));
    for (int n = 1; n <= l; ++n) {
        out.alpha[static_cast<std::size_t>(n - 1)] =
            d[static_cast<std::size_t>(n)] / d[static_cast<std::size_t>(n - 1)];
        out.beta[static_cast<std::size_t>(n - 1)] = S.b[static_cast<std::size_t>(l - n)];
    }
    return out;
}

}  // namespace dtev
