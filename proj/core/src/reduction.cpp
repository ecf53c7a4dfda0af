#include "dtev/reduction.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "dtev/linalg.hpp"
#include "extprec.hpp"

namespace dtev {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidInput(msg);
}

// Expected coefficient of lambda^{2L-1} in R0*v1 - R1*v0 with monic v's:
// R0[L] - R1[L-1] in coefficient-of-power notation (full-degree layout gives
// r0 - r1, hochstadt layout gives -r1).
Complex expected_leading(const BoundaryPolys& B, int L) {
    return B.R0.coeff(L) - B.R1.coeff(L - 1);
}

// Compensated accumulator (Neumaier) fed with exact product pairs via fma;
// gives residuals to roughly double-double accuracy.
struct Accum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    void add_prod(double a, double b) {
        const double p = a * b;
        add(p);
        add(std::fma(a, b, -p));
    }
    double value() const { return s + c; }
};

// b - A x with compensated complex dot products.
std::vector<Complex> compensated_residual(const DenseMatrix& A, const std::vector<Complex>& b,
                                          const std::vector<Complex>& x) {
    const int n = A.rows;
    std::vector<Complex> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Accum re, im;
        re.add(b[static_cast<std::size_t>(i)].real());
        im.add(b[static_cast<std::size_t>(i)].imag());
        for (int j = 0; j < n; ++j) {
            const Complex& a = A.at(i, j);
            const Complex& xj = x[static_cast<std::size_t>(j)];
            re.add_prod(-a.real(), xj.real());
            re.add_prod(a.imag(), xj.imag());
            im.add_prod(-a.real(), xj.imag());
            im.add_prod(-a.imag(), xj.real());
        }
        r[static_cast<std::size_t>(i)] = Complex(re.value(), im.value());
    }
    return r;
}

void check_e_against_boundary(const BoundaryPolys& B, const Poly& E, int L) {
    if (E.degree() > 2 * L - 1)
        throw LeadingMismatch("recover_v: deg E exceeds 2L - 1");
    const Complex want = expected_leading(B, L);
    const Complex got = E.coeff(2 * L - 1);
    const double sc = std::max(std::abs(want), std::abs(got));
    if (std::abs(got - want) > 1e-9 * sc)
        throw LeadingMismatch("recover_v: leading coefficient of E does not match R0, R1");
}

// Monic Hermite interpolation: nodes with multiplicities and the scaled
// derivatives f^<nu>(xi) for nu < multiplicity. W is the monic polynomial
// of degree sum(multiplicities) vanishing to the prescribed orders; the
// classical Newton interpolant on repeated nodes supplies the rest.
Poly hermite_monic(const std::vector<Complex>& nodes_distinct, const std::vector<int>& mults,
                   const std::vector<std::vector<Complex>>& values, const Poly& W) {
    std::vector<Complex> nodes;
    for (std::size_t i = 0; i < nodes_distinct.size(); ++i)
        for (int k = 0; k < mults[i]; ++k) nodes.push_back(nodes_distinct[i]);
    const int N = static_cast<int>(nodes.size());

    // Divided differences with repeated nodes: f[xi,...,xi] (k+1 copies)
    // equals the k-th scaled derivative at xi.
    std::vector<std::vector<Complex>> dd(static_cast<std::size_t>(N));
    {
        std::size_t at = 0;
        for (std::size_t i = 0; i < nodes_distinct.size(); ++i)
            for (int k = 0; k < mults[i]; ++k) dd[at++] = {values[i][0]};
    }
    for (int j = 1; j < N; ++j) {
        for (int i = 0; i + j < N; ++i) {
            const Complex lo = nodes[static_cast<std::size_t>(i)];
            const Complex hi = nodes[static_cast<std::size_t>(i + j)];
            Complex val;
            if (lo == hi) {
                // All nodes in between are the same point; look up f^<j>.
                std::size_t group = 0, at = 0;
                while (at + static_cast<std::size_t>(mults[group]) <= static_cast<std::size_t>(i)) {
                    at += static_cast<std::size_t>(mults[group]);
                    ++group;
                }
                val = values[group][static_cast<std::size_t>(j)];
            } else {
                val = (dd[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j - 1)] -
                       dd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]) /
                      (hi - lo);
            }
            dd[static_cast<std::size_t>(i)].push_back(val);
        }
    }

    Poly h;
    Poly basis = Poly::constant(Complex(1.0));
    for (int j = 0; j < N; ++j) {
        h += scale(basis, dd[0][static_cast<std::size_t>(j)]);
        basis *= Poly({-nodes[static_cast<std::size_t>(j)], Complex(1.0)});
    }
    return W + h;
}

}  // namespace

SymmetricJacobi SymmetricJacobi::make(std::vector<Complex> A, std::vector<Complex> B) {
    SymmetricJacobi J;
    J.l = static_cast<int>(B.size());
    J.A = std::move(A);
    J.B = std::move(B);
    J.validate();
    return J;
}

void SymmetricJacobi::validate() const {
    require(l >= 1, "symmetric: size l must be at least 1");
    require(static_cast<int>(A.size()) == l - 1, "symmetric: A must have l - 1 entries");
    require(static_cast<int>(B.size()) == l, "symmetric: B must have l entries");
    for (const auto& an : A) require(an != Complex(0.0), "symmetric: A_n is zero");
}

VPair recover_v_linear(const BoundaryPolys& B, const Poly& E, int L) {
    require(L >= 1, "recover_v: size must be at least 1");
    check_e_against_boundary(B, E, L);

    // Unknowns: v_{k,1}, k = 0..L-2, then v_{k,0}, k = 0..L-1. One equation
    // per power s = 0..2L-2; the monic terms v_{L-1,1} = v_{L,0} = 1 go to
    // the right-hand side.
    const int n_unknowns = 2 * L - 1;
    DenseMatrix A(n_unknowns, n_unknowns);
    std::vector<Complex> rhs(static_cast<std::size_t>(n_unknowns));

    for (int s = 0; s <= 2 * L - 2; ++s) {
        for (int k = 0; k <= L - 2; ++k) A.at(s, k) = B.R0.coeff(s - k);
        for (int k = 0; k <= L - 1; ++k) A.at(s, (L - 1) + k) = -B.R1.coeff(s - k);
        rhs[static_cast<std::size_t>(s)] =
            E.coeff(s) - B.R0.coeff(s - (L - 1)) + B.R1.coeff(s - L);
    }

    // Row and column equilibration by powers of two (exact): the powers of
    // lambda give the rows wildly different magnitudes, which would both
    // trip the global pivot threshold and spoil the pivoting order.
    std::vector<double> row_s(static_cast<std::size_t>(n_unknowns), 1.0);
    std::vector<double> col_s(static_cast<std::size_t>(n_unknowns), 1.0);
    for (int i = 0; i < n_unknowns; ++i) {
        double m = 0.0;
        for (int j = 0; j < n_unknowns; ++j) m = std::max(m, std::abs(A.at(i, j)));
        if (m > 0.0) row_s[static_cast<std::size_t>(i)] = std::exp2(-std::round(std::log2(m)));
        for (int j = 0; j < n_unknowns; ++j) A.at(i, j) *= row_s[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < n_unknowns; ++j) {
        double m = 0.0;
        for (int i = 0; i < n_unknowns; ++i) m = std::max(m, std::abs(A.at(i, j)));
        if (m > 0.0) col_s[static_cast<std::size_t>(j)] = std::exp2(-std::round(std::log2(m)));
        for (int i = 0; i < n_unknowns; ++i) A.at(i, j) *= col_s[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < n_unknowns; ++i) rhs[static_cast<std::size_t>(i)] *= row_s[static_cast<std::size_t>(i)];

    std::vector<Complex> x;
    try {
        x = solve_linear(A, rhs);
        // Iterative refinement with compensated residuals: the Laurent stage
        // downstream is sensitive to the high-order v coefficients, so the
        // solve is pushed to working accuracy rather than u * cond(A).
        for (int step = 0; step < 2; ++step) {
            std::vector<Complex> r = compensated_residual(A, rhs, x);
            const std::vector<Complex> dx = solve_linear(A, r);
            for (int j = 0; j < n_unknowns; ++j)
                x[static_cast<std::size_t>(j)] += dx[static_cast<std::size_t>(j)];
        }
    } catch (const SingularMatrix&) {
        throw SingularSystem(
            "recover_v: coefficient system singular (R0, R1 not relatively prime or degenerate)");
    }
    for (int j = 0; j < n_unknowns; ++j) x[static_cast<std::size_t>(j)] *= col_s[static_cast<std::size_t>(j)];

    std::vector<Complex> v1(static_cast<std::size_t>(L));
    std::vector<Complex> v0(static_cast<std::size_t>(L + 1));
    for (int k = 0; k <= L - 2; ++k) v1[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)];
    v1[static_cast<std::size_t>(L - 1)] = Complex(1.0);
    for (int k = 0; k <= L - 1; ++k)
        v0[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>((L - 1) + k)];
    v0[static_cast<std::size_t>(L)] = Complex(1.0);
    return {Poly(std::move(v0)), Poly(std::move(v1))};
}

VPair recover_v_hermite(const BoundaryPolys& B, const Poly& E, int L, double cluster_rel_tol) {
    require(L >= 1, "recover_v: size must be at least 1");
    if (B.config != BoundaryConfig::full || B.R0.degree() != L || B.R1.degree() != L - 1)
        throw ConfigMismatch("recover_v_hermite: requires the full-degree layout");
    check_e_against_boundary(B, E, L);

    const Poly* R[2] = {&B.R0, &B.R1};
    Poly v[2];
    for (int j = 0; j <= 1; ++j) {
        const Poly& Rj = *R[j];
        const Poly& Rother = *R[1 - j];
        const int deg = L - j;
        if (deg == 0) {
            v[j] = Poly::constant(Complex(1.0));  // monic degree 0, no conditions
            continue;
        }

        const Spectrum xs = poly_roots(Rj, cluster_rel_tol);
        const RootMultiset clusters = cluster_roots(xs, xs.tol);

        std::vector<std::vector<Complex>> values(clusters.distinct_roots.size());
        for (std::size_t g = 0; g < clusters.distinct_roots.size(); ++g) {
            const Complex xi = clusters.distinct_roots[g];
            const int m = clusters.multiplicities[g];

            // Coprimality guard, scaled by the evaluation magnitude of R_{1-j}.
            double eval_scale = 0.0;
            for (int k = 0; k <= Rother.degree(); ++k)
                eval_scale += std::abs(Rother.coeff(k)) * std::pow(std::abs(xi), k);
            const Complex r_at = Rother.eval(xi);
            if (std::abs(r_at) <= 1e-10 * std::max(eval_scale, 1.0))
                throw CommonRoot("recover_v_hermite: R0 and R1 share a root");

            const double esign = (j == 0) ? -1.0 : 1.0;  // (-1)^{1-j}
            values[g].resize(static_cast<std::size_t>(m));
            for (int nu = 0; nu < m; ++nu) {
                Complex acc = esign * scaled_derivative(E, nu).eval(xi);
                for (int s = 0; s < nu; ++s)
                    acc -= scaled_derivative(Rother, nu - s).eval(xi) *
                           values[g][static_cast<std::size_t>(s)];
                values[g][static_cast<std::size_t>(nu)] = acc / r_at;
            }
        }

        const Poly W = scale(Rj, Complex(1.0) / Rj.leading());
        v[j] = hermite_monic(clusters.distinct_roots, clusters.multiplicities, values, W);
    }
    return {v[0], v[1]};
}

StandardCoeffs solve_poly_bc(const BoundaryPolys& B, const Spectrum& spectrum,
                             std::optional<Complex> leading) {
    const int L = B.size();
    require(L >= 1, "solve_poly_bc: boundary polynomials imply size < 1");
    require(static_cast<int>(spectrum.size()) == 2 * L - 1,
            "solve_poly_bc: need exactly 2L - 1 eigenvalues");

    Complex lead;
    if (B.config == BoundaryConfig::full) {
        require(!leading.has_value(),
                "solve_poly_bc: leading coefficient is determined by R0, R1 in the full-degree layout");
        lead = B.R0.leading() - B.R1.leading();
    } else {
        lead = leading.value_or(-B.R1.leading());
    }
    if (lead == Complex(0.0)) throw DegenerateLeading("solve_poly_bc: r0 equals r1");

    return detail::solve_poly_bc_xp(B, spectrum.values, lead);
}

TransmissionCoeffs solve_transmission(std::span<const Complex> alpha_dot,
                                      std::span<const Complex> beta_dot, Complex alpha_l,
                                      const Spectrum& spectrum) {
    const int l = static_cast<int>(alpha_dot.size());
    require(l >= 1 && static_cast<int>(beta_dot.size()) == l,
            "solve_transmission: alpha_dot and beta_dot must have equal positive length");
    require(static_cast<int>(spectrum.size()) == 2 * l - 1,
            "solve_transmission: need exactly 2l - 1 eigenvalues");

    // Validates the dotted data and rejects the degenerate r0 = r1 case; the
    // recovery itself rebuilds the boundary pair in extended precision.
    build_boundary_polys(alpha_dot, beta_dot, alpha_l);

    const StandardCoeffs S =
        detail::solve_transmission_reduced_xp(alpha_dot, beta_dot, alpha_l, spectrum.values);
    return lift_standard(S, alpha_l);
}

StandardCoeffs symmetric_to_standard(const SymmetricJacobi& J) {
    J.validate();
    std::vector<Complex> a(static_cast<std::size_t>(J.l));
    for (int n = 0; n + 1 < J.l; ++n)
        a[static_cast<std::size_t>(n)] = J.A[static_cast<std::size_t>(n)] * J.A[static_cast<std::size_t>(n)];
    a[static_cast<std::size_t>(J.l - 1)] = Complex(1.0);
    return StandardCoeffs::make(std::move(a), J.B);
}

SymmetricJacobi standard_to_symmetric(const StandardCoeffs& S) {
    S.validate();
    std::vector<Complex> A(static_cast<std::size_t>(S.l - 1));
    for (int n = 0; n + 1 < S.l; ++n) A[static_cast<std::size_t>(n)] = std::sqrt(S.a[static_cast<std::size_t>(n)]);
    return SymmetricJacobi::make(std::move(A), S.b);
}

SymmetricJacobi solve_hochstadt_mixed(std::span<const Complex> A_head,
                                      std::span<const Complex> B_head, const Spectrum& mu) {
    const int m = static_cast<int>(A_head.size()) + 1;
    require(m >= 2, "hochstadt: head must contain at least one coefficient pair");
    require(B_head.size() == A_head.size(), "hochstadt: A and B heads must have equal length");
    const int l = 2 * m - 1;
    require(static_cast<int>(mu.size()) == l, "hochstadt: spectrum must have 2m - 1 eigenvalues");
    for (const auto& an : A_head) require(an != Complex(0.0), "hochstadt: A_n is zero");

    // Head in normalized form, then P_0..P_m from the forward recursion
    // (only a_1..a_{m-1}, b_1..b_{m-1} enter).
    std::vector<Poly> P(static_cast<std::size_t>(m + 1));
    P[0] = Poly();
    P[1] = Poly::constant(Complex(1.0));
    for (int n = 1; n <= m - 1; ++n) {
        const Complex an = A_head[static_cast<std::size_t>(n - 1)] * A_head[static_cast<std::size_t>(n - 1)];
        const Complex bn = B_head[static_cast<std::size_t>(n - 1)];
        const Poly t = Poly({-bn, Complex(1.0)}) * P[static_cast<std::size_t>(n)];
        P[static_cast<std::size_t>(n + 1)] = scale(t - P[static_cast<std::size_t>(n - 1)], Complex(1.0) / an);
    }

    BoundaryPolys B;
    B.R0 = P[static_cast<std::size_t>(m - 1)];
    B.R1 = P[static_cast<std::size_t>(m)];
    B.config = BoundaryConfig::hochstadt;

    const StandardCoeffs tail = solve_poly_bc(B, mu, -B.R1.leading());

    // Assemble the full coefficient sequences; tail index j covers n = j+m-1.
    std::vector<Complex> A(static_cast<std::size_t>(l - 1));
    std::vector<Complex> Bfull(static_cast<std::size_t>(l));
    for (int n = 1; n <= m - 1; ++n) {
        A[static_cast<std::size_t>(n - 1)] = A_head[static_cast<std::size_t>(n - 1)];
        Bfull[static_cast<std::size_t>(n - 1)] = B_head[static_cast<std::size_t>(n - 1)];
    }
    for (int j = 1; j <= m; ++j) {
        const int n = j + m - 1;
        Bfull[static_cast<std::size_t>(n - 1)] = tail.b[static_cast<std::size_t>(j - 1)];
        if (n <= l - 1)
            A[static_cast<std::size_t>(n - 1)] = std::sqrt(tail.a[static_cast<std::size_t>(j - 1)]);
    }
    return SymmetricJacobi::make(std::move(A), std::move(Bfull));
}

}  // namespace dtev
