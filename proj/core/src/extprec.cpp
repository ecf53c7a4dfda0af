#include "extprec.hpp"

#include <cmath>

#include "dtev/errors.hpp"
#include "dtev/weyl_inverse.hpp"

namespace dtev::detail {

namespace {

XC widen(Complex z) { return XC(z.real(), z.imag()); }

Complex narrow(XC z) { return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag())); }

// Horner with derivative.
ValDer horner(const std::vector<Complex>& coeffs, XC z) {
    ValDer r{XC(0.0L), XC(0.0L)};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r.deriv = r.deriv * z + r.value;
        r.value = r.value * z + widen(*it);
    }
    return r;
}

struct Pair {
    XC f, fp;   // phi_n, phi_{n+1} (or v_{n+1}, v_n on the way down)
    XC df, dfp; // derivatives in z
};

// Forward recursion for the transmission-form phi family: phi_0 = 0,
// phi_1 = 1; returns (phi_l, phi_{l+1}) with derivatives.
Pair phi_at(const std::vector<Complex>& alpha, const std::vector<Complex>& beta, XC z) {
    Pair p{XC(0.0L), XC(1.0L), XC(0.0L), XC(0.0L)};
    const int l = static_cast<int>(alpha.size());
    for (int n = 1; n <= l; ++n) {
        const XC an = widen(alpha[static_cast<std::size_t>(n - 1)]);
        const XC bn = widen(beta[static_cast<std::size_t>(n - 1)]);
        const XC next = ((z - bn) * p.fp - an * p.f) / an;
        const XC dnext = ((z - bn) * p.dfp + p.fp - an * p.df) / an;
        p.f = p.fp;
        p.df = p.dfp;
        p.fp = next;
        p.dfp = dnext;
    }
    return p;  // f = phi_l, fp = phi_{l+1}
}

}  // namespace

ValDer char_transmission_at(const TransmissionInstance& T, XC z) {
    const Pair a = phi_at(T.alpha, T.beta, z);
    const Pair b = phi_at(T.alpha_dot, T.beta_dot, z);
    ValDer out;
    out.value = a.f * b.fp - a.fp * b.f;
    out.deriv = a.df * b.fp + a.f * b.dfp - a.dfp * b.f - a.fp * b.df;
    return out;
}

namespace {

// Backward recursion v_{l+1} = 0, v_l = 1; returns v_1, v_0 and derivatives.
struct VVals {
    XC v0, v1, dv0, dv1;
};

VVals v_at(const StandardCoeffs& S, XC z) {
    XC hi(0.0L), lo(1.0L), dhi(0.0L), dlo(0.0L);  // v_{n+1}, v_n
    for (int n = S.l; n >= 1; --n) {
        const XC an = widen(S.a[static_cast<std::size_t>(n - 1)]);
        const XC bn = widen(S.b[static_cast<std::size_t>(n - 1)]);
        const XC prev = (z - bn) * lo - an * hi;
        const XC dprev = (z - bn) * dlo + lo - an * dhi;
        hi = lo;
        dhi = dlo;
        lo = prev;
        dlo = dprev;
    }
    return {lo, hi, dlo, dhi};  // v_0, v_1
}

}  // namespace

ValDer char_polybc_at(const StandardCoeffs& S, const BoundaryPolys& B, XC z) {
    const VVals v = v_at(S, z);
    const ValDer r0 = horner(B.R0.coeffs(), z);
    const ValDer r1 = horner(B.R1.coeffs(), z);
    ValDer out;
    out.value = r0.value * v.v1 - r1.value * v.v0;
    out.deriv = r0.deriv * v.v1 + r0.value * v.dv1 - r1.deriv * v.v0 - r1.value * v.dv0;
    return out;
}

namespace {

// Forward recursion with derivative for P (init 0, 1) or Q (init 1, 0).
ValDer pq_at(const StandardCoeffs& S, XC z, bool q_family) {
    XC lo = q_family ? XC(1.0L) : XC(0.0L);
    XC hi = q_family ? XC(0.0L) : XC(1.0L);
    XC dlo(0.0L), dhi(0.0L);
    for (int n = 1; n <= S.l; ++n) {
        const XC an = widen(S.a[static_cast<std::size_t>(n - 1)]);
        const XC bn = widen(S.b[static_cast<std::size_t>(n - 1)]);
        const XC next = ((z - bn) * hi - lo) / an;
        const XC dnext = ((z - bn) * dhi + hi - dlo) / an;
        lo = hi;
        dlo = dhi;
        hi = next;
        dhi = dnext;
    }
    return {hi, dhi};
}

}  // namespace

ValDer char_mu_at(const StandardCoeffs& S, XC z) { return pq_at(S, z, false); }

ValDer char_nu_at(const StandardCoeffs& S, XC z) { return pq_at(S, z, true); }

void polish_roots(std::vector<Complex>& roots, const std::function<ValDer(XC)>& f,
                  int max_steps) {
    for (auto& root : roots) {
        XC z = widen(root);
        long double resid = std::abs(f(z).value);
        for (int step = 0; step < max_steps; ++step) {
            const ValDer v = f(z);
            if (!(std::abs(v.deriv) > 0.0L) || resid == 0.0L) break;
            const XC z1 = z - v.value / v.deriv;
            const long double r1 = std::abs(f(z1).value);
            if (r1 >= resid) break;
            z = z1;
            resid = r1;
        }
        root = narrow(z);
    }
}

namespace {

constexpr long double kPivotRelXp = 1e-14L;

// LU solve with partial pivoting in long double. Returns false when a
// pivot falls under kPivotRelXp * scale (caller maps to its error type).
bool lu_solve(std::vector<std::vector<XC>>& A, std::vector<XC>& b) {
    const int n = static_cast<int>(b.size());
    long double scale = 0.0L;
    for (const auto& row : A)
        for (const auto& z : row) scale = std::max(scale, std::abs(z));
    for (int k = 0; k < n; ++k) {
        int piv = k;
        long double best = std::abs(A[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]);
        for (int i = k + 1; i < n; ++i) {
            const long double m = std::abs(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (!(best > kPivotRelXp * scale)) return false;
        std::swap(A[static_cast<std::size_t>(k)], A[static_cast<std::size_t>(piv)]);
        std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
        for (int i = k + 1; i < n; ++i) {
            const XC m = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] /
                         A[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = XC(0.0L);
            for (int j = k + 1; j < n; ++j)
                A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    m * A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            b[static_cast<std::size_t>(i)] -= m * b[static_cast<std::size_t>(k)];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        XC acc = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            acc -= A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(i)] = acc / A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    }
    return true;
}

std::vector<XC> poly_from_roots_xp(const std::vector<Complex>& roots, XC lead) {
    std::vector<XC> p{lead};
    for (const auto& r : roots) {
        const XC z = widen(r);
        std::vector<XC> nx(p.size() + 1, XC(0.0L));
        for (std::size_t k = 0; k < p.size(); ++k) {
            nx[k + 1] += p[k];
            nx[k] -= z * p[k];
        }
        p = std::move(nx);
    }
    return p;
}

// Laurent coefficients of num/den, deg(num) = deg(den) - 1, by reversed
// power-series division.
std::vector<XC> laurent_xp(const std::vector<XC>& num, const std::vector<XC>& den, int K) {
    const int d = static_cast<int>(den.size()) - 1;
    auto nrev = [&](int j) {
        const int k = d - 1 - j;
        return k >= 0 && k < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(k)] : XC(0.0L);
    };
    auto drev = [&](int j) {
        const int k = d - j;
        return k >= 0 ? den[static_cast<std::size_t>(k)] : XC(0.0L);
    };
    std::vector<XC> M(static_cast<std::size_t>(K));
    for (int j = 0; j < K; ++j) {
        XC acc = nrev(j);
        for (int i = 1; i <= j; ++i) acc -= drev(i) * M[static_cast<std::size_t>(j - i)];
        M[static_cast<std::size_t>(j)] = acc / drev(0);
    }
    return M;
}

// Weyl-coefficient reconstruction (the Hankel systems and the coefficient
// formulas) in long double. The solvability gate runs in double on the
// rounded coefficients, identically to the double path.
StandardCoeffs weyl_solve_xp(const std::vector<XC>& M, int l) {
    {
        std::vector<Complex> Md(M.size());
        for (std::size_t k = 0; k < M.size(); ++k) Md[k] = narrow(M[k]);
        Md[0] = Complex(1.0);
        const HankelCheck check = hankel_condition(Md);
        if (!check.pass)
            throw HankelConditionViolated(
                "solve: Hankel determinant condition violated; no recurrence has these Weyl "
                "coefficients");
    }

    std::vector<std::vector<XC>> cols(static_cast<std::size_t>(l + 1));
    cols[0] = {XC(1.0L)};
    auto hankel = [&](int n) {
        std::vector<std::vector<XC>> H(static_cast<std::size_t>(n + 1),
                                       std::vector<XC>(static_cast<std::size_t>(n + 1)));
        for (int r = 0; r <= n; ++r)
            for (int c = 0; c <= n; ++c)
                H[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = M[static_cast<std::size_t>(r + c)];
        return H;
    };
    for (int n = 1; n <= l - 1; ++n) {
        auto H = hankel(n);
        std::vector<XC> rhs(static_cast<std::size_t>(n + 1), XC(0.0L));
        rhs.back() = XC(1.0L);
        if (!lu_solve(H, rhs))
            throw HankelConditionViolated("solve: Hankel system singular");
        cols[static_cast<std::size_t>(n)] = std::move(rhs);
    }
    const XC c_ll = cols[static_cast<std::size_t>(l - 1)].back();
    {
        auto H = hankel(l - 1);
        std::vector<XC> rhs(static_cast<std::size_t>(l));
        for (int k = 0; k < l; ++k) rhs[static_cast<std::size_t>(k)] = -c_ll * M[static_cast<std::size_t>(l + k)];
        if (!lu_solve(H, rhs))
            throw HankelConditionViolated("solve: Hankel system singular");
        rhs.push_back(c_ll);
        cols[static_cast<std::size_t>(l)] = std::move(rhs);
    }

    auto c = [&](int i, int n) -> XC {
        if (i < 0) return XC(0.0L);
        return cols[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    };
    std::vector<Complex> a(static_cast<std::size_t>(l));
    std::vector<Complex> b(static_cast<std::size_t>(l));
    for (int n = 1; n <= l; ++n) {
        const XC an = n == l ? XC(1.0L) : c(n - 1, n - 1) / c(n, n);
        const XC bn = (c(n - 2, n - 1) - an * c(n - 1, n)) / c(n - 1, n - 1);
        a[static_cast<std::size_t>(n - 1)] = n == l ? Complex(1.0) : narrow(an);
        b[static_cast<std::size_t>(n - 1)] = narrow(bn);
    }
    return StandardCoeffs::make(std::move(a), std::move(b));
}

}  // namespace

namespace {

StandardCoeffs recover_from_boundary_xp(const std::vector<XC>& r0, const std::vector<XC>& r1,
                                        int L, const std::vector<Complex>& eigenvalues,
                                        XC lead) {
    const std::vector<XC> E = poly_from_roots_xp(eigenvalues, lead);
    auto R0c = [&](int k) {
        return k >= 0 && k < static_cast<int>(r0.size()) ? r0[static_cast<std::size_t>(k)] : XC(0.0L);
    };
    auto R1c = [&](int k) {
        return k >= 0 && k < static_cast<int>(r1.size()) ? r1[static_cast<std::size_t>(k)] : XC(0.0L);
    };

    // One (2L-1) x (2L-1) system over the non-leading v coefficients, the
    // monic terms on the right-hand side.
    const int n = 2 * L - 1;
    std::vector<std::vector<XC>> A(static_cast<std::size_t>(n), std::vector<XC>(static_cast<std::size_t>(n), XC(0.0L)));
    std::vector<XC> rhs(static_cast<std::size_t>(n));
    for (int s = 0; s <= 2 * L - 2; ++s) {
        for (int k = 0; k <= L - 2; ++k) A[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] = R0c(s - k);
        for (int k = 0; k <= L - 1; ++k)
            A[static_cast<std::size_t>(s)][static_cast<std::size_t>((L - 1) + k)] = -R1c(s - k);
        rhs[static_cast<std::size_t>(s)] = E[static_cast<std::size_t>(s)] - R0c(s - (L - 1)) + R1c(s - L);
    }
    if (!lu_solve(A, rhs))
        throw SingularSystem(
            "recover_v: coefficient system singular (R0, R1 not relatively prime or degenerate)");

    std::vector<XC> v1(static_cast<std::size_t>(L)), v0(static_cast<std::size_t>(L + 1));
    for (int k = 0; k <= L - 2; ++k) v1[static_cast<std::size_t>(k)] = rhs[static_cast<std::size_t>(k)];
    v1[static_cast<std::size_t>(L - 1)] = XC(1.0L);
    for (int k = 0; k <= L - 1; ++k) v0[static_cast<std::size_t>(k)] = rhs[static_cast<std::size_t>((L - 1) + k)];
    v0[static_cast<std::size_t>(L)] = XC(1.0L);

    return weyl_solve_xp(laurent_xp(v1, v0, 2 * L), L);
}

}  // namespace

StandardCoeffs solve_poly_bc_xp(const BoundaryPolys& B, const std::vector<Complex>& eigenvalues,
                                Complex leading) {
    std::vector<XC> r0(B.R0.coeffs().size()), r1(B.R1.coeffs().size());
    for (std::size_t k = 0; k < r0.size(); ++k) r0[k] = widen(B.R0.coeffs()[k]);
    for (std::size_t k = 0; k < r1.size(); ++k) r1[k] = widen(B.R1.coeffs()[k]);
    return recover_from_boundary_xp(r0, r1, B.size(), eigenvalues, widen(leading));
}

StandardCoeffs solve_transmission_reduced_xp(std::span<const Complex> alpha_dot,
                                             std::span<const Complex> beta_dot, Complex alpha_l,
                                             const std::vector<Complex>& eigenvalues) {
    const int l = static_cast<int>(alpha_dot.size());

    // phi_dot coefficient vectors by the forward recursion, in long double.
    std::vector<std::vector<XC>> phid(static_cast<std::size_t>(l + 2));
    phid[1] = {XC(1.0L)};
    for (int n = 1; n <= l; ++n) {
        const XC an = widen(alpha_dot[static_cast<std::size_t>(n - 1)]);
        const XC bn = widen(beta_dot[static_cast<std::size_t>(n - 1)]);
        const auto& cur = phid[static_cast<std::size_t>(n)];
        const auto& prev = phid[static_cast<std::size_t>(n - 1)];
        std::vector<XC> next(std::max(cur.size() + 1, prev.size()), XC(0.0L));
        for (std::size_t k = 0; k < cur.size(); ++k) {
            next[k + 1] += cur[k];
            next[k] -= bn * cur[k];
        }
        for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= an * prev[k];
        for (auto& c : next) c /= an;
        phid[static_cast<std::size_t>(n + 1)] = std::move(next);
    }

    std::vector<XC> r0 = phid[static_cast<std::size_t>(l + 1)];
    const XC al = widen(alpha_l);
    for (auto& c : r0) c *= al;
    const std::vector<XC>& r1 = phid[static_cast<std::size_t>(l)];

    const XC lead = r0.back() - r1.back();
    return recover_from_boundary_xp(r0, r1, l, eigenvalues, lead);
}

StandardCoeffs solve_two_spectra_xp(const std::vector<Complex>& mu,
                                    const std::vector<Complex>& nu) {
    const int l = static_cast<int>(mu.size());
    const std::vector<XC> den = poly_from_roots_xp(mu, XC(1.0L));
    const std::vector<XC> num = poly_from_roots_xp(nu, XC(1.0L));
    return weyl_solve_xp(laurent_xp(num, den, 2 * l), l);
}

}  // namespace dtev::detail
