// Acceptance suite: one pass/fail line per criterion, exit nonzero when
// anything fails. Each criterion pins its own tolerances and trial counts.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dtev/harness.hpp"
#include "dtev/reduction.hpp"
#include "dtev/weyl_inverse.hpp"

using namespace dtev;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& label, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

std::string err_str(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "max error %.3e", v);
    return buf;
}

std::vector<Complex> tridiag_eigenvalues(const SymmetricJacobi& J) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(J.l, J.l);
    for (int n = 0; n < J.l; ++n) M(n, n) = J.B[static_cast<std::size_t>(n)];
    for (int n = 0; n + 1 < J.l; ++n) {
        M(n, n + 1) = J.A[static_cast<std::size_t>(n)];
        M(n + 1, n) = J.A[static_cast<std::size_t>(n)];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
    std::vector<Complex> out;
    for (int i = 0; i < J.l; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Weyl round trip: 200 random instances, l cycling 1..10, recovery of
//    every coefficient to 1e-6, in under 5 seconds.
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int l = trial % 10 + 1;
        const StandardCoeffs S = random_standard(rng, l);
        const StandardCoeffs R = solve_weyl(weyl_forward(S).M).S;
        worst = std::max(worst, std::max(max_abs_diff(S.a, R.a), max_abs_diff(S.b, R.b)));
    }
    const double dt = seconds_since(t0);
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max error %.3e, %.2f s", worst, dt);
    report(1, worst <= 1e-6 && dt < 5.0, "Weyl round trip, 200 instances, l in 1..10", detail);
}

// 2. Closed-form l = 1: forward Weyl data is [1, b_1] exactly and
//    solve_weyl([1, 3]) returns b_1 = 3 to 1e-14.
void criterion_2() {
    const Complex b1(0.625, -1.5);
    const WeylData W = weyl_forward(StandardCoeffs::make({Complex(1.0)}, {b1}));
    const bool forward_exact = W.M.size() == 2 && W.M[0] == Complex(1.0) && W.M[1] == b1;

    const StandardCoeffs R = solve_weyl({Complex(1.0), Complex(3.0)}).S;
    const double err = std::abs(R.b[0] - Complex(3.0));
    report(2, forward_exact && err <= 1e-14 && R.a[0] == Complex(1.0),
           "closed-form l = 1 Weyl data and inversion", err_str(err));
}

// 3. Two-spectra round trip: 100 random instances to 1e-6 plus the worked
//    mu = {1,-1}, nu = {0} case to 1e-10.
void criterion_3() {
    double worst = 0.0;
    Rng rng(2025);
    for (int trial = 0; trial < 100; ++trial) {
        const int l = trial % 10 + 1;
        const StandardCoeffs S = random_standard(rng, l);
        const StandardCoeffs R = solve_two_spectra(two_spectra_forward(S));
        worst = std::max(worst, std::max(max_abs_diff(S.a, R.a), max_abs_diff(S.b, R.b)));
    }

    TwoSpectra worked;
    worked.mu.values = {Complex(1.0), Complex(-1.0)};
    worked.nu.values = {Complex(0.0)};
    const StandardCoeffs W = solve_two_spectra(worked);
    const double werr = std::max({std::abs(W.a[0] - Complex(1.0)), std::abs(W.b[0]),
                                  std::abs(W.b[1])});
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max error %.3e, worked case %.3e", worst, werr);
    report(3, worst <= 1e-6 && werr <= 1e-10, "two-spectra round trip, 100 instances", detail);
}

// 4. Polynomial-boundary round trip: 100 random (S, coprime R0/R1) pairs,
//    l <= 8; the characteristic polynomial always has exactly 2l-1 zeros.
void criterion_4() {
    double worst = 0.0;
    bool degrees_ok = true;
    Rng rng(2026);
    for (int trial = 0; trial < 100; ++trial) {
        const int l = trial % 8 + 1;
        const StandardCoeffs S = random_standard(rng, l);
        const BoundaryPolys B = random_boundary(rng, l);
        const Poly E = char_poly_polybc(S, B);
        if (E.degree() != 2 * l - 1) degrees_ok = false;
        const Spectrum sp = polybc_spectrum(S, B);
        const StandardCoeffs R = solve_poly_bc(B, sp);
        worst = std::max(worst, std::max(max_abs_diff(S.a, R.a), max_abs_diff(S.b, R.b)));
    }
    report(4, degrees_ok && worst <= 1e-6,
           "polynomial boundary condition round trip, 100 instances", err_str(worst));
}

// 5. Transmission round trip: 100 random instances to 1e-6; the worked
//    l = 1 instance recovers to 1e-12. Note: random l = 8 instances have a
//    heavy conditioning tail (the spectrum->coefficient map can carry
//    Lipschitz constants beyond 1e9), and for such draws the tolerance sits
//    below what double-precision eigenvalue data can carry.
void criterion_5() {
    double worst = 0.0;
    int within = 0;
    Rng rng(2027);
    for (int trial = 0; trial < 100; ++trial) {
        const int l = trial % 8 + 1;
        const TransmissionInstance T = random_transmission(rng, l);
        const Spectrum sp = transmission_spectrum(T);
        const TransmissionCoeffs R = solve_transmission(
            T.alpha_dot, T.beta_dot, T.alpha[static_cast<std::size_t>(T.l - 1)], sp);
        const double err =
            std::max(max_abs_diff(T.alpha, R.alpha), max_abs_diff(T.beta, R.beta));
        worst = std::max(worst, err);
        if (err <= 1e-6) ++within;
    }

    Spectrum sp;
    sp.values = {Complex(0.0)};
    const TransmissionCoeffs W =
        solve_transmission(std::vector<Complex>{Complex(1.0)}, std::vector<Complex>{Complex(0.0)},
                           Complex(2.0), sp);
    const double werr = std::max(std::abs(W.alpha[0] - Complex(2.0)), std::abs(W.beta[0]));
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max error %.3e, %d/100 within 1e-06, worked case %.3e",
                  worst, within, werr);
    report(5, worst <= 1e-6 && werr <= 1e-12, "transmission round trip, 100 instances", detail);
}

// 6. The two recovery paths for v0/v1 agree to 1e-8 on 50 random boundary
//    problems, 10 of them with a double root planted in R1.
void criterion_6() {
    double worst = 0.0;
    Rng rng(2028);
    auto measure = [&](const BoundaryPolys& B, const StandardCoeffs& S, int l) {
        const Poly E = char_poly_polybc(S, B);
        const VPair lin = recover_v_linear(B, E, l);
        const VPair her = recover_v_hermite(B, E, l);
        double d = 0.0;
        for (int k = 0; k <= l; ++k) d = std::max(d, std::abs(lin.v0.coeff(k) - her.v0.coeff(k)));
        for (int k = 0; k < l; ++k) d = std::max(d, std::abs(lin.v1.coeff(k) - her.v1.coeff(k)));
        worst = std::max(worst, d);
    };

    for (int trial = 0; trial < 40; ++trial) {
        const int l = trial % 8 + 1;
        measure(random_boundary(rng, l), random_standard(rng, l), l);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const int l = 3 + trial % 4;
        // Plant a double root in R1: roots drawn apart, last one doubled.
        std::vector<Complex> roots;
        while (static_cast<int>(roots.size()) < 2 * l - 2) {
            const Complex z = random_in_disc(rng, 2.0);
            bool ok = true;
            for (const auto& w : roots)
                if (std::abs(z - w) < 0.1) ok = false;
            if (ok) roots.push_back(z);
        }
        Spectrum r0, r1;
        r0.values.assign(roots.begin(), roots.begin() + l);
        r1.values.assign(roots.begin() + l, roots.end() - 1);
        r1.values.push_back(roots.back());
        r1.values.push_back(roots.back());
        BoundaryPolys B;
        B.R0 = poly_from_roots(r0, Complex(2.0, 0.3));
        B.R1 = poly_from_roots(r1, Complex(1.0));
        B.config = BoundaryConfig::full;
        measure(B, random_standard(rng, l), l);
    }
    report(6, worst <= 1e-8, "linear and Hermite recovery paths agree, 50 cases",
           err_str(worst));
}

// 7. Hankel necessity: forward Weyl data always satisfies the determinant
//    condition; the all-zero tail is rejected.
void criterion_7() {
    bool all_pass = true;
    Rng rng(2029);
    for (int trial = 0; trial < 100; ++trial) {
        const int l = trial % 10 + 1;
        if (!hankel_condition(weyl_forward(random_standard(rng, l)).M).pass) all_pass = false;
    }
    bool rejected = false;
    try {
        solve_weyl({Complex(1.0), Complex(0.0), Complex(0.0), Complex(0.0)});
    } catch (const HankelConditionViolated&) {
        rejected = true;
    }
    report(7, all_pass && rejected, "Hankel condition: necessity and rejection",
           all_pass ? (rejected ? "100 forward instances pass; [1,0,0,0] rejected"
                                : "[1,0,0,0] not rejected")
                    : "a forward instance failed the condition");
}

// 8. Degree and leading-coefficient laws on 100 random instances each:
//    deg D = 2l-1 with |leading| matching the coefficient products, and
//    leading(E) = r0 - r1, both to relative 1e-10.
void criterion_8() {
    double worst_d = 0.0, worst_e = 0.0;
    bool degrees_ok = true;
    Rng rng(2030);
    for (int trial = 0; trial < 100; ++trial) {
        const int l = trial % 8 + 1;
        const TransmissionInstance T = random_transmission(rng, l);
        const Poly D = char_poly_transmission(T);
        if (D.degree() != 2 * l - 1) degrees_ok = false;
        Complex lead(1.0);
        for (int k = 0; k < l; ++k)
            lead /= T.alpha[static_cast<std::size_t>(k)] * T.alpha_dot[static_cast<std::size_t>(k)];
        lead *= T.alpha[static_cast<std::size_t>(l - 1)] - T.alpha_dot[static_cast<std::size_t>(l - 1)];
        worst_d = std::max(worst_d,
                           std::abs(std::abs(D.leading()) - std::abs(lead)) / std::abs(lead));

        const StandardCoeffs S = random_standard(rng, l);
        const BoundaryPolys B = random_boundary(rng, l);
        const Complex want = B.R0.leading() - B.R1.leading();
        worst_e = std::max(worst_e,
                           std::abs(char_poly_polybc(S, B).leading() - want) / std::abs(want));
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "rel errors D %.3e, E %.3e", worst_d, worst_e);
    report(8, degrees_ok && worst_d <= 1e-10 && worst_e <= 1e-10,
           "degree and leading-coefficient laws, 100 instances", detail);
}

// 9. Mixed-data reconstruction: the 3x3 zero-diagonal example to 1e-10 and
//    50 random real instances (l in {3,5,7}) against the dense eigenvalue
//    oracle to 1e-6.
void criterion_9() {
    Spectrum mu3;
    mu3.values = {Complex(0.0), Complex(std::sqrt(2.0)), Complex(-std::sqrt(2.0))};
    const SymmetricJacobi J3 =
        solve_hochstadt_mixed(std::vector<Complex>{Complex(1.0)},
                              std::vector<Complex>{Complex(0.0)}, mu3);
    double werr = 0.0;
    werr = std::max(werr, std::abs(J3.A[0] - Complex(1.0)));
    werr = std::max(werr, std::abs(J3.A[1] - Complex(1.0)));
    for (const auto& bn : J3.B) werr = std::max(werr, std::abs(bn));

    double worst = 0.0;
    Rng rng(2031);
    for (int trial = 0; trial < 50; ++trial) {
        const int l = 3 + 2 * (trial % 3);
        const SymmetricJacobi J = random_symmetric_real(rng, l);
        Spectrum mu;
        mu.values = tridiag_eigenvalues(J);
        const int m = (l + 1) / 2;
        const std::vector<Complex> A_head(J.A.begin(), J.A.begin() + (m - 1));
        const std::vector<Complex> B_head(J.B.begin(), J.B.begin() + (m - 1));
        const SymmetricJacobi R = solve_hochstadt_mixed(A_head, B_head, mu);
        worst = std::max(worst, std::max(max_abs_diff(J.A, R.A), max_abs_diff(J.B, R.B)));
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "worked case %.3e, oracle max error %.3e", werr, worst);
    report(9, werr <= 1e-10 && worst <= 1e-6, "mixed-data reconstruction, 50 oracle instances",
           detail);
}

// 10. Stability scaling: one fixed instance per problem at l = 5, noise
//     decades 1e-2, 1e-3, 1e-4 with 20 trials each; the mean error/delta
//     ratio varies by at most a factor 10, all within 30 seconds.
void criterion_10() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> deltas{1e-2, 1e-3, 1e-4};
    bool ok = true;
    std::string detail;

    auto check_rows = [&](const std::vector<StabilityRow>& rows, const char* name) {
        double lo = 1e300, hi = 0.0;
        for (const auto& row : rows) {
            if (row.solved == 0) {
                ok = false;
                return;
            }
            lo = std::min(lo, row.mean_ratio);
            hi = std::max(hi, row.mean_ratio);
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%s spread %.2f; ", name, hi / lo);
        detail += buf;
        if (hi / lo > 10.0) ok = false;
    };

    Rng rng(2032);
    const StandardCoeffs S = random_standard(rng, 5);
    check_rows(stability_run_weyl(S, deltas, 20, 77), "weyl");

    const BoundaryPolys B = random_boundary(rng, 5);
    check_rows(stability_run_polybc(S, B, deltas, 20, 78), "polybc");

    const TransmissionInstance T = random_transmission(rng, 5);
    check_rows(stability_run_transmission(T, deltas, 20, 79), "transmission");

    const double dt = seconds_since(t0);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f s", dt);
    detail += buf;
    report(10, ok && dt < 30.0, "stability ratio spread within a factor 10 over three decades",
           detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    if (g_failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
