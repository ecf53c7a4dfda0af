#include "dtev/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "dtev/weyl_inverse.hpp"

namespace dtev {

namespace {

Complex random_annulus(Rng& rng, double rmin, double rmax) {
    std::uniform_real_distribution<double> mag(rmin, rmax);
    std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
    const double r = mag(rng);
    const double t = arg(rng);
    return Complex(r * std::cos(t), r * std::sin(t));
}

}  // namespace

Complex random_in_disc(Rng& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double t = 2.0 * std::numbers::pi * unit(rng);
    return Complex(r * std::cos(t), r * std::sin(t));
}

StandardCoeffs random_standard(Rng& rng, int l) {
    std::vector<Complex> a(static_cast<std::size_t>(l));
    std::vector<Complex> b(static_cast<std::size_t>(l));
    for (int n = 0; n + 1 < l; ++n) a[static_cast<std::size_t>(n)] = random_annulus(rng, 0.5, 2.0);
    a[static_cast<std::size_t>(l - 1)] = Complex(1.0);
    for (int n = 0; n < l; ++n) b[static_cast<std::size_t>(n)] = random_in_disc(rng, 2.0);
    return StandardCoeffs::make(std::move(a), std::move(b));
}

TransmissionInstance random_transmission(Rng& rng, int l) {
    std::vector<Complex> alpha(static_cast<std::size_t>(l)), beta(static_cast<std::size_t>(l));
    std::vector<Complex> alpha_dot(static_cast<std::size_t>(l)), beta_dot(static_cast<std::size_t>(l));
    for (int n = 0; n < l; ++n) {
        alpha[static_cast<std::size_t>(n)] = random_annulus(rng, 0.5, 2.0);
        alpha_dot[static_cast<std::size_t>(n)] = random_annulus(rng, 0.5, 2.0);
        beta[static_cast<std::size_t>(n)] = random_in_disc(rng, 2.0);
        beta_dot[static_cast<std::size_t>(n)] = random_in_disc(rng, 2.0);
    }
    // Rejection keeps the leading coefficient of D away from zero.
    while (std::abs(alpha[static_cast<std::size_t>(l - 1)] - alpha_dot[static_cast<std::size_t>(l - 1)]) < 0.2)
        alpha[static_cast<std::size_t>(l - 1)] = random_annulus(rng, 0.5, 2.0);
    return TransmissionInstance::make(std::move(alpha), std::move(beta), std::move(alpha_dot),
                                      std::move(beta_dot));
}

BoundaryPolys random_boundary(Rng& rng, int l) {
    // Roots of R0 and R1 jointly separated so the pair stays coprime with
    // margin; leading coefficients kept apart for the degree law.
    std::vector<Complex> roots;
    while (static_cast<int>(roots.size()) < 2 * l - 1) {
        const Complex z = random_in_disc(rng, 2.0);
        bool ok = true;
        for (const auto& w : roots)
            if (std::abs(z - w) < 0.05) {
                ok = false;
                break;
            }
        if (ok) roots.push_back(z);
    }

    const Complex r1 = random_annulus(rng, 0.5, 2.0);
    Complex r0 = random_annulus(rng, 0.5, 2.0);
    while (std::abs(r0 - r1) < 0.2 * std::max(std::abs(r0), std::abs(r1)))
        r0 = random_annulus(rng, 0.5, 2.0);

    Spectrum roots0, roots1;
    roots0.values.assign(roots.begin(), roots.begin() + l);
    roots1.values.assign(roots.begin() + l, roots.end());

    BoundaryPolys B;
    B.R0 = poly_from_roots(roots0, r0);
    B.R1 = l >= 2 ? poly_from_roots(roots1, r1) : Poly::constant(r1);
    B.config = BoundaryConfig::full;
    return B;
}

SymmetricJacobi random_symmetric_real(Rng& rng, int l) {
    std::uniform_real_distribution<double> amag(0.5, 2.0);
    std::uniform_real_distribution<double> bmag(-2.0, 2.0);
    std::vector<Complex> A(static_cast<std::size_t>(l - 1));
    std::vector<Complex> B(static_cast<std::size_t>(l));
    for (auto& an : A) an = Complex(amag(rng));
    for (auto& bn : B) bn = Complex(bmag(rng));
    return SymmetricJacobi::make(std::move(A), std::move(B));
}

RoundtripMode parse_roundtrip_mode(const std::string& name) {
    if (name == "weyl") return RoundtripMode::weyl;
    if (name == "two-spectra") return RoundtripMode::two_spectra;
    if (name == "polybc") return RoundtripMode::polybc;
    if (name == "transmission") return RoundtripMode::transmission;
    if (name == "hochstadt") return RoundtripMode::hochstadt;
    throw InvalidInput("unknown roundtrip mode: " + name);
}

StabilityProblem parse_stability_problem(const std::string& name) {
    if (name == "weyl") return StabilityProblem::weyl;
    if (name == "polybc") return StabilityProblem::polybc;
    if (name == "transmission") return StabilityProblem::transmission;
    throw InvalidInput("unknown stability problem: " + name);
}

double max_abs_diff(const std::vector<Complex>& x, const std::vector<Complex>& y) {
    if (x.size() != y.size()) throw InvalidInput("max_abs_diff: length mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

double spectrum_distance(std::vector<Complex> x, std::vector<Complex> y) {
    if (x.size() != y.size()) throw InvalidInput("spectrum_distance: size mismatch");
    // Repeatedly pair off the globally closest remaining values.
    double worst = 0.0;
    while (!x.empty()) {
        std::size_t bi = 0, bj = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) {
                const double d = std::abs(x[i] - y[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        worst = std::max(worst, best);
        x.erase(x.begin() + static_cast<std::ptrdiff_t>(bi));
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return worst;
}

RoundtripReport roundtrip_run(RoundtripMode mode, int l, int trials, std::uint64_t seed,
                              double tol) {
    if (l < 1 || l > 12) throw InvalidInput("roundtrip: l must be in 1..12");
    if (mode == RoundtripMode::hochstadt && (l < 3 || l % 2 == 0))
        throw InvalidInput("roundtrip: hochstadt mode needs odd l >= 3");
    if (trials < 1) throw InvalidInput("roundtrip: trials must be positive");

    RoundtripReport report;
    report.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
        Rng rng(trial_seed);
        double err = 0.0;

        switch (mode) {
            case RoundtripMode::weyl: {
                const StandardCoeffs S = random_standard(rng, l);
                const StandardCoeffs R = solve_weyl(weyl_forward(S).M).S;
                err = std::max(max_abs_diff(S.a, R.a), max_abs_diff(S.b, R.b));
                break;
            }
            case RoundtripMode::two_spectra: {
                const StandardCoeffs S = random_standard(rng, l);
                const StandardCoeffs R = solve_two_spectra(two_spectra_forward(S));
                err = std::max(max_abs_diff(S.a, R.a), max_abs_diff(S.b, R.b));
                break;
            }
            case RoundtripMode::polybc: {
                const StandardCoeffs S = random_standard(rng, l);
                const BoundaryPolys B = random_boundary(rng, l);
                const Spectrum spec = polybc_spectrum(S, B);
                const StandardCoeffs R = solve_poly_bc(B, spec);
                err = std::max(max_abs_diff(S.a, R.a), max_abs_diff(S.b, R.b));
                break;
            }
            case RoundtripMode::transmission: {
                const TransmissionInstance T = random_transmission(rng, l);
                const Spectrum spec = transmission_spectrum(T);
                const TransmissionCoeffs R = solve_transmission(
                    T.alpha_dot, T.beta_dot, T.alpha[static_cast<std::size_t>(l - 1)], spec);
                err = std::max(max_abs_diff(T.alpha, R.alpha), max_abs_diff(T.beta, R.beta));
                break;
            }
            case RoundtripMode::hochstadt: {
                const SymmetricJacobi J = random_symmetric_real(rng, l);
                const StandardCoeffs S = symmetric_to_standard(J);
                const Spectrum mu = two_spectra_forward(S).mu;
                const int m = (l + 1) / 2;
                std::vector<Complex> A_head(J.A.begin(), J.A.begin() + (m - 1));
                std::vector<Complex> B_head(J.B.begin(), J.B.begin() + (m - 1));
                const SymmetricJacobi R = solve_hochstadt_mixed(A_head, B_head, mu);
                err = std::max(max_abs_diff(J.A, R.A), max_abs_diff(J.B, R.B));
                break;
            }
        }

        report.max_error = std::max(report.max_error, err);
        if (err > tol && report.failed_trial < 0) {
            report.failed_trial = trial;
            report.failed_seed = trial_seed;
        }
    }
    return report;
}

namespace {

struct TrialOutcome {
    bool solved = false;
    double error = 0.0;
};

std::vector<StabilityRow> run_decades(const std::vector<double>& deltas, int trials,
                                      std::uint64_t seed,
                                      const std::function<TrialOutcome(Rng&, double)>& trial_fn) {
    std::vector<StabilityRow> rows;
    for (std::size_t di = 0; di < deltas.size(); ++di) {
        StabilityRow row;
        row.delta = deltas[di];
        row.trials = trials;
        double ratio_sum = 0.0;
        for (int t = 0; t < trials; ++t) {
            Rng rng(seed + 1000003ULL * di + static_cast<std::uint64_t>(t));
            TrialOutcome out;
            try {
                out = trial_fn(rng, row.delta);
            } catch (const Error&) {
                // Perturbed data left the local solvability ball.
                ++row.outside_ball;
                continue;
            }
            ++row.solved;
            row.max_error = std::max(row.max_error, out.error);
            if (row.delta > 0.0) ratio_sum += out.error / row.delta;
        }
        row.mean_ratio = row.solved > 0 ? ratio_sum / row.solved : 0.0;
        rows.push_back(row);
    }
    return rows;
}

std::vector<Complex> perturbed(Rng& rng, const std::vector<Complex>& x, double delta,
                               std::size_t first = 0) {
    std::vector<Complex> out = x;
    for (std::size_t i = first; i < out.size(); ++i) out[i] += random_in_disc(rng, delta);
    return out;
}

}  // namespace

std::vector<StabilityRow> stability_run_weyl(const StandardCoeffs& S,
                                             const std::vector<double>& deltas, int trials,
                                             std::uint64_t seed) {
    const WeylData W = weyl_forward(S);
    const StandardCoeffs base = solve_weyl(W.M).S;

    return run_decades(deltas, trials, seed, [&](Rng& rng, double delta) {
        const std::vector<Complex> M = perturbed(rng, W.M, delta, /*first=*/1);  // M_1 stays 1
        const StandardCoeffs R = solve_weyl(M).S;
        return TrialOutcome{true, std::max(max_abs_diff(base.a, R.a), max_abs_diff(base.b, R.b))};
    });
}

std::vector<StabilityRow> stability_run_polybc(const StandardCoeffs& S, const BoundaryPolys& B,
                                               const std::vector<double>& deltas, int trials,
                                               std::uint64_t seed) {
    const Spectrum spec = polybc_spectrum(S, B);
    const StandardCoeffs base = solve_poly_bc(B, spec);

    return run_decades(deltas, trials, seed, [&](Rng& rng, double delta) {
        Spectrum sp = spec;
        sp.values = perturbed(rng, sp.values, delta);
        BoundaryPolys Bp;
        Bp.R0 = Poly(perturbed(rng, B.R0.coeffs(), delta));
        Bp.R1 = Poly(perturbed(rng, B.R1.coeffs(), delta));
        Bp.config = B.config;
        const StandardCoeffs R = solve_poly_bc(Bp, sp);
        return TrialOutcome{true, std::max(max_abs_diff(base.a, R.a), max_abs_diff(base.b, R.b))};
    });
}

std::vector<StabilityRow> stability_run_transmission(const TransmissionInstance& T,
                                                     const std::vector<double>& deltas,
                                                     int trials, std::uint64_t seed) {
    const int l = T.l;
    const Spectrum spec = transmission_spectrum(T);
    const TransmissionCoeffs base = solve_transmission(
        T.alpha_dot, T.beta_dot, T.alpha[static_cast<std::size_t>(l - 1)], spec);

    return run_decades(deltas, trials, seed, [&](Rng& rng, double delta) {
        Spectrum sp = spec;
        sp.values = perturbed(rng, sp.values, delta);
        const std::vector<Complex> ad = perturbed(rng, T.alpha_dot, delta);
        const std::vector<Complex> bd = perturbed(rng, T.beta_dot, delta);
        const Complex al =
            T.alpha[static_cast<std::size_t>(l - 1)] + random_in_disc(rng, delta);
        const TransmissionCoeffs R = solve_transmission(ad, bd, al, sp);
        return TrialOutcome{
            true, std::max(max_abs_diff(base.alpha, R.alpha), max_abs_diff(base.beta, R.beta))};
    });
}

}  // namespace dtev
