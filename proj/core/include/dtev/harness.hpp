#ifndef DTEV_HARNESS_HPP
#define DTEV_HARNESS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dtev/forward.hpp"
#include "dtev/reduction.hpp"

namespace dtev {

using Rng = std::mt19937_64;

// Uniform draw from the closed complex disc of the given radius.
Complex random_in_disc(Rng& rng, double radius);

// Random instances at desk scale: |a_n| in [0.5, 2] with uniform phase
// (a_l = 1), |b_n| <= 2. Transmission instances use the same ranges for
// alpha/beta and reject until |alpha_l - alpha_dot_l| >= 0.2. Boundary
// pairs draw roots in the disc of radius 2 with pairwise separation 0.05
// and leading coefficients with |r0 - r1| >= 0.2 * max(|r0|, |r1|).
StandardCoeffs random_standard(Rng& rng, int l);
TransmissionInstance random_transmission(Rng& rng, int l);
BoundaryPolys random_boundary(Rng& rng, int l);
SymmetricJacobi random_symmetric_real(Rng& rng, int l);  // real A_n in [0.5,2], B_n in [-2,2]

enum class RoundtripMode { weyl, two_spectra, polybc, transmission, hochstadt };

RoundtripMode parse_roundtrip_mode(const std::string& name);

struct RoundtripReport {
    int trials = 0;
    double max_error = 0.0;
    // First trial whose error exceeded the tolerance, with its seed.
    int failed_trial = -1;
    std::uint64_t failed_seed = 0;
    bool ok(double tol) const { return failed_trial < 0 && max_error <= tol; }
};

// Generate random instances (trial seed = seed + trial index), run
// forward then inverse, and report the maximum componentwise coefficient
// error. l <= 12.
RoundtripReport roundtrip_run(RoundtripMode mode, int l, int trials, std::uint64_t seed,
                              double tol);

enum class StabilityProblem { weyl, polybc, transmission };

StabilityProblem parse_stability_problem(const std::string& name);

struct StabilityRow {
    double delta = 0.0;
    int trials = 0;
    int solved = 0;
    int outside_ball = 0;  // trials where the perturbed data lost solvability
    double mean_ratio = 0.0;  // mean of (max coefficient error) / delta
    double max_error = 0.0;
};

// Perturbation experiment around one fixed instance. The unperturbed
// recovery is the baseline; each trial perturbs the problem data by
// independent uniform complex noise of magnitude delta, re-solves, and
// measures the max coefficient deviation from the baseline (so delta = 0
// gives error exactly 0). Trials whose perturbed data is no longer
// solvable are counted as outside the local solvability ball rather than
// failing the run.
//
//   weyl:         perturbs M_2..M_{2l}            (instance: StandardCoeffs)
//   polybc:       perturbs eigenvalues and R0/R1  (StandardCoeffs + BoundaryPolys)
//   transmission: perturbs eigenvalues, dotted data, and alpha_l
std::vector<StabilityRow> stability_run_weyl(const StandardCoeffs& S,
                                             const std::vector<double>& deltas, int trials,
                                             std::uint64_t seed);
std::vector<StabilityRow> stability_run_polybc(const StandardCoeffs& S, const BoundaryPolys& B,
                                               const std::vector<double>& deltas, int trials,
                                               std::uint64_t seed);
std::vector<StabilityRow> stability_run_transmission(const TransmissionInstance& T,
                                                     const std::vector<double>& deltas,
                                                     int trials, std::uint64_t seed);

// Max componentwise distance between coefficient vectors (same length).
double max_abs_diff(const std::vector<Complex>& x, const std::vector<Complex>& y);

// Max over the min-distance matching of two equal-size spectra; used to
// compare eigenvalue multisets.
double spectrum_distance(std::vector<Complex> x, std::vector<Complex> y);

}  // namespace dtev

#endif  // DTEV_HARNESS_HPP
