// Command-line front end: forward runs, inverse reconstructions, round-trip
// verification, and stability sweeps over the on-disk JSON artifacts.
//
// Exit codes: 0 ok, 2 malformed input or violated invariant, 3 solvability
// failure (vanishing Hankel determinant), 4 round-trip tolerance exceeded.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dtev/harness.hpp"
#include "dtev/io.hpp"
#include "dtev/weyl_inverse.hpp"

namespace {

using namespace dtev;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSolvability = 3;
constexpr int kExitTolerance = 4;

void emit(const std::optional<std::string>& out_path, const std::string& content) {
    if (out_path)
        write_file(*out_path, content);
    else
        std::cout << content;
}

Spectrum to_spectrum(const std::vector<Complex>& values, double rel_tol) {
    Spectrum sp;
    sp.values = values;
    double m = 0.0;
    for (const auto& z : values) m = std::max(m, std::abs(z));
    sp.tol = rel_tol * std::max(1.0, m);
    return sp;
}

void print_hankel_diagnostics(const StandardCoeffs& S) {
    const HankelCheck check = hankel_condition(weyl_forward(S).M);
    std::cout << "diagnostics:\n";
    std::cout << "  Hankel determinants of the recovered problem's Weyl data:\n";
    if (check.deltas.empty()) std::cout << "    (none for l = 1; Delta_0 = 1)\n";
    for (std::size_t n = 0; n < check.deltas.size(); ++n)
        std::cout << "    Delta_" << n + 1 << " = " << format_complex(check.deltas[n]) << "\n";
    std::cout << "  condition " << (check.pass ? "holds" : "violated") << "\n";
}

int run_forward(const std::string& in_path, const std::string& what,
                const std::optional<std::string>& out_path, double rel_tol) {
    const Instance inst = load_instance(read_file(in_path));

    // Normalize to either a transmission instance or standard coefficients.
    const TransmissionInstance* T = std::get_if<TransmissionInstance>(&inst);
    std::optional<StandardCoeffs> S;
    if (const auto* s = std::get_if<StandardCoeffs>(&inst))
        S = *s;
    else if (const auto* j = std::get_if<SymmetricJacobi>(&inst))
        S = symmetric_to_standard(*j);
    if (!T && !S) {
        std::cerr << "error: forward runs need a full instance (standard, transmission, or "
                     "symmetric)\n";
        return kExitInput;
    }

    if (T) {
        if (what == "char-poly") {
            emit(out_path, save_poly(char_poly_transmission(*T)));
            return kExitOk;
        }
        if (what == "spectrum") {
            SpectrumFile sp;
            sp.eigenvalues = sorted_values(transmission_spectrum(*T, rel_tol).values);
            emit(out_path, save_spectrum(sp));
            return kExitOk;
        }
        std::cerr << "error: '" << what << "' output requires a standard or symmetric instance\n";
        return kExitInput;
    }

    if (what == "weyl") {
        WeylFile w;
        w.l = S->l;
        w.M = weyl_forward(*S).M;
        emit(out_path, save_weyl(w));
    } else if (what == "spectrum") {
        SpectrumFile sp;
        sp.eigenvalues = sorted_values(two_spectra_forward(*S, rel_tol).mu.values);
        emit(out_path, save_spectrum(sp));
    } else if (what == "two-spectra") {
        const TwoSpectra ts = two_spectra_forward(*S, rel_tol);
        SpectrumFile sp;
        sp.two_spectra = true;
        sp.mu = sorted_values(ts.mu.values);
        sp.nu = sorted_values(ts.nu.values);
        emit(out_path, save_spectrum(sp));
    } else {  // char-poly
        const SolutionFamily P = solution_family(*S, FamilyKind::P);
        emit(out_path, save_poly(P.at(S->l + 1)));
    }
    return kExitOk;
}

int run_inverse(const std::string& mode, const std::optional<std::string>& weyl_path,
                const std::optional<std::string>& spectrum_path,
                const std::optional<std::string>& boundary_path,
                const std::optional<std::string>& known_path,
                const std::optional<std::string>& out_path, double rel_tol) {
    auto need = [&](const std::optional<std::string>& p, const char* flag) -> const std::string& {
        if (!p) throw InvalidInput(std::string("inverse --mode ") + mode + " requires " + flag);
        return *p;
    };

    if (mode == "weyl") {
        const WeylFile w = load_weyl(read_file(need(weyl_path, "--weyl")));
        const StandardCoeffs S = solve_weyl(w.M).S;
        print_hankel_diagnostics(S);
        emit(out_path, save_instance(S));
        return kExitOk;
    }

    if (mode == "two-spectra") {
        const SpectrumFile sp = load_spectrum(read_file(need(spectrum_path, "--spectrum")));
        if (!sp.two_spectra)
            throw InvalidInput("inverse --mode two-spectra needs a spectrum file with mu and nu");
        TwoSpectra ts;
        ts.mu = to_spectrum(sp.mu, rel_tol);
        ts.nu = to_spectrum(sp.nu, rel_tol);
        const StandardCoeffs S = solve_two_spectra(ts);
        print_hankel_diagnostics(S);
        emit(out_path, save_instance(S));
        return kExitOk;
    }

    if (mode == "polybc") {
        const BoundaryPolys B = load_boundary(read_file(need(boundary_path, "--boundary")));
        const SpectrumFile sp = load_spectrum(read_file(need(spectrum_path, "--spectrum")));
        if (sp.two_spectra)
            throw InvalidInput("inverse --mode polybc needs a plain eigenvalue list");
        const StandardCoeffs S = solve_poly_bc(B, to_spectrum(sp.eigenvalues, rel_tol));
        print_hankel_diagnostics(S);
        emit(out_path, save_instance(S));
        return kExitOk;
    }

    if (mode == "transmission") {
        const Instance known = load_instance(read_file(need(known_path, "--known")));
        TransmissionData data;
        if (const auto* td = std::get_if<TransmissionData>(&known)) {
            data = *td;
        } else if (const auto* t = std::get_if<TransmissionInstance>(&known)) {
            data.l = t->l;
            data.alpha_dot = t->alpha_dot;
            data.beta_dot = t->beta_dot;
            data.alpha_l = t->alpha[static_cast<std::size_t>(t->l - 1)];
        } else {
            throw InvalidInput(
                "inverse --mode transmission needs a transmission or transmission-data file");
        }
        const SpectrumFile sp = load_spectrum(read_file(need(spectrum_path, "--spectrum")));
        if (sp.two_spectra)
            throw InvalidInput("inverse --mode transmission needs a plain eigenvalue list");
        const TransmissionCoeffs rec = solve_transmission(data.alpha_dot, data.beta_dot,
                                                          data.alpha_l,
                                                          to_spectrum(sp.eigenvalues, rel_tol));
        const TransmissionInstance full =
            TransmissionInstance::make(rec.alpha, rec.beta, data.alpha_dot, data.beta_dot);
        print_hankel_diagnostics(reduce_transmission(full).S);
        emit(out_path, save_instance(full));
        return kExitOk;
    }

    if (mode == "hochstadt") {
        const Instance known = load_instance(read_file(need(known_path, "--known")));
        SymmetricHead head;
        if (const auto* h = std::get_if<SymmetricHead>(&known)) {
            head = *h;
        } else if (const auto* j = std::get_if<SymmetricJacobi>(&known)) {
            if (j->l % 2 == 0)
                throw InvalidInput("inverse --mode hochstadt needs an odd-size instance");
            const int m = (j->l + 1) / 2;
            head.l = j->l;
            head.A.assign(j->A.begin(), j->A.begin() + (m - 1));
            head.B.assign(j->B.begin(), j->B.begin() + (m - 1));
        } else {
            throw InvalidInput(
                "inverse --mode hochstadt needs a symmetric or symmetric-head file");
        }
        const SpectrumFile sp = load_spectrum(read_file(need(spectrum_path, "--spectrum")));
        if (sp.two_spectra)
            throw InvalidInput("inverse --mode hochstadt needs a plain eigenvalue list");
        if (static_cast<int>(sp.eigenvalues.size()) != head.l)
            throw InvalidInput("inverse --mode hochstadt: spectrum size must equal l");
        const SymmetricJacobi J =
            solve_hochstadt_mixed(head.A, head.B, to_spectrum(sp.eigenvalues, rel_tol));
        print_hankel_diagnostics(symmetric_to_standard(J));
        emit(out_path, save_instance(J));
        return kExitOk;
    }

    throw InvalidInput("unknown inverse mode: " + mode);
}

int run_roundtrip(const std::string& mode, int l, int trials, std::uint64_t seed, double tol,
                  const std::optional<std::string>& out_path) {
    const RoundtripReport report = roundtrip_run(parse_roundtrip_mode(mode), l, trials, seed, tol);

    char line[256];
    std::snprintf(line, sizeof(line),
                  "roundtrip mode=%s l=%d trials=%d seed=%llu: max error = %.3e (tol %.1e) -> %s\n",
                  mode.c_str(), l, trials, static_cast<unsigned long long>(seed),
                  report.max_error, tol, report.ok(tol) ? "PASS" : "FAIL");
    std::cout << line;

    if (out_path) {
        std::string doc = "{\n  \"kind\": \"roundtrip-report\",\n  \"mode\": \"" + mode +
                          "\",\n  \"l\": " + std::to_string(l) +
                          ",\n  \"trials\": " + std::to_string(trials) +
                          ",\n  \"seed\": " + std::to_string(seed) +
                          ",\n  \"max_error\": " + format_double(report.max_error) +
                          ",\n  \"pass\": " + (report.ok(tol) ? "true" : "false") + "\n}\n";
        write_file(*out_path, doc);
    }

    if (!report.ok(tol)) {
        std::cerr << "trial " << report.failed_trial << " (seed " << report.failed_seed
                  << ") exceeded tolerance\n";
        return kExitTolerance;
    }
    return kExitOk;
}

int run_stability(const std::string& in_path, const std::string& problem,
                  const std::vector<double>& deltas, int trials, std::uint64_t seed,
                  const std::optional<std::string>& boundary_path,
                  const std::optional<std::string>& out_path) {
    const Instance inst = load_instance(read_file(in_path));
    const StabilityProblem prob = parse_stability_problem(problem);

    std::vector<StabilityRow> rows;
    switch (prob) {
        case StabilityProblem::weyl: {
            const auto* S = std::get_if<StandardCoeffs>(&inst);
            if (!S) throw InvalidInput("stability weyl needs a standard instance");
            rows = stability_run_weyl(*S, deltas, trials, seed);
            break;
        }
        case StabilityProblem::polybc: {
            const auto* S = std::get_if<StandardCoeffs>(&inst);
            if (!S) throw InvalidInput("stability polybc needs a standard instance");
            if (!boundary_path) throw InvalidInput("stability polybc requires --boundary");
            const BoundaryPolys B = load_boundary(read_file(*boundary_path));
            rows = stability_run_polybc(*S, B, deltas, trials, seed);
            break;
        }
        case StabilityProblem::transmission: {
            const auto* T = std::get_if<TransmissionInstance>(&inst);
            if (!T) throw InvalidInput("stability transmission needs a transmission instance");
            rows = stability_run_transmission(*T, deltas, trials, seed);
            break;
        }
    }

    std::printf("stability problem=%s trials=%d seed=%llu\n", problem.c_str(), trials,
                static_cast<unsigned long long>(seed));
    std::printf("  %-10s %-7s %-14s %-16s %s\n", "delta", "solved", "outside-ball",
                "mean(err/delta)", "max(err)");
    for (const auto& row : rows)
        std::printf("  %-10.3e %-7d %-14d %-16.6e %.6e\n", row.delta, row.solved,
                    row.outside_ball, row.mean_ratio, row.max_error);

    if (out_path) {
        std::string doc = "{\n  \"kind\": \"stability-report\",\n  \"problem\": \"" + problem +
                          "\",\n  \"rows\": [\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            doc += "    {\"delta\": " + format_double(rows[i].delta) +
                   ", \"solved\": " + std::to_string(rows[i].solved) +
                   ", \"outside_ball\": " + std::to_string(rows[i].outside_ball) +
                   ", \"mean_ratio\": " + format_double(rows[i].mean_ratio) +
                   ", \"max_error\": " + format_double(rows[i].max_error) + "}";
            doc += i + 1 < rows.size() ? ",\n" : "\n";
        }
        doc += "  ]\n}\n";
        write_file(*out_path, doc);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forward and inverse spectral problems for three-term recurrences with "
                 "polynomial and transmission-type boundary conditions"};
    app.require_subcommand(1);

    std::string in_path, what, mode, problem;
    std::optional<std::string> out_path, weyl_path, spectrum_path, boundary_path, known_path;
    double tol = 1e-8;
    double rt_tol = 1e-6;
    int l = 0;
    int trials = 1;
    std::uint64_t seed = 1;
    std::vector<double> deltas{1e-2, 1e-3, 1e-4};

    CLI::App* fwd = app.add_subcommand("forward", "Spectra, Weyl data, or characteristic "
                                                  "polynomial of an instance file");
    fwd->add_option("--in", in_path, "instance file")->required();
    fwd->add_option("--what", what, "spectrum | two-spectra | weyl | char-poly")
        ->required()
        ->check(CLI::IsMember({"spectrum", "two-spectra", "weyl", "char-poly"}));
    fwd->add_option("--out", out_path, "output file (stdout when omitted)");
    fwd->add_option("--tol", tol, "relative clustering tolerance");

    CLI::App* inv = app.add_subcommand("inverse", "Reconstruct coefficients from spectral data");
    inv->add_option("--mode", mode, "weyl | two-spectra | polybc | transmission | hochstadt")
        ->required()
        ->check(CLI::IsMember({"weyl", "two-spectra", "polybc", "transmission", "hochstadt"}));
    inv->add_option("--weyl", weyl_path, "weyl coefficient file");
    inv->add_option("--spectrum", spectrum_path, "spectrum file");
    inv->add_option("--boundary", boundary_path, "boundary polynomial file");
    inv->add_option("--known", known_path, "a-priori known data (instance, transmission-data, "
                                           "or symmetric-head file)");
    inv->add_option("--out", out_path, "output instance file (stdout when omitted)");
    inv->add_option("--tol", tol, "relative clustering tolerance");

    CLI::App* rt = app.add_subcommand("roundtrip", "Random forward+inverse verification");
    rt->add_option("--mode", mode, "weyl | two-spectra | polybc | transmission | hochstadt")
        ->required()
        ->check(CLI::IsMember({"weyl", "two-spectra", "polybc", "transmission", "hochstadt"}));
    rt->add_option("--l", l, "problem size (1..12)")->required();
    rt->add_option("--trials", trials, "number of random trials")->required();
    rt->add_option("--seed", seed, "base seed (trial i uses seed + i)");
    rt->add_option("--tol", rt_tol, "max componentwise recovery error");
    rt->add_option("--out", out_path, "report file");

    CLI::App* st = app.add_subcommand("stability", "Perturbation sweep around one instance");
    st->add_option("--in", in_path, "instance file")->required();
    st->add_option("--mode", problem, "weyl | polybc | transmission")
        ->required()
        ->check(CLI::IsMember({"weyl", "polybc", "transmission"}));
    st->add_option("--deltas", deltas, "perturbation magnitudes")->delimiter(',');
    st->add_option("--trials", trials, "trials per delta")->required();
    st->add_option("--seed", seed, "base seed");
    st->add_option("--boundary", boundary_path, "boundary polynomial file (polybc mode)");
    st->add_option("--out", out_path, "report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (fwd->parsed()) return run_forward(in_path, what, out_path, tol);
        if (inv->parsed())
            return run_inverse(mode, weyl_path, spectrum_path, boundary_path, known_path,
                               out_path, tol);
        if (rt->parsed()) return run_roundtrip(mode, l, trials, seed, rt_tol, out_path);
        return run_stability(in_path, problem, deltas, trials, seed, boundary_path, out_path);
    } catch (const HankelConditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolvability;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
