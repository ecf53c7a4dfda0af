#include "dtev/weyl_inverse.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <utility>

#include "dtev/linalg.hpp"
#include "extprec.hpp"

namespace dtev {

namespace {

constexpr double kDeltaRel = 1e-10;

void check_weyl_input(const std::vector<Complex>& M) {
    if (M.empty() || M.size() % 2 != 0)
        throw InvalidInput("weyl: coefficient count must be 2l for some l >= 1");
    if (std::abs(M[0] - Complex(1.0)) > 1e-12)
        throw InvalidInput("weyl: M_1 must equal 1 (inputs are not rescaled)");
}

}  // namespace

HankelCheck hankel_condition(const std::vector<Complex>& M) {
    check_weyl_input(M);
    const int l = static_cast<int>(M.size()) / 2;

    HankelCheck out;
    out.pass = true;
    for (int n = 1; n <= l - 1; ++n) {
        const DenseMatrix H = hankel_matrix(M, n);
        double sc = 0.0;
        for (const auto& z : H.entries) sc = std::max(sc, std::abs(z));
        const Complex delta = determinant(H);
        out.deltas.push_back(delta);
        if (!(std::abs(delta) > kDeltaRel * sc)) out.pass = false;
    }
    return out;
}

namespace detail {

std::vector<Complex> cramer_tail_column(const std::vector<Complex>& M, int l, Complex c_ll,
                                        Complex delta_lm1) {
    // c_{il} = (-1)^{l+i} minor(l, i) / Delta_l for i = 0..l-1, where the
    // minor deletes row l (the one that would contain M_{2l+1}) and column i
    // of the full (l+1)x(l+1) Hankel system, and Delta_l = Delta_{l-1}/c_{ll}.
    const Complex delta_l = delta_lm1 / c_ll;
    std::vector<Complex> c(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        DenseMatrix minor(l, l);
        for (int r = 0; r < l; ++r) {
            int cc = 0;
            for (int col = 0; col <= l; ++col) {
                if (col == i) continue;
                minor.at(r, cc++) = M[static_cast<std::size_t>(r + col)];
            }
        }
        const double sign = ((l + i) % 2 == 0) ? 1.0 : -1.0;
        c[static_cast<std::size_t>(i)] = sign * determinant(minor) / delta_l;
    }
    return c;
}

}  // namespace detail

WeylSolution solve_weyl(const std::vector<Complex>& M) {
    check_weyl_input(M);
    const int l = static_cast<int>(M.size()) / 2;

    const HankelCheck check = hankel_condition(M);
    if (!check.pass) {
        std::ostringstream msg;
        msg << "solve_weyl: Hankel determinant condition violated (";
        for (std::size_t n = 0; n < check.deltas.size(); ++n) {
            if (n) msg << ", ";
            msg << "Delta_" << n + 1 << " = " << std::abs(check.deltas[n]);
        }
        msg << "); no recurrence has these Weyl coefficients";
        throw HankelConditionViolated(msg.str());
    }

    CTable table;
    table.columns.resize(static_cast<std::size_t>(l + 1));
    table.columns[0] = {Complex(1.0)};  // c_00 = 1, P_1 = 1

    try {
        // Columns 1..l-1: full Hankel systems, rhs = last unit vector.
        for (int n = 1; n <= l - 1; ++n) {
            const DenseMatrix H = hankel_matrix(M, n);
            std::vector<Complex> rhs(static_cast<std::size_t>(n + 1), Complex(0.0));
            rhs.back() = Complex(1.0);
            table.columns[static_cast<std::size_t>(n)] = solve_linear(H, rhs);
        }

        // Column l: pin c_ll and solve the reduced l x l system
        //   sum_{i<l} c_{il} M_{i+k+1} = -c_ll M_{l+k+1},  k = 0..l-1,
        // which uses only M_1..M_{2l}.
        const Complex c_ll = table.columns[static_cast<std::size_t>(l - 1)].back();
        const DenseMatrix H = hankel_matrix(M, l - 1);
        std::vector<Complex> rhs(static_cast<std::size_t>(l));
        for (int k = 0; k < l; ++k) rhs[static_cast<std::size_t>(k)] = -c_ll * M[static_cast<std::size_t>(l + k)];
        std::vector<Complex> tail = solve_linear(H, rhs);

#ifndef NDEBUG
        {
            const Complex delta_lm1 = l >= 2 ? check.deltas.back() : Complex(1.0);
            const std::vector<Complex> cramer = detail::cramer_tail_column(M, l, c_ll, delta_lm1);
            for (int i = 0; i < l; ++i) {
                const double diff = std::abs(cramer[static_cast<std::size_t>(i)] -
                                             tail[static_cast<std::size_t>(i)]);
                const double sc = std::max(1.0, std::abs(tail[static_cast<std::size_t>(i)]));
                assert(diff <= 1e-6 * sc && "reduced system disagrees with Cramer prescription");
            }
        }
#endif

        tail.push_back(c_ll);
        table.columns[static_cast<std::size_t>(l)] = std::move(tail);
    } catch (const SingularMatrix&) {
        throw HankelConditionViolated("solve_weyl: Hankel system singular");
    }

    auto c = [&](int i, int n) -> Complex {
        if (i < 0) return Complex(0.0);  // c_{-1,0} = 0
        return table.columns[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
    };

    std::vector<Complex> a(static_cast<std::size_t>(l));
    std::vector<Complex> b(static_cast<std::size_t>(l));
    for (int n = 1; n <= l; ++n) {
        // a_l = c_{l-1,l-1}/c_{ll} = 1 by the c_ll pinning; complex x/x is
        // not bitwise 1, so pin it here too.
        a[static_cast<std::size_t>(n - 1)] = n == l ? Complex(1.0) : c(n - 1, n - 1) / c(n, n);
        b[static_cast<std::size_t>(n - 1)] =
            (c(n - 2, n - 1) - a[static_cast<std::size_t>(n - 1)] * c(n - 1, n)) / c(n - 1, n - 1);
    }

    WeylSolution out;
    out.S = StandardCoeffs::make(std::move(a), std::move(b));
    out.ctable = std::move(table);
    return out;
}

StandardCoeffs solve_two_spectra(const TwoSpectra& spectra) {
    const int l = static_cast<int>(spectra.mu.size());
    if (l < 1) throw InvalidInput("two-spectra: mu is empty");
    if (spectra.nu.size() != static_cast<std::size_t>(l - 1))
        throw InvalidInput("two-spectra: nu must have one fewer eigenvalue than mu");

    // Guard against coincident entries (the data of a problem whose P_{l+1}
    // and Q_{l+1} share a root, which cannot happen for valid coefficients).
    // Close-but-distinct spectra are legitimate, merely ill-conditioned, so
    // the threshold sits well below the default clustering tolerance.
    double scale = 1.0;
    for (const auto& m : spectra.mu.values) scale = std::max(scale, std::abs(m));
    const double tol = 1e-10 * scale;
    for (const auto& m : spectra.mu.values)
        for (const auto& n : spectra.nu.values)
            if (std::abs(m - n) <= tol)
                throw SpectraNotDisjoint("two-spectra: mu and nu share an eigenvalue");

    return detail::solve_two_spectra_xp(spectra.mu.values, spectra.nu.values);
}

}  // namespace dtev
