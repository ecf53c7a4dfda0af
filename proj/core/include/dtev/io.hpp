#ifndef DTEV_IO_HPP
#define DTEV_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "dtev/forward.hpp"
#include "dtev/reduction.hpp"

namespace dtev {

// On-disk artifacts are single self-describing JSON documents with a
// top-level "kind" field. Complex scalars serialize as [re, im] pairs,
// floats printed with 17 significant digits, so load followed by save is
// byte-identical. Kinds:
//
//   standard       {kind, l, a, b}
//   transmission   {kind, l, alpha, beta, alpha_dot, beta_dot}
//   symmetric      {kind, l, A, B}
//   transmission-data {kind, l, alpha_dot, beta_dot, alpha_l}   (known part)
//   symmetric-head {kind, l, A, B}              (first m-1 entries, l = 2m-1)
//   spectrum       {kind, eigenvalues} or {kind, mu, nu}
//   weyl           {kind, l, M}
//   boundary       {kind, config, R0, R1}
//   poly           {kind, coeffs}

std::string format_double(double x);  // %.17g
std::string format_complex(Complex z);

// Known a-priori data of the inverse transmission problem.
struct TransmissionData {
    int l = 0;
    std::vector<Complex> alpha_dot;
    std::vector<Complex> beta_dot;
    Complex alpha_l;
};

// Known head of the mixed-data problem: A_1..A_{m-1}, B_1..B_{m-1}.
struct SymmetricHead {
    int l = 0;  // full (odd) size 2m-1
    std::vector<Complex> A;
    std::vector<Complex> B;
};

struct SpectrumFile {
    bool two_spectra = false;
    std::vector<Complex> eigenvalues;  // when !two_spectra
    std::vector<Complex> mu, nu;       // when two_spectra
};

struct WeylFile {
    int l = 0;
    std::vector<Complex> M;
};

using Instance = std::variant<StandardCoeffs, TransmissionInstance, SymmetricJacobi,
                              TransmissionData, SymmetricHead>;

std::string save_instance(const Instance& inst);
std::string save_spectrum(const SpectrumFile& sp);
std::string save_weyl(const WeylFile& w);
std::string save_boundary(const BoundaryPolys& B);
std::string save_poly(const Poly& p);

// Loaders re-validate every type invariant and throw InvalidInput with a
// diagnostic naming the violated condition.
Instance load_instance(const std::string& text);
SpectrumFile load_spectrum(const std::string& text);
WeylFile load_weyl(const std::string& text);
BoundaryPolys load_boundary(const std::string& text);
Poly load_poly(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dtev

#endif  // DTEV_IO_HPP
