#include "dtev/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dtev {

namespace {

constexpr double kTrimRel = 1e-13;

double coeff_scale(const std::vector<Complex>& c) {
    double s = 0.0;
    for (const auto& z : c) s = std::max(s, std::abs(z));
    return s;
}

}  // namespace

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(Complex c) { return Poly(std::vector<Complex>{c}); }

Poly Poly::identity() { return Poly({Complex(0.0), Complex(1.0)}); }

void Poly::trim() {
    const double threshold = kTrimRel * coeff_scale(coeffs_);
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= threshold) coeffs_.pop_back();
}

Complex Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Complex(0.0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Complex Poly::leading() const { return coeffs_.empty() ? Complex(0.0) : coeffs_.back(); }

Complex Poly::eval(Complex z) const {
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& q) {
    if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Complex> out(p.coeffs_.size() + q.coeffs_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& q) {
    *this = *this * q;
    return *this;
}

Poly scale(const Poly& p, Complex c) {
    std::vector<Complex> out = p.coeffs();
    for (auto& z : out) z *= c;
    return Poly(std::move(out));
}

Poly scaled_derivative(const Poly& p, int nu) {
    if (nu < 0) throw InvalidInput("scaled_derivative: negative order");
    if (nu == 0) return p;
    if (p.degree() < nu) return Poly();
    std::vector<Complex> out(static_cast<std::size_t>(p.degree() - nu + 1));
    for (int k = 0; k + nu <= p.degree(); ++k) {
        // binomial(k + nu, nu) = (1/nu!) * (k+nu)!/k!
        double binom = 1.0;
        for (int j = 1; j <= nu; ++j) binom *= static_cast<double>(k + j) / static_cast<double>(j);
        out[static_cast<std::size_t>(k)] = p.coeff(k + nu) * binom;
    }
    return Poly(std::move(out));
}

Poly poly_from_roots(const Spectrum& roots, Complex leading) {
    if (leading == Complex(0.0)) throw ZeroLeading("poly_from_roots: leading coefficient is zero");
    Poly p = Poly::constant(leading);
    for (const auto& r : roots.values) p *= Poly({-r, Complex(1.0)});
    return p;
}

namespace {

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

// Compensated complex Horner: first-order rounding errors are carried in a
// parallel accumulator, giving roughly twice working precision. Needed so
// Newton polishing is not floored at u * (coefficient scale).
Complex eval_compensated(const Poly& p, Complex z) {
    const int d = p.degree();
    if (d < 0) return Complex(0.0);
    const double zr = z.real(), zi = z.imag();
    double hr = p.coeff(d).real(), hi = p.coeff(d).imag();
    double er = 0.0, ei = 0.0;
    for (int k = d - 1; k >= 0; --k) {
        double p1, e1, p2, e2, p3, e3, p4, e4;
        two_prod(hr, zr, p1, e1);
        two_prod(hi, zi, p2, e2);
        two_prod(hr, zi, p3, e3);
        two_prod(hi, zr, p4, e4);
        double sr, e5, si, e6;
        two_sum(p1, -p2, sr, e5);
        two_sum(p3, p4, si, e6);

        const double ner = (er * zr - ei * zi) + (e1 - e2 + e5);
        const double nei = (er * zi + ei * zr) + (e3 + e4 + e6);

        double e7, e8;
        two_sum(sr, p.coeff(k).real(), hr, e7);
        two_sum(si, p.coeff(k).imag(), hi, e8);
        er = ner + e7;
        ei = nei + e8;
    }
    return Complex(hr + er, hi + ei);
}

// Parlett-Reinsch balancing by powers of two; preserves eigenvalues exactly.
void balance(Eigen::MatrixXcd& A) {
    const int n = static_cast<int>(A.rows());
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(A(j, i));
                r += std::abs(A(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double f = 1.0;
            const double s = c + r;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c >= r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if (c + r < 0.95 * s) {
                converged = false;
                A.row(i) /= f;
                A.col(i) *= f;
            }
        }
    }
}

}  // namespace

Spectrum poly_roots(const Poly& p, double cluster_rel_tol) {
    const int d = p.degree();
    if (d < 1) throw DegreeZero("poly_roots: degree must be at least 1");

    // Companion matrix of the monic normalization.
    const Complex lead = p.leading();
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) C(i, i - 1) = Complex(1.0);
    for (int i = 0; i < d; ++i) C(i, d - 1) = -p.coeff(i) / lead;
    balance(C);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw Error("poly_roots: eigenvalue iteration failed to converge");

    // Newton polish with compensated evaluation. Companion eigenvalues carry
    // errors around u * cond; a few corrected steps bring simple roots to
    // working precision, and steps are only kept while the residual strictly
    // drops, so clusters from multiple roots are not scattered.
    const Poly dp = scaled_derivative(p, 1);
    std::vector<Complex> roots(static_cast<std::size_t>(d));
    double max_mag = 0.0;
    for (int i = 0; i < d; ++i) {
        Complex z = es.eigenvalues()(i);
        double resid = std::abs(eval_compensated(p, z));
        for (int step = 0; step < 3; ++step) {
            const Complex deriv = dp.eval(z);
            if (!(std::abs(deriv) > 0.0) || resid == 0.0) break;
            const Complex z1 = z - eval_compensated(p, z) / deriv;
            const double r1 = std::abs(eval_compensated(p, z1));
            if (r1 >= resid) break;
            z = z1;
            resid = r1;
        }
        roots[static_cast<std::size_t>(i)] = z;
        max_mag = std::max(max_mag, std::abs(z));
    }

    Spectrum out;
    out.values = std::move(roots);
    out.tol = cluster_rel_tol * std::max(1.0, max_mag);
    return out;
}

bool poly_coprime(const Poly& p, const Poly& q, double tol) {
    if (p.is_zero() || q.is_zero()) throw InvalidInput("poly_coprime: zero polynomial");
    if (p.degree() < 1 || q.degree() < 1) return true;  // constants have no roots
    const Spectrum rp = poly_roots(p);
    const Spectrum rq = poly_roots(q);
    for (const auto& a : rp.values)
        for (const auto& b : rq.values)
            if (std::abs(a - b) <= tol) return false;
    return true;
}

RootMultiset cluster_roots(const Spectrum& s, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("cluster_roots: tolerance must be positive");

    const std::vector<Complex> vals = sorted_values(s.values);
    std::vector<std::vector<Complex>> groups;
    for (const auto& z : vals) {
        bool placed = false;
        for (auto& g : groups) {
            bool near_all = true;
            for (const auto& w : g)
                if (std::abs(z - w) > tol) {
                    near_all = false;
                    break;
                }
            if (near_all) {
                g.push_back(z);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({z});
    }

    RootMultiset out;
    for (const auto& g : groups) {
        Complex mean(0.0);
        for (const auto& w : g) mean += w;
        mean /= static_cast<double>(g.size());
        out.distinct_roots.push_back(mean);
        out.multiplicities.push_back(static_cast<int>(g.size()));
    }

    for (std::size_t i = 0; i < out.distinct_roots.size(); ++i)
        for (std::size_t j = i + 1; j < out.distinct_roots.size(); ++j)
            if (std::abs(out.distinct_roots[i] - out.distinct_roots[j]) <= 2.0 * tol) {
                std::ostringstream msg;
                msg << "cluster_roots: cluster means within 2*tol (tol = " << tol
                    << "), multiplicity detection is ill-posed";
                throw AmbiguousClustering(msg.str());
            }
    return out;
}

std::vector<Complex> laurent_expand(const Poly& num, const Poly& den, int K) {
    if (den.is_zero()) throw DegreeMismatch("laurent_expand: zero denominator");
    const int d = den.degree();
    if (num.degree() != d - 1)
        throw DegreeMismatch("laurent_expand: deg(num) must equal deg(den) - 1");
    if (K < 1) throw InvalidInput("laurent_expand: K must be positive");

    // With t = 1/lambda: num/den = t * Nrev(t)/Drev(t), reversed coefficients,
    // so M_k is the (k-1)-th coefficient of the power-series quotient.
    auto nrev = [&](int j) { return num.coeff(d - 1 - j); };
    auto drev = [&](int j) { return den.coeff(d - j); };
    const Complex d0 = drev(0);

    std::vector<Complex> M(static_cast<std::size_t>(K));
    for (int j = 0; j < K; ++j) {
        Complex acc = nrev(j);
        for (int i = 1; i <= j; ++i) acc -= drev(i) * M[static_cast<std::size_t>(j - i)];
        M[static_cast<std::size_t>(j)] = acc / d0;
    }
    return M;
}

std::vector<Complex> sorted_values(std::vector<Complex> values) {
    std::sort(values.begin(), values.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return values;
}

}  // namespace dtev
