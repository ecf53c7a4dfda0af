#include <doctest.h>

#include "dtev/io.hpp"
#include "test_util.hpp"

using namespace dtev;
using dtev::testutil::check_close;

TEST_CASE("complex formatting uses 17 significant digits") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_complex(Complex(0.5, -2.0)) == "[0.5, -2]");
}

TEST_CASE("instance files round-trip byte-identically") {
    const StandardCoeffs S = StandardCoeffs::make(
        {Complex(0.25, 1.0 / 3.0), Complex(1.0)}, {Complex(-0.7, 0.1), Complex(2.0)});
    const std::string text = save_instance(S);
    const Instance loaded = load_instance(text);
    const auto* back = std::get_if<StandardCoeffs>(&loaded);
    REQUIRE(back != nullptr);
    CHECK(back->a == S.a);
    CHECK(back->b == S.b);
    CHECK(save_instance(loaded) == text);

    const TransmissionInstance T = TransmissionInstance::make(
        {Complex(2.0)}, {Complex(7.0)}, {Complex(1.0)}, {Complex(0.0)});
    const std::string ttext = save_instance(T);
    CHECK(save_instance(load_instance(ttext)) == ttext);

    const SymmetricJacobi J =
        SymmetricJacobi::make({Complex(1.5)}, {Complex(0.0), Complex(-1.0 / 7.0)});
    const std::string jtext = save_instance(J);
    CHECK(save_instance(load_instance(jtext)) == jtext);
}

TEST_CASE("loaders re-validate type invariants") {
    // alpha_l == alpha_dot_l
    const std::string bad =
        "{\"kind\": \"transmission\", \"l\": 1, \"alpha\": [[1, 0]], \"beta\": [[0, 0]], "
        "\"alpha_dot\": [[1, 0]], \"beta_dot\": [[0, 0]]}";
    CHECK_THROWS_WITH_AS(load_instance(bad), "transmission: alpha_l equals alpha_dot_l",
                         InvalidInput);

    const std::string zero_alpha =
        "{\"kind\": \"transmission\", \"l\": 1, \"alpha\": [[0, 0]], \"beta\": [[0, 0]], "
        "\"alpha_dot\": [[1, 0]], \"beta_dot\": [[0, 0]]}";
    CHECK_THROWS_AS(load_instance(zero_alpha), InvalidInput);

    const std::string bad_al =
        "{\"kind\": \"standard\", \"l\": 2, \"a\": [[1, 0], [2, 0]], \"b\": [[0, 0], [0, 0]]}";
    CHECK_THROWS_AS(load_instance(bad_al), InvalidInput);

    CHECK_THROWS_AS(load_instance("{\"kind\": \"nope\", \"l\": 1}"), InvalidInput);
    CHECK_THROWS_AS(load_instance("not json"), InvalidInput);

    // symmetric-head needs odd l
    const std::string even_head =
        "{\"kind\": \"symmetric-head\", \"l\": 4, \"A\": [[1, 0]], \"B\": [[0, 0]]}";
    CHECK_THROWS_AS(load_instance(even_head), InvalidInput);
}

TEST_CASE("spectrum, weyl, boundary, and poly files") {
    SpectrumFile sp;
    sp.eigenvalues = {Complex(0.0), Complex(1.5, -0.5)};
    const std::string text = save_spectrum(sp);
    const SpectrumFile back = load_spectrum(text);
    CHECK_FALSE(back.two_spectra);
    CHECK(back.eigenvalues == sp.eigenvalues);
    CHECK(save_spectrum(back) == text);

    SpectrumFile two;
    two.two_spectra = true;
    two.mu = {Complex(1.0), Complex(-1.0)};
    two.nu = {Complex(0.0)};
    CHECK(save_spectrum(load_spectrum(save_spectrum(two))) == save_spectrum(two));

    SpectrumFile mismatched;
    mismatched.two_spectra = true;
    mismatched.mu = {Complex(1.0)};
    mismatched.nu = {Complex(0.0)};
    CHECK_THROWS_AS(load_spectrum(save_spectrum(mismatched)), InvalidInput);

    WeylFile w;
    w.l = 2;
    w.M = {Complex(1.0), Complex(0.0), Complex(1.0), Complex(0.0)};
    CHECK(save_weyl(load_weyl(save_weyl(w))) == save_weyl(w));
    CHECK_THROWS_AS(load_weyl("{\"kind\": \"weyl\", \"l\": 2, \"M\": [[1, 0]]}"), InvalidInput);

    BoundaryPolys B;
    B.R0 = Poly({0.0, 2.0});
    B.R1 = Poly({1.0});
    B.config = BoundaryConfig::full;
    const std::string btext = save_boundary(B);
    const BoundaryPolys bback = load_boundary(btext);
    CHECK(bback.config == BoundaryConfig::full);
    CHECK(save_boundary(bback) == btext);

    // Degenerate boundary data is rejected on load.
    BoundaryPolys degenerate;
    degenerate.R0 = Poly({0.0, 1.0});
    degenerate.R1 = Poly({1.0});
    CHECK_THROWS_AS(load_boundary(save_boundary(degenerate)), DegenerateLeading);

    const Poly p({1.0, Complex(0.0, -1.0), 3.0});
    CHECK(load_poly(save_poly(p)).coeffs() == p.coeffs());
}
