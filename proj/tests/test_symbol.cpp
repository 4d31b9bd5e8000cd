#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "bandbound/symbol.hpp"
#include "support/test_support.hpp"

using namespace bandbound;

TEST_CASE("sample grid conventions") {
    // Full torus drops the right endpoint.
    const auto torus = sample_grid(KDomain::torus(1, 4));
    REQUIRE(torus.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(torus[i][0] == Catch::Approx(i * std::numbers::pi / 2.0).margin(1e-15));

    // Sub-intervals keep both endpoints.
    const auto interval = sample_grid(KDomain::interval(0.0, std::numbers::pi, 3));
    REQUIRE(interval.size() == 3);
    CHECK(interval[0][0] == 0.0);
    CHECK(interval[1][0] == Catch::Approx(std::numbers::pi / 2.0));
    CHECK(interval[2][0] == Catch::Approx(std::numbers::pi));

    // Tensor grid in 2D.
    CHECK(sample_grid(KDomain::torus(2, 3)).size() == 9);
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(KDomain::interval(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(KDomain::interval(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(KDomain::torus(1, 1), std::invalid_argument);
    CHECK(KDomain::torus(1).grid_points == 256);
    CHECK(KDomain::torus(2).grid_points == 128);
}

TEST_CASE("constant symbol evaluates to its constant part everywhere") {
    FourierSymbol sym;
    sym.constant_part = ComplexMatrix::diagonal(std::vector<double>{1.0, 2.0});
    sym.domain = KDomain::torus(1, 8);
    for (const auto& k : sample_grid(sym.domain))
        CHECK(max_abs_diff(evaluate(sym, k), sym.constant_part) == 0.0);
}

TEST_CASE("scalar harmonic gives 2cos(k)") {
    FourierSymbol sym;
    sym.constant_part = ComplexMatrix(1);
    sym.terms.push_back(SymbolTerm{PhiFunction::harmonic({1}), ComplexMatrix::identity(1)});
    sym.domain = KDomain::torus(1, 16);
    for (const auto& k : sample_grid(sym.domain)) {
        const ComplexMatrix value = evaluate(sym, k);
        CHECK(value(0, 0).real() == Catch::Approx(2.0 * std::cos(k[0])).margin(1e-14));
        CHECK(std::abs(value(0, 0).imag()) < 1e-14);
    }
    const std::vector<double> origin = {0.0};
    CHECK(evaluate(sym, origin)(0, 0).real() == Catch::Approx(2.0).margin(1e-14));
}

TEST_CASE("evaluate is Hermitian at every grid point") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 10; ++trial) {
        testsupport::RandomSymbolOptions opt;
        opt.max_dim = 6;
        opt.k_dim = 1 + static_cast<int>(rng() % 2);
        opt.grid = 12;
        const FourierSymbol sym = testsupport::random_symbol(rng, opt);
        for (const auto& k : sample_grid(sym.domain)) {
            const ComplexMatrix value = evaluate(sym, k);
            CHECK(value.hermiticity_defect() <= 1e-12 * (1.0 + value.frobenius_norm()));
        }
    }
}

TEST_CASE("evaluate rejects bad arguments") {
    FourierSymbol sym;
    sym.constant_part = ComplexMatrix::identity(2);
    sym.domain = KDomain::interval(0.0, 1.0, 8);
    const std::vector<double> outside = {2.0};
    CHECK_THROWS_AS(evaluate(sym, outside), std::invalid_argument);
    const std::vector<double> wrong_dim = {0.5, 0.5};
    CHECK_THROWS_AS(evaluate(sym, wrong_dim), std::invalid_argument);
}

TEST_CASE("folding a constant term into the constant part leaves evaluate unchanged") {
    std::mt19937_64 rng(626);
    const ComplexMatrix a = testsupport::random_matrix(rng, 3);
    const Complex c(0.7, -0.4);
    const KDomain domain = KDomain::torus(1, 32);

    FourierSymbol with_term;
    with_term.constant_part = testsupport::random_hermitian(rng, 3);
    with_term.domain = domain;
    with_term.terms.push_back(
        SymbolTerm{PhiFunction::sampled(std::vector<Complex>(domain.total_points(), c)), a});

    FourierSymbol folded;
    folded.domain = domain;
    folded.constant_part = with_term.constant_part;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            folded.constant_part(i, j) += c * a(i, j) + std::conj(c) * std::conj(a(j, i));

    for (const auto& k : sample_grid(domain))
        CHECK(max_abs_diff(evaluate(with_term, k), evaluate(folded, k)) <= 1e-12);
}

TEST_CASE("phi images of harmonics") {
    // Full torus: circle of radius |c|.
    const PlanarSet circle = phi_image(PhiFunction::harmonic({1}), KDomain::torus(1));
    CHECK(circle.kind == PlanarSet::Kind::circle);
    CHECK(circle.radius == Catch::Approx(1.0));
    CHECK(diameter(circle) == Catch::Approx(2.0));

    // Sub-interval: arc with the closed-form diameter 2 sin(span/2).
    const double beta = std::numbers::pi / 2.0;
    const PlanarSet arc = phi_image(PhiFunction::harmonic({1}), KDomain::interval(0.0, beta));
    CHECK(arc.kind == PlanarSet::Kind::arc);
    CHECK(diameter(arc) == Catch::Approx(2.0 * std::sin(0.5 * beta)).margin(1e-14));

    // Constant sampled phi: a single point.
    const KDomain domain = KDomain::torus(1, 8);
    const PlanarSet point =
        phi_image(PhiFunction::sampled(std::vector<Complex>(domain.total_points(), Complex(5.0))), domain);
    CHECK(point.kind == PlanarSet::Kind::samples);
    CHECK(diameter(point) == 0.0);
}

TEST_CASE("high frequency on a sub-interval wraps to a full circle") {
    // Frequency 4 over a quarter turn sweeps a full period.
    const PlanarSet image = phi_image(PhiFunction::harmonic({4}), KDomain::interval(0.0, std::numbers::pi / 2.0));
    CHECK(image.kind == PlanarSet::Kind::circle);

    // Frequency 2 over the same interval stays an arc of sweep pi.
    const PlanarSet half = phi_image(PhiFunction::harmonic({2}), KDomain::interval(0.0, std::numbers::pi / 2.0));
    CHECK(half.kind == PlanarSet::Kind::arc);
    CHECK(half.angle_hi - half.angle_lo == Catch::Approx(std::numbers::pi));
}

TEST_CASE("harmonic image agrees with dense sampling") {
    std::mt19937_64 rng(737);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 6; ++trial) {
        const int freq = 1 + static_cast<int>(rng() % 3);
        const Complex coeff(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
        const double hi = 0.3 + unit(rng) * (2.0 * std::numbers::pi - 0.3);
        const KDomain domain = KDomain::interval(0.0, hi, 10000);
        const PhiFunction phi = PhiFunction::harmonic({freq}, coeff);

        std::vector<Complex> values;
        for (const auto& k : sample_grid(domain)) values.push_back(detail::phi_value(phi, domain, k));
        const PlanarSet dense = PlanarSet::from_samples(std::move(values));
        const PlanarSet analytic = phi_image(phi, domain);

        CHECK(diameter(analytic) == Catch::Approx(diameter(dense)).margin(1e-6));
        CHECK(min_enclosing_circle(analytic).radius ==
              Catch::Approx(min_enclosing_circle(dense).radius).margin(1e-6));
    }
}

TEST_CASE("symbol validation catches structural problems") {
    FourierSymbol sym;
    sym.constant_part = ComplexMatrix::identity(2);
    sym.domain = KDomain::torus(1, 8);

    SymbolTerm zero_freq{PhiFunction::harmonic({0}), ComplexMatrix::identity(2)};
    zero_freq.phi.frequency = {0};
    sym.terms.push_back(zero_freq);
    CHECK_THROWS_AS(validate_symbol(sym), std::invalid_argument);
    sym.terms.clear();

    sym.terms.push_back(SymbolTerm{PhiFunction::harmonic({1}), ComplexMatrix::identity(3)});
    CHECK_THROWS_AS(validate_symbol(sym), std::invalid_argument);
    sym.terms.clear();

    sym.terms.push_back(SymbolTerm{PhiFunction::sampled(std::vector<Complex>(3, Complex(1.0))),
                                   ComplexMatrix::identity(2)});
    CHECK_THROWS_AS(validate_symbol(sym), std::invalid_argument);

    FourierSymbol skew;
    skew.constant_part = ComplexMatrix{{Complex(0.0), Complex(1.0)}, {Complex(0.0), Complex(0.0)}};
    skew.domain = KDomain::torus(1, 8);
    CHECK_THROWS_AS(validate_symbol(skew), std::invalid_argument);
}
