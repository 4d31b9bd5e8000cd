#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "bandbound/bounds.hpp"
#include "bandbound/builders.hpp"
#include "bandbound/presets.hpp"
#include "support/test_support.hpp"

using namespace bandbound;

namespace {

FourierSymbol scalar_laplacian(int grid = 64) {
    FourierSymbol sym;
    sym.constant_part = ComplexMatrix(1);
    sym.terms.push_back(SymbolTerm{PhiFunction::harmonic({1}), ComplexMatrix::identity(1)});
    sym.domain = KDomain::torus(1, grid);
    return sym;
}

FourierSymbol constant_symbol(std::vector<double> diag, int grid = 16) {
    FourierSymbol sym;
    sym.constant_part = ComplexMatrix::diagonal(diag);
    sym.domain = KDomain::torus(1, grid);
    return sym;
}

}  // namespace

TEST_CASE("center matrices of simple symbols") {
    // No terms: B0 is the constant part, B1 vanishes.
    const FourierSymbol constant = constant_symbol({1.0, 2.0});
    const auto [b0_const, b1_const] = build_center_matrices(constant);
    CHECK(max_abs_diff(b0_const, constant.constant_part) == 0.0);
    CHECK(b1_const.frobenius_norm() == 0.0);

    // Scalar Laplacian: centered at 0 with radius 1, |1|+|1*| = 2.
    const auto [b0, b1] = build_center_matrices(scalar_laplacian());
    CHECK(std::abs(b0(0, 0)) < 1e-14);
    CHECK(b1(0, 0).real() == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("center matrices of the block Jacobi corner form") {
    // The tridiagonal period block is the recentered constant part and the
    // corner block drives B1 with nuclear mass 2 Tr|a_p|.
    std::mt19937_64 rng(11);
    JacobiSpec spec;
    spec.period = 3;
    spec.block_dim = 2;
    for (int i = 0; i < 3; ++i) {
        spec.a.push_back(testsupport::random_matrix(rng, 2));
        spec.b.push_back(testsupport::random_hermitian(rng, 2));
    }
    const FourierSymbol sym = jacobi_symbol(spec, std::nullopt, 32);
    const auto [b0, b1] = build_center_matrices(sym);
    CHECK(max_abs_diff(b0, sym.constant_part) < 1e-14);
    CHECK(b1.trace().real() == Catch::Approx(2.0 * nuclear_norm(spec.a[2])).margin(1e-10));
}

TEST_CASE("band enclosures of simple symbols") {
    const FourierSymbol constant = constant_symbol({3.0, -1.0});
    const auto enclosures = band_enclosures(constant);
    REQUIRE(enclosures.size() == 2);
    CHECK(enclosures[0].lower == Catch::Approx(-1.0));
    CHECK(enclosures[0].upper == Catch::Approx(-1.0));
    CHECK(enclosures[1].lower == Catch::Approx(3.0));
    CHECK(enclosures[1].upper == Catch::Approx(3.0));

    const auto laplacian = band_enclosures(scalar_laplacian());
    REQUIRE(laplacian.size() == 1);
    CHECK(laplacian[0].lower == Catch::Approx(-2.0).margin(1e-12));
    CHECK(laplacian[0].upper == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("band enclosures of the saturating staircase chain") {
    const int m = 3;
    const FourierSymbol sym = jacobi_symbol(saturating_jacobi_spec(m), std::nullopt, 32);
    const auto enclosures = band_enclosures(sym);
    REQUIRE(enclosures.size() == static_cast<std::size_t>(m));
    for (int n = 1; n <= m; ++n) {
        CHECK(enclosures[static_cast<std::size_t>(n - 1)].lower == Catch::Approx(4.0 * n - 2.0).margin(1e-10));
        CHECK(enclosures[static_cast<std::size_t>(n - 1)].upper == Catch::Approx(4.0 * n + 2.0).margin(1e-10));
    }
}

TEST_CASE("bound report on the constant symbol") {
    const BoundReport report = compute_bounds(constant_symbol({1.0}));
    CHECK(report.paper_total == 0.0);
    CHECK(report.sound_total == 0.0);
    CHECK(report.refined_total == 0.0);
    CHECK(report.trivial_total == Catch::Approx(2.0));
    CHECK(report.gaps.empty());
}

TEST_CASE("bound report on the scalar Laplacian") {
    const BoundReport report = compute_bounds(scalar_laplacian());
    CHECK(report.paper_total == Catch::Approx(4.0).margin(1e-12));
    CHECK(report.sound_total == Catch::Approx(4.0).margin(1e-12));
    CHECK(report.refined_total == Catch::Approx(4.0).margin(1e-12));
    CHECK(report.trivial_total == Catch::Approx(4.0).margin(1e-9));
    CHECK(report.gaps.empty());
}

TEST_CASE("trivial bound basics") {
    CHECK(trivial_bound(constant_symbol({1.0})) == Catch::Approx(2.0));
    CHECK(trivial_bound(constant_symbol({0.0})) == 0.0);
    CHECK(trivial_bound(scalar_laplacian()) == Catch::Approx(4.0).margin(1e-9));
}

TEST_CASE("certified gaps from enclosures") {
    const auto gap = certified_gaps({{1, 0.0, 1.0}, {2, 2.0, 3.0}});
    REQUIRE(gap.size() == 1);
    CHECK(gap[0].lower == 1.0);
    CHECK(gap[0].upper == 2.0);

    CHECK(certified_gaps({{1, 0.0, 2.0}, {2, 1.0, 3.0}}).empty());

    // Touching staircase enclosures [2,6], [6,10] merge: no gap.
    const FourierSymbol sym = jacobi_symbol(saturating_jacobi_spec(2), std::nullopt, 32);
    CHECK(certified_gaps(band_enclosures(sym)).empty());
}

TEST_CASE("gap appears once bands separate") {
    // diag(0, 10) with a weak coupling harmonic: enclosures stay disjoint.
    FourierSymbol sym;
    sym.constant_part = ComplexMatrix::diagonal(std::vector<double>{0.0, 10.0});
    ComplexMatrix coupling(2);
    coupling(1, 0) = Complex(0.5);
    sym.terms.push_back(SymbolTerm{PhiFunction::harmonic({1}), coupling});
    sym.domain = KDomain::torus(1, 32);

    const BoundReport report = compute_bounds(sym);
    REQUIRE(report.gaps.size() == 1);
    CHECK(report.gaps[0].lower < report.gaps[0].upper);
    CHECK(report.gaps[0].lower > 0.0);
    CHECK(report.gaps[0].upper < 10.0);
}

TEST_CASE("geometric mean bound formulas") {
    CHECK(geometric_mean_bound({1.0, 1.0, 1.0}) == Catch::Approx(4.0));
    CHECK(geometric_mean_bound({16.0, 1.0}) == Catch::Approx(16.0));
    // p-1 copies of T and one 1: 4*T^((p-1)/p).
    CHECK(geometric_mean_bound({8.0, 8.0, 1.0}) == Catch::Approx(4.0 * std::pow(8.0, 2.0 / 3.0)));
    CHECK_THROWS_AS(geometric_mean_bound({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(geometric_mean_bound({}), std::invalid_argument);
}

TEST_CASE("Loewner sandwich holds at every grid point") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 8; ++trial) {
        testsupport::RandomSymbolOptions opt;
        opt.max_dim = 6;
        opt.max_terms = 3;
        opt.k_dim = 1;
        opt.grid = 48;
        const FourierSymbol sym = testsupport::random_symbol(rng, opt);
        const auto [b0, b1] = build_center_matrices(sym);
        for (const auto& k : sample_grid(sym.domain)) {
            const ComplexMatrix value = evaluate(sym, k);
            CHECK(is_psd(value - (b0 - b1), 1e-9));
            CHECK(is_psd((b0 + b1) - value, 1e-9));
        }
    }
}

TEST_CASE("bound report internal identities on random symbols") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        testsupport::RandomSymbolOptions opt;
        opt.max_dim = 8;
        opt.max_terms = 3;
        opt.k_dim = 1;
        opt.grid = 32;
        const FourierSymbol sym = testsupport::random_symbol(rng, opt);
        const BoundReport report = compute_bounds(sym);

        // Trace telescoping: the sum of enclosure widths is 2 Tr B1.
        double width_sum = 0.0;
        for (const BandEnclosure& e : report.enclosures) {
            CHECK(e.lower <= e.upper + 1e-12);
            width_sum += e.upper - e.lower;
        }
        CHECK(report.sound_total == Catch::Approx(2.0 * report.radius_matrix.trace().real()).margin(1e-9));
        CHECK(report.sound_total == Catch::Approx(width_sum).margin(1e-8));

        // The union measure never exceeds the width sum.
        CHECK(report.refined_total <= report.sound_total + 1e-9);

        // Image-geometry relations between the two totals.
        bool all_round = true;
        for (const SymbolTerm& term : sym.terms)
            all_round = all_round && term.phi.kind == PhiFunction::Kind::fourier;
        if (all_round)
            CHECK(report.paper_total == Catch::Approx(report.sound_total).margin(1e-9));
        else
            CHECK(report.sound_total <= 2.0 / std::sqrt(3.0) * report.paper_total + 1e-9);
    }
}

TEST_CASE("enclosures are jointly sorted") {
    std::mt19937_64 rng(111);
    testsupport::RandomSymbolOptions opt;
    opt.max_dim = 9;
    opt.grid = 16;
    const FourierSymbol sym = testsupport::random_symbol(rng, opt);
    const auto enclosures = band_enclosures(sym);
    for (std::size_t n = 1; n < enclosures.size(); ++n) {
        CHECK(enclosures[n].lower >= enclosures[n - 1].lower - 1e-12);
        CHECK(enclosures[n].upper >= enclosures[n - 1].upper - 1e-12);
    }
}

TEST_CASE("restricted interval shrinks the bound by the arc factor") {
    JacobiSpec spec;
    spec.period = 1;
    spec.block_dim = 1;
    spec.a = {ComplexMatrix::identity(1)};
    spec.b = {ComplexMatrix(1)};
    const double beta = std::numbers::pi / 3.0;
    const FourierSymbol sym = jacobi_symbol(spec, std::make_pair(0.0, beta), 64);
    const BoundReport report = compute_bounds(sym);
    CHECK(report.sound_total == Catch::Approx(4.0 * std::sin(0.5 * beta)).margin(1e-12));
    CHECK(report.paper_total == Catch::Approx(report.sound_total).margin(1e-12));
}
