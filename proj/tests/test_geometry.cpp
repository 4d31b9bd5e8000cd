#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "bandbound/geometry.hpp"
#include "support/test_support.hpp"

using namespace bandbound;

namespace {

std::vector<Complex> arc_samples(const PlanarSet& arc, int count) {
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double t = arc.angle_lo + (arc.angle_hi - arc.angle_lo) * i / (count - 1);
        pts.push_back(arc.center + arc.radius * std::polar(1.0, t));
    }
    return pts;
}

}  // namespace

TEST_CASE("diameter of simple sets") {
    CHECK(diameter(PlanarSet::from_samples({Complex(0.0), Complex(3.0)})) == Catch::Approx(3.0));
    CHECK(diameter(PlanarSet::full_circle(Complex(0.0), 1.0)) == Catch::Approx(2.0));
    CHECK(diameter(PlanarSet::from_samples({Complex(5.0)})) == 0.0);
}

TEST_CASE("arc diameter closed form") {
    const double beta = std::numbers::pi / 3.0;
    const PlanarSet arc = PlanarSet::circular_arc(Complex(0.0), 1.0, 0.0, beta);
    CHECK(diameter(arc) == Catch::Approx(2.0 * std::sin(0.5 * beta)).margin(1e-15));

    // Beyond a half turn the antipodal chord is reached.
    const PlanarSet wide = PlanarSet::circular_arc(Complex(0.0), 2.0, 0.0, 4.0);
    CHECK(diameter(wide) == Catch::Approx(4.0));
}

TEST_CASE("enclosing circle of simple sets") {
    const EnclosingCircle circle = min_enclosing_circle(PlanarSet::full_circle(Complex(0.0), 1.0));
    CHECK(std::abs(circle.center) < 1e-15);
    CHECK(circle.radius == Catch::Approx(1.0));

    const EnclosingCircle segment = min_enclosing_circle(PlanarSet::from_samples({Complex(-1.0), Complex(1.0)}));
    CHECK(std::abs(segment.center) < 1e-12);
    CHECK(segment.radius == Catch::Approx(1.0).margin(1e-12));

    const EnclosingCircle point = min_enclosing_circle(PlanarSet::from_samples({Complex(2.0, 1.0)}));
    CHECK(point.radius == 0.0);
}

TEST_CASE("equilateral triangle: minimum radius exceeds half the diameter") {
    // Unit side length; circumradius 1/sqrt(3).
    const std::vector<Complex> triangle = {
        Complex(0.0), Complex(1.0), Complex(0.5, std::sqrt(3.0) / 2.0)};
    const PlanarSet set = PlanarSet::from_samples(triangle);
    const EnclosingCircle circle = min_enclosing_circle(set);
    CHECK(circle.radius == Catch::Approx(1.0 / std::sqrt(3.0)).margin(1e-12));
    CHECK(circle.radius > 0.5 * diameter(set));
}

TEST_CASE("arc enclosing circle closed form matches dense sampling") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
        const double radius = 0.3 + 2.0 * unit(rng);
        const Complex center(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
        const double lo = 2.0 * std::numbers::pi * unit(rng);
        const double span = 0.1 + unit(rng) * (2.0 * std::numbers::pi - 0.1);
        const PlanarSet arc = PlanarSet::circular_arc(center, radius, lo, lo + span);

        const PlanarSet sampled = PlanarSet::from_samples(arc_samples(arc, 10000));
        CHECK(diameter(arc) == Catch::Approx(diameter(sampled)).margin(1e-9));

        const EnclosingCircle exact = min_enclosing_circle(arc);
        const EnclosingCircle from_samples = min_enclosing_circle(sampled);
        CHECK(exact.radius == Catch::Approx(from_samples.radius).margin(1e-9));
        CHECK(std::abs(exact.center - from_samples.center) < 1e-6);
    }
}

TEST_CASE("welzl circle against exhaustive pair/triple oracle") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int count = 2 + static_cast<int>(rng() % 30);
        std::vector<Complex> pts;
        pts.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) pts.emplace_back(coord(rng), coord(rng));

        const EnclosingCircle fast = min_enclosing_circle(PlanarSet::from_samples(pts));
        const EnclosingCircle reference = testsupport::brute_force_enclosing_circle(pts);
        CHECK(fast.radius == Catch::Approx(reference.radius).margin(1e-9));

        // Coverage within the documented slack.
        for (Complex p : pts) CHECK(std::abs(p - fast.center) <= fast.radius + 1e-12);

        // Minimality: a slightly smaller radius must lose a point.
        if (fast.radius > 1e-6) {
            bool outside = false;
            for (Complex p : pts) outside = outside || std::abs(p - fast.center) > fast.radius - 1e-6;
            CHECK(outside);
        }
    }
}

TEST_CASE("radius stays between half diameter and the planar Jung bound") {
    std::mt19937_64 rng(4321);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int count = 2 + static_cast<int>(rng() % 40);
        std::vector<Complex> pts;
        for (int i = 0; i < count; ++i) pts.emplace_back(coord(rng), coord(rng));
        const PlanarSet set = PlanarSet::from_samples(pts);
        const double diam = diameter(set);
        const double radius = min_enclosing_circle(set).radius;
        CHECK(radius >= 0.5 * diam - 1e-12);
        CHECK(radius <= diam / std::sqrt(3.0) + 1e-12);
    }
}

TEST_CASE("degenerate and invalid planar sets") {
    CHECK_THROWS_AS(PlanarSet::from_samples({}), std::invalid_argument);
    CHECK_THROWS_AS(PlanarSet::circular_arc(Complex(0.0), 1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PlanarSet::circular_arc(Complex(0.0), 1.0, 0.0, 7.0), std::invalid_argument);

    // Collinear points: the enclosing circle is the diametral one.
    const std::vector<Complex> line = {Complex(0.0), Complex(1.0), Complex(2.0), Complex(3.0)};
    const EnclosingCircle c = min_enclosing_circle(PlanarSet::from_samples(line));
    CHECK(c.radius == Catch::Approx(1.5).margin(1e-12));
    CHECK(c.center.real() == Catch::Approx(1.5).margin(1e-12));
}
