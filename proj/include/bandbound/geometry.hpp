#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "bandbound/matrix.hpp"

namespace bandbound {

/// Image of a scalar symbol coefficient in the complex plane. Full circles
/// and circular arcs have exact closed-form geometry; anything else is a
/// finite sample cloud.
struct PlanarSet {
    enum class Kind { samples, circle, arc };

    Kind kind = Kind::samples;
    std::vector<Complex> samples;  // kind == samples, nonempty
    Complex center{0.0, 0.0};      // kind == circle/arc
    double radius = 0.0;
    double angle_lo = 0.0;  // kind == arc, angles in radians, 0 < angle_hi - angle_lo <= 2*pi
    double angle_hi = 0.0;

    static PlanarSet from_samples(std::vector<Complex> points) {
        if (points.empty()) throw std::invalid_argument("PlanarSet: empty sample set");
        PlanarSet s;
        s.kind = Kind::samples;
        s.samples = std::move(points);
        return s;
    }

    static PlanarSet full_circle(Complex center, double radius) {
        if (radius < 0.0) throw std::invalid_argument("PlanarSet: negative radius");
        PlanarSet s;
        s.kind = Kind::circle;
        s.center = center;
        s.radius = radius;
        return s;
    }

    static PlanarSet circular_arc(Complex center, double radius, double angle_lo, double angle_hi) {
        if (radius < 0.0) throw std::invalid_argument("PlanarSet: negative radius");
        const double span = angle_hi - angle_lo;
        if (!(span > 0.0) || span > 2.0 * std::numbers::pi + 1e-12)
            throw std::invalid_argument("PlanarSet: arc span must lie in (0, 2*pi]");
        PlanarSet s;
        s.kind = Kind::arc;
        s.center = center;
        s.radius = radius;
        s.angle_lo = angle_lo;
        s.angle_hi = angle_hi;
        return s;
    }
};

/// Smallest circle known to contain a planar set; the center is the offset
/// used to recenter a symbol term and the radius its deviation coefficient.
struct EnclosingCircle {
    Complex center{0.0, 0.0};
    double radius = 0.0;
};

/// sup of pairwise distances. Closed form for circles and arcs, exhaustive
/// pair scan for sample sets.
inline double diameter(const PlanarSet& set) {
    switch (set.kind) {
        case PlanarSet::Kind::circle:
            return 2.0 * set.radius;
        case PlanarSet::Kind::arc: {
            const double span = set.angle_hi - set.angle_lo;
            if (span >= std::numbers::pi) return 2.0 * set.radius;  // antipodal chord reached
            return 2.0 * set.radius * std::sin(0.5 * span);
        }
        case PlanarSet::Kind::samples: {
            if (set.samples.empty()) throw std::invalid_argument("diameter: empty sample set");
            double best = 0.0;
            for (std::size_t i = 0; i < set.samples.size(); ++i)
                for (std::size_t j = i + 1; j < set.samples.size(); ++j)
                    best = std::max(best, std::abs(set.samples[i] - set.samples[j]));
            return best;
        }
    }
    throw std::logic_error("diameter: unknown planar set kind");
}

namespace detail {

inline bool circle_contains(const EnclosingCircle& c, Complex p, double slack) {
    return std::abs(p - c.center) <= c.radius + slack;
}

inline EnclosingCircle circle_from_two(Complex a, Complex b) {
    EnclosingCircle c;
    c.center = 0.5 * (a + b);
    c.radius = 0.5 * std::abs(a - b);
    return c;
}

/// Circumcircle through three points; falls back to the widest diametral
/// circle when the points are (near-)collinear.
inline EnclosingCircle circle_from_three(Complex a, Complex b, Complex c) {
    const double ax = a.real(), ay = a.imag();
    const double bx = b.real() - ax, by = b.imag() - ay;
    const double cx = c.real() - ax, cy = c.imag() - ay;
    const double d = 2.0 * (bx * cy - by * cx);
    const double scale = std::max({std::abs(bx), std::abs(by), std::abs(cx), std::abs(cy), 1e-300});
    if (std::abs(d) <= 1e-14 * scale * scale) {
        EnclosingCircle best = circle_from_two(a, b);
        for (const auto& cand : {circle_from_two(a, c), circle_from_two(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const double ux = (cy * b2 - by * c2) / d;
    const double uy = (bx * c2 - cx * b2) / d;
    EnclosingCircle out;
    out.center = Complex(ax + ux, ay + uy);
    out.radius = std::hypot(ux, uy);
    return out;
}

/// Welzl-style move-to-front minimum enclosing circle on a sample cloud.
/// Deterministic: the shuffle seed is fixed.
inline EnclosingCircle welzl_disk(std::vector<Complex> pts) {
    std::mt19937 rng(0x5eed1234u);
    std::shuffle(pts.begin(), pts.end(), rng);

    double scale = 0.0;
    for (Complex p : pts) scale = std::max({scale, std::abs(p.real()), std::abs(p.imag())});
    const double slack = 1e-12 * std::max(1.0, scale);

    EnclosingCircle circle{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (circle_contains(circle, pts[i], slack)) continue;
        circle = EnclosingCircle{pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (circle_contains(circle, pts[j], slack)) continue;
            circle = circle_from_two(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (circle_contains(circle, pts[k], slack)) continue;
                circle = circle_from_three(pts[i], pts[j], pts[k]);
            }
        }
    }

    // Inflate to certain coverage; keeps the enclosure sound against
    // accumulated rounding in the circumcenter formula.
    double max_dist = 0.0;
    for (Complex p : pts) max_dist = std::max(max_dist, std::abs(p - circle.center));
    circle.radius = std::max(circle.radius, max_dist);
    return circle;
}

}  // namespace detail

/// Minimum enclosing circle. Circles and arcs are handled in closed form;
/// sample clouds run the randomized move-to-front algorithm.
inline EnclosingCircle min_enclosing_circle(const PlanarSet& set) {
    switch (set.kind) {
        case PlanarSet::Kind::circle:
            return EnclosingCircle{set.center, set.radius};
        case PlanarSet::Kind::arc: {
            const double span = set.angle_hi - set.angle_lo;
            if (span >= std::numbers::pi) return EnclosingCircle{set.center, set.radius};
            // Under a half turn the circle on the endpoint chord covers the arc.
            const double mid = 0.5 * (set.angle_lo + set.angle_hi);
            EnclosingCircle c;
            c.center = set.center + set.radius * std::cos(0.5 * span) * std::polar(1.0, mid);
            c.radius = set.radius * std::sin(0.5 * span);
            return c;
        }
        case PlanarSet::Kind::samples:
            if (set.samples.empty()) throw std::invalid_argument("min_enclosing_circle: empty sample set");
            return detail::welzl_disk(set.samples);
    }
    throw std::logic_error("min_enclosing_circle: unknown planar set kind");
}

}  // namespace bandbound
