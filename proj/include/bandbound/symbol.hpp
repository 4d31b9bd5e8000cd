#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bandbound/geometry.hpp"
#include "bandbound/matrix.hpp"

namespace bandbound {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline int default_grid_points(int dim) { return dim == 1 ? 256 : 128; }

/// Momentum-space domain: a box of per-axis intervals inside [0, 2*pi],
/// together with the per-axis sampling resolution. An axis spanning the
/// full 2*pi is treated as a torus direction (periodic identification).
struct KDomain {
    std::vector<double> lower;
    std::vector<double> upper;
    int grid_points = 2;  // L per axis

    int dim() const { return static_cast<int>(lower.size()); }

    bool full_torus(int axis) const {
        return upper[static_cast<std::size_t>(axis)] - lower[static_cast<std::size_t>(axis)] >= kTwoPi - 1e-12;
    }

    double span(int axis) const {
        return upper[static_cast<std::size_t>(axis)] - lower[static_cast<std::size_t>(axis)];
    }

    /// Grid step along an axis: periodic axes exclude the right endpoint,
    /// sub-intervals include both endpoints.
    double step(int axis) const {
        return full_torus(axis) ? span(axis) / grid_points : span(axis) / (grid_points - 1);
    }

    std::size_t total_points() const {
        std::size_t total = 1;
        for (int axis = 0; axis < dim(); ++axis) total *= static_cast<std::size_t>(grid_points);
        return total;
    }

    void validate() const {
        if (dim() < 1 || upper.size() != lower.size())
            throw std::invalid_argument("KDomain: need matching per-axis bounds, dim >= 1");
        if (grid_points < 2) throw std::invalid_argument("KDomain: grid resolution must be >= 2");
        for (int axis = 0; axis < dim(); ++axis) {
            const double lo = lower[static_cast<std::size_t>(axis)];
            const double hi = upper[static_cast<std::size_t>(axis)];
            if (!(lo >= -1e-12) || !(hi <= kTwoPi + 1e-12))
                throw std::invalid_argument("KDomain: intervals must lie inside [0, 2*pi]");
            if (!(hi - lo > 0.0) || hi - lo > kTwoPi + 1e-12)
                throw std::invalid_argument("KDomain: axis span must lie in (0, 2*pi]");
        }
    }

    static KDomain torus(int dim, int grid = 0) {
        KDomain d;
        d.lower.assign(static_cast<std::size_t>(dim), 0.0);
        d.upper.assign(static_cast<std::size_t>(dim), kTwoPi);
        d.grid_points = grid > 0 ? grid : default_grid_points(dim);
        d.validate();
        return d;
    }

    static KDomain interval(double lo, double hi, int grid = 0) {
        KDomain d;
        d.lower = {lo};
        d.upper = {hi};
        d.grid_points = grid > 0 ? grid : default_grid_points(1);
        d.validate();
        return d;
    }

    KDomain with_grid(int grid) const {
        KDomain d = *this;
        d.grid_points = grid;
        d.validate();
        return d;
    }
};

/// Uniform tensor grid over the domain, last axis fastest. Periodic axes
/// drop the right endpoint, sub-intervals keep both.
inline std::vector<std::vector<double>> sample_grid(const KDomain& domain) {
    domain.validate();
    const int d = domain.dim();
    std::vector<std::vector<double>> points;
    points.reserve(domain.total_points());
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    while (true) {
        std::vector<double> k(static_cast<std::size_t>(d));
        for (int axis = 0; axis < d; ++axis)
            k[static_cast<std::size_t>(axis)] =
                domain.lower[static_cast<std::size_t>(axis)] + idx[static_cast<std::size_t>(axis)] * domain.step(axis);
        points.push_back(std::move(k));
        int axis = d - 1;
        while (axis >= 0 && ++idx[static_cast<std::size_t>(axis)] == domain.grid_points) {
            idx[static_cast<std::size_t>(axis)] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    return points;
}

/// Scalar coefficient function on the k-domain: either a single Fourier
/// harmonic c*exp(i n.k) or raw values tabulated on the sampling grid.
struct PhiFunction {
    enum class Kind { fourier, samples };

    Kind kind = Kind::fourier;
    std::vector<int> frequency;     // fourier: per-axis integer frequency, not all zero
    Complex coefficient{1.0, 0.0};  // fourier
    std::vector<Complex> values;    // samples: grid values, same ordering as sample_grid

    static PhiFunction harmonic(std::vector<int> frequency, Complex coefficient = Complex(1.0)) {
        PhiFunction phi;
        phi.kind = Kind::fourier;
        phi.frequency = std::move(frequency);
        phi.coefficient = coefficient;
        return phi;
    }

    static PhiFunction sampled(std::vector<Complex> values) {
        PhiFunction phi;
        phi.kind = Kind::samples;
        phi.values = std::move(values);
        return phi;
    }
};

struct SymbolTerm {
    PhiFunction phi;
    ComplexMatrix matrix;  // pairs with phi as phi(k)*A + conj(phi(k))*A*
};

/// Hermitian matrix symbol A(k) = H + sum_j (phi_j(k) A_j + conj(phi_j(k)) A_j*)
/// over a torus or box k-domain. Immutable after construction by convention.
struct FourierSymbol {
    ComplexMatrix constant_part;  // Hermitian; absorbs every k-independent contribution
    std::vector<SymbolTerm> terms;
    KDomain domain;

    int dim() const { return constant_part.dim(); }
};

namespace detail {

inline std::size_t grid_node_index(const KDomain& domain, std::span<const double> k) {
    std::size_t flat = 0;
    for (int axis = 0; axis < domain.dim(); ++axis) {
        const double step = domain.step(axis);
        const double t = (k[static_cast<std::size_t>(axis)] - domain.lower[static_cast<std::size_t>(axis)]) / step;
        long node = std::lround(t);
        if (std::abs(t - static_cast<double>(node)) > 1e-6)
            throw std::invalid_argument("evaluate: sampled phi requires grid-aligned k");
        if (node == domain.grid_points && domain.full_torus(axis)) node = 0;  // periodic wrap
        if (node < 0 || node >= domain.grid_points)
            throw std::invalid_argument("evaluate: k outside sampling grid");
        flat = flat * static_cast<std::size_t>(domain.grid_points) + static_cast<std::size_t>(node);
    }
    return flat;
}

inline Complex phi_value(const PhiFunction& phi, const KDomain& domain, std::span<const double> k) {
    if (phi.kind == PhiFunction::Kind::fourier) {
        double angle = 0.0;
        for (int axis = 0; axis < domain.dim(); ++axis)
            angle += phi.frequency[static_cast<std::size_t>(axis)] * k[static_cast<std::size_t>(axis)];
        return phi.coefficient * std::polar(1.0, angle);
    }
    return phi.values[grid_node_index(domain, k)];
}

}  // namespace detail

inline void validate_symbol(const FourierSymbol& sym) {
    sym.domain.validate();
    const int n = sym.constant_part.dim();
    if (n < 1) throw std::invalid_argument("FourierSymbol: empty constant part");
    if (!sym.constant_part.all_finite())
        throw std::invalid_argument("FourierSymbol: non-finite constant part");
    if (sym.constant_part.hermiticity_defect() > 1e-12 * std::max(1.0, sym.constant_part.frobenius_norm()))
        throw std::invalid_argument("FourierSymbol: constant part is not Hermitian");
    for (std::size_t j = 0; j < sym.terms.size(); ++j) {
        const SymbolTerm& term = sym.terms[j];
        if (term.matrix.dim() != n)
            throw std::invalid_argument("FourierSymbol: term " + std::to_string(j + 1) + " has mismatched dimension");
        if (!term.matrix.all_finite())
            throw std::invalid_argument("FourierSymbol: term " + std::to_string(j + 1) + " has non-finite entries");
        if (term.phi.kind == PhiFunction::Kind::fourier) {
            if (static_cast<int>(term.phi.frequency.size()) != sym.domain.dim())
                throw std::invalid_argument("FourierSymbol: term " + std::to_string(j + 1) +
                                            " frequency length must match domain dimension");
            bool all_zero = true;
            for (int f : term.phi.frequency) all_zero = all_zero && f == 0;
            if (all_zero)
                throw std::invalid_argument("FourierSymbol: term " + std::to_string(j + 1) +
                                            " has zero frequency; fold constants into the constant part");
        } else {
            if (term.phi.values.size() != sym.domain.total_points())
                throw std::invalid_argument("FourierSymbol: term " + std::to_string(j + 1) +
                                            " sample count must match the domain grid");
        }
    }
}

/// Evaluate the symbol at a point of the k-domain. Hermitian by construction.
inline ComplexMatrix evaluate(const FourierSymbol& sym, std::span<const double> k) {
    if (static_cast<int>(k.size()) != sym.domain.dim())
        throw std::invalid_argument("evaluate: k dimension mismatch");
    for (int axis = 0; axis < sym.domain.dim(); ++axis) {
        const double v = k[static_cast<std::size_t>(axis)];
        if (v < sym.domain.lower[static_cast<std::size_t>(axis)] - 1e-9 ||
            v > sym.domain.upper[static_cast<std::size_t>(axis)] + 1e-9)
            throw std::invalid_argument("evaluate: k outside domain");
    }

    const int n = sym.dim();
    ComplexMatrix out = sym.constant_part;
    for (const SymbolTerm& term : sym.terms) {
        const Complex phi = detail::phi_value(term.phi, sym.domain, k);
        const Complex phi_bar = std::conj(phi);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += phi * term.matrix(i, j) + phi_bar * std::conj(term.matrix(j, i));
    }
    return out;
}

/// Geometric image phi(K) in the complex plane. Single harmonics map to
/// exact circles (any periodic axis engaged, or total angular sweep >= 2*pi)
/// or arcs; tabulated phis yield their sample cloud.
inline PlanarSet phi_image(const PhiFunction& phi, const KDomain& domain) {
    domain.validate();
    if (phi.kind == PhiFunction::Kind::samples) {
        if (phi.values.size() != domain.total_points())
            throw std::invalid_argument("phi_image: sample count must match the domain grid");
        return PlanarSet::from_samples(phi.values);
    }

    if (static_cast<int>(phi.frequency.size()) != domain.dim())
        throw std::invalid_argument("phi_image: frequency length must match domain dimension");

    const double magnitude = std::abs(phi.coefficient);
    bool any_active = false;
    double sweep = 0.0;
    double angle_lo = std::arg(phi.coefficient);
    double angle_hi = angle_lo;
    for (int axis = 0; axis < domain.dim(); ++axis) {
        const int freq = phi.frequency[static_cast<std::size_t>(axis)];
        if (freq == 0) continue;
        any_active = true;
        if (domain.full_torus(axis)) return PlanarSet::full_circle(Complex(0.0), magnitude);
        sweep += std::abs(freq) * domain.span(axis);
        const double a = freq * domain.lower[static_cast<std::size_t>(axis)];
        const double b = freq * domain.upper[static_cast<std::size_t>(axis)];
        angle_lo += std::min(a, b);
        angle_hi += std::max(a, b);
    }
    if (!any_active || magnitude == 0.0)
        return PlanarSet::from_samples({phi.coefficient});
    if (sweep >= kTwoPi) return PlanarSet::full_circle(Complex(0.0), magnitude);
    return PlanarSet::circular_arc(Complex(0.0), magnitude, angle_lo, angle_hi);
}

}  // namespace bandbound
