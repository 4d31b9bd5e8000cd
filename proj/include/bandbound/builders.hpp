#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bandbound/bounds.hpp"
#include "bandbound/symbol.hpp"

namespace bandbound {

/// Periodic block Jacobi operator on the line:
///   (J y)_n = a_{n-1}* y_{n-1} + b_n y_n + a_n y_{n+1},
/// with p-periodic m x m coefficient blocks and Hermitian b_n.
struct JacobiSpec {
    int period = 0;     // p >= 1
    int block_dim = 0;  // m >= 1
    std::vector<ComplexMatrix> a;  // p hopping blocks
    std::vector<ComplexMatrix> b;  // p Hermitian diagonal blocks

    void validate() const {
        if (period < 1) throw std::invalid_argument("JacobiSpec: period must be >= 1");
        if (block_dim < 1) throw std::invalid_argument("JacobiSpec: block dimension must be >= 1");
        if (static_cast<int>(a.size()) != period || static_cast<int>(b.size()) != period)
            throw std::invalid_argument("JacobiSpec: need exactly one a and one b block per period site");
        for (int n = 0; n < period; ++n) {
            if (a[static_cast<std::size_t>(n)].dim() != block_dim || b[static_cast<std::size_t>(n)].dim() != block_dim)
                throw std::invalid_argument("JacobiSpec: block " + std::to_string(n + 1) + " has wrong dimension");
            if (!a[static_cast<std::size_t>(n)].all_finite() || !b[static_cast<std::size_t>(n)].all_finite())
                throw std::invalid_argument("JacobiSpec: block " + std::to_string(n + 1) + " has non-finite entries");
            const ComplexMatrix& diag = b[static_cast<std::size_t>(n)];
            if (diag.hermiticity_defect() > 1e-12 * std::max(1.0, diag.frobenius_norm()))
                throw std::invalid_argument("JacobiSpec: b block " + std::to_string(n + 1) + " must be Hermitian");
        }
    }
};

/// Discrete Schrodinger operator on the square lattice with an (N, M)-periodic
/// real potential q: nearest-neighbor hopping 1 plus on-site q_{n,m}.
struct Schrodinger2DSpec {
    int period_n = 0;  // N >= 1
    int period_m = 0;  // M >= 1
    std::vector<std::vector<double>> q;  // N rows of M real entries

    void validate() const {
        if (period_n < 1 || period_m < 1)
            throw std::invalid_argument("Schrodinger2DSpec: periods must be >= 1");
        if (static_cast<int>(q.size()) != period_n)
            throw std::invalid_argument("Schrodinger2DSpec: q must have N rows");
        for (const auto& row : q) {
            if (static_cast<int>(row.size()) != period_m)
                throw std::invalid_argument("Schrodinger2DSpec: each q row must have M entries");
            for (double v : row)
                if (!std::isfinite(v)) throw std::invalid_argument("Schrodinger2DSpec: q entries must be finite");
        }
    }
};

/// Fiber symbol of the periodic Jacobi operator on the 1-torus: the period
/// block b_1..b_p / a_1..a_{p-1} forms the constant tridiagonal part; the
/// wrap-around block a_p rides the e^{ik} harmonic in the corner. An
/// optional restriction replaces the torus by a k-interval.
inline FourierSymbol jacobi_symbol(const JacobiSpec& spec,
                                   std::optional<std::pair<double, double>> restriction = std::nullopt,
                                   int grid = 0) {
    spec.validate();
    const int p = spec.period;
    const int m = spec.block_dim;
    const int n = p * m;

    ComplexMatrix constant_part(n);
    for (int site = 0; site < p; ++site) {
        const ComplexMatrix& diag = spec.b[static_cast<std::size_t>(site)];
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) constant_part(site * m + i, site * m + j) = diag(i, j);
    }
    for (int site = 0; site + 1 < p; ++site) {
        const ComplexMatrix& hop = spec.a[static_cast<std::size_t>(site)];
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                constant_part(site * m + i, (site + 1) * m + j) += hop(i, j);
                constant_part((site + 1) * m + j, site * m + i) += std::conj(hop(i, j));
            }
        }
    }

    // Corner block: the p-th hopping matrix (the paper-index a_0 == a_p).
    ComplexMatrix corner(n);
    const ComplexMatrix& wrap = spec.a[static_cast<std::size_t>(p - 1)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) corner((p - 1) * m + i, j) = wrap(i, j);

    FourierSymbol sym;
    sym.constant_part = std::move(constant_part);
    sym.terms.push_back(SymbolTerm{PhiFunction::harmonic({1}), std::move(corner)});
    if (restriction) {
        const auto [lo, hi] = *restriction;
        sym.domain = KDomain::interval(lo, hi, grid);
    } else {
        sym.domain = KDomain::torus(1, grid);
    }
    validate_symbol(sym);
    return sym;
}

/// Rotate the periodic coefficient sequences left by `shift` sites; the
/// shifted operator is unitarily equivalent to the original.
inline JacobiSpec cyclic_shift(const JacobiSpec& spec, int shift) {
    spec.validate();
    const int p = spec.period;
    const int s = ((shift % p) + p) % p;
    JacobiSpec out = spec;
    for (int i = 0; i < p; ++i) {
        out.a[static_cast<std::size_t>(i)] = spec.a[static_cast<std::size_t>((i + s) % p)];
        out.b[static_cast<std::size_t>(i)] = spec.b[static_cast<std::size_t>((i + s) % p)];
    }
    return out;
}

/// Scan every cyclic shift (each places a different hopping block in the
/// wrap-around corner) and return the one minimizing 4*Tr|a_corner|, with
/// the minimal bound value. Ties resolve to the smallest shift.
inline std::pair<int, double> jacobi_best_shift(const JacobiSpec& spec) {
    spec.validate();
    const int p = spec.period;
    int best_shift = 0;
    double best_value = 0.0;
    for (int s = 0; s < p; ++s) {
        const int corner = (s + p - 1) % p;
        const double value = 4.0 * nuclear_norm(spec.a[static_cast<std::size_t>(corner)]);
        if (s == 0 || value < best_value) {
            best_shift = s;
            best_value = value;
        }
    }
    return {best_shift, best_value};
}

/// Fiber symbol of the 2D periodic Schrodinger operator on the 2-torus.
/// Site (n, m) maps to index m*N + n. The constant part carries the
/// within-cell tridiagonal columns plus identity hops between columns; the
/// two harmonics carry the wrap-around hops in each lattice direction.
/// Small periods (N <= 2 or M <= 2) land wrap-around and nearest-neighbor
/// hops on the same entry, which simply sum.
inline FourierSymbol schrodinger2d_symbol(const Schrodinger2DSpec& spec, int grid = 0) {
    spec.validate();
    const int n_period = spec.period_n;
    const int m_period = spec.period_m;
    const int dim = n_period * m_period;
    const auto site = [n_period](int n, int m) { return m * n_period + n; };

    ComplexMatrix constant_part(dim);
    for (int m = 0; m < m_period; ++m) {
        for (int n = 0; n < n_period; ++n) {
            constant_part(site(n, m), site(n, m)) += spec.q[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
            if (n + 1 < n_period) {
                constant_part(site(n, m), site(n + 1, m)) += 1.0;
                constant_part(site(n + 1, m), site(n, m)) += 1.0;
            }
        }
        if (m + 1 < m_period) {
            for (int n = 0; n < n_period; ++n) {
                constant_part(site(n, m), site(n, m + 1)) += 1.0;
                constant_part(site(n, m + 1), site(n, m)) += 1.0;
            }
        }
    }

    // Wrap-around hop within each column: block-diagonal copies of the
    // single-entry corner matrix.
    ComplexMatrix vertical_wrap(dim);
    for (int m = 0; m < m_period; ++m) vertical_wrap(site(n_period - 1, m), site(0, m)) += 1.0;

    // Wrap-around hop between the last and first columns: identity block.
    ComplexMatrix horizontal_wrap(dim);
    for (int n = 0; n < n_period; ++n) horizontal_wrap(site(n, m_period - 1), site(n, 0)) += 1.0;

    FourierSymbol sym;
    sym.constant_part = std::move(constant_part);
    sym.terms.push_back(SymbolTerm{PhiFunction::harmonic({1, 0}), std::move(vertical_wrap)});
    sym.terms.push_back(SymbolTerm{PhiFunction::harmonic({0, 1}), std::move(horizontal_wrap)});
    sym.domain = KDomain::torus(2, grid);
    validate_symbol(sym);
    return sym;
}

/// Staircase potential q_{n,m} = m/eps whose spectrum fills ~4*max(N,M)
/// once eps is small.
inline Schrodinger2DSpec large_spectrum_potential(int period_n, int period_m, double eps) {
    if (period_n < 1 || period_m < period_n)
        throw std::invalid_argument("large_spectrum_potential: need M >= N >= 1");
    if (!(eps > 0.0)) throw std::invalid_argument("large_spectrum_potential: eps must be positive");
    Schrodinger2DSpec spec;
    spec.period_n = period_n;
    spec.period_m = period_m;
    spec.q.assign(static_cast<std::size_t>(period_n), std::vector<double>(static_cast<std::size_t>(period_m)));
    for (int n = 0; n < period_n; ++n)
        for (int m = 0; m < period_m; ++m)
            spec.q[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = static_cast<double>(m + 1) / eps;
    return spec;
}

/// Hermitian matrix of the operator restricted to L cells per axis with
/// periodic boundary conditions: a block circulant whose exact spectrum is
/// the multiset union of the symbol spectra over the L^d uniform k-grid.
inline ComplexMatrix finite_periodic_truncation(const FourierSymbol& sym, int cells) {
    validate_symbol(sym);
    const int d = sym.domain.dim();
    if (d != 1 && d != 2)
        throw std::invalid_argument("finite_periodic_truncation: only 1 or 2 k-dimensions supported");
    for (int axis = 0; axis < d; ++axis)
        if (!sym.domain.full_torus(axis))
            throw std::invalid_argument("finite_periodic_truncation: domain must be the full torus");
    if (cells < 2) throw std::invalid_argument("finite_periodic_truncation: need at least 2 cells per axis");
    for (const SymbolTerm& term : sym.terms)
        if (term.phi.kind != PhiFunction::Kind::fourier)
            throw std::invalid_argument("finite_periodic_truncation: sampled phi has no lattice realization");

    const int n = sym.dim();
    const int num_cells = d == 1 ? cells : cells * cells;
    ComplexMatrix out(n * num_cells);

    const auto cell_flat = [&](int x0, int x1) { return d == 1 ? x0 : x0 * cells + x1; };
    const auto add_block = [&](int from, int to, const ComplexMatrix& block, Complex weight, bool adjoint) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(from * n + i, to * n + j) +=
                    weight * (adjoint ? std::conj(block(j, i)) : block(i, j));
    };
    const auto wrap = [&](int x) { return ((x % cells) + cells) % cells; };

    for (int x0 = 0; x0 < cells; ++x0) {
        for (int x1 = 0; x1 < (d == 2 ? cells : 1); ++x1) {
            const int from = cell_flat(x0, x1);
            add_block(from, from, sym.constant_part, Complex(1.0), false);
            for (const SymbolTerm& term : sym.terms) {
                const int f0 = term.phi.frequency[0];
                const int f1 = d == 2 ? term.phi.frequency[1] : 0;
                const int forward = cell_flat(wrap(x0 + f0), d == 2 ? wrap(x1 + f1) : 0);
                const int backward = cell_flat(wrap(x0 - f0), d == 2 ? wrap(x1 - f1) : 0);
                add_block(from, forward, term.matrix, term.phi.coefficient, false);
                add_block(from, backward, term.matrix, std::conj(term.phi.coefficient), true);
            }
        }
    }
    return out;
}

}  // namespace bandbound
