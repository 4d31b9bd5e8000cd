#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <vector>

#include "bandbound/errors.hpp"
#include "bandbound/matrix.hpp"

namespace bandbound {

/// Eigendecomposition of a Hermitian matrix: H = V diag(values) V*.
struct EigResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, column n pairs with eigenvalues[n]
};

namespace detail {

inline constexpr int kEigIterationBudget = 100;

/// Unitary reduction of a Hermitian matrix to real symmetric tridiagonal
/// form via Householder reflections. On return `diag`/`offdiag` hold the
/// tridiagonal entries; if `transform` is non-null it receives the
/// accumulated unitary Q with Q* A Q tridiagonal (column phases already
/// folded in so the off-diagonal is real nonnegative).
inline void tridiagonalize_hermitian(ComplexMatrix a, std::vector<double>& diag,
                                     std::vector<double>& offdiag, ComplexMatrix* transform) {
    const int n = a.dim();
    diag.assign(static_cast<std::size_t>(n), 0.0);
    offdiag.assign(static_cast<std::size_t>(n), 0.0);
    if (transform) *transform = ComplexMatrix::identity(n);
    if (n == 1) {
        diag[0] = a(0, 0).real();
        return;
    }

    std::vector<Complex> v(static_cast<std::size_t>(n));
    std::vector<Complex> p(static_cast<std::size_t>(n));
    std::vector<Complex> w(static_cast<std::size_t>(n));

    for (int k = 0; k + 2 < n; ++k) {
        double col_norm_sq = 0.0;
        for (int i = k + 1; i < n; ++i) col_norm_sq += std::norm(a(i, k));
        const double col_norm = std::sqrt(col_norm_sq);
        if (col_norm == 0.0) continue;

        const Complex head = a(k + 1, k);
        const Complex phase = (head == Complex(0.0)) ? Complex(1.0) : head / std::abs(head);
        const Complex alpha = -phase * col_norm;

        // Householder vector v = x - alpha*e1 for the column below the diagonal.
        v[static_cast<std::size_t>(k + 1)] = head - alpha;
        for (int i = k + 2; i < n; ++i) v[static_cast<std::size_t>(i)] = a(i, k);
        double v_norm_sq = 0.0;
        for (int i = k + 1; i < n; ++i) v_norm_sq += std::norm(v[static_cast<std::size_t>(i)]);
        if (v_norm_sq == 0.0) continue;  // column already in reduced form
        const double beta = 2.0 / v_norm_sq;

        // Two-sided rank-2 update of the trailing block:
        //   p = beta*A*v,  w = p - (beta/2)(v*p) v,  A <- A - v w* - w v*.
        for (int i = k + 1; i < n; ++i) {
            Complex acc = 0.0;
            for (int j = k + 1; j < n; ++j) acc += a(i, j) * v[static_cast<std::size_t>(j)];
            p[static_cast<std::size_t>(i)] = beta * acc;
        }
        double vp = 0.0;  // v*p is real for Hermitian A
        for (int i = k + 1; i < n; ++i)
            vp += (std::conj(v[static_cast<std::size_t>(i)]) * p[static_cast<std::size_t>(i)]).real();
        const double kappa = 0.5 * beta * vp;
        for (int i = k + 1; i < n; ++i)
            w[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] - kappa * v[static_cast<std::size_t>(i)];
        for (int i = k + 1; i < n; ++i) {
            const Complex vi = v[static_cast<std::size_t>(i)];
            const Complex wi = w[static_cast<std::size_t>(i)];
            for (int j = k + 1; j <= i; ++j) {
                const Complex val = a(i, j) - vi * std::conj(w[static_cast<std::size_t>(j)]) -
                                    wi * std::conj(v[static_cast<std::size_t>(j)]);
                a(i, j) = val;
                if (j != i) a(j, i) = std::conj(val);
            }
        }

        a(k + 1, k) = alpha;
        a(k, k + 1) = std::conj(alpha);
        for (int i = k + 2; i < n; ++i) {
            a(i, k) = 0.0;
            a(k, i) = 0.0;
        }

        if (transform) {
            ComplexMatrix& q = *transform;
            for (int r = 0; r < n; ++r) {
                Complex acc = 0.0;
                for (int j = k + 1; j < n; ++j) acc += q(r, j) * v[static_cast<std::size_t>(j)];
                acc *= beta;
                for (int j = k + 1; j < n; ++j) q(r, j) -= acc * std::conj(v[static_cast<std::size_t>(j)]);
            }
        }
    }

    // Phase-scale the complex subdiagonal to real nonnegative entries.
    Complex phase = 1.0;
    for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = a(i, i).real();
    for (int i = 0; i + 1 < n; ++i) {
        const Complex sub = a(i + 1, i);
        const double mag = std::abs(sub);
        offdiag[static_cast<std::size_t>(i)] = mag;
        const Complex next_phase = (mag == 0.0) ? phase : sub * phase / mag;
        if (transform && next_phase != Complex(1.0)) {
            for (int r = 0; r < n; ++r) (*transform)(r, i + 1) *= next_phase;
        }
        phase = next_phase;
    }
}

/// Implicit-shift QL iteration on a real symmetric tridiagonal matrix.
/// Rotations are applied to the columns of `vectors` when non-null.
inline void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& offdiag,
                           ComplexMatrix* vectors) {
    const int n = static_cast<int>(diag.size());
    for (int l = 0; l < n; ++l) {
        int iterations = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(diag[static_cast<std::size_t>(m)]) +
                                  std::abs(diag[static_cast<std::size_t>(m + 1)]);
                if (std::abs(offdiag[static_cast<std::size_t>(m)]) <= DBL_EPSILON * dd) break;
            }
            if (m == l) break;
            if (++iterations > kEigIterationBudget)
                throw NumericalError("eig_hermitian: QL iteration did not converge within budget");

            double g = (diag[static_cast<std::size_t>(l + 1)] - diag[static_cast<std::size_t>(l)]) /
                       (2.0 * offdiag[static_cast<std::size_t>(l)]);
            double r = std::hypot(g, 1.0);
            g = diag[static_cast<std::size_t>(m)] - diag[static_cast<std::size_t>(l)] +
                offdiag[static_cast<std::size_t>(l)] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            int i = m - 1;
            for (; i >= l; --i) {
                double f = s * offdiag[static_cast<std::size_t>(i)];
                const double b = c * offdiag[static_cast<std::size_t>(i)];
                r = std::hypot(f, g);
                offdiag[static_cast<std::size_t>(i + 1)] = r;
                if (r == 0.0) {
                    diag[static_cast<std::size_t>(i + 1)] -= p;
                    offdiag[static_cast<std::size_t>(m)] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[static_cast<std::size_t>(i + 1)] - p;
                r = (diag[static_cast<std::size_t>(i)] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[static_cast<std::size_t>(i + 1)] = g + p;
                g = c * r - b;
                if (vectors) {
                    ComplexMatrix& z = *vectors;
                    const int rows = z.dim();
                    for (int row = 0; row < rows; ++row) {
                        const Complex zi1 = z(row, i + 1);
                        const Complex zi = z(row, i);
                        z(row, i + 1) = s * zi + c * zi1;
                        z(row, i) = c * zi - s * zi1;
                    }
                }
            }
            if (underflow && i >= l) continue;
            diag[static_cast<std::size_t>(l)] -= p;
            offdiag[static_cast<std::size_t>(l)] = g;
            offdiag[static_cast<std::size_t>(m)] = 0.0;
        }
    }
}

inline void check_square_finite(const ComplexMatrix& m, const char* who) {
    if (m.dim() <= 0) throw std::invalid_argument(std::string(who) + ": empty matrix");
    if (!m.all_finite()) throw NumericalError(std::string(who) + ": non-finite entries");
}

inline void check_hermitian(const ComplexMatrix& m, double tol, const char* who) {
    if (m.hermiticity_defect() > tol * m.frobenius_norm())
        throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian within tolerance");
}

}  // namespace detail

/// Full eigendecomposition of a Hermitian matrix. The input is symmetrized
/// as (H+H*)/2 after checking the Hermiticity defect against
/// tol*frobenius_norm. Eigenvalues ascending; ties keep iteration order.
inline EigResult eig_hermitian(const ComplexMatrix& h, double hermitian_tol = 1e-12) {
    detail::check_square_finite(h, "eig_hermitian");
    detail::check_hermitian(h, hermitian_tol, "eig_hermitian");
    const ComplexMatrix a = hermitian_part(h);
    const int n = a.dim();

    EigResult out;
    if (n == 1) {
        out.eigenvalues = {a(0, 0).real()};
        out.eigenvectors = ComplexMatrix::identity(1);
        return out;
    }

    std::vector<double> diag;
    std::vector<double> offdiag;
    ComplexMatrix q;
    detail::tridiagonalize_hermitian(a, diag, offdiag, &q);
    detail::tridiagonal_ql(diag, offdiag, &q);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        return diag[static_cast<std::size_t>(lhs)] < diag[static_cast<std::size_t>(rhs)];
    });

    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors = ComplexMatrix(n);
    for (int col = 0; col < n; ++col) {
        const int src = order[static_cast<std::size_t>(col)];
        out.eigenvalues[static_cast<std::size_t>(col)] = diag[static_cast<std::size_t>(src)];
        for (int row = 0; row < n; ++row) out.eigenvectors(row, col) = q(row, src);
    }
    return out;
}

/// Eigenvalues only (ascending); skips eigenvector accumulation.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double hermitian_tol = 1e-12) {
    detail::check_square_finite(h, "hermitian_eigenvalues");
    detail::check_hermitian(h, hermitian_tol, "hermitian_eigenvalues");
    const ComplexMatrix a = hermitian_part(h);
    if (a.dim() == 1) return {a(0, 0).real()};

    std::vector<double> diag;
    std::vector<double> offdiag;
    detail::tridiagonalize_hermitian(a, diag, offdiag, nullptr);
    detail::tridiagonal_ql(diag, offdiag, nullptr);
    std::sort(diag.begin(), diag.end());
    return diag;
}

/// Matrix absolute value |B| = (B*B)^(1/2). Negative numerical eigenvalues
/// of B*B are clamped to zero before the square root; the result is
/// Hermitian positive semidefinite.
inline ComplexMatrix matrix_abs(const ComplexMatrix& b) {
    detail::check_square_finite(b, "matrix_abs");
    const int n = b.dim();
    const ComplexMatrix gram = b.adjoint() * b;
    const EigResult eig = eig_hermitian(gram);

    std::vector<double> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        roots[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, eig.eigenvalues[static_cast<std::size_t>(i)]));

    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += eig.eigenvectors(i, k) * roots[static_cast<std::size_t>(k)] *
                       std::conj(eig.eigenvectors(j, k));
            out(i, j) = acc;
            if (i != j) out(j, i) = std::conj(acc);
        }
        out(i, i) = Complex(out(i, i).real(), 0.0);
    }
    return out;
}

/// Nuclear norm: sum of singular values, Tr (B*B)^(1/2).
inline double nuclear_norm(const ComplexMatrix& a) {
    detail::check_square_finite(a, "nuclear_norm");
    const std::vector<double> gram_eig = hermitian_eigenvalues(a.adjoint() * a);
    double sum = 0.0;
    for (double lambda : gram_eig) sum += std::sqrt(std::max(0.0, lambda));
    return sum;
}

/// True iff the minimum eigenvalue of the Hermitian matrix is >= -tol.
inline bool is_psd(const ComplexMatrix& h, double tol) {
    const std::vector<double> eig = hermitian_eigenvalues(h);
    return eig.front() >= -tol;
}

/// Spectral norm of a Hermitian matrix: max |eigenvalue|.
inline double operator_norm(const ComplexMatrix& h) {
    const std::vector<double> eig = hermitian_eigenvalues(h);
    return std::max(std::abs(eig.front()), std::abs(eig.back()));
}

/// Checks the Loewner-order sandwich
///   -|B|-|B*| <= B+B* <= |B|+|B*|
/// that underpins the constant-matrix band enclosure.
inline bool loewner_sandwich_check(const ComplexMatrix& b, double tol) {
    detail::check_square_finite(b, "loewner_sandwich_check");
    const ComplexMatrix envelope = matrix_abs(b) + matrix_abs(b.adjoint());
    const ComplexMatrix symmetric_part = b + b.adjoint();
    return is_psd(envelope - symmetric_part, tol) && is_psd(envelope + symmetric_part, tol);
}

}  // namespace bandbound
