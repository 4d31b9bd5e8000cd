#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bandbound {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(int dim) : dim_(check_dim(dim)), data_(static_cast<std::size_t>(dim) * dim) {}

    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        dim_ = static_cast<int>(rows.size());
        check_dim(dim_);
        data_.reserve(static_cast<std::size_t>(dim_) * dim_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != dim_)
                throw std::invalid_argument("ComplexMatrix: initializer rows must form a square matrix");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<Complex>& entries) {
        ComplexMatrix m(static_cast<int>(entries.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<double>& entries) {
        ComplexMatrix m(static_cast<int>(entries.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
        return m;
    }

    /// Single-entry matrix with 1 at (row, col), zero elsewhere.
    static ComplexMatrix unit_entry(int dim, int row, int col, Complex value = 1.0) {
        ComplexMatrix m(dim);
        m(row, col) = value;
        return m;
    }

    int dim() const { return dim_; }
    bool empty() const { return dim_ == 0; }

    Complex& operator()(int i, int j) { return data_[index(i, j)]; }
    const Complex& operator()(int i, int j) const { return data_[index(i, j)]; }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const Complex& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    /// Frobenius norm of H - H*.
    double hermiticity_defect() const {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
        return std::sqrt(s);
    }

    bool all_finite() const {
        for (const Complex& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs) {
        require_same_dim(rhs, "+=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& rhs) {
        require_same_dim(rhs, "-=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
        return *this;
    }

    ComplexMatrix& operator*=(Complex scale) {
        for (Complex& z : data_) z *= scale;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }

    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
        lhs.require_same_dim(rhs, "*");
        const int n = lhs.dim_;
        ComplexMatrix out(n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const Complex a = lhs(i, k);
                if (a == Complex(0.0)) continue;
                for (int j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
            }
        }
        return out;
    }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

private:
    int dim_ = 0;
    std::vector<Complex> data_;

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }

    static int check_dim(int dim) {
        if (dim <= 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
        return dim;
    }

    void require_same_dim(const ComplexMatrix& rhs, const char* op) const {
        if (dim_ != rhs.dim_)
            throw std::invalid_argument(std::string("ComplexMatrix: dimension mismatch in operator") + op);
    }
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

/// (H + H*)/2.
inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return out;
}

}  // namespace bandbound
