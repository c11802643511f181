#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sdlab {

/// Fixed-length real vector. Used for b, x, s, residuals and random
/// directions alike.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n, double value = 0.0) : data_(n, value) {}
    Vector(std::initializer_list<double> values) : data_(values) {}
    explicit Vector(std::vector<double> values) : data_(std::move(values)) {}

    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    double& operator[](std::size_t i) noexcept { return data_[i]; }
    double operator[](std::size_t i) const noexcept { return data_[i]; }

    [[nodiscard]] std::span<double> span() noexcept { return data_; }
    [[nodiscard]] std::span<const double> span() const noexcept { return data_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return data_; }

    [[nodiscard]] auto begin() const noexcept { return data_.begin(); }
    [[nodiscard]] auto end() const noexcept { return data_.end(); }

    [[nodiscard]] bool all_finite() const noexcept;

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<double> data_;
};

/// Square N x N matrix stored row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n, double value = 0.0) : n_(n), data_(n * n, value) {}
    /// Takes ownership of n*n row-major entries.
    DenseMatrix(std::size_t n, std::vector<double> row_major);
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(const Vector& d);

    [[nodiscard]] std::size_t dim() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
        return std::span<const double>(data_).subspan(i * n_, n_);
    }
    [[nodiscard]] std::span<const double> row_major() const noexcept { return data_; }

    [[nodiscard]] DenseMatrix transposed() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

[[nodiscard]] double dot(const Vector& x, const Vector& y);
[[nodiscard]] double norm(const Vector& x);

/// Unit vector parallel to x. Throws DegenerateDirection when norm(x) < 1e-300.
[[nodiscard]] Vector normalize(const Vector& x);

/// A x. Throws ContractViolation on a dimension mismatch and OverflowError
/// when any entry of the result is not finite.
[[nodiscard]] Vector matvec(const DenseMatrix& A, const Vector& x);

/// A^T x, same error behaviour as matvec.
[[nodiscard]] Vector matvec_transposed(const DenseMatrix& A, const Vector& x);

/// A^T B
[[nodiscard]] DenseMatrix transposed_product(const DenseMatrix& A, const DenseMatrix& B);

[[nodiscard]] Vector operator+(const Vector& x, const Vector& y);
[[nodiscard]] Vector operator-(const Vector& x, const Vector& y);
[[nodiscard]] Vector operator*(double a, const Vector& x);

/// y += a * x
void axpy(double a, const Vector& x, Vector& y);

}  // namespace sdlab
