#include "sdlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sdlab/errors.hpp"

namespace sdlab {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        throw ContractViolation(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
    }
}

void require_finite(const Vector& v, const char* op) {
    if (!v.all_finite()) {
        throw OverflowError(std::string(op) + ": non-finite result");
    }
}

}  // namespace

bool Vector::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major)) {
    require_same_size(data_.size(), n * n, "DenseMatrix");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
        require_same_size(r.size(), n_, "DenseMatrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diagonal(const Vector& d) {
    DenseMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double dot(const Vector& x, const Vector& y) {
    require_same_size(x.size(), y.size(), "dot");
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
    return sum;
}

double norm(const Vector& x) { return std::sqrt(dot(x, x)); }

Vector normalize(const Vector& x) {
    const double len = norm(x);
    if (!(len >= 1e-300) || !std::isfinite(len)) {
        throw DegenerateDirection("normalize: vector has zero or non-finite length");
    }
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / len;
    return out;
}

Vector matvec(const DenseMatrix& A, const Vector& x) {
    require_same_size(A.dim(), x.size(), "matvec");
    const std::size_t n = A.dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = A.row(i);
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += row[j] * x[j];
        out[i] = sum;
    }
    require_finite(out, "matvec");
    return out;
}

Vector matvec_transposed(const DenseMatrix& A, const Vector& x) {
    require_same_size(A.dim(), x.size(), "matvec_transposed");
    const std::size_t n = A.dim();
    Vector out(n);
    // Row-wise accumulation keeps the traversal contiguous.
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = A.row(i);
        const double xi = x[i];
        for (std::size_t j = 0; j < n; ++j) out[j] += row[j] * xi;
    }
    require_finite(out, "matvec_transposed");
    return out;
}

DenseMatrix transposed_product(const DenseMatrix& A, const DenseMatrix& B) {
    require_same_size(A.dim(), B.dim(), "transposed_product");
    const std::size_t n = A.dim();
    // (A^T B)(i, j) = sum_k A(k, i) B(k, j); the k-outer order streams both rows.
    std::vector<double> out(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const auto a = A.row(k);
        const auto b = B.row(k);
        for (std::size_t i = 0; i < n; ++i) {
            const double aki = a[i];
            double* dst = out.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) dst[j] += aki * b[j];
        }
    }
    return DenseMatrix(n, std::move(out));
}

Vector operator+(const Vector& x, const Vector& y) {
    require_same_size(x.size(), y.size(), "operator+");
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

Vector operator-(const Vector& x, const Vector& y) {
    require_same_size(x.size(), y.size(), "operator-");
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}

Vector operator*(double a, const Vector& x) {
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
    return out;
}

void axpy(double a, const Vector& x, Vector& y) {
    require_same_size(x.size(), y.size(), "axpy");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

}  // namespace sdlab
