#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace swarmconn {

/// Dense row-major matrix. Everything in this library is small (a swarm of
/// tens of agents, occasionally a few hundred), so storage is always dense
/// and the operations are plain textbook loops.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::span<const double> data() const { return a_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

bool is_symmetric(const Matrix& a, double tol);
/// Frobenius norm of the strictly off-diagonal part.
double off_diagonal_norm(const Matrix& a);
double max_abs_difference(const Matrix& a, const Matrix& b);

/// Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.
/// Sweeps run until the off-diagonal Frobenius norm drops below off_tol;
/// convergence is quadratic, so max_sweeps is a safety net that well-scaled
/// symmetric input never reaches.
std::vector<double> symmetric_eigenvalues(Matrix a, double off_tol = 1e-12, int max_sweeps = 100);

double dot(std::span<const double> x, std::span<const double> y);
double norm(std::span<const double> x);

}  // namespace swarmconn
