#pragma once

#include "adinvar/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace adinvar {

/// Coordinate vector over the rationals.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);
/// Concatenates coordinate blocks, e.g. (d-part, h*-part).
Vec concat(const Vec& a, const Vec& b);

/// Dense row-major rational matrix. Operators act on column vectors:
/// column j of an operator matrix holds the image of basis vector j.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_columns(const std::vector<Vec>& columns, std::size_t height);
    static Matrix diagonal(const Vec& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    Matrix transposed() const;
    bool is_zero() const;
    bool is_symmetric() const;

    /// Row-major flattening, used when matrices are unknowns of a linear system.
    const std::vector<Scalar>& flat() const { return data_; }
    static Matrix from_flat(std::size_t rows, std::size_t cols, const Vec& flat);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& m);
Vec operator*(const Matrix& m, const Vec& v);
Matrix commutator(const Matrix& a, const Matrix& b);
Scalar trace(const Matrix& m);
/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RowEchelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form, leftmost pivots.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}; one vector per free column (free variable = 1).
std::vector<Vec> nullspace(const Matrix& m);
/// Some solution of a x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Coefficients c[0..n] of det(t I - m) = sum c[k] t^k (Faddeev-LeVerrier).
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

}  // namespace adinvar
