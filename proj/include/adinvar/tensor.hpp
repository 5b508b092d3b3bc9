#pragma once

#include "adinvar/matrix.hpp"

namespace adinvar {

/// (1,2) tensor over an algebra basis: Op(e_i) e_j = sum_k at(i,j,k) e_k.
/// Holds connections, homogeneous structures and torsions alike.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n) {}

    std::size_t dim() const { return n_; }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }

    /// Op(e_i) e_j.
    Vec apply(std::size_t i, std::size_t j) const;
    /// Op(x) y, bilinear.
    Vec apply(const Vec& x, const Vec& y) const;
    /// Matrix of Op(e_i).
    Matrix op(std::size_t i) const;
    Matrix op(const Vec& x) const;
    void set(std::size_t i, std::size_t j, const Vec& value);

    bool is_zero() const;
    friend bool operator==(const Tensor3&, const Tensor3&) = default;
    friend Tensor3 operator-(const Tensor3& a, const Tensor3& b);
    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);

private:
    std::size_t n_ = 0;
    std::vector<Scalar> data_;
};

/// Curvature-type tensor: R(e_i, e_j) e_k = sum_l at(i,j,k,l) e_l.
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(std::size_t n) : n_(n), data_(n * n * n * n) {}

    std::size_t dim() const { return n_; }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return data_[((i * n_ + j) * n_ + k) * n_ + l];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return data_[((i * n_ + j) * n_ + k) * n_ + l];
    }

    Vec apply(std::size_t i, std::size_t j, std::size_t k) const;
    Vec apply(const Vec& x, const Vec& y, const Vec& z) const;
    /// Matrix of R(e_i, e_j).
    Matrix op(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Vec& column_k_values, std::size_t k);
    void set_op(std::size_t i, std::size_t j, const Matrix& m);

    bool is_zero() const;
    friend bool operator==(const Tensor4&, const Tensor4&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace adinvar
