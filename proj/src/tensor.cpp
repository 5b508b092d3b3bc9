#include "adinvar/tensor.hpp"

#include "adinvar/error.hpp"

namespace adinvar {

namespace {
void require_len(const Vec& v, std::size_t n, const char* what) {
    if (v.size() != n)
        throw Error(ErrorKind::dimension_mismatch, std::string(what) + ": vector length differs from tensor dimension");
}
}  // namespace

Vec Tensor3::apply(std::size_t i, std::size_t j) const {
    Vec r(n_);
    for (std::size_t k = 0; k < n_; ++k)
        r[k] = at(i, j, k);
    return r;
}

Vec Tensor3::apply(const Vec& x, const Vec& y) const {
    require_len(x, n_, "Tensor3::apply");
    require_len(y, n_, "Tensor3::apply");
    Vec r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (adinvar::is_zero(x[i]))
            continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (adinvar::is_zero(y[j]))
                continue;
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k)
                r[k] += c * at(i, j, k);
        }
    }
    return r;
}

Matrix Tensor3::op(std::size_t i) const {
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
            m(k, j) = at(i, j, k);
    return m;
}

Matrix Tensor3::op(const Vec& x) const {
    require_len(x, n_, "Tensor3::op");
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (!adinvar::is_zero(x[i]))
            m = m + x[i] * op(i);
    return m;
}

void Tensor3::set(std::size_t i, std::size_t j, const Vec& value) {
    require_len(value, n_, "Tensor3::set");
    for (std::size_t k = 0; k < n_; ++k)
        at(i, j, k) = value[k];
}

bool Tensor3::is_zero() const {
    for (const auto& v : data_)
        if (!adinvar::is_zero(v))
            return false;
    return true;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    if (a.n_ != b.n_)
        throw Error(ErrorKind::dimension_mismatch, "Tensor3: dimension mismatch");
    Tensor3 r(a.n_);
    for (std::size_t p = 0; p < a.data_.size(); ++p)
        r.data_[p] = a.data_[p] - b.data_[p];
    return r;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    if (a.n_ != b.n_)
        throw Error(ErrorKind::dimension_mismatch, "Tensor3: dimension mismatch");
    Tensor3 r(a.n_);
    for (std::size_t p = 0; p < a.data_.size(); ++p)
        r.data_[p] = a.data_[p] + b.data_[p];
    return r;
}

Vec Tensor4::apply(std::size_t i, std::size_t j, std::size_t k) const {
    Vec r(n_);
    for (std::size_t l = 0; l < n_; ++l)
        r[l] = at(i, j, k, l);
    return r;
}

Vec Tensor4::apply(const Vec& x, const Vec& y, const Vec& z) const {
    require_len(x, n_, "Tensor4::apply");
    require_len(y, n_, "Tensor4::apply");
    require_len(z, n_, "Tensor4::apply");
    Vec r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (adinvar::is_zero(x[i]))
            continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (adinvar::is_zero(y[j]))
                continue;
            for (std::size_t k = 0; k < n_; ++k) {
                if (adinvar::is_zero(z[k]))
                    continue;
                const Scalar c = x[i] * y[j] * z[k];
                for (std::size_t l = 0; l < n_; ++l)
                    r[l] += c * at(i, j, k, l);
            }
        }
    }
    return r;
}

Matrix Tensor4::op(std::size_t i, std::size_t j) const {
    Matrix m(n_, n_);
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l)
            m(l, k) = at(i, j, k, l);
    return m;
}

void Tensor4::set(std::size_t i, std::size_t j, const Vec& value, std::size_t k) {
    require_len(value, n_, "Tensor4::set");
    for (std::size_t l = 0; l < n_; ++l)
        at(i, j, k, l) = value[l];
}

void Tensor4::set_op(std::size_t i, std::size_t j, const Matrix& m) {
    if (m.rows() != n_ || m.cols() != n_)
        throw Error(ErrorKind::dimension_mismatch, "Tensor4::set_op: matrix shape differs from tensor dimension");
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l)
            at(i, j, k, l) = m(l, k);
}

bool Tensor4::is_zero() const {
    for (const auto& v : data_)
        if (!adinvar::is_zero(v))
            return false;
    return true;
}

}  // namespace adinvar
