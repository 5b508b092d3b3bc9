#include "adinvar/matrix.hpp"

#include "adinvar/error.hpp"

#include <utility>

namespace adinvar {

namespace {

void require(bool ok, const char* what) {
    if (!ok)
        throw Error(ErrorKind::dimension_mismatch, what);
}

}  // namespace

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x))
            return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "vector sum: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "vector difference: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
    require(a.size() == b.size(), "axpy: length mismatch");
    if (is_zero(s))
        return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(b[i]))
            a[i] += s * b[i];
}

Scalar dot(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "dot: length mismatch");
    Scalar r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r += a[i] * b[i];
    return r;
}

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty())
        return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == m.cols_, "from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t height) {
    Matrix m(height, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        require(columns[c].size() == height, "from_columns: wrong column height");
        for (std::size_t r = 0; r < height; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::diagonal(const Vec& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, const Vec& flat) {
    require(flat.size() == rows * cols, "from_flat: size mismatch");
    Matrix m(rows, cols);
    m.data_ = flat;
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!adinvar::is_zero(x))
            return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference: shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j) - b(i, j);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matrix product: shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (is_zero(aik))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j)))
                    r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = s * m(i, j);
    return r;
}

Vec operator*(const Matrix& m, const Vec& v) {
    require(m.cols() == v.size(), "matrix-vector product: shape mismatch");
    Vec r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(v[j]) && !is_zero(m(i, j)))
                r[i] += m(i, j) * v[j];
    return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Scalar trace(const Matrix& m) {
    require(m.square(), "trace: non-square matrix");
    Scalar t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        t += m(i, i);
    return t;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

RowEchelon rref(Matrix m) {
    RowEchelon out;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != lead_row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(lead_row, j));
        const Scalar inv = 1 / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(lead_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || is_zero(m(r, c)))
                continue;
            const Scalar f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(lead_row, j)))
                    m(r, j) -= f * m(lead_row, j);
        }
        out.pivots.push_back(c);
        ++lead_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
    const auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    require(a.rows() == b.size(), "solve: shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto e = rref(std::move(aug));
    Vec x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols())
            return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, a.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    require(m.square(), "inverse: non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto e = rref(std::move(aug));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Scalar determinant(const Matrix& m) {
    require(m.square(), "determinant: non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c)))
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(a(r, c)))
                continue;
            const Scalar f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
    require(m.square(), "characteristic_polynomial: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + c[n - k + 1] * id;
        c[n - k] = -trace(m * mk) / Scalar(static_cast<long>(k));
    }
    return c;
}

}  // namespace adinvar
