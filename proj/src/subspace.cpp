#include "adinvar/subspace.hpp"

#include "adinvar/error.hpp"

namespace adinvar {

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    if (vectors.empty())
        return s;
    for (const auto& v : vectors)
        if (v.size() != ambient)
            throw Error(ErrorKind::dimension_mismatch, "Subspace::span: vector length differs from ambient dimension");
    auto e = rref(Matrix::from_rows(vectors));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        s.basis_.push_back(e.reduced.row(r));
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vec(ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::coordinate_block(std::size_t ambient, std::size_t first, std::size_t count) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < count; ++i)
        vs.push_back(unit_vec(ambient, first + i));
    return span(ambient, vs);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_)
        throw Error(ErrorKind::dimension_mismatch, "Subspace::coordinates: vector length differs from ambient dimension");
    // Echelon rows have a 1 at their pivot and zeros at other pivots.
    Vec coeffs(basis_.size());
    Vec rest = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        coeffs[r] = v[pivots_[r]];
        axpy(rest, -coeffs[r], basis_[r]);
    }
    if (!adinvar::is_zero(rest))
        return std::nullopt;
    return coeffs;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v))
            return false;
    return true;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_); }

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw Error(ErrorKind::dimension_mismatch, "subspace sum: ambient dimensions differ");
    auto vs = a.basis();
    vs.insert(vs.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), vs);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw Error(ErrorKind::dimension_mismatch, "subspace intersection: ambient dimensions differ");
    const std::size_t n = a.ambient();
    if (a.is_zero() || b.is_zero())
        return Subspace(n);
    // Solve sum_i s_i a_i - sum_j t_j b_j = 0.
    Matrix m(n, a.dim() + b.dim());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < a.dim(); ++i)
            m(r, i) = a.basis()[i][r];
        for (std::size_t j = 0; j < b.dim(); ++j)
            m(r, a.dim() + j) = -b.basis()[j][r];
    }
    std::vector<Vec> vs;
    for (const auto& sol : nullspace(m)) {
        Vec v(n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            axpy(v, sol[i], a.basis()[i]);
        vs.push_back(std::move(v));
    }
    return Subspace::span(n, vs);
}

Subspace kernel_of(const Matrix& m) { return Subspace::span(m.cols(), nullspace(m)); }

Subspace image_of(const Matrix& m) {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        cols.push_back(m.col(c));
    return Subspace::span(m.rows(), cols);
}

std::pair<Vec, Vec> decompose(const Vec& v, const Subspace& first, const Subspace& second) {
    const std::size_t n = first.ambient();
    if (second.ambient() != n || v.size() != n)
        throw Error(ErrorKind::dimension_mismatch, "decompose: ambient dimensions differ");
    if (first.dim() + second.dim() != n || !intersect(first, second).is_zero())
        throw Error(ErrorKind::precondition, "decompose: subspaces are not complementary");
    auto cols = first.basis();
    cols.insert(cols.end(), second.basis().begin(), second.basis().end());
    const auto coeffs = solve(Matrix::from_columns(cols, n), v);
    Vec a(n), b(n);
    for (std::size_t i = 0; i < first.dim(); ++i)
        axpy(a, (*coeffs)[i], first.basis()[i]);
    for (std::size_t j = 0; j < second.dim(); ++j)
        axpy(b, (*coeffs)[first.dim() + j], second.basis()[j]);
    return {std::move(a), std::move(b)};
}

}  // namespace adinvar
