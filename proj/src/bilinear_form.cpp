#include "adinvar/bilinear_form.hpp"

#include "adinvar/error.hpp"

namespace adinvar {

OrthogonalBasis congruence_diagonalize(const Matrix& gram) {
    const std::size_t n = gram.rows();
    Matrix a = gram;                       // working congruent form P^T G P
    Matrix p = Matrix::identity(n);        // accumulated change of basis (columns)

    auto add_col_row = [&](std::size_t dst, std::size_t src, const Scalar& f) {
        // e_dst <- e_dst + f e_src, applied as a congruence.
        for (std::size_t r = 0; r < n; ++r)
            p(r, dst) += f * p(r, src);
        for (std::size_t c = 0; c < n; ++c)
            a(dst, c) += f * a(src, c);
        for (std::size_t r = 0; r < n; ++r)
            a(r, dst) += f * a(r, src);
    };
    auto swap_idx = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t r = 0; r < n; ++r)
            std::swap(p(r, i), p(r, j));
        for (std::size_t c = 0; c < n; ++c)
            std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r)
            std::swap(a(r, i), a(r, j));
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && is_zero(a(piv, piv)))
            ++piv;
        if (piv == n) {
            // Isotropic remainder: look for a hyperbolic pair.
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (!is_zero(a(i, j))) {
                        add_col_row(i, j, 1);  // new a(i,i) = 2 a(i,j)
                        piv = i;
                        found = true;
                    }
            if (!found)
                break;  // the remaining block is identically zero
        }
        swap_idx(k, piv);
        for (std::size_t r = k + 1; r < n; ++r)
            if (!is_zero(a(k, r)))
                add_col_row(r, k, -a(k, r) / a(k, k));
    }

    OrthogonalBasis out{p, Vec(n)};
    for (std::size_t i = 0; i < n; ++i)
        out.norms[i] = a(i, i);
    return out;
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.square())
        throw Error(ErrorKind::invalid_input, "bilinear form: Gram matrix is not square");
    if (!gram_.is_symmetric())
        throw Error(ErrorKind::invalid_input, "bilinear form: Gram matrix is not symmetric");
    diag_ = congruence_diagonalize(gram_);
    for (const auto& d : diag_.norms) {
        const int s = sgn(d);
        if (s < 0)
            ++signature_.negative;
        else if (s > 0)
            ++signature_.positive;
        else
            ++signature_.zero;
    }
}

BilinearForm BilinearForm::zero(std::size_t n) { return BilinearForm(Matrix(n, n)); }
BilinearForm BilinearForm::identity(std::size_t n) { return BilinearForm(Matrix::identity(n)); }
BilinearForm BilinearForm::diagonal(const Vec& entries) { return BilinearForm(Matrix::diagonal(entries)); }

Scalar BilinearForm::operator()(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw Error(ErrorKind::dimension_mismatch, "bilinear form: argument length differs from form dimension");
    return dot(x, gram_ * y);
}

Subspace BilinearForm::radical() const { return kernel_of(gram_); }

BilinearForm BilinearForm::restricted(const std::vector<Vec>& vectors) const {
    Matrix g(vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i; j < vectors.size(); ++j)
            g(i, j) = g(j, i) = (*this)(vectors[i], vectors[j]);
    return BilinearForm(std::move(g));
}

BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b) {
    return BilinearForm(direct_sum(a.gram(), b.gram()));
}

Subspace orthogonal_complement(const Subspace& s, const BilinearForm& b) {
    if (s.ambient() != b.dim())
        throw Error(ErrorKind::dimension_mismatch, "orthogonal_complement: subspace and form dimensions differ");
    if (s.is_zero())
        return Subspace::whole(b.dim());
    std::vector<Vec> rows;
    for (const auto& v : s.basis())
        rows.push_back(b.gram() * v);  // G symmetric: row of v^T G
    return kernel_of(Matrix::from_rows(rows));
}

bool totally_isotropic(const Subspace& s, const BilinearForm& b) {
    if (s.ambient() != b.dim())
        throw Error(ErrorKind::dimension_mismatch, "totally_isotropic: subspace and form dimensions differ");
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i; j < s.dim(); ++j)
            if (!is_zero(b(s.basis()[i], s.basis()[j])))
                return false;
    return true;
}

bool nondegenerate_on(const Subspace& s, const BilinearForm& b) {
    return b.restricted(s.basis()).nondegenerate();
}

}  // namespace adinvar
