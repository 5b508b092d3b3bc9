#include "adinvar/lie_algebra.hpp"

#include "adinvar/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace adinvar {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> names, const std::vector<BracketEntry>& entries)
    : dim_(dim), names_(std::move(names)), table_(dim * (dim > 0 ? dim - 1 : 0) / 2) {
    if (names_.empty())
        for (std::size_t i = 0; i < dim; ++i)
            names_.push_back("e" + std::to_string(i + 1));
    if (names_.size() != dim)
        throw Error(ErrorKind::invalid_input, "LieAlgebra: expected " + std::to_string(dim) + " basis names, got " +
                                                  std::to_string(names_.size()));

    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> seen;
    for (const auto& e : entries) {
        if (e.i >= dim || e.j >= dim || e.k >= dim)
            throw Error(ErrorKind::invalid_input, "LieAlgebra: bracket index out of range");
        if (e.i >= e.j)
            throw Error(ErrorKind::invalid_input, "LieAlgebra: bracket entries must have i < j (got [e" +
                                                      std::to_string(e.i + 1) + ", e" + std::to_string(e.j + 1) + "])");
        if (!seen.emplace(std::tuple{e.i, e.j, e.k}, true).second)
            throw Error(ErrorKind::invalid_input, "LieAlgebra: repeated bracket entry (" + std::to_string(e.i + 1) +
                                                      ", " + std::to_string(e.j + 1) + ", " + std::to_string(e.k + 1) +
                                                      ")");
        if (!is_zero(e.value))
            table_[pair_index(e.i, e.j)].emplace_back(e.k, e.value);
    }
    for (auto& row : table_)
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    ad_.assign(dim, Matrix(dim, dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (i == j)
                continue;
            const Scalar sign = i < j ? 1 : -1;
            for (const auto& [k, v] : table_[pair_index(std::min(i, j), std::max(i, j))])
                ad_[i](k, j) = sign * v;
        }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, std::vector<std::string> names) {
    return LieAlgebra(dim, std::move(names), {});
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
    // Row-major index of (i, j), i < j, in the strict upper triangle.
    return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

Vec LieAlgebra::bracket(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_)
        throw Error(ErrorKind::dimension_mismatch, "bracket: basis index out of range");
    return ad_[i].col(j);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw Error(ErrorKind::dimension_mismatch, "bracket: vector length " + std::to_string(x.size()) + "/" +
                                                       std::to_string(y.size()) + " differs from algebra dimension " +
                                                       std::to_string(dim_));
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!is_zero(x[i]))
            axpy(r, x[i], ad_[i] * y);
    return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
    if (x.size() != dim_)
        throw Error(ErrorKind::dimension_mismatch, "ad: vector length differs from algebra dimension");
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!is_zero(x[i]))
            m = m + x[i] * ad_[i];
    return m;
}

std::vector<BracketEntry> LieAlgebra::entries() const {
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (const auto& [k, v] : table_[pair_index(i, j)])
                out.push_back({i, j, k, v});
    return out;
}

bool LieAlgebra::is_abelian() const {
    return std::all_of(table_.begin(), table_.end(), [](const auto& row) { return row.empty(); });
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.names_ == b.names_ && a.table_ == b.table_;
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& l) {
    std::vector<JacobiViolation> out;
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec s = l.ad(i) * l.bracket(j, k);
                s = s + l.ad(j) * l.bracket(k, i);
                s = s + l.ad(k) * l.bracket(i, j);
                if (!is_zero(s))
                    out.push_back({i, j, k, std::move(s)});
            }
    return out;
}

void require_jacobi(const LieAlgebra& l, const std::string& context) {
    const auto v = check_jacobi(l);
    if (v.empty())
        return;
    std::ostringstream msg;
    msg << context << ": Jacobi identity fails at (" << v.front().i + 1 << ", " << v.front().j + 1 << ", "
        << v.front().k + 1 << ")";
    throw Error(ErrorKind::internal, msg.str());
}

bool ad_invariant(const LieAlgebra& l, const BilinearForm& b) {
    if (b.dim() != l.dim())
        throw Error(ErrorKind::dimension_mismatch, "ad_invariant: form and algebra dimensions differ");
    // B(ad_x y, z) + B(y, ad_x z) = 0  <=>  ad_x^T G + G ad_x = 0
    for (std::size_t x = 0; x < l.dim(); ++x) {
        const Matrix m = l.ad(x).transposed() * b.gram() + b.gram() * l.ad(x);
        if (!m.is_zero())
            return false;
    }
    return true;
}

bool is_derivation(const LieAlgebra& l, const Matrix& d) {
    const std::size_t n = l.dim();
    if (d.rows() != n || d.cols() != n)
        throw Error(ErrorKind::dimension_mismatch, "is_derivation: matrix shape differs from algebra dimension");
    // D ad(e_i) - ad(e_i) D = ad(D e_i)
    for (std::size_t i = 0; i < n; ++i)
        if (commutator(d, l.ad(i)) != l.ad(d.col(i)))
            return false;
    return true;
}

bool is_skew(const Matrix& m, const BilinearForm& b) {
    if (m.rows() != b.dim() || m.cols() != b.dim())
        throw Error(ErrorKind::dimension_mismatch, "is_skew: matrix shape differs from form dimension");
    return (b.gram() * m + m.transposed() * b.gram()).is_zero();
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& s, const Subspace& t) {
    std::vector<Vec> vs;
    for (const auto& a : s.basis())
        for (const auto& b : t.basis())
            vs.push_back(l.bracket(a, b));
    return Subspace::span(l.dim(), vs);
}

Subspace center(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    // x central iff ad(e_j) x = 0 for all j; stack the ad(e_j) blocks.
    Matrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m(j * n + r, c) = l.ad(j)(r, c);
    return kernel_of(m);
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) { return s.contains(bracket_span(l, s, s)); }

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
    return s.contains(bracket_span(l, Subspace::whole(l.dim()), s));
}

namespace {

template <class Next>
Series run_series(const LieAlgebra& l, Next next) {
    Series out;
    out.terms.push_back(Subspace::whole(l.dim()));
    while (true) {
        if (out.terms.back().is_zero()) {
            out.step = out.terms.size() - 1;
            break;
        }
        Subspace t = next(out.terms.back());
        if (t == out.terms.back())
            break;  // stabilized at a nonzero term
        out.terms.push_back(std::move(t));
    }
    return out;
}

}  // namespace

Series derived_series(const LieAlgebra& l) {
    return run_series(l, [&](const Subspace& prev) { return bracket_span(l, prev, prev); });
}

Series lower_central_series(const LieAlgebra& l) {
    const Subspace g = Subspace::whole(l.dim());
    return run_series(l, [&](const Subspace& prev) { return bracket_span(l, g, prev); });
}

std::vector<BilinearForm> invariant_forms(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    // Unknowns: upper-triangular entries b_{pq}, p <= q.
    std::vector<std::vector<std::size_t>> var(n, std::vector<std::size_t>(n));
    std::size_t nv = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q)
            var[p][q] = var[q][p] = nv++;

    std::vector<Vec> rows;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = y; z < n; ++z) {
                // B([x,y],z) + B(y,[x,z]) = sum_k c_xy^k b_kz + sum_k c_xz^k b_yk
                Vec row(nv);
                const Vec xy = l.bracket(x, y);
                const Vec xz = l.bracket(x, z);
                for (std::size_t k = 0; k < n; ++k) {
                    if (!is_zero(xy[k]))
                        row[var[k][z]] += xy[k];
                    if (!is_zero(xz[k]))
                        row[var[y][k]] += xz[k];
                }
                if (!is_zero(row))
                    rows.push_back(std::move(row));
            }

    std::vector<Vec> sols;
    if (rows.empty()) {
        for (std::size_t v = 0; v < nv; ++v)
            sols.push_back(unit_vec(nv, v));
    } else {
        sols = nullspace(Matrix::from_rows(rows));
    }
    const Subspace canon = Subspace::span(nv, sols);

    std::vector<BilinearForm> out;
    for (const auto& s : canon.basis()) {
        Matrix g(n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                g(p, q) = s[var[p][q]];
        out.emplace_back(std::move(g));
    }
    return out;
}

LieAlgebra restrict_to(const LieAlgebra& l, const Subspace& s) {
    if (!is_subalgebra(l, s))
        throw Error(ErrorKind::precondition, "restrict_to: subspace is not a subalgebra");
    std::vector<BracketEntry> entries;
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            const auto c = s.coordinates(l.bracket(b[i], b[j]));
            for (std::size_t k = 0; k < b.size(); ++k)
                if (!is_zero((*c)[k]))
                    entries.push_back({i, j, k, (*c)[k]});
        }
    return LieAlgebra(b.size(), {}, entries);
}

BilinearForm killing_form(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            g(i, j) = g(j, i) = trace(l.ad(i) * l.ad(j));
    return BilinearForm(std::move(g));
}

}  // namespace adinvar
