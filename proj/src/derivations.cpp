#include "adinvar/derivations.hpp"

#include "adinvar/error.hpp"
#include "adinvar/parallel.hpp"

namespace adinvar {

namespace {

Vec flatten(const Matrix& m) { return m.flat(); }

std::vector<Matrix> matrices_from(const std::vector<Vec>& flats, std::size_t rows, std::size_t cols) {
    std::vector<Matrix> out;
    for (const auto& f : flats)
        out.push_back(Matrix::from_flat(rows, cols, f));
    return out;
}

/// Leibniz equations D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] = 0 on the unknown
/// D (flattened row-major), starting at column `offset` of a row of width `width`.
void derivation_rows(const LieAlgebra& l, std::size_t offset, std::size_t width, std::vector<Vec>& rows) {
    const std::size_t n = l.dim();
    const auto var = [&](std::size_t r, std::size_t c) { return offset + r * n + c; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec cij = l.bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec row(width);
                for (std::size_t m = 0; m < n; ++m)
                    if (!is_zero(cij[m]))
                        row[var(k, m)] += cij[m];
                for (std::size_t r = 0; r < n; ++r) {
                    const Scalar& crj = l.ad(r)(k, j);  // coefficient of e_k in [e_r, e_j]
                    if (!is_zero(crj))
                        row[var(r, i)] -= crj;
                    const Scalar& cir = l.ad(i)(k, r);  // coefficient of e_k in [e_i, e_r]
                    if (!is_zero(cir))
                        row[var(r, j)] -= cir;
                }
                if (!is_zero(row))
                    rows.push_back(std::move(row));
            }
        }
}

/// (B X + X^T B)(p,q) = 0 for p <= q.
void skew_rows(const BilinearForm& b, std::size_t offset, std::size_t width, std::vector<Vec>& rows) {
    const std::size_t n = b.dim();
    const auto var = [&](std::size_t r, std::size_t c) { return offset + r * n + c; };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q) {
            Vec row(width);
            for (std::size_t r = 0; r < n; ++r) {
                row[var(r, q)] += b(p, r);
                row[var(r, p)] += b(r, q);
            }
            if (!is_zero(row))
                rows.push_back(std::move(row));
        }
}

/// X ops[k] - ops[k] X = 0.
void commute_rows(const Matrix& op, std::size_t offset, std::size_t width, std::vector<Vec>& rows) {
    const std::size_t n = op.rows();
    const auto var = [&](std::size_t r, std::size_t c) { return offset + r * n + c; };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Vec row(width);
            for (std::size_t r = 0; r < n; ++r) {
                row[var(p, r)] += op(r, q);
                row[var(r, q)] -= op(p, r);
            }
            if (!is_zero(row))
                rows.push_back(std::move(row));
        }
}

std::vector<Vec> solve_homogeneous(const std::vector<Vec>& rows, std::size_t width) {
    if (rows.empty()) {
        std::vector<Vec> out;
        for (std::size_t v = 0; v < width; ++v)
            out.push_back(unit_vec(width, v));
        return out;
    }
    return nullspace(Matrix::from_rows(rows));
}

}  // namespace

MatrixLieAlgebra::MatrixLieAlgebra(std::size_t n, const std::vector<Matrix>& spanning) : n_(n), span_(n * n) {
    std::vector<Vec> flats;
    for (const auto& m : spanning) {
        if (m.rows() != n || m.cols() != n)
            throw Error(ErrorKind::dimension_mismatch, "MatrixLieAlgebra: matrix shape differs from ambient size");
        flats.push_back(flatten(m));
    }
    span_ = Subspace::span(n * n, flats);
    basis_ = matrices_from(span_.basis(), n, n);
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j) {
            const auto c = span_.coordinates(flatten(commutator(basis_[i], basis_[j])));
            if (!c)
                throw Error(ErrorKind::internal, "MatrixLieAlgebra: span is not closed under commutators");
            for (std::size_t k = 0; k < basis_.size(); ++k)
                if (!is_zero((*c)[k]))
                    entries.push_back({i, j, k, (*c)[k]});
        }
    abstract_ = LieAlgebra(basis_.size(), {}, entries);
}

bool MatrixLieAlgebra::contains(const Matrix& m) const {
    return m.rows() == n_ && m.cols() == n_ && span_.contains(flatten(m));
}

std::optional<Vec> MatrixLieAlgebra::coordinates(const Matrix& m) const {
    if (m.rows() != n_ || m.cols() != n_)
        return std::nullopt;
    return span_.coordinates(flatten(m));
}

MatrixLieAlgebra derivation_algebra(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    std::vector<Vec> rows;
    derivation_rows(l, 0, n * n, rows);
    return MatrixLieAlgebra(n, matrices_from(solve_homogeneous(rows, n * n), n, n));
}

MatrixLieAlgebra skew_derivations(const LieAlgebra& l, const BilinearForm& b) {
    const std::size_t n = l.dim();
    if (b.dim() != n)
        throw Error(ErrorKind::dimension_mismatch, "skew_derivations: form and algebra dimensions differ");
    std::vector<Vec> rows;
    derivation_rows(l, 0, n * n, rows);
    skew_rows(b, 0, n * n, rows);
    return MatrixLieAlgebra(n, matrices_from(solve_homogeneous(rows, n * n), n, n));
}

MatrixLieAlgebra inner_derivations(const LieAlgebra& l) {
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < l.dim(); ++i)
        ads.push_back(l.ad(i));
    return MatrixLieAlgebra(l.dim(), ads);
}

MatrixLieAlgebra intertwiners_skew(const std::vector<Matrix>& ops, const BilinearForm& b) {
    const std::size_t n = b.dim();
    std::vector<Vec> rows;
    for (const auto& op : ops) {
        if (op.rows() != n || op.cols() != n)
            throw Error(ErrorKind::dimension_mismatch, "intertwiners_skew: operator shape differs from form size");
        commute_rows(op, 0, n * n, rows);
    }
    skew_rows(b, 0, n * n, rows);
    return MatrixLieAlgebra(n, matrices_from(solve_homogeneous(rows, n * n), n, n));
}

MatrixLieAlgebra intertwiners_skew(const Representation& rep) { return intertwiners_skew(rep.mats(), rep.d_metric()); }

SoAut so_aut(const GdAlgebra& gd) {
    const std::size_t m = gd.h_dim();
    const std::size_t n = gd.d_dim();
    const std::size_t width = m * m + n * n;
    const std::size_t b_off = m * m;
    std::vector<Vec> rows;
    skew_rows(gd.rep().h_form(), 0, width, rows);
    derivation_rows(gd.rep().d_alg(), b_off, width, rows);
    skew_rows(gd.rep().d_metric(), b_off, width, rows);
    // [B, pi_j] - sum_k A(k,j) pi_k = 0
    const auto& pis = gd.rep().mats();
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                Vec row(width);
                for (std::size_t r = 0; r < n; ++r) {
                    row[b_off + p * n + r] += pis[j](r, q);
                    row[b_off + r * n + q] -= pis[j](p, r);
                }
                for (std::size_t k = 0; k < m; ++k)
                    row[k * m + j] -= pis[k](p, q);
                if (!is_zero(row))
                    rows.push_back(std::move(row));
            }
    const auto sols = solve_homogeneous(rows, width);
    // canonicalize the solution space before splitting into pairs
    const Subspace s = Subspace::span(width, sols);
    SoAut out{{}, MatrixLieAlgebra(n + m, {})};
    std::vector<Matrix> ops;
    for (const auto& v : s.basis()) {
        Matrix a = Matrix::from_flat(m, m, Vec(v.begin(), v.begin() + static_cast<long>(b_off)));
        Matrix b = Matrix::from_flat(n, n, Vec(v.begin() + static_cast<long>(b_off), v.end()));
        ops.push_back(direct_sum(b, a));
        out.pairs.emplace_back(std::move(a), std::move(b));
    }
    out.operators = MatrixLieAlgebra(n + m, ops);
    return out;
}

std::vector<std::pair<Matrix, Matrix>> induced_pairs(const GdAlgebra& gd) {
    std::vector<std::pair<Matrix, Matrix>> out;
    for (std::size_t i = 0; i < gd.h_dim(); ++i)
        out.emplace_back(gd.rep().h_alg().ad(i), gd.rep().mats()[i]);
    return out;
}

bool so_aut_contains(const SoAut& s, const GdAlgebra& gd, const Matrix& a, const Matrix& b) {
    (void)gd;
    return s.operators.contains(direct_sum(b, a));
}

MatrixLieAlgebra block_skew_derivations(const GdAlgebra& gd) {
    const std::size_t n = gd.dim();
    const std::size_t nd = gd.d_dim();
    std::vector<Vec> rows;
    derivation_rows(gd.algebra(), 0, n * n, rows);
    skew_rows(gd.metric(), 0, n * n, rows);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if ((p < nd) != (q < nd)) {
                Vec row(n * n);
                row[p * n + q] = 1;
                rows.push_back(std::move(row));
            }
    return MatrixLieAlgebra(n, matrices_from(solve_homogeneous(rows, n * n), n, n));
}

Profile profile(const LieAlgebra& l) {
    Profile p;
    p.dim = l.dim();
    p.center_dim = center(l).dim();
    const Series ds = derived_series(l);
    const Series ls = lower_central_series(l);
    for (const auto& t : ds.terms)
        p.derived_dims.push_back(t.dim());
    for (const auto& t : ls.terms)
        p.lower_central_dims.push_back(t.dim());
    p.solvable_step = ds.step;
    p.nilpotent_step = ls.step;
    const BilinearForm k = killing_form(l);
    p.killing = k.signature();
    const Subspace derived = bracket_span(l, Subspace::whole(l.dim()), Subspace::whole(l.dim()));
    p.perfect = derived.dim() == l.dim();
    const Subspace rad = orthogonal_complement(derived, k);
    p.radical_dim = rad.dim();
    if (is_subalgebra(l, rad))
        p.radical_nilpotent_step = lower_central_series(restrict_to(l, rad)).step;
    return p;
}

Profile profile(const MatrixLieAlgebra& m) { return profile(m.abstract()); }

json profile_to_json(const Profile& p) {
    json j;
    j["dim"] = p.dim;
    j["center_dim"] = p.center_dim;
    j["derived_dims"] = p.derived_dims;
    j["lower_central_dims"] = p.lower_central_dims;
    j["solvable_step"] = p.solvable_step ? json(*p.solvable_step) : json(nullptr);
    j["nilpotent_step"] = p.nilpotent_step ? json(*p.nilpotent_step) : json(nullptr);
    j["killing_signature"] = {p.killing.negative, p.killing.positive, p.killing.zero};
    j["perfect"] = p.perfect;
    j["radical_dim"] = p.radical_dim;
    j["radical_nilpotent_step"] = p.radical_nilpotent_step ? json(*p.radical_nilpotent_step) : json(nullptr);
    return j;
}

bool equivalence_check(const LieAlgebra& d, const Matrix& a, const Matrix& b, const Scalar& lambda, const Vec& t,
                       const Matrix& phi) {
    const auto inv = inverse(phi);
    if (!inv)
        throw Error(ErrorKind::precondition, "equivalence_check: phi is singular");
    if (!is_derivation(d, a) || !is_derivation(d, b))
        throw Error(ErrorKind::precondition, "equivalence_check: A and B must be derivations of d");
    return phi * b * *inv == lambda * a + d.ad(t);
}

std::vector<FormSweepEntry> sweep_invariant_forms(const LieAlgebra& l, const std::vector<Scalar>& grid) {
    const auto basis = invariant_forms(l);
    const std::size_t k = basis.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= grid.size();
    std::vector<std::optional<FormSweepEntry>> slots(total);
    parallel_for(total, [&](std::size_t idx) {
        Vec coeff(k);
        std::size_t rest = idx;
        for (std::size_t i = k; i-- > 0;) {
            coeff[i] = grid[rest % grid.size()];
            rest /= grid.size();
        }
        Matrix g(l.dim(), l.dim());
        for (std::size_t i = 0; i < k; ++i)
            g = g + coeff[i] * basis[i].gram();
        BilinearForm form(g);
        if (!form.nondegenerate())
            return;
        const MatrixLieAlgebra sk = skew_derivations(l, form);
        slots[idx] = FormSweepEntry{coeff, form, sk.dim(), profile(sk)};
    });
    std::vector<FormSweepEntry> out;
    for (auto& s : slots)
        if (s)
            out.push_back(std::move(*s));
    return out;
}

}  // namespace adinvar
