#include "adinvar/geometry.hpp"

#include "adinvar/error.hpp"

namespace adinvar {

namespace {

Matrix require_inverse_metric(const BilinearForm& b, const char* who) {
    auto inv = inverse(b.gram());
    if (!inv)
        throw Error(ErrorKind::degenerate_form, std::string(who) + ": metric is degenerate");
    return *inv;
}

enum class Block { d, dual };

struct Pure {
    Block block;
    Vec x;  // d-coordinates
    Vec h;  // h-coordinates (ell-basis of h*)
};

Pure basis_part(const GdAlgebra& gd, std::size_t i) {
    const std::size_t n = gd.d_dim();
    if (i < n)
        return {Block::d, unit_vec(n, i), zero_vec(gd.h_dim())};
    return {Block::dual, zero_vec(n), unit_vec(gd.h_dim(), i - n)};
}

Vec dual_bracket(const GdAlgebra& gd, const Vec& h1, const Vec& h2) {
    return gd.rep().h_alg().bracket(h1, h2);
}

}  // namespace

Tensor3 levi_civita(const LieAlgebra& l, const BilinearForm& b) {
    if (b.dim() != l.dim())
        throw Error(ErrorKind::dimension_mismatch, "levi_civita: form and algebra dimensions differ");
    const Matrix ginv = require_inverse_metric(b, "levi_civita");
    const std::size_t n = l.dim();
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec w(n);
            for (std::size_t z = 0; z < n; ++z) {
                const Scalar s = b(l.bracket(i, j), unit_vec(n, z)) - b(l.bracket(j, z), unit_vec(n, i)) +
                                 b(l.bracket(z, i), unit_vec(n, j));
                w[z] = s / 2;
            }
            t.set(i, j, ginv * w);
        }
    return t;
}

Tensor3 levi_civita_gd(const GdAlgebra& gd) {
    const std::size_t n = gd.dim();
    const Scalar half(1, 2);
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Pure a = basis_part(gd, i);
        for (std::size_t j = 0; j < n; ++j) {
            const Pure b = basis_part(gd, j);
            Vec v = gd.algebra().bracket(i, j);
            v = v - gd.from_d(gd.pi(a.h) * b.x) - gd.from_d(gd.pi(b.h) * a.x);
            t.set(i, j, half * v);
        }
    }
    return t;
}

Tensor4 curvature(const Tensor3& nabla, const LieAlgebra& l) {
    const std::size_t n = l.dim();
    if (nabla.dim() != n)
        throw Error(ErrorKind::dimension_mismatch, "curvature: connection and algebra dimensions differ");
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < n; ++i)
        ops.push_back(nabla.op(i));
    Tensor4 r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix m = commutator(ops[i], ops[j]);
            const Vec c = l.bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(c[k]))
                    m = m - c[k] * ops[k];
            r.set_op(i, j, m);
        }
    return r;
}

namespace {

/// R(a, b) c for basis vectors lying in d or h*, by the closed-form cases.
Vec curvature_case(const GdAlgebra& gd, const Pure& a, const Pure& b, const Pure& c) {
    const LieAlgebra& dl = gd.rep().d_alg();
    const LieAlgebra& gl = gd.algebra();
    const Scalar q(1, 4);
    const Scalar half(1, 2);
    const auto beta = [&](const Vec& x, const Vec& y) { return gd.from_dual(gd.beta_star(x, y)); };
    const auto D = [&](const Vec& x) { return gd.from_d(x); };

    using B = Block;
    if (a.block == B::d && b.block == B::d && c.block == B::d) {
        const Vec& x = a.x;
        const Vec& y = b.x;
        const Vec& z = c.x;
        Vec r = D(half * (gd.pi(gd.beta_star(x, y)) * z) - q * (gd.pi(gd.beta_star(y, z)) * x) -
                  q * (gd.pi(gd.beta_star(z, x)) * y));
        return r - q * gl.bracket(D(dl.bracket(x, y)), D(z));
    }
    if (a.block == B::d && b.block == B::d && c.block == B::dual) {
        const Matrix p = gd.pi(c.h);
        return -q * beta(a.x, p * b.x) - q * beta(p * a.x, b.x) + D(q * (p * dl.bracket(a.x, b.x)));
    }
    if (a.block == B::d && b.block == B::dual && c.block == B::d) {
        const Matrix p = gd.pi(b.h);
        return -q * gl.bracket(D(a.x), D(p * c.x)) + D(q * (p * dl.bracket(a.x, c.x)));
    }
    if (a.block == B::dual && b.block == B::d && c.block == B::d)
        return -curvature_case(gd, b, a, c);
    if (a.block == B::d && b.block == B::dual && c.block == B::dual)
        return D(-q * (gd.pi(b.h) * (gd.pi(c.h) * a.x)));
    if (a.block == B::dual && b.block == B::d && c.block == B::dual)
        return -curvature_case(gd, b, a, c);
    if (a.block == B::dual && b.block == B::dual && c.block == B::d)
        return D(q * (gd.pi(dual_bracket(gd, a.h, b.h)) * c.x));
    return zero_vec(gd.dim());
}

}  // namespace

Tensor4 curvature_gd(const GdAlgebra& gd) {
    const std::size_t n = gd.dim();
    Tensor4 r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                r.set(i, j, curvature_case(gd, basis_part(gd, i), basis_part(gd, j), basis_part(gd, k)), k);
    return r;
}

Check curvature_relation_check(const GdAlgebra& gd, const Tensor4& r) {
    Check c;
    c.name = "geometry.curvature_relation";
    const std::size_t n = gd.d_dim();
    const LieAlgebra& dl = gd.rep().d_alg();
    const Scalar q(1, 4);
    const Scalar half(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
                const Vec xy = dl.bracket(x, y);
                const Vec dpart = half * (gd.pi(gd.beta_star(x, y)) * z) - q * (gd.pi(gd.beta_star(y, z)) * x) -
                                  q * (gd.pi(gd.beta_star(z, x)) * y) - q * dl.bracket(xy, z);
                const Vec want = gd.from_d(dpart) + gd.from_dual(q * gd.beta_star(z, xy));
                if (r.apply(i, j, k) != want)
                    c.fail({i, j, k});
            }
    return c;
}

Check bi_invariant_check(const LieAlgebra& l, const Tensor4& r) {
    Check c;
    c.name = "geometry.bi_invariant_identity";
    const std::size_t n = l.dim();
    const Scalar q(1, 4);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (r.apply(i, j, k) != -q * l.bracket(l.bracket(i, j), unit_vec(n, k)))
                    c.fail({i, j, k});
    return c;
}

Scalar plane_gram(const BilinearForm& b, const Vec& x, const Vec& y) {
    const Scalar xy = b(x, y);
    return b(x, x) * b(y, y) - xy * xy;
}

Scalar sectional(const Tensor4& r, const BilinearForm& b, const Vec& x, const Vec& y) {
    if (r.dim() != b.dim())
        throw Error(ErrorKind::dimension_mismatch, "sectional: tensor and form dimensions differ");
    const Scalar den = plane_gram(b, x, y);
    if (is_zero(den))
        throw Error(ErrorKind::degenerate_plane, "sectional: degenerate plane");
    return b(r.apply(x, y, y), x) / den;
}

Scalar sectional(const GdAlgebra& gd, const Vec& x, const Vec& y) {
    return sectional(curvature_gd(gd), gd.metric(), x, y);
}

Scalar sectional_gd_closed(const GdAlgebra& gd, const Vec& x, const Vec& y) {
    const BilinearForm& b = gd.metric();
    if (x.size() != gd.dim() || y.size() != gd.dim())
        throw Error(ErrorKind::dimension_mismatch, "sectional_gd_closed: vector length differs from dim G(d)");
    if (!is_zero(b(x, y)))
        throw Error(ErrorKind::precondition, "sectional_gd_closed: the vectors must be orthogonal");
    const Scalar den = b(x, x) * b(y, y);
    if (is_zero(den))
        throw Error(ErrorKind::degenerate_plane, "sectional_gd_closed: degenerate plane");
    const auto in_d = [&](const Vec& v) { return is_zero(gd.dual_part(v)); };
    const auto in_dual = [&](const Vec& v) { return is_zero(gd.d_part(v)); };
    const BilinearForm& bd = gd.rep().d_metric();
    const BilinearForm& bh = gd.rep().h_form();

    if (in_d(x) && in_d(y)) {
        const Vec xd = gd.d_part(x), yd = gd.d_part(y);
        const Vec br = gd.rep().d_alg().bracket(xd, yd);
        const Vec be = gd.beta_star(xd, yd);
        return (Scalar(1, 4) * bd(br, br) - Scalar(3, 4) * bh(be, be)) / den;
    }
    if (in_dual(x) && in_dual(y))
        return 0;
    const Vec& dvec = in_d(x) ? x : y;
    const Vec& hvec = in_d(x) ? y : x;
    if (!in_d(dvec) || !in_dual(hvec))
        throw Error(ErrorKind::precondition, "sectional_gd_closed: each vector must lie in d or in h*");
    const Vec v = gd.pi(gd.dual_part(hvec)) * gd.d_part(dvec);
    return Scalar(1, 4) * bd(v, v) / den;
}

std::vector<PlaneCurvature> coordinate_planes(const Tensor4& r, const BilinearForm& b) {
    std::vector<PlaneCurvature> out;
    const std::size_t n = b.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            PlaneCurvature p;
            p.i = i;
            p.j = j;
            const Vec x = unit_vec(n, i), y = unit_vec(n, j);
            p.degenerate = is_zero(plane_gram(b, x, y));
            if (!p.degenerate)
                p.k = sectional(r, b, x, y);
            out.push_back(std::move(p));
        }
    return out;
}

BilinearForm ricci(const Tensor4& r, const BilinearForm& b) {
    if (r.dim() != b.dim())
        throw Error(ErrorKind::dimension_mismatch, "ricci: tensor and form dimensions differ");
    if (!b.nondegenerate())
        throw Error(ErrorKind::degenerate_form, "ricci: metric is degenerate");
    const std::size_t n = b.dim();
    Matrix ric(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t l = 0; l < n; ++l)
                ric(x, y) += r.at(l, x, y, l);
    if (!ric.is_symmetric())
        throw Error(ErrorKind::internal, "ricci: Ricci tensor is not symmetric");
    return BilinearForm(ric);
}

Matrix ricci_operator(const Tensor4& r, const BilinearForm& b) {
    return require_inverse_metric(b, "ricci_operator") * ricci(r, b).gram();
}

namespace {
/// sum_i pi(w_i)^2 / c_i over an orthogonal basis w_i of h with norms c_i.
Matrix weighted_pi_square(const GdAlgebra& gd) {
    const OrthogonalBasis& ob = gd.rep().h_form().orthogonal_basis();
    const std::size_t n = gd.d_dim();
    Matrix p(n, n);
    for (std::size_t i = 0; i < ob.norms.size(); ++i) {
        const Matrix pw = gd.pi(ob.basis.col(i));
        p = p + (1 / ob.norms[i]) * (pw * pw);
    }
    return p;
}
}  // namespace

BilinearForm ricci_gd(const GdAlgebra& gd) {
    const std::size_t n = gd.d_dim();
    const std::size_t m = gd.h_dim();
    const LieAlgebra& dl = gd.rep().d_alg();
    const BilinearForm& bd = gd.rep().d_metric();
    const Matrix p2 = weighted_pi_square(gd);
    const Scalar q(1, 4);
    Matrix ric(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ric(i, j) = Scalar(1, 2) * bd(p2.col(i), unit_vec(n, j)) - q * trace(dl.ad(i) * dl.ad(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < m; ++a)
            ric(i, n + a) = ric(n + a, i) = -q * trace(gd.rep().mats()[a] * dl.ad(i));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            ric(n + a, n + b) = -q * trace(gd.rep().mats()[a] * gd.rep().mats()[b]);
    return BilinearForm(ric);
}

Matrix ricci_operator_gd(const GdAlgebra& gd) {
    const std::size_t n = gd.d_dim();
    const std::size_t m = gd.h_dim();
    const LieAlgebra& gl = gd.algebra();
    const OrthogonalBasis& od = gd.rep().d_metric().orthogonal_basis();
    const Matrix p2 = weighted_pi_square(gd);
    const Scalar q(1, 4);

    Matrix ad_sq(n + m, n + m);
    for (std::size_t j = 0; j < od.norms.size(); ++j) {
        const Matrix a = gl.ad(gd.from_d(od.basis.col(j)));
        ad_sq = ad_sq + (1 / od.norms[j]) * (a * a);
    }
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i)
        cols.push_back(gd.from_d(Scalar(1, 2) * p2.col(i)) - q * ad_sq.col(i));
    for (std::size_t a = 0; a < m; ++a) {
        Vec v = zero_vec(n + m);
        for (std::size_t j = 0; j < od.norms.size(); ++j) {
            const Vec dj = od.basis.col(j);
            axpy(v, 1 / od.norms[j], gl.bracket(gd.from_d(dj), gd.from_d(gd.rep().mats()[a] * dj)));
        }
        cols.push_back(q * v);
    }
    return Matrix::from_columns(cols, n + m);
}

bool geodesic_one_param(const GdAlgebra& gd, const Vec& xi) {
    if (xi.size() != gd.dim())
        throw Error(ErrorKind::dimension_mismatch, "geodesic_one_param: vector length differs from dim G(d)");
    return is_zero(gd.pi(gd.dual_part(xi)) * gd.d_part(xi));
}

Vec self_covariant_derivative(const Tensor3& nabla, const Vec& xi) { return nabla.apply(xi, xi); }

bool totally_geodesic(const LieAlgebra& l, const BilinearForm& b, const Subspace& s) {
    if (!is_subalgebra(l, s))
        throw Error(ErrorKind::precondition, "totally_geodesic: the subspace is not a subalgebra");
    const Tensor3 nabla = levi_civita(l, b);
    for (const auto& u : s.basis())
        for (const auto& v : s.basis())
            if (!s.contains(nabla.apply(u, v)))
                return false;
    return true;
}

Check pair_symmetry_check(const Tensor4& r, const BilinearForm& b) {
    Check c;
    c.name = "geometry.pair_symmetry";
    const std::size_t n = b.dim();
    // lowered[x][y][z][w] = <R(x,y)z, w>
    std::vector<Scalar> low(n * n * n * n);
    const auto at = [n](std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
        return ((x * n + y) * n + z) * n + w;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w) {
                    Scalar s = 0;
                    for (std::size_t l = 0; l < n; ++l)
                        s += r.at(x, y, z, l) * b(l, w);
                    low[at(x, y, z, w)] = s;
                }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w)
                    if (low[at(x, y, z, w)] != low[at(z, w, x, y)])
                        c.fail({x, y, z, w});
    return c;
}

bool check_pair_symmetry(const Tensor4& r, const BilinearForm& b) { return pair_symmetry_check(r, b).pass; }

Check torsion_free_check(const Tensor3& nabla, const LieAlgebra& l) {
    Check c;
    c.name = "geometry.torsion_free";
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nabla.apply(i, j) - nabla.apply(j, i) != l.bracket(i, j))
                c.fail({i, j});
    return c;
}

Check metric_connection_check(const Tensor3& nabla, const BilinearForm& b) {
    Check c;
    c.name = "geometry.metric_connection";
    const std::size_t n = b.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j; k < n; ++k)
                if (!is_zero(b(nabla.apply(i, j), unit_vec(n, k)) + b(unit_vec(n, j), nabla.apply(i, k))))
                    c.fail({i, j, k});
    return c;
}

Check tensor_equal_check(const std::string& name, const Tensor3& a, const Tensor3& b) {
    Check c;
    c.name = name;
    if (a.dim() != b.dim()) {
        c.fail({});
        c.note = "dimension mismatch";
        return c;
    }
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.at(i, j, k) != b.at(i, j, k))
                    c.fail({i, j, k});
    return c;
}

Check tensor_equal_check(const std::string& name, const Tensor4& a, const Tensor4& b) {
    Check c;
    c.name = name;
    if (a.dim() != b.dim()) {
        c.fail({});
        c.note = "dimension mismatch";
        return c;
    }
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (a.at(i, j, k, l) != b.at(i, j, k, l))
                        c.fail({i, j, k, l});
    return c;
}

}  // namespace adinvar
