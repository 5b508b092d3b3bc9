#include "adinvar/double_extension.hpp"

#include "adinvar/error.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace adinvar {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

Check invariance_check(const std::string& name, const LieAlgebra& l, const BilinearForm& b) {
    Check c;
    c.name = name;
    const std::size_t n = l.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (!is_zero(b(l.bracket(x, y), unit_vec(n, z)) + b(unit_vec(n, y), l.bracket(x, z))))
                    c.fail({x, y, z});
    return c;
}

Check jacobi_check(const std::string& name, const LieAlgebra& l) {
    Check c;
    c.name = name;
    for (const auto& v : check_jacobi(l))
        c.fail({v.i, v.j, v.k});
    return c;
}

/// Accumulates structure constants keyed by (i, j, k), i < j.
class EntryBuilder {
public:
    void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        if (is_zero(v))
            return;
        if (i == j)
            return;
        if (i > j)
            acc_[{j, i, k}] -= v;
        else
            acc_[{i, j, k}] += v;
    }
    std::vector<BracketEntry> entries() const {
        std::vector<BracketEntry> out;
        for (const auto& [key, v] : acc_)
            if (!is_zero(v))
                out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), v});
        return out;
    }

private:
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> acc_;
};

std::vector<std::string> default_dual_names(const ExtensionData& data) {
    if (!data.dual_names.empty())
        return data.dual_names;
    std::vector<std::string> out;
    for (const auto& n : data.h.algebra.names())
        out.push_back(n + "*");
    return out;
}

}  // namespace

std::vector<Diagnostic> validate(const ExtensionData& data, bool require_nondegenerate_h) {
    std::vector<Diagnostic> out;
    const LieAlgebra& d = data.d.algebra;
    const LieAlgebra& h = data.h.algebra;
    const std::size_t n = d.dim();
    const std::size_t m = h.dim();

    if (!check_jacobi(d).empty())
        out.push_back({"d.jacobi", "the bracket on d violates the Jacobi identity"});
    if (!check_jacobi(h).empty())
        out.push_back({"h.jacobi", "the bracket on h violates the Jacobi identity"});

    const bool d_shape = data.d.form.dim() == n;
    const bool h_shape = data.h.form.dim() == m;
    if (!d_shape)
        out.push_back({"d.metric.shape", "metric on d has size " + std::to_string(data.d.form.dim()) +
                                             ", expected " + std::to_string(n)});
    if (!h_shape)
        out.push_back({"h.form.shape", "form on h has size " + std::to_string(data.h.form.dim()) + ", expected " +
                                           std::to_string(m)});
    if (d_shape) {
        if (!data.d.form.nondegenerate())
            out.push_back({"d.metric.nondegenerate", "metric on d is degenerate"});
        if (!ad_invariant(d, data.d.form))
            out.push_back({"d.metric.ad_invariant", "metric on d is not ad-invariant"});
    }
    if (h_shape) {
        if (!ad_invariant(h, data.h.form))
            out.push_back({"h.form.ad_invariant", "form on h is not ad-invariant"});
        if (require_nondegenerate_h && !data.h.form.nondegenerate())
            out.push_back({"h.form.nondegenerate", "form on h is degenerate, so ell: h -> h* is not invertible"});
    }
    if (!data.dual_names.empty() && data.dual_names.size() != m)
        out.push_back({"dual_names.count", "expected " + std::to_string(m) + " names for the h* basis"});

    if (data.pi.size() != m) {
        out.push_back({"pi.count", "expected one matrix per basis element of h (" + std::to_string(m) + "), got " +
                                       std::to_string(data.pi.size())});
        return out;
    }
    bool shapes_ok = true;
    for (std::size_t a = 0; a < m; ++a) {
        const Matrix& p = data.pi[a];
        if (p.rows() != n || p.cols() != n) {
            out.push_back({"pi[" + idx(a) + "].shape", "expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                                           " matrix"});
            shapes_ok = false;
            continue;
        }
        if (d_shape && !is_skew(p, data.d.form))
            out.push_back({"pi[" + idx(a) + "].skew", "pi(h_" + idx(a) + ") is not skew with respect to <,>_d"});
        if (!is_derivation(d, p))
            out.push_back({"pi[" + idx(a) + "].derivation", "pi(h_" + idx(a) + ") is not a derivation of d"});
    }
    if (!shapes_ok)
        return out;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            Matrix lhs(n, n);
            const Vec hb = h.bracket(a, b);
            for (std::size_t k = 0; k < m; ++k)
                if (!is_zero(hb[k]))
                    lhs = lhs + hb[k] * data.pi[k];
            if (lhs != commutator(data.pi[a], data.pi[b]))
                out.push_back({"pi.homomorphism(" + idx(a) + "," + idx(b) + ")",
                               "pi([h_" + idx(a) + ",h_" + idx(b) + "]) differs from [pi(h_" + idx(a) + "),pi(h_" +
                                   idx(b) + ")]"});
        }
    return out;
}

namespace {
[[noreturn]] void throw_diagnostics(const std::vector<Diagnostic>& diags) {
    std::ostringstream os;
    os << "invalid extension data:";
    for (const auto& dg : diags)
        os << "\n  " << dg.name << ": " << dg.detail;
    throw Error(ErrorKind::invalid_representation, os.str());
}
}  // namespace

Representation::Representation(ExtensionData data) : data_(std::move(data)) {
    const auto diags = validate(data_, false);
    if (!diags.empty())
        throw_diagnostics(diags);
    data_.dual_names = default_dual_names(data_);
}

Matrix Representation::operator()(const Vec& h) const {
    if (h.size() != h_dim())
        throw Error(ErrorKind::dimension_mismatch, "pi: vector length differs from dim h");
    Matrix r(d_dim(), d_dim());
    for (std::size_t a = 0; a < h.size(); ++a)
        if (!is_zero(h[a]))
            r = r + h[a] * data_.pi[a];
    return r;
}

DoubleExtension double_extend(const Representation& rep) {
    const LieAlgebra& h = rep.h_alg();
    const LieAlgebra& d = rep.d_alg();
    const std::size_t m = h.dim();
    const std::size_t n = d.dim();
    const std::size_t total = 2 * m + n;
    const std::size_t d0 = m;
    const std::size_t e0 = m + n;

    EntryBuilder eb;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            const Vec c = h.bracket(a, b);
            for (std::size_t k = 0; k < m; ++k)
                eb.add(a, b, k, c[k]);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                eb.add(a, d0 + i, d0 + k, rep.mats()[a](k, i));
        // coadjoint action: [h_a, eps^j] = -sum_b c_ab^j eps^b
        for (std::size_t b = 0; b < m; ++b) {
            const Vec c = h.bracket(a, b);
            for (std::size_t j = 0; j < m; ++j)
                eb.add(a, e0 + j, e0 + b, -c[j]);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec c = d.bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                eb.add(d0 + i, d0 + j, d0 + k, c[k]);
            for (std::size_t k = 0; k < m; ++k)
                eb.add(d0 + i, d0 + j, e0 + k, rep.d_metric()(rep.mats()[k].col(i), unit_vec(n, j)));
        }

    std::vector<std::string> names = h.names();
    names.insert(names.end(), d.names().begin(), d.names().end());
    names.insert(names.end(), rep.data().dual_names.begin(), rep.data().dual_names.end());

    Matrix q(total, total);
    Matrix qm(total, total);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            q(a, b) = rep.h_form()(a, b);
            qm(a, b) = -rep.h_form()(a, b);
        }
        q(a, e0 + a) = q(e0 + a, a) = qm(a, e0 + a) = qm(e0 + a, a) = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q(d0 + i, d0 + j) = qm(d0 + i, d0 + j) = rep.d_metric()(i, j);

    DoubleExtension x{rep,
                      LieAlgebra(total, names, eb.entries()),
                      BilinearForm(q),
                      BilinearForm(qm),
                      Subspace::coordinate_block(total, 0, m),
                      Subspace::coordinate_block(total, d0, n),
                      Subspace::coordinate_block(total, e0, m)};
    require_jacobi(x.g, "double_extend");
    return x;
}

GdAlgebra::GdAlgebra(Representation rep) : rep_(std::move(rep)) {
    const auto diags = validate(rep_.data(), true);
    if (!diags.empty()) {
        for (const auto& dg : diags)
            if (dg.name == "h.form.nondegenerate")
                throw Error(ErrorKind::degenerate_form, "build_gd: " + dg.detail);
        throw_diagnostics(diags);
    }
    const std::size_t n = d_dim();
    const std::size_t m = h_dim();
    ell_ = rep_.h_form().gram();
    ell_inv_ = *inverse(ell_);

    beta_table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            beta_table_[i * n + j] = beta_star(unit_vec(n, i), unit_vec(n, j));

    EntryBuilder eb;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec c = rep_.d_alg().bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                eb.add(i, j, k, c[k]);
            const Vec& b = beta_table(i, j);
            for (std::size_t a = 0; a < m; ++a)
                eb.add(i, j, n + a, b[a]);
        }
    std::vector<std::string> names = rep_.d_alg().names();
    names.insert(names.end(), rep_.data().dual_names.begin(), rep_.data().dual_names.end());
    algebra_ = LieAlgebra(n + m, names, eb.entries());
    require_jacobi(algebra_, "build_gd");
    metric_ = direct_sum(rep_.d_metric(), rep_.h_form());

    for (std::size_t a = 0; a < m; ++a)
        mu_.push_back(direct_sum(rep_.mats()[a], rep_.h_alg().ad(a)));
    d_block_ = Subspace::coordinate_block(n + m, 0, n);
    dual_block_ = Subspace::coordinate_block(n + m, n, m);
}

Vec GdAlgebra::beta_values(const Vec& x, const Vec& y) const {
    Vec r(h_dim());
    for (std::size_t a = 0; a < h_dim(); ++a)
        r[a] = rep_.d_metric()(rep_.mats()[a] * x, y);
    return r;
}

Vec GdAlgebra::beta_star(const Vec& x, const Vec& y) const { return ell_inv_ * beta_values(x, y); }

Matrix GdAlgebra::mu(const Vec& h) const {
    if (h.size() != h_dim())
        throw Error(ErrorKind::dimension_mismatch, "mu: vector length differs from dim h");
    Matrix r(dim(), dim());
    for (std::size_t a = 0; a < h_dim(); ++a)
        if (!is_zero(h[a]))
            r = r + h[a] * mu_[a];
    return r;
}

Vec GdAlgebra::from_d(const Vec& x) const {
    if (x.size() != d_dim())
        throw Error(ErrorKind::dimension_mismatch, "from_d: vector length differs from dim d");
    return concat(x, zero_vec(h_dim()));
}

Vec GdAlgebra::from_dual(const Vec& h) const {
    if (h.size() != h_dim())
        throw Error(ErrorKind::dimension_mismatch, "from_dual: vector length differs from dim h");
    return concat(zero_vec(d_dim()), h);
}

Vec GdAlgebra::d_part(const Vec& v) const { return Vec(v.begin(), v.begin() + static_cast<long>(d_dim())); }

Vec GdAlgebra::dual_part(const Vec& v) const { return Vec(v.begin() + static_cast<long>(d_dim()), v.end()); }

GdAlgebra build_gd(const Representation& rep) { return GdAlgebra(rep); }

Matrix mu(const GdAlgebra& gd, const Vec& h) { return gd.mu(h); }

Matrix lambda_map(const GdAlgebra& gd, const DoubleExtension& x) {
    if (x.h_dim() != gd.h_dim() || x.d_dim() != gd.d_dim() || !(x.rep.h_form() == gd.rep().h_form()))
        throw Error(ErrorKind::precondition, "lambda_map: double extension built from different data");
    const std::size_t m = gd.h_dim();
    const std::size_t n = gd.d_dim();
    Matrix l(2 * m + n, n + m);
    for (std::size_t i = 0; i < n; ++i)
        l(m + i, i) = 1;
    for (std::size_t a = 0; a < m; ++a) {
        l(a, n + a) = 1;
        for (std::size_t j = 0; j < m; ++j)
            l(m + n + j, n + a) = gd.ell()(j, a);
    }
    return l;
}

std::vector<Check> verify_double_extension(const DoubleExtension& x) {
    std::vector<Check> out;
    out.push_back(jacobi_check("extension.jacobi", x.g));
    out.push_back(invariance_check("extension.q_ad_invariant", x.g, x.q));
    out.push_back(invariance_check("extension.q_minus_ad_invariant", x.g, x.q_minus));

    Signature expected = x.rep.d_metric().signature();
    expected.negative += x.h_dim();
    expected.positive += x.h_dim();
    const Signature got = x.q.signature();
    std::ostringstream note;
    note << "(" << got.negative << "," << got.positive << "," << got.zero << ")";
    out.push_back(Check::from_bool("extension.signature", got == expected, note.str()));

    out.push_back(Check::from_bool("extension.h_subalgebra", is_subalgebra(x.g, x.h_part)));
    out.push_back(Check::from_bool("extension.gd_ideal", is_ideal(x.g, x.d_part + x.dual_part)));
    return out;
}

std::vector<Check> verify_gd(const GdAlgebra& gd) {
    std::vector<Check> out;
    const LieAlgebra& l = gd.algebra();
    const std::size_t n = gd.d_dim();
    const std::size_t m = gd.h_dim();
    out.push_back(jacobi_check("gd.jacobi", l));

    Check blocks;
    blocks.name = "gd.metric_blocks";
    for (std::size_t i = 0; i < n + m; ++i)
        for (std::size_t j = 0; j < n + m; ++j) {
            Scalar want = 0;
            if (i < n && j < n)
                want = gd.rep().d_metric()(i, j);
            else if (i >= n && j >= n)
                want = gd.rep().h_form()(i - n, j - n);
            if (gd.metric()(i, j) != want)
                blocks.fail({i, j});
        }
    out.push_back(blocks);

    Check central;
    central.name = "gd.dual_central";
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < n + m; ++i)
            if (!is_zero(l.bracket(n + a, i)))
                central.fail({n + a, i});
    out.push_back(central);

    Check pairing;
    pairing.name = "gd.pairing_relation";
    Check transfer;
    transfer.name = "gd.beta_transfer";
    for (std::size_t a = 0; a < m; ++a) {
        const Matrix& p = gd.rep().mats()[a];
        const Matrix& ad = gd.rep().h_alg().ad(a);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar lhs = gd.metric()(unit_vec(n + m, n + a), l.bracket(i, j));
                if (lhs != gd.rep().d_metric()(p.col(i), unit_vec(n, j)))
                    pairing.fail({a, i, j});
                const Vec want = gd.beta_star(p.col(i), unit_vec(n, j)) + gd.beta_star(unit_vec(n, i), p.col(j));
                if (ad * gd.beta_table(i, j) != want)
                    transfer.fail({a, i, j});
            }
    }
    out.push_back(pairing);
    out.push_back(transfer);

    Check deriv;
    deriv.name = "gd.mu_derivation";
    Check skew;
    skew.name = "gd.mu_skew";
    Check hom;
    hom.name = "gd.mu_homomorphism";
    for (std::size_t a = 0; a < m; ++a) {
        if (!is_derivation(l, gd.mu(a)))
            deriv.fail({a});
        if (!is_skew(gd.mu(a), gd.metric()))
            skew.fail({a});
        for (std::size_t b = a + 1; b < m; ++b)
            if (gd.mu(gd.rep().h_alg().bracket(a, b)) != commutator(gd.mu(a), gd.mu(b)))
                hom.fail({a, b});
    }
    out.push_back(deriv);
    out.push_back(skew);
    out.push_back(hom);
    return out;
}

std::vector<Check> verify_lambda(const GdAlgebra& gd, const DoubleExtension& x) {
    std::vector<Check> out;
    const Matrix lam = lambda_map(gd, x);
    const Matrix transfer = lam.transposed() * x.q_minus.gram() * lam;
    Check iso;
    iso.name = "lambda.isometry";
    for (std::size_t i = 0; i < gd.dim(); ++i)
        for (std::size_t j = 0; j < gd.dim(); ++j)
            if (transfer(i, j) != gd.metric()(i, j))
                iso.fail({i, j});
    out.push_back(iso);
    out.push_back(Check::from_bool("lambda.injective", rank(lam) == gd.dim()));
    out.push_back(
        Check::from_bool("lambda.image_is_m", image_of(lam) == orthogonal_complement(x.h_part, x.q_minus)));
    return out;
}

bool ReductiveSplit::naturally_reductive() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

ReductiveSplit reductive_split(const LieAlgebra& g, const BilinearForm& q, const Subspace& h) {
    if (q.dim() != g.dim() || h.ambient() != g.dim())
        throw Error(ErrorKind::dimension_mismatch, "reductive_split: dimensions differ");
    if (!nondegenerate_on(h, q))
        throw Error(ErrorKind::degenerate_form, "reductive_split: the form is degenerate on h");
    ReductiveSplit s{h, orthogonal_complement(h, q), {}};
    s.checks.push_back(Check::from_bool("reductive.h_subalgebra", is_subalgebra(g, h)));

    const auto& hb = h.basis();
    const auto& mb = s.m.basis();
    Check preserve;
    preserve.name = "reductive.h_preserves_m";
    for (std::size_t a = 0; a < hb.size(); ++a)
        for (std::size_t b = 0; b < mb.size(); ++b)
            if (!s.m.contains(g.bracket(hb[a], mb[b])))
                preserve.fail({a, b});
    s.checks.push_back(preserve);

    Check nat;
    nat.name = "reductive.naturally_reductive";
    const std::size_t p = mb.size();
    std::vector<Vec> proj(p * p);
    for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < p; ++y)
            proj[x * p + y] = decompose(g.bracket(mb[x], mb[y]), s.m, h).first;
    for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < p; ++y)
            for (std::size_t z = 0; z < p; ++z)
                if (!is_zero(q(proj[x * p + y], mb[z]) + q(mb[y], proj[x * p + z])))
                    nat.fail({x, y, z});
    s.checks.push_back(nat);
    return s;
}

ReductiveSplit reductive_split(const DoubleExtension& x) { return reductive_split(x.g, x.q_minus, x.h_part); }

namespace {
void require_reductive(const LieAlgebra& g, const Subspace& h, const Subspace& m, const char* who) {
    if (h.ambient() != g.dim() || m.ambient() != g.dim())
        throw Error(ErrorKind::dimension_mismatch, std::string(who) + ": subspace ambient dimension differs");
    if (!intersect(h, m).is_zero() || h.dim() + m.dim() != g.dim())
        throw Error(ErrorKind::precondition, std::string(who) + ": h and m are not complementary");
    for (const auto& a : h.basis())
        for (const auto& b : m.basis())
            if (!m.contains(g.bracket(a, b)))
                throw Error(ErrorKind::precondition, std::string(who) + ": [h,m] is not contained in m");
}

std::string describe(const std::vector<Vec>& vs) {
    std::ostringstream os;
    os << "span{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        os << (i ? ", " : "") << "(";
        for (std::size_t k = 0; k < vs[i].size(); ++k)
            os << (k ? "," : "") << to_string(vs[i][k]);
        os << ")";
    }
    os << "}";
    return os.str();
}
}  // namespace

KostantForm kostant_form(const LieAlgebra& g, const Subspace& h, const Subspace& m, const BilinearForm& inner) {
    require_reductive(g, h, m, "kostant_form");
    if (inner.dim() != m.dim())
        throw Error(ErrorKind::dimension_mismatch, "kostant_form: inner product size differs from dim m");

    KostantForm out;
    out.gbar = m + bracket_span(g, m, m);
    out.isotropy = intersect(h, out.gbar);
    const auto& kb = out.isotropy.basis();
    const auto& mb = m.basis();
    const std::size_t r = kb.size();
    const std::size_t p = mb.size();

    // h-parts [y_a, y_b]_h in isotropy coordinates
    std::vector<Vec> sigma;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<Vec> spanning;
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) {
            if (a == b)
                continue;
            const Vec hpart = decompose(g.bracket(mb[a], mb[b]), m, h).second;
            auto c = out.isotropy.coordinates(hpart);
            if (!c)
                throw Error(ErrorKind::internal, "kostant_form: h-part of [m,m] outside h intersected with gbar");
            sigma.push_back(*c);
            pairs.emplace_back(a, b);
            spanning.push_back(hpart);
        }
    const Subspace s_span = Subspace::span(g.dim(), spanning);
    if (s_span != out.isotropy) {
        std::vector<Vec> missing;
        Subspace acc = s_span;
        for (const auto& v : kb)
            if (!acc.contains(v)) {
                missing.push_back(v);
                acc = acc + Subspace::span(g.dim(), {v});
            }
        throw Error(ErrorKind::precondition,
                    "kostant_form: h-parts of brackets of m do not span h intersected with gbar; uncovered " +
                        describe(missing));
    }

    // unknowns P(s,t), s <= t
    std::vector<std::vector<std::size_t>> var(r, std::vector<std::size_t>(r));
    std::size_t nvars = 0;
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = s; t < r; ++t)
            var[s][t] = var[t][s] = nvars++;

    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        const auto [a, b] = pairs[e];
        for (std::size_t t = 0; t < r; ++t) {
            Vec row(nvars);
            for (std::size_t s = 0; s < r; ++s)
                row[var[s][t]] += sigma[e][s];
            const auto yk = m.coordinates(g.bracket(mb[a], kb[t]));
            if (!yk)
                throw Error(ErrorKind::precondition, "kostant_form: [m, h] is not contained in m");
            rows.push_back(std::move(row));
            rhs.push_back(-inner(*yk, unit_vec(p, b)));
        }
    }
    out.equations = rows.size();
    Vec solution(nvars);
    if (nvars > 0) {
        const auto sol = solve(Matrix::from_rows(rows), rhs);
        if (!sol)
            throw Error(ErrorKind::not_naturally_reductive, "kostant_form: not naturally reductive data");
        solution = *sol;
    }

    std::vector<Vec> cols(kb.begin(), kb.end());
    cols.insert(cols.end(), mb.begin(), mb.end());
    out.basis = Matrix::from_columns(cols, g.dim());
    Matrix gram(r + p, r + p);
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = 0; t < r; ++t)
            gram(s, t) = solution[var[s][t]];
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            gram(r + a, r + b) = inner(a, b);
    out.q = BilinearForm(gram);

    // ad-invariance on gbar in the (isotropy | m) basis
    const std::size_t q = r + p;
    std::vector<Vec> coords(q * q);
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v) {
            const auto c = solve(out.basis, g.bracket(cols[u], cols[v]));
            if (!c)
                throw Error(ErrorKind::internal, "kostant_form: gbar is not closed under the bracket");
            coords[u * q + v] = *c;
        }
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v)
            for (std::size_t w = 0; w < q; ++w)
                if (!is_zero(out.q(coords[u * q + v], unit_vec(q, w)) + out.q(unit_vec(q, v), coords[u * q + w])))
                    throw Error(ErrorKind::not_naturally_reductive,
                                "kostant_form: not naturally reductive data (reconstructed form is not ad-invariant)");

    Matrix pgram(r, r);
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = 0; t < r; ++t)
            pgram(s, t) = gram(s, t);
    out.nondegenerate_on_isotropy = r == 0 || BilinearForm(pgram).nondegenerate();
    return out;
}

CanonicalConnection canonical_connection(const LieAlgebra& g, const Subspace& h, const Subspace& m) {
    require_reductive(g, h, m, "canonical_connection");
    const auto& mb = m.basis();
    const std::size_t p = mb.size();
    CanonicalConnection c{Tensor3(p), Tensor4(p)};
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) {
            const auto [mpart, hpart] = decompose(g.bracket(mb[a], mb[b]), m, h);
            c.torsion.set(a, b, -*m.coordinates(mpart));
            for (std::size_t e = 0; e < p; ++e)
                c.curvature.set(a, b, -*m.coordinates(g.bracket(hpart, mb[e])), e);
        }
    return c;
}

}  // namespace adinvar
