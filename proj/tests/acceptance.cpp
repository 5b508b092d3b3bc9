// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic.
#include "adinvar/corpus.hpp"
#include "adinvar/derivations.hpp"
#include "adinvar/geometry.hpp"
#include "adinvar/hom_structure.hpp"
#include "adinvar/series_predict.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace adinvar;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

bool all_pass(const std::vector<Check>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.pass; });
}

std::string failing(const std::vector<Check>& cs) {
    std::string s;
    for (const auto& c : cs)
        if (!c.pass)
            s += (s.empty() ? "" : ",") + c.name;
    return s;
}

Outcome heisenberg_reconstruction() {
    Outcome o;
    std::set<std::vector<Scalar>> metrics;
    const std::vector<std::pair<MetricLieAlgebra, Matrix>> cases{{rpq(0, 2), t_plus()}, {rpq(1, 1), t_minus()}};
    for (const auto& [d, t] : cases)
        for (int z : {1, -1}) {
            const GdAlgebra gd{Representation({d, line(z), {t}, {}})};
            const Vec e3 = gd.algebra().bracket(0, 1);
            o.require(!is_zero(e3) && is_zero(gd.d_part(e3)), "[e1,e2] not a nonzero multiple of z");
            o.require(gd.algebra().bracket(0, 2) == Vec(3) && gd.algebra().bracket(1, 2) == Vec(3), "z not central");
            const BilinearForm& b = gd.metric();
            o.require(is_zero(b(unit_vec(3, 0), unit_vec(3, 1))) && is_zero(b(unit_vec(3, 0), e3)) &&
                          is_zero(b(unit_vec(3, 1), e3)),
                      "basis e1, e2, [e1,e2] not orthogonal");
            metrics.insert({b(0, 0), b(1, 1), b(e3, e3)});
            const DoubleExtension x = double_extend(gd.rep());
            const auto as = verify_as(gd, &x);
            o.require(all_pass(as), "verify_as failed: " + failing(as));
        }
    const std::set<std::vector<Scalar>> expected{{1, 1, 1}, {1, 1, -1}, {-1, 1, 1}, {-1, 1, -1}};
    o.require(metrics == expected, "metric list differs from diag(+-1, 1, +-1)");
    return o;
}

Outcome a12_golden() {
    Outcome o;
    const MetricLieAlgebra d{LieAlgebra(3, {"e1", "e2", "e3"}, {}), BilinearForm::diagonal({-1, 1, 1})};
    const DoubleExtension x = double_extend(Representation({d, line(1, "e4"), {f3_operator()}, {"e0"}}));
    o.require(x.g == a12_algebra(), "bracket table differs");
    o.require(x.g.names() == a12_algebra().names(), "basis names differ");
    o.require(x.q == f3_form(), "form differs");
    o.require(ad_invariant(x.g, x.q), "Q not ad-invariant");
    o.require(x.q.signature() == Signature{2, 3, 0}, "signature not (2,3,0)");
    const Series s = lower_central_series(x.g);
    o.require(s.step == std::optional<std::size_t>(3), "lower central step not 3");
    return o;
}

Outcome a12_skew_derivations() {
    Outcome o;
    const LieAlgebra l = a12_algebra();
    const MatrixLieAlgebra inner = inner_derivations(l);
    const Profile ip = profile(inner);
    o.require(inner.dim() == 3, "dim inner_derivations = " + std::to_string(inner.dim()));
    o.require(ip.dim == 3 && ip.nilpotent_step == std::optional<std::size_t>(2) && ip.center_dim == 1,
              "inner profile is not (3, 2-step, center 1)");
    const std::vector<Scalar> grid{-1, 0, 1, 2};
    const auto sweep = sweep_invariant_forms(l, grid);
    o.require(!sweep.empty(), "no nondegenerate forms in the sweep");
    std::size_t bad = 0;
    for (const auto& e : sweep) {
        const MatrixLieAlgebra sk = skew_derivations(l, e.form);
        bool ok = e.skew_dim == 6 && sk.dim() == 6 && e.skew_profile.perfect && e.skew_profile.radical_dim == 3 &&
                  e.skew_profile.radical_nilpotent_step.has_value();
        for (const auto& m : inner.basis())
            ok = ok && sk.contains(m);
        bad += !ok;
    }
    o.require(bad == 0, std::to_string(bad) + " of " + std::to_string(sweep.size()) + " forms deviate");
    if (o.pass)
        o.detail = std::to_string(sweep.size()) + " nondegenerate forms";
    return o;
}

Outcome four_step() {
    Outcome o;
    for (const std::string name : {"H", "E", "F"}) {
        const GdAlgebra gd{Representation({{a12_algebra(), a12_skew_form()}, line(1), {a12_derivations().at(name)}, {}})};
        const Series s = lower_central_series(gd.algebra());
        o.require(gd.dim() == 6, name + ": dim != 6");
        o.require(s.step == std::optional<std::size_t>(4), name + ": not 4-step");
        o.require(s.terms.size() > 4 && s.terms[3].dim() == 1 && s.terms[4].dim() == 0, name + ": D^3/D^4 dims");
        const StepReport r = predict_nilpotent_step(gd);
        o.require(r.agrees() && r.step_gd_predicted == 4, name + ": prediction disagrees");
    }
    return o;
}

Outcome curvature_cross() {
    Outcome o;
    for (const auto& name : corpus_list()) {
        const CorpusBuild b = corpus_build(name);
        if (!b.gd) {
            o.require(false, name + ": no G(d)");
            continue;
        }
        const GdAlgebra& gd = *b.gd;
        const Tensor3 nabla = levi_civita(gd.algebra(), gd.metric());
        const Tensor4 r = curvature(nabla, gd.algebra());
        o.require(levi_civita_gd(gd) == nabla, name + ": connection");
        o.require(curvature_gd(gd) == r, name + ": curvature");
        o.require(check_pair_symmetry(r, gd.metric()), name + ": pair symmetry");
    }
    if (o.pass)
        o.detail = std::to_string(corpus_list().size()) + " entries";
    return o;
}

Outcome sectional_signs() {
    Outcome o;
    {
        const GdAlgebra gd = *corpus_build("h3_metric_1").gd;
        const Tensor4 r = curvature(levi_civita(gd.algebra(), gd.metric()), gd.algebra());
        for (const auto& p : coordinate_planes(r, gd.metric()))
            if (p.k && sgn(*p.k) > 0)
                o.require(false, "<,>_1: K(e" + std::to_string(p.i + 1) + ",e" + std::to_string(p.j + 1) +
                                     ") = " + to_string(*p.k) + " > 0");
    }
    {
        const GdAlgebra gd = *corpus_build("h3_metric_2").gd;
        const Tensor4 r = curvature(levi_civita(gd.algebra(), gd.metric()), gd.algebra());
        o.require(sgn(sectional(r, gd.metric(), unit_vec(3, 0), unit_vec(3, 1))) > 0, "<,>_2: K(e1,e2) <= 0");
        o.require(sgn(sectional(r, gd.metric(), unit_vec(3, 0), unit_vec(3, 2))) < 0, "<,>_2: K(e1,e3) >= 0");
    }
    for (const auto& name : corpus_list()) {
        const CorpusBuild b = corpus_build(name);
        const GdAlgebra& gd = *b.gd;
        const Tensor4 r = curvature_gd(gd);
        const auto& dual = gd.dual_block().basis();
        for (std::size_t i = 0; i < dual.size(); ++i)
            for (std::size_t j = i + 1; j < dual.size(); ++j)
                if (!is_zero(plane_gram(gd.metric(), dual[i], dual[j])))
                    o.require(is_zero(sectional(r, gd.metric(), dual[i], dual[j])), name + ": h*-plane curved");
    }
    return o;
}

Outcome bi_invariant() {
    Outcome o;
    const DoubleExtension x = corpus_build("a12").extension;
    const Tensor4 r = curvature(levi_civita(x.g, x.q), x.g);
    const Check c = bi_invariant_check(x.g, r);
    o.require(c.pass, std::to_string(c.violations) + " violating triples");
    return o;
}

Outcome ricci_split() {
    Outcome o;
    std::size_t count = 0;
    for (const auto& name : corpus_list()) {
        const CorpusBuild b = corpus_build(name);
        const GdAlgebra& gd = *b.gd;
        if (!gd.rep().d_alg().is_abelian())
            continue;
        ++count;
        const Matrix t = ricci_operator(curvature_gd(gd), gd.metric());
        for (const auto& v : gd.d_block().basis())
            o.require(gd.d_block().contains(t * v), name + ": d not preserved");
        for (const auto& v : gd.dual_block().basis())
            o.require(gd.dual_block().contains(t * v), name + ": h* not preserved");
    }
    const GdAlgebra h0 = *corpus_build("h3_metric_0").gd;
    o.require(ricci_operator(curvature_gd(h0), h0.metric()) ==
                  Matrix::diagonal({Scalar(-1, 2), Scalar(-1, 2), Scalar(1, 2)}),
              "<,>_0 operator is not diag(-1/2,-1/2,1/2)");
    if (o.pass)
        o.detail = std::to_string(count) + " abelian-d entries";
    return o;
}

Outcome kostant() {
    Outcome o;
    const DoubleExtension x = corpus_build("oscillator").extension;
    const ReductiveSplit s = reductive_split(x);
    try {
        const KostantForm k = kostant_form(x.g, x.h_part, s.m, x.q_minus.restricted(s.m.basis()));
        o.require(k.q.gram() == k.basis.transposed() * x.q_minus.gram() * k.basis, "form differs from Q_minus");
        o.require(k.gbar.dim() == x.g.dim(), "gbar is not the whole algebra");
        const auto inv = inverse(k.basis);
        if (inv) {
            const BilinearForm standard((*inv).transposed() * k.q.gram() * *inv);
            o.require(ad_invariant(x.g, standard), "form not ad-invariant");
        } else {
            o.require(false, "basis not invertible");
        }
        o.require(k.nondegenerate_on_isotropy, "degenerate on h");
        o.detail = std::to_string(k.equations) + " equations, zero residual";
    } catch (const std::exception& e) {
        o.require(false, e.what());
    }
    return o;
}

Outcome so_aut_dims() {
    Outcome o;
    for (const auto& [d, t] : std::vector<std::pair<MetricLieAlgebra, Matrix>>{{rpq(0, 2), t_plus()}, {rpq(1, 1), t_minus()}}) {
        const GdAlgebra gd{Representation({d, line(1), {t}, {}})};
        const SoAut s = so_aut(gd);
        o.require(s.dim() == 1, "dim so_aut = " + std::to_string(s.dim()));
        for (const auto& [a, b] : induced_pairs(gd))
            o.require(so_aut_contains(s, gd, a, b), "induced pair missing");
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Heisenberg reconstruction", heisenberg_reconstruction},
        {"a(1,2) golden match", a12_golden},
        {"skew derivations of a(1,2)", a12_skew_derivations},
        {"4-step examples", four_step},
        {"curvature cross-validation", curvature_cross},
        {"sectional-sign reproduction", sectional_signs},
        {"bi-invariant identity", bi_invariant},
        {"Ricci split", ricci_split},
        {"Kostant reconstruction", kostant},
        {"so_aut dims", so_aut_dims},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
        if (!o.detail.empty())
            std::cout << " (" << o.detail << ")";
        std::cout << "\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
    return failures ? 1 : 0;
}
