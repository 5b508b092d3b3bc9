#include "adinvar/series_predict.hpp"

#include "adinvar/error.hpp"

namespace adinvar {

namespace {

std::size_t require_step(const Series& s, std::optional<std::size_t> k, const char* what) {
    if (!s.step)
        throw Error(ErrorKind::precondition, std::string("d is not ") + what);
    if (k && *k != *s.step)
        throw Error(ErrorKind::precondition, std::string("d is ") + std::to_string(*s.step) + "-step " + what +
                                                 ", not " + std::to_string(*k) + "-step");
    return *s.step;
}

/// Span of beta(u, v) for u in a, v in b, placed in the h* block of G(d).
Subspace beta_span(const GdAlgebra& gd, const Subspace& a, const Subspace& b) {
    std::vector<Vec> vs;
    for (const auto& u : a.basis())
        for (const auto& v : b.basis())
            vs.push_back(gd.from_dual(gd.beta_star(u, v)));
    return Subspace::span(gd.dim(), vs);
}

Subspace common_kernel(const GdAlgebra& gd) {
    Subspace k = Subspace::whole(gd.d_dim());
    for (const auto& p : gd.rep().mats())
        k = intersect(k, kernel_of(p));
    return k;
}

}  // namespace

StepReport predict_solvable_step(const GdAlgebra& gd, std::optional<std::size_t> k) {
    StepReport r;
    r.kind = "solvable";
    r.step_d = require_step(derived_series(gd.rep().d_alg()), k, "solvable");
    const Series gs = derived_series(gd.algebra());
    if (!gs.step)
        throw Error(ErrorKind::internal, "G(d) is not solvable although d is");
    r.step_gd_computed = *gs.step;
    if (r.step_d == 0) {
        r.witness = Subspace(gd.dim());
        r.step_gd_predicted = gd.h_dim() > 0 ? 1 : 0;
        return r;
    }
    const Subspace c = derived_series(gd.rep().d_alg()).terms[r.step_d - 1];
    r.witness = beta_span(gd, c, c);
    r.step_gd_predicted = r.witness.is_zero() ? r.step_d : r.step_d + 1;
    return r;
}

StepReport predict_nilpotent_step(const GdAlgebra& gd, std::optional<std::size_t> k) {
    StepReport r;
    r.kind = "nilpotent";
    const Series ds = lower_central_series(gd.rep().d_alg());
    r.step_d = require_step(ds, k, "nilpotent");
    const Series gs = lower_central_series(gd.algebra());
    if (!gs.step)
        throw Error(ErrorKind::internal, "G(d) is not nilpotent although d is");
    r.step_gd_computed = *gs.step;
    const Subspace ker = common_kernel(gd);
    // D^k(d) = 0 at the nilpotency step, so the displayed test always holds.
    r.displayed_test = ker.contains(ds.terms[r.step_d]);
    if (r.step_d == 0) {
        r.witness = Subspace(gd.dim());
        r.step_gd_predicted = gd.h_dim() > 0 ? 1 : 0;
        r.displayed_prediction = r.step_gd_predicted;
        r.corrected_test = true;
        return r;
    }
    const Subspace prev = ds.terms[r.step_d - 1];
    r.witness = beta_span(gd, Subspace::whole(gd.d_dim()), prev);
    r.corrected_test = ker.contains(prev);
    r.step_gd_predicted = r.witness.is_zero() ? r.step_d : r.step_d + 1;
    r.displayed_prediction = *r.displayed_test ? r.step_d : r.step_d + 1;
    if (*r.corrected_test != r.witness.is_zero())
        throw Error(ErrorKind::internal, "predict_nilpotent_step: kernel test and beta span disagree");
    return r;
}

json step_report_to_json(const StepReport& r) {
    json j;
    j["kind"] = r.kind;
    j["step_d"] = r.step_d;
    j["step_gd_predicted"] = r.step_gd_predicted;
    j["step_gd_computed"] = r.step_gd_computed;
    j["agrees"] = r.agrees();
    json w = json::array();
    for (const auto& v : r.witness.basis()) {
        json row = json::array();
        for (const auto& s : v)
            row.push_back(to_string(s));
        w.push_back(row);
    }
    j["witness"] = w;
    if (r.displayed_test) {
        j["displayed_test"] = *r.displayed_test;
        j["displayed_prediction"] = *r.displayed_prediction;
        j["corrected_test"] = *r.corrected_test;
    }
    return j;
}

std::string to_string(HeisenbergClass::Kind k) {
    switch (k) {
        case HeisenbergClass::Kind::abelian:
            return "abelian";
        case HeisenbergClass::Kind::heisenberg:
            return "heisenberg";
        case HeisenbergClass::Kind::central_extension:
            return "central_extension";
    }
    return "unknown";
}

HeisenbergClass heisenberg_recognizer(const GdAlgebra& gd) {
    if (!gd.rep().d_alg().is_abelian())
        throw Error(ErrorKind::precondition, "heisenberg_recognizer: d must be abelian");
    if (gd.h_dim() != 1)
        throw Error(ErrorKind::precondition, "heisenberg_recognizer: h must be one-dimensional");
    const Matrix& a = gd.rep().mats()[0];
    HeisenbergClass c;
    c.kernel = kernel_of(a);
    const std::size_t rk = rank(a);
    if (rk == 0)
        c.kind = HeisenbergClass::Kind::abelian;
    else if (rk == gd.d_dim())
        c.kind = HeisenbergClass::Kind::heisenberg;
    else
        c.kind = HeisenbergClass::Kind::central_extension;
    c.heisenberg_dim = rk == 0 ? 0 : rk + 1;
    c.center = center(gd.algebra());
    std::vector<Vec> expected{gd.from_dual(unit_vec(1, 0))};
    for (const auto& v : c.kernel.basis())
        expected.push_back(gd.from_d(v));
    c.center_matches = c.center == Subspace::span(gd.dim(), expected);
    c.indecomposable_flag = !c.kernel.is_zero() && totally_isotropic(c.kernel, gd.rep().d_metric());
    return c;
}

}  // namespace adinvar
