#include "adinvar/corpus.hpp"

#include "adinvar/derivations.hpp"
#include "adinvar/error.hpp"
#include "adinvar/geometry.hpp"
#include "adinvar/hom_structure.hpp"
#include "adinvar/io.hpp"
#include "adinvar/series_predict.hpp"

#include <functional>
#include <sstream>
#include <tuple>

namespace adinvar {

MetricLieAlgebra rpq(std::size_t p, std::size_t q) {
    Vec diag;
    for (std::size_t i = 0; i < p; ++i)
        diag.push_back(-1);
    for (std::size_t i = 0; i < q; ++i)
        diag.push_back(1);
    return {LieAlgebra::abelian(p + q), BilinearForm::diagonal(diag)};
}

MetricLieAlgebra line(const Scalar& norm, const std::string& name) {
    return {LieAlgebra::abelian(1, {name}), BilinearForm::diagonal({norm})};
}

Matrix t_plus() { return Matrix::from_rows({{0, -1}, {1, 0}}); }
Matrix t_minus() { return Matrix::from_rows({{0, 1}, {1, 0}}); }
Matrix f3_operator() { return Matrix::from_rows({{0, 1, 0}, {1, 0, 1}, {0, -1, 0}}); }

LieAlgebra a12_algebra() {
    // basis (e4, e1, e2, e3, e0) -> 0..4
    return LieAlgebra(5, {"e4", "e1", "e2", "e3", "e0"},
                      {{0, 1, 2, 1}, {0, 2, 1, 1}, {0, 2, 3, -1}, {0, 3, 2, 1}, {1, 2, 4, 1}, {2, 3, 4, -1}});
}

BilinearForm f3_form() {
    Matrix g(5, 5);
    g(0, 0) = 1;
    g(0, 4) = g(4, 0) = 1;
    g(1, 1) = -1;
    g(2, 2) = 1;
    g(3, 3) = 1;
    return BilinearForm(g);
}

BilinearForm a12_skew_form() {
    Matrix g(5, 5);
    g(0, 4) = g(4, 0) = 1;
    g(1, 3) = g(3, 1) = 1;
    g(2, 2) = 1;
    g(3, 3) = 2;
    return BilinearForm(g);
}

std::map<std::string, Matrix> a12_derivations() {
    std::map<std::string, Matrix> m;
    m["H"] = Matrix::from_rows(
        {{-1, 0, 0, 0, 0}, {0, 1, 0, 2, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 1}});
    m["E"] = Matrix::from_rows(
        {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, -1, 0}});
    m["F"] = Matrix::from_rows(
        {{0, 1, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, -1}, {0, 0, 0, 0, 0}});
    m["X"] = Matrix::from_rows(
        {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {-1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}});
    m["Y"] = Matrix::from_rows(
        {{0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, 0, 0}});
    m["Z"] = Matrix::from_rows(
        {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {-1, 0, 0, 0, 0}, {0, 1, 0, 1, 0}});
    return m;
}

namespace {

using Term = std::pair<std::string, Scalar>;
using BracketRow = std::tuple<std::string, std::string, std::vector<Term>>;
using MetricRow = std::tuple<std::string, std::string, Scalar>;

std::size_t index_of(const LieAlgebra& l, const std::string& name) {
    for (std::size_t i = 0; i < l.dim(); ++i)
        if (l.names()[i] == name)
            return i;
    throw Error(ErrorKind::internal, "corpus: no basis vector named " + name);
}

/// The listed brackets hold and every unlisted pair of basis vectors commutes.
Check bracket_table(const std::string& name, const LieAlgebra& l, const std::vector<BracketRow>& rows) {
    Check c;
    c.name = name;
    const std::size_t n = l.dim();
    std::vector<std::vector<bool>> listed(n, std::vector<bool>(n));
    for (const auto& [a, b, terms] : rows) {
        const std::size_t i = index_of(l, a), j = index_of(l, b);
        Vec want(n);
        for (const auto& [k, v] : terms)
            want[index_of(l, k)] += v;
        if (l.bracket(i, j) != want)
            c.fail({i, j});
        listed[i][j] = listed[j][i] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!listed[i][j] && !is_zero(l.bracket(i, j)))
                c.fail({i, j});
    return c;
}

/// The listed pairings hold and every unlisted pair pairs to zero.
Check metric_table(const std::string& name, const LieAlgebra& l, const BilinearForm& b,
                   const std::vector<MetricRow>& rows) {
    Check c;
    c.name = name;
    const std::size_t n = l.dim();
    Matrix want(n, n);
    for (const auto& [x, y, v] : rows) {
        const std::size_t i = index_of(l, x), j = index_of(l, y);
        want(i, j) = want(j, i) = v;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (b(i, j) != want(i, j))
                c.fail({i, j});
    return c;
}

std::string sig_text(const Signature& s) {
    std::ostringstream os;
    os << "(" << s.negative << "," << s.positive << "," << s.zero << ")";
    return os.str();
}

struct Recipe {
    CorpusEntry entry;
    std::function<void(const CorpusBuild&, Report&)> expect;
};

ExtensionData make_data(MetricLieAlgebra d, MetricLieAlgebra h, std::vector<Matrix> pi,
                        std::vector<std::string> dual_names = {}) {
    return ExtensionData{std::move(d), std::move(h), std::move(pi), std::move(dual_names)};
}

void expect_h3(const CorpusBuild& b, Report& r, const Vec& diag) {
    const GdAlgebra& gd = *b.gd;
    r.add(bracket_table("expect.brackets", gd.algebra(), {{"e1", "e2", {{"e3", 1}}}}));
    r.add(metric_table("expect.metric", gd.algebra(), gd.metric(),
                       {{"e1", "e1", diag[0]}, {"e2", "e2", diag[1]}, {"e3", "e3", diag[2]}}));
    const auto hc = heisenberg_recognizer(gd);
    r.add(Check::from_bool("expect.heisenberg", hc.kind == HeisenbergClass::Kind::heisenberg && hc.heisenberg_dim == 3));
    r.add(Check::from_bool("expect.so_aut_dim_1", so_aut(gd).dim() == 1));
    const Tensor4 rr = curvature_gd(gd);
    json planes = json::array();
    for (const auto& p : coordinate_planes(rr, gd.metric()))
        planes.push_back({p.i + 1, p.j + 1, p.k ? json(to_string(*p.k)) : json(nullptr)});
    r.data()["sectional_coordinate_planes"] = planes;
}

std::vector<Recipe> registry() {
    std::vector<Recipe> s;
    const auto named = [](MetricLieAlgebra m, std::vector<std::string> names) {
        return MetricLieAlgebra{LieAlgebra(m.algebra.dim(), std::move(names), m.algebra.entries()), m.form};
    };

    s.push_back({{"h3_metric_0", "Heisenberg algebra from R^{2,0} and t_+, <z,z> = 1: metric diag(1,1,1)",
                  make_data(rpq(0, 2), line(1), {t_plus()}, {"e3"}), false, {"[e1,e2]=e3"}},
                 [](const CorpusBuild& b, Report& r) {
                     expect_h3(b, r, {1, 1, 1});
                     const GdAlgebra& gd = *b.gd;
                     const Tensor4 rr = curvature_gd(gd);
                     r.add(Check::from_bool("expect.sectional_e1e2",
                                            sectional(rr, gd.metric(), unit_vec(3, 0), unit_vec(3, 1)) == Scalar(-3, 4)));
                     r.add(Check::from_bool("expect.ricci_operator",
                                            ricci_operator(rr, gd.metric()) ==
                                                Matrix::diagonal({Scalar(-1, 2), Scalar(-1, 2), Scalar(1, 2)})));
                 }});
    s.push_back({{"h3_metric_1", "Heisenberg algebra from R^{2,0} and -t_+, <z,z> = -1: metric diag(1,1,-1)",
                  make_data(rpq(0, 2), line(-1), {Scalar(-1) * t_plus()}, {"e3"}), false,
                  {"[e1,e2]=e3", "reference claim: sectional curvature nonpositive for this metric"}},
                 [](const CorpusBuild& b, Report& r) { expect_h3(b, r, {1, 1, -1}); }});
    s.push_back({{"h3_metric_2", "Heisenberg algebra from R^{1,1} and t_-, <z,z> = 1: metric diag(-1,1,1)",
                  make_data(rpq(1, 1), line(1), {t_minus()}, {"e3"}), false,
                  {"[e1,e2]=e3", "K(e1,e2) > 0 and K(e1,e3) < 0"}},
                 [](const CorpusBuild& b, Report& r) {
                     expect_h3(b, r, {-1, 1, 1});
                     const GdAlgebra& gd = *b.gd;
                     const Tensor4 rr = curvature_gd(gd);
                     r.add(Check::from_bool("expect.sectional_e1e2_positive",
                                            sgn(sectional(rr, gd.metric(), unit_vec(3, 0), unit_vec(3, 1))) > 0));
                     r.add(Check::from_bool("expect.sectional_e1e3_negative",
                                            sgn(sectional(rr, gd.metric(), unit_vec(3, 0), unit_vec(3, 2))) < 0));
                     const BilinearForm ric = ricci(rr, gd.metric());
                     r.add(Check::from_bool("expect.ricci_diagonal", ric(0, 0) == Scalar(-1, 2) &&
                                                                         ric(1, 1) == Scalar(1, 2) &&
                                                                         ric(2, 2) == Scalar(-1, 2)));
                 }});
    s.push_back({{"h3_metric_3", "Heisenberg algebra from R^{1,1} and -t_-, <z,z> = -1: metric diag(-1,1,-1)",
                  make_data(rpq(1, 1), line(-1), {Scalar(-1) * t_minus()}, {"e3"}), false, {"[e1,e2]=e3"}},
                 [](const CorpusBuild& b, Report& r) { expect_h3(b, r, {-1, 1, -1}); }});

    s.push_back({{"oscillator", "Double extension of R^2 by R through t_+ (4-dimensional oscillator algebra)",
                  make_data(named(rpq(0, 2), {"e1", "e2"}), line(1, "e4"), {t_plus()}, {"e0"}), true,
                  {"[e4,e1]=e2", "[e4,e2]=-e1", "[e1,e2]=e0"}},
                 [](const CorpusBuild& b, Report& r) {
                     const DoubleExtension& x = b.extension;
                     r.add(bracket_table("expect.brackets", x.g,
                                         {{"e4", "e1", {{"e2", 1}}}, {"e4", "e2", {{"e1", -1}}}, {"e1", "e2", {{"e0", 1}}}}));
                     const Subspace m = orthogonal_complement(x.h_part, x.q_minus);
                     std::vector<Vec> expected_m;
                     // m = {(h, x, ell(h))}
                     expected_m.push_back({1, 0, 0, 1});
                     expected_m.push_back({0, 1, 0, 0});
                     expected_m.push_back({0, 0, 1, 0});
                     r.add(Check::from_bool("expect.m_is_graph_of_ell", m == Subspace::span(4, expected_m)));
                 }});

    s.push_back({{"a12", "a(1,2): double extension of R^{1,2} by R through the f3 map, free 3-step nilpotent",
                  make_data(named(rpq(1, 2), {"e1", "e2", "e3"}), line(1, "e4"), {f3_operator()}, {"e0"}), true,
                  {"[e4,e1]=e2", "[e4,e2]=e1-e3", "[e4,e3]=e2", "[e1,e2]=e0=[e3,e2]",
                   "<e1,e1>=-1, <e2,e2>=<e3,e3>=<e4,e4>=<e0,e4>=1; <e0,e0> unspecified, taken as 0"}},
                 [](const CorpusBuild& b, Report& r) {
                     const DoubleExtension& x = b.extension;
                     r.add(bracket_table("expect.brackets", x.g,
                                         {{"e4", "e1", {{"e2", 1}}},
                                          {"e4", "e2", {{"e1", 1}, {"e3", -1}}},
                                          {"e4", "e3", {{"e2", 1}}},
                                          {"e1", "e2", {{"e0", 1}}},
                                          {"e3", "e2", {{"e0", 1}}}}));
                     r.add(metric_table("expect.f3_form", x.g, x.q,
                                        {{"e1", "e1", -1}, {"e2", "e2", 1}, {"e3", "e3", 1}, {"e4", "e4", 1}, {"e0", "e4", 1}}));
                     r.add(Check::from_bool("expect.signature", x.q.signature() == Signature{2, 3, 0},
                                            sig_text(x.q.signature())));
                     r.add(Check::from_bool("expect.nilpotent_step_3", lower_central_series(x.g).step == 3u));
                     r.add(Check::from_bool("expect.same_as_reference_a12", x.g == a12_algebra() && x.q == f3_form()));
                 }});

    s.push_back({{"g_r12", "G(R^{1,2}) for the f3 map with <z,z> = 1 (Lorentzian), R z + h3",
                  make_data(named(rpq(1, 2), {"e1", "e2", "e3"}), line(1, "e4"), {f3_operator()}, {"z"}), false,
                  {"G(R^{1,2}) = Rz + h3, indecomposable", "ker A = span{e1-e3}, totally isotropic"}},
                 [](const CorpusBuild& b, Report& r) {
                     const auto hc = heisenberg_recognizer(*b.gd);
                     r.add(Check::from_bool("expect.central_extension",
                                            hc.kind == HeisenbergClass::Kind::central_extension && hc.heisenberg_dim == 3));
                     r.add(Check::from_bool("expect.center_is_z_plus_kernel", hc.center_matches));
                     r.add(Check::from_bool("expect.indecomposable_flag", hc.indecomposable_flag));
                     r.add(Check::from_bool("expect.kernel_e1_minus_e3",
                                            hc.kernel == Subspace::span(3, {{1, 0, -1}})));
                     r.add(Check::from_bool("expect.lorentzian", b.gd->metric().signature() == Signature{1, 3, 0}));
                 }});

    const auto ders = a12_derivations();
    const char* reference[] = {"-[e4,e0] = z = [e1,e1-e3]", "[e4,e1-e3] = z", "[e1,e1-e3] = z"};
    const char* names[] = {"H", "E", "F"};
    for (int k = 0; k < 3; ++k) {
        const std::string nm = names[k];
        s.push_back({{"g" + nm, "Extension of a(1,2) by the skew derivation " + nm + " (4-step nilpotent, dim 6)",
                      make_data({a12_algebra(), a12_skew_form()}, line(1), {ders.at(nm)}, {"z"}), false,
                      {"common: [e4,e2]=e2 (sic), [e4,e2]=e1-e3, [e1,e2]=e0", std::string("additional: ") + reference[k],
                       "metric on a(1,2): <e4,e0>=<e2,e2>=<e1,e3>=1, <e3,e3>=2"}},
                     [](const CorpusBuild& b, Report& r) {
                         const GdAlgebra& gd = *b.gd;
                         const Series ls = lower_central_series(gd.algebra());
                         r.add(Check::from_bool("expect.dim_6", gd.dim() == 6));
                         r.add(Check::from_bool("expect.nilpotent_step_4", ls.step == 4u));
                         r.add(Check::from_bool("expect.dim_D3_is_1", ls.terms.size() > 3 && ls.terms[3].dim() == 1));
                         const StepReport sr = predict_nilpotent_step(gd);
                         r.add(Check::from_bool("expect.prediction_agrees", sr.agrees() && sr.step_gd_predicted == 4));
                     }});
    }

    s.push_back({{"h5_r22", "G(R^{2,2}) for blockdiag(t_+, t_+): 5-dimensional Heisenberg algebra",
                  make_data(rpq(2, 2), line(1), {direct_sum(t_plus(), t_plus())}, {"z"}), false, {}},
                 [](const CorpusBuild& b, Report& r) {
                     const auto hc = heisenberg_recognizer(*b.gd);
                     r.add(Check::from_bool("expect.heisenberg_5",
                                            hc.kind == HeisenbergClass::Kind::heisenberg && hc.heisenberg_dim == 5));
                     r.add(Check::from_bool("expect.center_is_z", hc.center_matches && hc.center.dim() == 1));
                 }});

    s.push_back({{"nilmanifold_demo", "Compact k = so(2) acting on V = R^2: naturally reductive nilmanifold",
                  make_data(rpq(0, 2), line(1, "k"), {t_plus()}, {"k*"}), false, {}},
                 [](const CorpusBuild& b, Report& r) {
                     r.add(tensor_equal_check("expect.nilmanifold_t_matches", t_tensor(*b.gd), nilmanifold_t(*b.gd)));
                     const MatrixLieAlgebra u = intertwiners_skew(b.gd->rep());
                     r.add(Check::from_bool("expect.intertwiners_dim_1", u.dim() == 1 && u.contains(t_plus())));
                 }});
    s.push_back({{"nilmanifold_r4", "k = so(2) acting on V = R^4 by blockdiag(t_+, 2 t_+)",
                  make_data(rpq(0, 4), line(1, "k"), {direct_sum(t_plus(), Scalar(2) * t_plus())}, {"k*"}), false, {}},
                 [](const CorpusBuild& b, Report& r) {
                     r.add(tensor_equal_check("expect.nilmanifold_t_matches", t_tensor(*b.gd), nilmanifold_t(*b.gd)));
                     r.add(Check::from_bool("expect.intertwiners_dim_2", intertwiners_skew(b.gd->rep()).dim() == 2));
                 }});
    {
        // so(3) with [L1,L2]=L3 and cyclic; (L_i)_{jk} = -eps_{ijk}
        LieAlgebra so3(3, {"L1", "L2", "L3"}, {{0, 1, 2, 1}, {0, 2, 1, -1}, {1, 2, 0, 1}});
        std::vector<Matrix> ls;
        ls.push_back(Matrix::from_rows({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}));
        ls.push_back(Matrix::from_rows({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}));
        ls.push_back(Matrix::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}));
        s.push_back({{"nilmanifold_so3", "Compact k = so(3) acting on V = R^3 by rotations",
                      make_data(rpq(0, 3), {so3, BilinearForm::identity(3)}, ls, {"L1*", "L2*", "L3*"}), false, {}},
                     [](const CorpusBuild& b, Report& r) {
                         r.add(tensor_equal_check("expect.nilmanifold_t_matches", t_tensor(*b.gd), nilmanifold_t(*b.gd)));
                         r.add(Check::from_bool("expect.so_aut_dim_3", so_aut(*b.gd).dim() == 3));
                         r.add(Check::from_bool("expect.intertwiners_zero", intertwiners_skew(b.gd->rep()).dim() == 0));
                     }});
    }
    s.push_back({{"abelian_r22", "R^{2,2} extended by R with pi = 0: abelian G(d)",
                  make_data(rpq(2, 2), line(1), {Matrix(4, 4)}, {"z"}), false, {}},
                 [](const CorpusBuild& b, Report& r) {
                     r.add(Check::from_bool("expect.abelian", b.gd->algebra().is_abelian()));
                     r.add(Check::from_bool("expect.t_zero", t_tensor(*b.gd).is_zero()));
                     // dim so(h*) + dim so(d) = 0 + 6
                     r.add(Check::from_bool("expect.so_aut_dim_6", so_aut(*b.gd).dim() == 6));
                 }});
    return s;
}

const std::vector<Recipe>& recipes() {
    static const std::vector<Recipe> s = registry();
    return s;
}

const Recipe& find_recipe(const std::string& name) {
    for (const auto& s : recipes())
        if (s.entry.name == name)
            return s;
    throw Error(ErrorKind::invalid_input, "unknown corpus entry '" + name + "'");
}

void standard_checks(CorpusBuild& b) {
    Report& r = b.report;
    const DoubleExtension& x = b.extension;
    r.add_all(verify_double_extension(x));
    const ReductiveSplit split = reductive_split(x);
    r.add_all(split.checks);

    // Kostant reconstruction from Q_minus restricted to m
    {
        const auto& mb = split.m.basis();
        const BilinearForm inner = x.q_minus.restricted(mb);
        bool ok = false;
        std::string note;
        try {
            const KostantForm kf = kostant_form(x.g, x.h_part, split.m, inner);
            const Matrix want = kf.basis.transposed() * x.q_minus.gram() * kf.basis;
            ok = kf.q.gram() == want && kf.nondegenerate_on_isotropy;
            note = "gbar dim " + std::to_string(kf.gbar.dim());
        } catch (const Error& e) {
            note = e.what();
        }
        r.add(Check::from_bool("kostant.matches_q_minus", ok, note));
    }

    if (!b.gd)
        return;
    const GdAlgebra& gd = *b.gd;
    r.add_all(verify_gd(gd));
    r.add_all(verify_lambda(gd, x));
    r.add_all(verify_as(gd, &x));

    const Tensor3 nabla = levi_civita(gd.algebra(), gd.metric());
    const Tensor4 rr = curvature(nabla, gd.algebra());
    r.add(tensor_equal_check("geometry.levi_civita_closed_form", levi_civita_gd(gd), nabla));
    r.add(tensor_equal_check("geometry.curvature_closed_form", curvature_gd(gd), rr));
    r.add(torsion_free_check(nabla, gd.algebra()));
    r.add(metric_connection_check(nabla, gd.metric()));
    r.add(pair_symmetry_check(rr, gd.metric()));
    r.add(curvature_relation_check(gd, rr));
    const BilinearForm ric = ricci(rr, gd.metric());
    r.add(Check::from_bool("geometry.ricci_closed_form", ricci_gd(gd) == ric));
    r.add(Check::from_bool("geometry.ricci_operator_closed_form",
                           ricci_operator_gd(gd) == ricci_operator(rr, gd.metric())));
    if (gd.rep().d_alg().is_abelian()) {
        const Matrix t = ricci_operator(rr, gd.metric());
        bool split_ok = true;
        for (std::size_t i = 0; i < gd.dim(); ++i)
            for (std::size_t j = 0; j < gd.dim(); ++j)
                if ((i < gd.d_dim()) != (j < gd.d_dim()) && !is_zero(t(i, j)))
                    split_ok = false;
        r.add(Check::from_bool("geometry.ricci_preserves_split", split_ok));
    }
    r.add(Check::from_bool("geometry.dual_totally_geodesic",
                           totally_geodesic(gd.algebra(), gd.metric(), gd.dual_block())));
    bool flat = true;
    for (std::size_t a = 0; a < gd.h_dim(); ++a)
        for (std::size_t c = a + 1; c < gd.h_dim(); ++c) {
            const Vec u = gd.from_dual(unit_vec(gd.h_dim(), a)), v = gd.from_dual(unit_vec(gd.h_dim(), c));
            if (!is_zero(rr.apply(u, v, v)))
                flat = false;
        }
    r.add(Check::from_bool("geometry.dual_flat", flat));

    Check induced;
    induced.name = "so_aut.contains_induced_pairs";
    const SoAut sa = so_aut(gd);
    const auto pairs = induced_pairs(gd);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (!so_aut_contains(sa, gd, pairs[i].first, pairs[i].second))
            induced.fail({i});
    r.add(induced);
    r.data()["so_aut_dim"] = sa.dim();

    const StepReport sol = predict_solvable_step(gd);
    r.add(Check::from_bool("series.solvable_prediction", sol.agrees()));
    r.data()["solvable"] = step_report_to_json(sol);
    const Series dls = lower_central_series(gd.rep().d_alg());
    if (dls.step) {
        const StepReport nil = predict_nilpotent_step(gd);
        r.add(Check::from_bool("series.nilpotent_prediction", nil.agrees()));
        r.add(Check::from_bool("series.step_bound",
                               nil.step_gd_computed == nil.step_d || nil.step_gd_computed == nil.step_d + 1));
        r.data()["nilpotent"] = step_report_to_json(nil);
    }
}

}  // namespace

std::vector<std::string> corpus_list() {
    std::vector<std::string> out;
    for (const auto& s : recipes())
        out.push_back(s.entry.name);
    return out;
}

CorpusEntry corpus_entry(const std::string& name) { return find_recipe(name).entry; }

CorpusBuild corpus_build(const std::string& name) {
    const Recipe& recipe = find_recipe(name);
    Representation rep(recipe.entry.data);
    CorpusBuild b{recipe.entry, double_extend(rep), std::nullopt, Report("corpus " + name)};
    if (rep.h_form().nondegenerate())
        b.gd.emplace(rep);
    b.report.data()["description"] = recipe.entry.description;
    b.report.data()["annotations"] = recipe.entry.annotations;
    standard_checks(b);
    recipe.expect(b, b.report);
    return b;
}

}  // namespace adinvar
