#include "adinvar/cli.hpp"

#include "adinvar/corpus.hpp"
#include "adinvar/derivations.hpp"
#include "adinvar/error.hpp"
#include "adinvar/geometry.hpp"
#include "adinvar/hom_structure.hpp"
#include "adinvar/io.hpp"
#include "adinvar/series_predict.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace adinvar {

namespace fs = std::filesystem;

namespace {

struct Options {
    bool json_output = false;
    std::string report_path;
};

json signature_to_json(const Signature& s) {
    return {{"negative", s.negative}, {"positive", s.positive}, {"zero", s.zero}};
}

json series_dims(const Series& s) {
    json dims = json::array();
    for (const auto& t : s.terms)
        dims.push_back(t.dim());
    return dims;
}

json matrix_list(const std::vector<Matrix>& ms) {
    json a = json::array();
    for (const auto& m : ms)
        a.push_back(matrix_to_json(m));
    return a;
}

json matrix_algebra_to_json(const MatrixLieAlgebra& m) {
    return {{"dim", m.dim()}, {"basis", matrix_list(m.basis())}, {"profile", profile_to_json(profile(m))}};
}

/// Loads a builder and turns validation diagnostics into failed checks.
/// Returns nullopt (after filling `report`) when the data is not a valid
/// representation.
std::optional<Representation> load_representation(const Input& in, Report& report) {
    ExtensionData data = parse_builder(in.doc, in.base_dir, in.source);
    const auto diags = validate(data);
    if (!diags.empty()) {
        for (const auto& d : diags) {
            Check c;
            c.name = "input." + d.name;
            c.pass = false;
            c.violations = 1;
            c.note = d.detail;
            report.add(std::move(c));
        }
        return std::nullopt;
    }
    return Representation(std::move(data));
}

int emit(const Report& report, const Options& opt, std::ostream& out) {
    const bool json_file = !opt.report_path.empty() && fs::path(opt.report_path).extension() == ".json";
    std::string text;
    if (opt.json_output || json_file) {
        text = report.to_json().dump(2) + "\n";
    } else {
        text = report.to_table();
        if (!report.data().empty())
            text += "data:\n" + report.data().dump(2) + "\n";
    }
    if (opt.report_path.empty()) {
        out << text;
    } else {
        std::ofstream f(opt.report_path, std::ios::binary);
        if (!f)
            throw Error(ErrorKind::invalid_input, opt.report_path + ": cannot write report");
        f << text;
        out << (report.all_pass() ? "result: pass" : "result: FAIL") << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

void write_json(const fs::path& path, const json& j) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::invalid_input, path.string() + ": cannot write file");
    f << j.dump(2) << "\n";
}

// ---- subcommands -----------------------------------------------------------

}  // namespace

Report check_report(const Input& in) {
    Report r("check " + in.source);
    const AlgebraFile af = parse_algebra(in.doc, in.source);
    const LieAlgebra& l = af.algebra;
    Check jac;
    jac.name = "jacobi";
    for (const auto& v : check_jacobi(l))
        jac.fail({v.i, v.j, v.k});
    r.add(jac);
    r.data()["dim"] = l.dim();
    r.data()["names"] = l.names();
    if (jac.pass) {
        const Profile p = profile(l);
        r.data()["profile"] = profile_to_json(p);
    }
    if (af.metric) {
        r.data()["signature"] = signature_to_json(af.metric->signature());
        r.data()["nondegenerate"] = af.metric->nondegenerate();
        r.data()["ad_invariant"] = ad_invariant(l, *af.metric);
    }
    return r;
}

Report extend_report(const Input& in) {
    Report r("extend " + in.source);
    auto rep = load_representation(in, r);
    if (!rep)
        return r;
    const DoubleExtension x = double_extend(*rep);
    r.add_all(verify_double_extension(x));
    r.add_all(reductive_split(x).checks);
    r.data()["algebra"] = algebra_to_json(x.g, &x.q);
    r.data()["q_minus"] = matrix_to_json(x.q_minus.gram());
    r.data()["signature"] = signature_to_json(x.q.signature());
    return r;
}

Report gd_report(const Input& in) {
    Report r("gd " + in.source);
    auto rep = load_representation(in, r);
    if (!rep)
        return r;
    const GdAlgebra gd(*rep);
    const DoubleExtension x = double_extend(*rep);
    r.add_all(verify_gd(gd));
    r.add_all(verify_lambda(gd, x));
    r.data()["algebra"] = algebra_to_json(gd.algebra(), &gd.metric());
    r.data()["signature"] = signature_to_json(gd.metric().signature());
    r.data()["beta_star"] = matrix_list([&] {
        std::vector<Matrix> bs;
        for (std::size_t i = 0; i < gd.d_dim(); ++i) {
            Matrix m(gd.h_dim(), gd.d_dim());
            for (std::size_t j = 0; j < gd.d_dim(); ++j) {
                const Vec v = gd.beta_table(i, j);
                for (std::size_t a = 0; a < gd.h_dim(); ++a)
                    m(a, j) = v[a];
            }
            bs.push_back(m);
        }
        return bs;
    }());
    return r;
}

namespace {

void geometry_data(Report& r, const LieAlgebra& l, const BilinearForm& b, const Tensor3& nabla, const Tensor4& rr) {
    r.add(torsion_free_check(nabla, l));
    r.add(metric_connection_check(nabla, b));
    r.add(pair_symmetry_check(rr, b));
    r.data()["connection"] = tensor_to_json(nabla);
    r.data()["curvature"] = tensor_to_json(rr);
    const BilinearForm ric = ricci(rr, b);
    const Matrix op = ricci_operator(rr, b);
    r.data()["ricci"] = matrix_to_json(ric.gram());
    r.data()["ricci_operator"] = matrix_to_json(op);
    json cp = json::array();
    for (const auto& c : characteristic_polynomial(op))
        cp.push_back(scalar_to_json(c));
    r.data()["ricci_operator_charpoly"] = cp;
    json planes = json::array();
    for (const auto& p : coordinate_planes(rr, b))
        planes.push_back({{"plane", {p.i + 1, p.j + 1}},
                          {"degenerate", p.degenerate},
                          {"k", p.k ? scalar_to_json(*p.k) : json(nullptr)}});
    r.data()["sectional"] = planes;
}

}  // namespace

Report geometry_report(const Input& in) {
    Report r("geometry " + in.source);
    const json& j = in.doc;
    const std::string& file = in.source;
    if (is_builder(j)) {
        ExtensionData data = parse_builder(j, in.base_dir, file);
        const auto diags = validate(data);
        if (!diags.empty()) {
            for (const auto& d : diags)
                r.add(Check{"input." + d.name, false, 1, {}, d.detail});
            return r;
        }
        const GdAlgebra gd{Representation(std::move(data))};
        const Tensor3 nabla = levi_civita(gd.algebra(), gd.metric());
        const Tensor4 rr = curvature(nabla, gd.algebra());
        geometry_data(r, gd.algebra(), gd.metric(), nabla, rr);
        r.add(tensor_equal_check("geometry.levi_civita_closed_form", levi_civita_gd(gd), nabla));
        r.add(tensor_equal_check("geometry.curvature_closed_form", curvature_gd(gd), rr));
        r.add(curvature_relation_check(gd, rr));
        r.add(Check::from_bool("geometry.ricci_closed_form", ricci_gd(gd) == ricci(rr, gd.metric())));
        r.add(Check::from_bool("geometry.ricci_operator_closed_form",
                               ricci_operator_gd(gd) == ricci_operator(rr, gd.metric())));
        r.data()["algebra"] = algebra_to_json(gd.algebra(), &gd.metric());
        return r;
    }
    const AlgebraFile af = parse_algebra(j, file);
    if (!af.metric)
        throw Error(ErrorKind::invalid_input, file + ": metric: missing field (geometry needs a metric)");
    if (!af.metric->nondegenerate())
        throw Error(ErrorKind::invalid_input, file + ": metric: form is degenerate");
    require_jacobi(af.algebra, file);
    const Tensor3 nabla = levi_civita(af.algebra, *af.metric);
    const Tensor4 rr = curvature(nabla, af.algebra);
    geometry_data(r, af.algebra, *af.metric, nabla, rr);
    if (ad_invariant(af.algebra, *af.metric))
        r.add(bi_invariant_check(af.algebra, rr));
    return r;
}

Report verify_as_report(const Input& in) {
    Report r("verify-as " + in.source);
    auto rep = load_representation(in, r);
    if (!rep)
        return r;
    const GdAlgebra gd(*rep);
    const DoubleExtension x = double_extend(*rep);
    r.add_all(verify_as(gd, &x));
    r.data()["t"] = tensor_to_json(t_tensor(gd));
    return r;
}

Report derivations_report(const Input& in, const Input* metric_in, const Input* so_aut_in) {
    const std::string& file = in.source;
    Report r("derivations " + file);
    const AlgebraFile af = parse_algebra(in.doc, file);
    require_jacobi(af.algebra, file);
    const LieAlgebra& l = af.algebra;
    const MatrixLieAlgebra der = derivation_algebra(l);
    const MatrixLieAlgebra inner = inner_derivations(l);
    r.data()["algebra_profile"] = profile_to_json(profile(l));
    r.data()["derivations"] = matrix_algebra_to_json(der);
    r.data()["inner_derivations"] = matrix_algebra_to_json(inner);
    Check all_der;
    all_der.name = "derivations.basis_are_derivations";
    for (std::size_t i = 0; i < der.dim(); ++i)
        if (!is_derivation(l, der.basis()[i]))
            all_der.fail({i});
    r.add(all_der);
    std::optional<BilinearForm> metric = af.metric;
    if (metric_in) {
        const std::string& metric_file = metric_in->source;
        const AlgebraFile mf = parse_algebra(metric_in->doc, metric_file);
        if (!mf.metric)
            throw Error(ErrorKind::invalid_input, metric_file + ": metric: missing field");
        if (mf.metric->dim() != l.dim())
            throw Error(ErrorKind::dimension_mismatch, metric_file + ": metric: dimension " +
                                                           std::to_string(mf.metric->dim()) + " does not match " +
                                                           std::to_string(l.dim()));
        metric = mf.metric;
    }
    if (metric) {
        const MatrixLieAlgebra skew = skew_derivations(l, *metric);
        r.data()["skew_derivations"] = matrix_algebra_to_json(skew);
        r.data()["metric_ad_invariant"] = ad_invariant(l, *metric);
        Check sk;
        sk.name = "derivations.skew_basis_is_skew";
        for (std::size_t i = 0; i < skew.dim(); ++i)
            if (!is_skew(skew.basis()[i], *metric) || !is_derivation(l, skew.basis()[i]))
                sk.fail({i});
        r.add(sk);
    }
    if (so_aut_in) {
        auto rep = load_representation(*so_aut_in, r);
        if (rep) {
            const GdAlgebra gd(*rep);
            const SoAut sa = so_aut(gd);
            json pairs = json::array();
            for (const auto& [a, b] : sa.pairs)
                pairs.push_back({{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}});
            r.data()["so_aut"] = {{"dim", sa.dim()}, {"pairs", pairs}, {"profile", profile_to_json(profile(sa.operators))}};
            Check induced;
            induced.name = "so_aut.contains_induced_pairs";
            const auto ip = induced_pairs(gd);
            for (std::size_t i = 0; i < ip.size(); ++i)
                if (!so_aut_contains(sa, gd, ip[i].first, ip[i].second))
                    induced.fail({i});
            r.add(induced);
        }
    }
    return r;
}

Report series_report(const Input& in) {
    Report r("series " + in.source);
    auto rep = load_representation(in, r);
    if (!rep)
        return r;
    const GdAlgebra gd(*rep);
    const StepReport sol = predict_solvable_step(gd);
    r.add(Check::from_bool("series.solvable_prediction", sol.agrees()));
    r.data()["solvable"] = step_report_to_json(sol);
    if (lower_central_series(rep->d_alg()).step) {
        const StepReport nil = predict_nilpotent_step(gd);
        r.add(Check::from_bool("series.nilpotent_prediction", nil.agrees()));
        r.data()["nilpotent"] = step_report_to_json(nil);
    }
    r.data()["gd_derived_dims"] = series_dims(derived_series(gd.algebra()));
    r.data()["gd_lower_central_dims"] = series_dims(lower_central_series(gd.algebra()));
    if (rep->d_alg().is_abelian() && rep->h_dim() == 1) {
        const HeisenbergClass hc = heisenberg_recognizer(gd);
        r.data()["heisenberg"] = {{"kind", to_string(hc.kind)},
                                  {"heisenberg_dim", hc.heisenberg_dim},
                                  {"kernel", subspace_to_json(hc.kernel)},
                                  {"center", subspace_to_json(hc.center)},
                                  {"center_matches", hc.center_matches},
                                  {"indecomposable_sufficient_condition", hc.indecomposable_flag}};
    }
    return r;
}

namespace {

json corpus_algebra_json(const CorpusBuild& b) {
    if (b.entry.extension_primary || !b.gd)
        return algebra_to_json(b.extension.g, &b.extension.q);
    return algebra_to_json(b.gd->algebra(), &b.gd->metric());
}

}  // namespace

Report corpus_report(const std::string& name, bool do_emit, const std::string& dir) {
    if (name.empty() && !do_emit) {
        Report r("corpus");
        json list = json::array();
        for (const auto& n : corpus_list())
            list.push_back({{"name", n}, {"description", corpus_entry(n).description}});
        r.data()["entries"] = list;
        return r;
    }
    std::vector<std::string> names = name.empty() ? corpus_list() : std::vector<std::string>{name};
    Report r(name.empty() ? "corpus --emit" : "corpus " + name + (do_emit ? " --emit" : ""));
    json emitted = json::array();
    for (const auto& n : names) {
        CorpusBuild b = corpus_build(n);
        if (names.size() == 1) {
            r = b.report;
        } else {
            for (Check c : b.report.checks()) {
                c.name = n + "." + c.name;
                r.add(std::move(c));
            }
        }
        if (do_emit) {
            const fs::path base(dir);
            const fs::path alg = base / "corpus" / (n + ".json");
            const fs::path bld = base / "builders" / (n + ".json");
            write_json(alg, corpus_algebra_json(b));
            write_json(bld, builder_to_json(b.entry.data));
            emitted.push_back(alg.generic_string());
            emitted.push_back(bld.generic_string());
        }
    }
    if (do_emit)
        r.data()["emitted"] = emitted;
    return r;
}

Input Input::from_file(const std::string& path) {
    return Input{read_json_file(path), fs::path(path).parent_path(), path};
}

namespace {

void write_algebra_of(const Report& r, const std::string& out_path) {
    if (!out_path.empty() && r.data().contains("algebra"))
        write_json(out_path, r.data()["algebra"]);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact workbench for naturally reductive metric Lie algebras G(d)", "adinvar"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json_output, "Machine-readable JSON output");
    app.add_option("--report", opt.report_path, "Write the report to this path");

    std::string file, out_path, metric_file, so_aut_file, corpus_name, dir = ".";
    bool do_emit = false;

    auto* check = app.add_subcommand("check", "Validate an algebra file (Jacobi, invariance, signature)");
    check->add_option("file", file, "Algebra file")->required();
    auto* extend = app.add_subcommand("extend", "Build the double extension h + d + h* from a builder file");
    extend->add_option("builder", file, "Builder file")->required();
    extend->add_option("--out", out_path, "Also write the algebra file here");
    auto* gd = app.add_subcommand("gd", "Build the metric Lie algebra G(d) = d + h* from a builder file");
    gd->add_option("builder", file, "Builder file")->required();
    gd->add_option("--out", out_path, "Also write the algebra file here");
    auto* geometry = app.add_subcommand("geometry", "Connection, curvature, Ricci and sectional curvature");
    geometry->add_option("file", file, "Algebra file with metric, or builder file")->required();
    auto* vas = app.add_subcommand("verify-as", "Check the homogeneous structure axioms on G(d)");
    vas->add_option("builder", file, "Builder file")->required();
    auto* der = app.add_subcommand("derivations", "Derivation, inner and skew derivation algebras");
    der->add_option("file", file, "Algebra file")->required();
    der->add_option("--metric", metric_file, "Algebra file whose metric is used for skew derivations");
    der->add_option("--so-aut", so_aut_file, "Builder file: also compute orthogonal automorphisms of G(d)");
    auto* series = app.add_subcommand("series", "Predicted and computed solvable/nilpotent steps of G(d)");
    series->add_option("builder", file, "Builder file")->required();
    auto* corpus = app.add_subcommand("corpus", "List, check or export the built-in examples");
    corpus->add_option("name", corpus_name, "Entry name (omit to list)");
    corpus->add_flag("--emit", do_emit, "Write corpus/<name>.json and builders/<name>.json");
    corpus->add_option("--dir", dir, "Output root for --emit");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Report report;
        if (*check) {
            report = check_report(Input::from_file(file));
        } else if (*extend) {
            report = extend_report(Input::from_file(file));
            write_algebra_of(report, out_path);
        } else if (*gd) {
            report = gd_report(Input::from_file(file));
            write_algebra_of(report, out_path);
        } else if (*geometry) {
            report = geometry_report(Input::from_file(file));
        } else if (*vas) {
            report = verify_as_report(Input::from_file(file));
        } else if (*der) {
            std::optional<Input> metric_in, so_aut_in;
            if (!metric_file.empty())
                metric_in = Input::from_file(metric_file);
            if (!so_aut_file.empty())
                so_aut_in = Input::from_file(so_aut_file);
            report = derivations_report(Input::from_file(file), metric_in ? &*metric_in : nullptr,
                                        so_aut_in ? &*so_aut_in : nullptr);
        } else if (*series) {
            report = series_report(Input::from_file(file));
        } else {
            report = corpus_report(corpus_name, do_emit, dir);
        }
        return emit(report, opt, out);
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return 2;
    }
}

}  // namespace adinvar
