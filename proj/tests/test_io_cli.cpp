#include "doctest.h"

#include "adinvar/cli.hpp"
#include "adinvar/corpus.hpp"
#include "adinvar/error.hpp"
#include "adinvar/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace adinvar;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("adinvar_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
}

std::string parse_error_of(const std::string& text) {
    try {
        parse_algebra(json::parse(text), "t");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("algebra files round trip for every corpus object") {
        for (const auto& name : corpus_list()) {
            CAPTURE(name);
            const CorpusBuild b = corpus_build(name);
            std::vector<std::pair<const LieAlgebra*, const BilinearForm*>> objs{{&b.extension.g, &b.extension.q}};
            if (b.gd)
                objs.push_back({&b.gd->algebra(), &b.gd->metric()});
            for (const auto& [l, m] : objs) {
                const json j = algebra_to_json(*l, m);
                const AlgebraFile back = parse_algebra(json::parse(j.dump()));
                CHECK(back.algebra == *l);
                CHECK(back.algebra.names() == l->names());
                REQUIRE(back.metric);
                CHECK(*back.metric == *m);
                CHECK(algebra_to_json(back.algebra, &*back.metric) == j);
            }
        }
    }

    TEST_CASE("builder files round trip") {
        for (const auto& name : corpus_list()) {
            const ExtensionData data = corpus_entry(name).data;
            const ExtensionData back = parse_builder(json::parse(builder_to_json(data).dump()), ".");
            CHECK(back.d.algebra == data.d.algebra);
            CHECK(back.d.form == data.d.form);
            CHECK(back.h.algebra == data.h.algebra);
            CHECK(back.h.form == data.h.form);
            CHECK(back.pi == data.pi);
        }
    }

    TEST_CASE("rationals are written as strings") {
        CHECK(scalar_to_json(Scalar(-3, 4)) == json("-3/4"));
        CHECK(parse_scalar_json(json(5), "x") == 5);
        CHECK(parse_scalar_json(json("2/6"), "x") == Scalar(1, 3));
        CHECK_THROWS_AS(parse_scalar_json(json(0.5), "x"), Error);
    }

    TEST_CASE("parse diagnostics name the field") {
        CHECK(parse_error_of(R"({"dim": 3, "brackets": [[1, 2, 7, "1"]]})").find("brackets[0][2]") != std::string::npos);
        CHECK(parse_error_of(R"({"dim": 3, "brackets": [[2, 1, 3, "1"]]})").find("brackets[0]") != std::string::npos);
        CHECK(parse_error_of(R"({"dim": 3, "brackets": [[1, 2, 3, "x"]]})").find("brackets[0][3]") != std::string::npos);
        CHECK(parse_error_of(R"({"dim": 2, "metric": [[2, 1, "1"]]})").find("metric[0]") != std::string::npos);
        CHECK(parse_error_of(R"({"brackets": []})").find("dim") != std::string::npos);
        CHECK(parse_error_of(R"({"dim": 2, "names": ["a"]})").find("names") != std::string::npos);
    }

    TEST_CASE("JSON syntax errors carry line and column") {
        const fs::path dir = scratch("syntax");
        write(dir / "bad.json", "{\n  \"dim\": 3,\n  \"brackets\": [,]\n}\n");
        try {
            read_algebra_file(dir / "bad.json");
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::parse);
            CHECK(std::string(e.what()).find("bad.json:3:") != std::string::npos);
        }
    }

    TEST_CASE("builder files may reference algebra files") {
        const fs::path dir = scratch("refs");
        const MetricLieAlgebra d = rpq(0, 2), h = line(1);
        write(dir / "d.json", algebra_to_json(d.algebra, &d.form).dump());
        write(dir / "h.json", algebra_to_json(h.algebra, &h.form).dump());
        json b;
        b["d"] = "d.json";
        b["h"] = "h.json";
        b["pi"] = json::array({matrix_to_json(t_plus())});
        write(dir / "b.json", b.dump());
        const ExtensionData data = read_builder_file(dir / "b.json");
        CHECK(data.pi.front() == t_plus());
        CHECK(data.d.form == d.form);
    }
}

TEST_SUITE("cli") {
    TEST_CASE("corpus emit then check and verify-as the emitted files") {
        const fs::path dir = scratch("emit");
        const Run e = cli({"corpus", "--emit", "--dir", dir.string()});
        CHECK(e.code == 0);
        for (const auto& name : corpus_list()) {
            CAPTURE(name);
            const std::string alg = (dir / "corpus" / (name + ".json")).string();
            const std::string bld = (dir / "builders" / (name + ".json")).string();
            CHECK(cli({"check", alg}).code == 0);
            CHECK(cli({"verify-as", bld}).code == 0);
            CHECK(cli({"series", bld}).code == 0);
            CHECK(cli({"gd", bld}).code == 0);
            CHECK(cli({"extend", bld}).code == 0);
        }
        const std::string a12 = (dir / "corpus" / "a12.json").string();
        const AlgebraFile af = read_algebra_file(a12);
        CHECK(af.algebra == a12_algebra());
        CHECK(*af.metric == f3_form());
    }

    TEST_CASE("broken Jacobi exits 1 with the witness triple") {
        const fs::path dir = scratch("jacobi");
        write(dir / "bad.json", R"({"dim": 3, "brackets": [[1, 2, 3, "1"], [1, 3, 1, "1"]]})");
        const Run r = cli({"check", (dir / "bad.json").string()});
        CHECK(r.code == 1);
        CHECK(r.out.find("FAIL  jacobi") != std::string::npos);
        CHECK(r.out.find("(1,2,3)") != std::string::npos);
        const Run j = cli({"check", (dir / "bad.json").string(), "--json"});
        const json rep = json::parse(j.out);
        CHECK(rep["checks"][0]["witnesses"][0] == json::array({1, 2, 3}));
    }

    TEST_CASE("malformed input exits 2") {
        const fs::path dir = scratch("malformed");
        write(dir / "bad.json", R"({"dim": 3, "brackets": [[1, 2, 9, "1"]]})");
        const Run r = cli({"check", (dir / "bad.json").string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("brackets[0][2]") != std::string::npos);
        CHECK(cli({"check", (dir / "missing.json").string()}).code == 2);
        CHECK(cli({"frobnicate"}).code == 2);
        CHECK(cli({}).code == 2);
        CHECK(cli({"corpus", "no_such_entry"}).code == 2);
    }

    TEST_CASE("invalid representation exits 1 and lists diagnostics") {
        const fs::path dir = scratch("badrep");
        ExtensionData data{rpq(0, 2), line(1), {t_minus()}, {}};
        write(dir / "b.json", builder_to_json(data).dump());
        const Run r = cli({"verify-as", (dir / "b.json").string()});
        CHECK(r.code == 1);
        CHECK(r.out.find("input.pi[1].skew") != std::string::npos);
    }

    TEST_CASE("reports are deterministic and --report writes the file") {
        const fs::path dir = scratch("determinism");
        cli({"corpus", "gF", "--emit", "--dir", dir.string()});
        const std::string bld = (dir / "builders" / "gF.json").string();
        for (const auto& cmd : {"verify-as", "geometry", "series"}) {
            const Run a = cli({cmd, bld, "--json"});
            const Run b = cli({cmd, bld, "--json"});
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
        const fs::path out = dir / "report.json";
        const Run r = cli({"geometry", bld, "--report", out.string()});
        CHECK(r.code == 0);
        CHECK(r.out == "result: pass\n");
        const json rep = read_json_file(out);
        CHECK(rep["command"] == "geometry " + bld);
        CHECK(rep["data"].contains("sectional"));
        CHECK(rep["data"]["ricci_operator_charpoly"].size() == 7);
    }

    TEST_CASE("derivations subcommand") {
        const fs::path dir = scratch("derivations");
        cli({"corpus", "h3_metric_0", "--emit", "--dir", dir.string()});
        const BilinearForm skew = a12_skew_form();
        write(dir / "a12.json", algebra_to_json(a12_algebra(), &skew).dump());
        const Run r = cli({"derivations", (dir / "a12.json").string(), "--json"});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["data"]["derivations"]["dim"] == 10);
        CHECK(j["data"]["skew_derivations"]["dim"] == 6);
        CHECK(j["data"]["inner_derivations"]["dim"] == 3);
        const Run s = cli({"derivations", (dir / "corpus" / "h3_metric_0.json").string(), "--so-aut",
                           (dir / "builders" / "h3_metric_0.json").string(), "--json"});
        CHECK(s.code == 0);
        CHECK(json::parse(s.out)["data"]["so_aut"]["dim"] == 1);
    }

    TEST_CASE("geometry on a plain algebra file needs a metric") {
        const fs::path dir = scratch("geometry");
        write(dir / "nometric.json", R"({"dim": 3, "brackets": [[1, 2, 3, "1"]]})");
        CHECK(cli({"geometry", (dir / "nometric.json").string()}).code == 2);
        const BilinearForm f3 = f3_form();
        write(dir / "a12.json", algebra_to_json(a12_algebra(), &f3).dump());
        const Run r = cli({"geometry", (dir / "a12.json").string()});
        CHECK(r.code == 0);
        CHECK(r.out.find("PASS  geometry.bi_invariant_identity") != std::string::npos);
    }
}
