#include "adinvar/io.hpp"

#include "adinvar/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace adinvar {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& msg) {
    throw Error(ErrorKind::parse, source + ": " + field + ": " + msg);
}

std::size_t parse_index(const json& j, std::size_t dim, const std::string& source, const std::string& field) {
    if (!j.is_number_integer())
        fail(source, field, "expected an integer index");
    const long long v = j.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > dim)
        fail(source, field, "index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v - 1);
}

const json& require(const json& j, const char* key, const std::string& source) {
    if (!j.is_object())
        fail(source, "<root>", "expected a JSON object");
    if (!j.contains(key))
        fail(source, key, "missing field");
    return j.at(key);
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

Scalar parse_scalar_json(const json& j, const std::string& field) {
    if (j.is_number_integer())
        return Scalar(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const Error& e) {
            throw Error(ErrorKind::parse, field + ": " + e.what());
        }
    }
    throw Error(ErrorKind::parse, field + ": expected a rational as a string \"p/q\" or an integer");
}

json scalar_to_json(const Scalar& s) { return to_string(s); }

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const auto& s : v)
        a.push_back(to_string(s));
    return a;
}

json matrix_to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        a.push_back(vec_to_json(m.row(r)));
    return a;
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& field) {
    if (!j.is_array() || j.size() != rows)
        throw Error(ErrorKind::parse, field + ": expected an array of " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rf = field + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != cols)
            throw Error(ErrorKind::parse, rf + ": expected a row of " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = parse_scalar_json(j[r][c], rf + "[" + std::to_string(c) + "]");
    }
    return m;
}

AlgebraFile parse_algebra(const json& j, const std::string& source) {
    const json& jd = require(j, "dim", source);
    if (!jd.is_number_integer() || jd.get<long long>() < 0)
        fail(source, "dim", "expected a nonnegative integer");
    const auto dim = static_cast<std::size_t>(jd.get<long long>());

    std::vector<std::string> names;
    if (j.contains("names")) {
        const json& jn = j.at("names");
        if (!jn.is_array() || jn.size() != dim)
            fail(source, "names", "expected an array of " + std::to_string(dim) + " strings");
        for (std::size_t i = 0; i < dim; ++i) {
            if (!jn[i].is_string())
                fail(source, "names[" + std::to_string(i) + "]", "expected a string");
            names.push_back(jn[i].get<std::string>());
        }
    }

    std::vector<BracketEntry> entries;
    if (j.contains("brackets")) {
        const json& jb = j.at("brackets");
        if (!jb.is_array())
            fail(source, "brackets", "expected an array");
        std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
        for (std::size_t e = 0; e < jb.size(); ++e) {
            const std::string f = "brackets[" + std::to_string(e) + "]";
            const json& row = jb[e];
            if (!row.is_array() || row.size() != 4)
                fail(source, f, "expected [i, j, k, value]");
            const std::size_t i = parse_index(row[0], dim, source, f + "[0]");
            const std::size_t jj = parse_index(row[1], dim, source, f + "[1]");
            const std::size_t k = parse_index(row[2], dim, source, f + "[2]");
            if (i >= jj)
                fail(source, f, "bracket entries need i < j (antisymmetry supplies the rest)");
            if (!seen.insert({i, jj, k}).second)
                fail(source, f, "duplicate entry for (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + "," +
                                    std::to_string(k + 1) + ")");
            entries.push_back({i, jj, k, parse_scalar_json(row[3], source + ": " + f + "[3]")});
        }
    }

    AlgebraFile out{LieAlgebra(dim, names, entries), std::nullopt};
    if (j.contains("metric")) {
        const json& jm = j.at("metric");
        if (!jm.is_array())
            fail(source, "metric", "expected an array");
        Matrix g(dim, dim);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t e = 0; e < jm.size(); ++e) {
            const std::string f = "metric[" + std::to_string(e) + "]";
            const json& row = jm[e];
            if (!row.is_array() || row.size() != 3)
                fail(source, f, "expected [i, j, value]");
            const std::size_t i = parse_index(row[0], dim, source, f + "[0]");
            const std::size_t jj = parse_index(row[1], dim, source, f + "[1]");
            if (i > jj)
                fail(source, f, "metric entries need i <= j (symmetry supplies the rest)");
            if (!seen.insert({i, jj}).second)
                fail(source, f, "duplicate entry for (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + ")");
            g(i, jj) = g(jj, i) = parse_scalar_json(row[2], source + ": " + f + "[2]");
        }
        out.metric = BilinearForm(g);
    }
    return out;
}

json algebra_to_json(const LieAlgebra& l, const BilinearForm* metric) {
    json j;
    j["dim"] = l.dim();
    j["names"] = l.names();
    json br = json::array();
    for (const auto& e : l.entries())
        br.push_back({e.i + 1, e.j + 1, e.k + 1, to_string(e.value)});
    j["brackets"] = br;
    if (metric) {
        json m = json::array();
        for (std::size_t i = 0; i < metric->dim(); ++i)
            for (std::size_t k = i; k < metric->dim(); ++k)
                if (!is_zero((*metric)(i, k)))
                    m.push_back({i + 1, k + 1, to_string((*metric)(i, k))});
        j["metric"] = m;
    }
    return j;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::parse, path.string() + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        throw Error(ErrorKind::parse,
                    path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }
}

AlgebraFile read_algebra_file(const std::filesystem::path& path) {
    return parse_algebra(read_json_file(path), path.string());
}

namespace {
MetricLieAlgebra builder_part(const json& j, const char* key, const std::filesystem::path& base,
                              const std::string& source) {
    const json& v = require(j, key, source);
    AlgebraFile f;
    std::string sub = source + ": " + key;
    if (v.is_string()) {
        const std::filesystem::path p = base / v.get<std::string>();
        f = read_algebra_file(p);
        sub = p.string();
    } else {
        f = parse_algebra(v, sub);
    }
    if (!f.metric)
        fail(sub, "metric", "missing field (required in builder inputs; use [] for the zero form)");
    return {std::move(f.algebra), std::move(*f.metric)};
}
}  // namespace

ExtensionData parse_builder(const json& j, const std::filesystem::path& base_dir, const std::string& source) {
    ExtensionData data;
    data.d = builder_part(j, "d", base_dir, source);
    data.h = builder_part(j, "h", base_dir, source);
    const json& jp = require(j, "pi", source);
    const std::size_t m = data.h.algebra.dim();
    const std::size_t n = data.d.algebra.dim();
    if (!jp.is_array() || jp.size() != m)
        fail(source, "pi", "expected " + std::to_string(m) + " matrices, one per basis element of h");
    for (std::size_t a = 0; a < m; ++a)
        data.pi.push_back(parse_matrix(jp[a], n, n, source + ": pi[" + std::to_string(a) + "]"));
    if (j.contains("dual_names")) {
        const json& jn = j.at("dual_names");
        if (!jn.is_array() || jn.size() != m)
            fail(source, "dual_names", "expected an array of " + std::to_string(m) + " strings");
        for (std::size_t a = 0; a < m; ++a) {
            if (!jn[a].is_string())
                fail(source, "dual_names[" + std::to_string(a) + "]", "expected a string");
            data.dual_names.push_back(jn[a].get<std::string>());
        }
    }
    return data;
}

json builder_to_json(const ExtensionData& data) {
    json j;
    j["d"] = algebra_to_json(data.d.algebra, &data.d.form);
    j["h"] = algebra_to_json(data.h.algebra, &data.h.form);
    if (!j["d"].contains("metric"))
        j["d"]["metric"] = json::array();
    if (!j["h"].contains("metric"))
        j["h"]["metric"] = json::array();
    json pi = json::array();
    for (const auto& p : data.pi)
        pi.push_back(matrix_to_json(p));
    j["pi"] = pi;
    if (!data.dual_names.empty())
        j["dual_names"] = data.dual_names;
    return j;
}

ExtensionData read_builder_file(const std::filesystem::path& path) {
    return parse_builder(read_json_file(path), path.parent_path(), path.string());
}

bool is_builder(const json& j) { return j.is_object() && j.contains("pi"); }

json tensor_to_json(const Tensor3& t) {
    json a = json::array();
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(t.at(i, j, k)))
                    a.push_back({i + 1, j + 1, k + 1, to_string(t.at(i, j, k))});
    return a;
}

json tensor_to_json(const Tensor4& t) {
    json a = json::array();
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (!is_zero(t.at(i, j, k, l)))
                        a.push_back({i + 1, j + 1, k + 1, l + 1, to_string(t.at(i, j, k, l))});
    return a;
}

json subspace_to_json(const Subspace& s) {
    json a = json::array();
    for (const auto& v : s.basis())
        a.push_back(vec_to_json(v));
    return a;
}

}  // namespace adinvar
