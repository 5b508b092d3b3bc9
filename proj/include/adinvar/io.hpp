#pragma once

#include "adinvar/double_extension.hpp"
#include "adinvar/lie_algebra.hpp"
#include "adinvar/report.hpp"
#include "adinvar/tensor.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace adinvar {

/// Contents of an algebra file:
///   { "dim": n, "names": [...], "brackets": [[i,j,k,"p/q"], ...],
///     "metric": [[i,j,"p/q"], ...] }
/// with 1-based indices, i < j for brackets and i <= j for the metric.
struct AlgebraFile {
    LieAlgebra algebra;
    std::optional<BilinearForm> metric;
};

/// Errors are Error(parse) whose message names the offending field, e.g.
/// "brackets[2][1]: index 7 out of range 1..5". `source` prefixes messages.
AlgebraFile parse_algebra(const json& j, const std::string& source = "algebra");
json algebra_to_json(const LieAlgebra& l, const BilinearForm* metric = nullptr);

/// Builder file: { "d": <algebra object or relative path>, "h": <same>,
///                 "pi": [matrix per basis element of h], "dual_names": [...] }
/// d and h must carry a "metric" field (an empty list is the zero form).
ExtensionData parse_builder(const json& j, const std::filesystem::path& base_dir, const std::string& source = "builder");
json builder_to_json(const ExtensionData& data);

/// Reads and parses JSON text, reporting syntax errors as
/// "<file>:<line>:<column>: <message>" in an Error(parse).
json read_json_file(const std::filesystem::path& path);
AlgebraFile read_algebra_file(const std::filesystem::path& path);
ExtensionData read_builder_file(const std::filesystem::path& path);
/// True when the JSON object looks like a builder (has "pi").
bool is_builder(const json& j);

json scalar_to_json(const Scalar& s);
json vec_to_json(const Vec& v);
json matrix_to_json(const Matrix& m);
Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& field);
Scalar parse_scalar_json(const json& j, const std::string& field);
/// Sparse listing [[i,j,k,"v"], ...] of nonzero entries, 1-based.
json tensor_to_json(const Tensor3& t);
json tensor_to_json(const Tensor4& t);
json subspace_to_json(const Subspace& s);

}  // namespace adinvar
