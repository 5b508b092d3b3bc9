#pragma once

#include "adinvar/double_extension.hpp"
#include "adinvar/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adinvar {

/// Abelian R^{p,q}: p negative and q positive squares, basis e1..e_{p+q}.
MetricLieAlgebra rpq(std::size_t p, std::size_t q);
/// One-dimensional h = R z with <z,z> = norm.
MetricLieAlgebra line(const Scalar& norm, const std::string& name = "z");

Matrix t_plus();
Matrix t_minus();
/// The skew map on R^{1,2} producing a(1,2).
Matrix f3_operator();

/// a(1,2) in the basis (e4, e1, e2, e3, e0).
LieAlgebra a12_algebra();
/// <e1,e1> = -1, <e2,e2> = <e3,e3> = <e4,e4> = <e0,e4> = 1, other pairs 0.
BilinearForm f3_form();
/// Invariant form on a(1,2) for which H, E, F are skew:
/// <e4,e0> = <e2,e2> = <e1,e3> = 1, <e3,e3> = 2, other pairs 0.
BilinearForm a12_skew_form();
/// The skew derivations H, E, F, X, Y, Z of a(1,2), in the (e4,e1,e2,e3,e0) basis.
std::map<std::string, Matrix> a12_derivations();

struct CorpusEntry {
    std::string name;
    std::string description;
    ExtensionData data;
    /// True for entries whose primary object is the double extension rather
    /// than G(d); decides what `corpus --emit` writes.
    bool extension_primary = false;
    /// Reference bracket lists kept as text, never asserted.
    std::vector<std::string> annotations;
};

std::vector<std::string> corpus_list();
/// Throws Error(invalid_input) for an unknown name.
CorpusEntry corpus_entry(const std::string& name);

struct CorpusBuild {
    CorpusEntry entry;
    DoubleExtension extension;
    std::optional<GdAlgebra> gd;
    /// Generic invariants plus the entry's expected values.
    Report report;
};
CorpusBuild corpus_build(const std::string& name);

}  // namespace adinvar
