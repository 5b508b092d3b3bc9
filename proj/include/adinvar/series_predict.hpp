#pragma once

#include "adinvar/double_extension.hpp"
#include "adinvar/subspace.hpp"

#include <optional>
#include <string>

namespace adinvar {

/// Predicted versus computed solvability or nilpotency step of G(d).
struct StepReport {
    std::string kind;  // "solvable" or "nilpotent"
    std::size_t step_d = 0;
    std::size_t step_gd_predicted = 0;
    std::size_t step_gd_computed = 0;
    /// Span of the beta values over the relevant pair of subspaces, inside
    /// the h* block of G(d). Zero exactly when the prediction is step_d.
    Subspace witness;
    /// Nilpotent only: the test D^k(d) in the common kernel of pi(h), which
    /// holds trivially once D^k(d) = 0, and the prediction it implies.
    std::optional<bool> displayed_test;
    std::optional<std::size_t> displayed_prediction;
    /// Nilpotent only: D^{k-1}(d) in the common kernel of pi(h).
    std::optional<bool> corrected_test;

    bool agrees() const { return step_gd_predicted == step_gd_computed; }
};

/// Prediction: k iff <pi(h)x, y> = 0 for all h and x, y in C^{k-1}(d),
/// else k + 1. `k` defaults to the step of d; when given it must match.
/// Throws Error(precondition) when d is not solvable or k is wrong.
StepReport predict_solvable_step(const GdAlgebra& gd, std::optional<std::size_t> k = std::nullopt);

/// Prediction: k iff beta(d, D^{k-1}(d)) = 0, i.e. D^{k-1}(d) lies in the
/// common kernel of pi(h); else k + 1.
StepReport predict_nilpotent_step(const GdAlgebra& gd, std::optional<std::size_t> k = std::nullopt);

json step_report_to_json(const StepReport& r);

/// Structure of G(R^{p,q}) for a single skew map A.
struct HeisenbergClass {
    enum class Kind { abelian, heisenberg, central_extension };
    Kind kind = Kind::abelian;
    /// 2s + 1 where 2s = rank A; the Heisenberg factor.
    std::size_t heisenberg_dim = 0;
    /// ker A as a subspace of d.
    Subspace kernel;
    /// Computed center of G(d) and the comparison with R z + ker A.
    Subspace center;
    bool center_matches = false;
    /// Sufficient condition for indecomposability: ker A is nonzero and
    /// totally isotropic.
    bool indecomposable_flag = false;
};
std::string to_string(HeisenbergClass::Kind k);

/// Requires d abelian and dim h = 1 (Error(precondition) otherwise).
HeisenbergClass heisenberg_recognizer(const GdAlgebra& gd);

}  // namespace adinvar
