#pragma once

#include "adinvar/bilinear_form.hpp"
#include "adinvar/double_extension.hpp"
#include "adinvar/lie_algebra.hpp"
#include "adinvar/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace adinvar {

/// Lie algebra of n x n matrices, held in the canonical echelon basis of the
/// flattened (row-major) matrices, together with its structure constants.
class MatrixLieAlgebra {
public:
    /// Spans the given matrices. Throws Error(internal) when the span is not
    /// closed under commutators.
    MatrixLieAlgebra(std::size_t n, const std::vector<Matrix>& spanning);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Matrix>& basis() const { return basis_; }
    /// Subspace of flattened matrices (ambient n^2).
    const Subspace& span() const { return span_; }
    bool contains(const Matrix& m) const;
    std::optional<Vec> coordinates(const Matrix& m) const;
    /// Structure constants in basis().
    const LieAlgebra& abstract() const { return abstract_; }

private:
    std::size_t n_;
    Subspace span_;
    std::vector<Matrix> basis_;
    LieAlgebra abstract_;
};

/// {D : D[x,y] = [Dx,y] + [x,Dy]}.
MatrixLieAlgebra derivation_algebra(const LieAlgebra& l);
/// Derivations that are skew for B.
MatrixLieAlgebra skew_derivations(const LieAlgebra& l, const BilinearForm& b);
/// span{ad x}.
MatrixLieAlgebra inner_derivations(const LieAlgebra& l);
/// Matrices commuting with every ops[k] and skew for b.
MatrixLieAlgebra intertwiners_skew(const std::vector<Matrix>& ops, const BilinearForm& b);
MatrixLieAlgebra intertwiners_skew(const Representation& rep);

/// Orthogonal automorphism algebra of G(d): pairs (A on h* in the ell-basis,
/// B on d) with A skew for <,>_h, B a skew derivation of d and
/// [B, pi(h_j)] = pi(A h_j).
struct SoAut {
    std::vector<std::pair<Matrix, Matrix>> pairs;
    /// The same algebra acting on G(d) as blockdiag(B, A).
    MatrixLieAlgebra operators;
    std::size_t dim() const { return pairs.size(); }
};
SoAut so_aut(const GdAlgebra& gd);
/// Pairs (ad_h(h_i), pi(h_i)); each lies in so_aut.
std::vector<std::pair<Matrix, Matrix>> induced_pairs(const GdAlgebra& gd);
bool so_aut_contains(const SoAut& s, const GdAlgebra& gd, const Matrix& a, const Matrix& b);
/// Skew derivations of G(d) that preserve d and h* (block diagonal).
MatrixLieAlgebra block_skew_derivations(const GdAlgebra& gd);

struct Profile {
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    std::vector<std::size_t> derived_dims;
    std::vector<std::size_t> lower_central_dims;
    std::optional<std::size_t> solvable_step;
    std::optional<std::size_t> nilpotent_step;
    Signature killing;
    bool perfect = false;
    /// Solvable radical, computed as the Killing-orthogonal of [g,g].
    std::size_t radical_dim = 0;
    std::optional<std::size_t> radical_nilpotent_step;
};
Profile profile(const LieAlgebra& l);
Profile profile(const MatrixLieAlgebra& m);
json profile_to_json(const Profile& p);

/// True iff phi B phi^{-1} = lambda A + ad(t). Throws Error(precondition)
/// when phi is singular or A, B are not derivations of d.
bool equivalence_check(const LieAlgebra& d, const Matrix& a, const Matrix& b, const Scalar& lambda, const Vec& t,
                       const Matrix& phi);

/// Skew-derivation data for one member of a family of invariant forms.
struct FormSweepEntry {
    Vec coefficients;
    BilinearForm form;
    std::size_t skew_dim = 0;
    Profile skew_profile;
};
/// Every nondegenerate combination sum c_i B_i of the invariant-form basis
/// with coefficients drawn from `grid`, processed in parallel; results are in
/// lexicographic coefficient order.
std::vector<FormSweepEntry> sweep_invariant_forms(const LieAlgebra& l, const std::vector<Scalar>& grid);

}  // namespace adinvar
