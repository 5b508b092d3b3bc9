#pragma once

#include "adinvar/matrix.hpp"
#include "adinvar/subspace.hpp"

#include <compare>

namespace adinvar {

/// Counts of negative, positive and zero squares after congruence
/// diagonalization. R^{p,q} has p negatives and q positives.
struct Signature {
    std::size_t negative = 0;
    std::size_t positive = 0;
    std::size_t zero = 0;

    friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// Orthogonal basis produced by symmetric congruence: columns of `basis`
/// are pairwise orthogonal and column k has self-pairing norms[k].
struct OrthogonalBasis {
    Matrix basis;
    Vec norms;
};

class BilinearForm {
public:
    BilinearForm() = default;
    /// Throws Error(invalid_input) unless gram is square and symmetric.
    explicit BilinearForm(Matrix gram);

    static BilinearForm zero(std::size_t n);
    static BilinearForm identity(std::size_t n);
    static BilinearForm diagonal(const Vec& entries);

    std::size_t dim() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }
    Scalar operator()(const Vec& x, const Vec& y) const;

    const Signature& signature() const { return signature_; }
    bool nondegenerate() const { return signature_.zero == 0; }
    const OrthogonalBasis& orthogonal_basis() const { return diag_; }
    Subspace radical() const;
    /// Gram matrix of the form on the given vectors.
    BilinearForm restricted(const std::vector<Vec>& vectors) const;

    friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.gram_ == b.gram_; }

private:
    Matrix gram_;
    Signature signature_;
    OrthogonalBasis diag_;
};

/// Block-diagonal sum of two forms.
BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b);

inline const Signature& signature(const BilinearForm& b) { return b.signature(); }

/// Symmetric congruence diagonalization. When every remaining diagonal entry
/// vanishes but an off-diagonal one does not, the pivot vector is replaced
/// by e_i + e_j first (hyperbolic pair rotation).
OrthogonalBasis congruence_diagonalize(const Matrix& gram);

/// {v : B(s, v) = 0 for all s in S}.
Subspace orthogonal_complement(const Subspace& s, const BilinearForm& b);
bool totally_isotropic(const Subspace& s, const BilinearForm& b);
/// True iff the restriction of B to S is nondegenerate.
bool nondegenerate_on(const Subspace& s, const BilinearForm& b);

}  // namespace adinvar
