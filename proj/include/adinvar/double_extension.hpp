#pragma once

#include "adinvar/bilinear_form.hpp"
#include "adinvar/lie_algebra.hpp"
#include "adinvar/report.hpp"
#include "adinvar/subspace.hpp"
#include "adinvar/tensor.hpp"

#include <string>
#include <vector>

namespace adinvar {

/// Input of the construction: (d, <,>_d), (h, <,>_h) and one operator
/// pi(h_i) on d per basis element of h.
struct ExtensionData {
    MetricLieAlgebra d;
    MetricLieAlgebra h;
    std::vector<Matrix> pi;
    /// Labels for the h* basis; defaults to the h labels with a trailing '*'.
    std::vector<std::string> dual_names;
};

/// A violated requirement on ExtensionData. `name` is stable
/// (e.g. "pi[2].skew", "pi.homomorphism(1,2)") and indices are 1-based.
struct Diagnostic {
    std::string name;
    std::string detail;
};

/// Every violated requirement. With `require_nondegenerate_h` the form on h
/// must also be nondegenerate.
std::vector<Diagnostic> validate(const ExtensionData& data, bool require_nondegenerate_h = false);

/// Certified homomorphism pi: h -> skew derivations of (d, <,>_d).
class Representation {
public:
    /// Throws Error(invalid_representation) listing every diagnostic.
    explicit Representation(ExtensionData data);

    const ExtensionData& data() const { return data_; }
    const LieAlgebra& h_alg() const { return data_.h.algebra; }
    const LieAlgebra& d_alg() const { return data_.d.algebra; }
    const BilinearForm& d_metric() const { return data_.d.form; }
    const BilinearForm& h_form() const { return data_.h.form; }
    const std::vector<Matrix>& mats() const { return data_.pi; }
    std::size_t h_dim() const { return data_.h.algebra.dim(); }
    std::size_t d_dim() const { return data_.d.algebra.dim(); }

    /// pi(h) for h in h-coordinates.
    Matrix operator()(const Vec& h) const;

private:
    ExtensionData data_;
};

/// g = h + d + h*, basis ordered (h | d | h*); the h* block uses the dual
/// basis eps^j of the h basis, so Q(h_i, eps^j) = delta_ij.
struct DoubleExtension {
    Representation rep;
    LieAlgebra g;
    BilinearForm q;
    /// Same as q with the h-h block negated.
    BilinearForm q_minus;
    Subspace h_part;
    Subspace d_part;
    Subspace dual_part;

    std::size_t h_dim() const { return rep.h_dim(); }
    std::size_t d_dim() const { return rep.d_dim(); }
};

DoubleExtension double_extend(const Representation& rep);

/// G(d) = d + h*, basis ordered (d | h*). The h* basis is the image of the
/// h basis under ell: h -> h*, so the h* block of the metric is the Gram
/// matrix of <,>_h and h*-coordinates coincide with h-coordinates of the
/// ell-preimage.
class GdAlgebra {
public:
    /// Throws Error(degenerate_form) when <,>_h is degenerate.
    explicit GdAlgebra(Representation rep);

    const Representation& rep() const { return rep_; }
    const LieAlgebra& algebra() const { return algebra_; }
    const BilinearForm& metric() const { return metric_; }
    std::size_t d_dim() const { return rep_.d_dim(); }
    std::size_t h_dim() const { return rep_.h_dim(); }
    std::size_t dim() const { return d_dim() + h_dim(); }

    /// Matrix of ell in (h basis -> eps basis), i.e. the Gram matrix of <,>_h.
    const Matrix& ell() const { return ell_; }
    const Matrix& ell_inverse() const { return ell_inv_; }

    /// Values beta(x, y)(h_j) = <pi(h_j) x, y>_d for x, y in d-coordinates.
    Vec beta_values(const Vec& x, const Vec& y) const;
    /// beta*(x, y) = ell^{-1} beta(x, y), in h-coordinates.
    Vec beta_star(const Vec& x, const Vec& y) const;
    /// beta_star(e_i, e_j) on basis vectors of d (precomputed).
    const Vec& beta_table(std::size_t i, std::size_t j) const { return beta_table_[i * d_dim() + j]; }

    /// pi(h) on d, h in h-coordinates.
    Matrix pi(const Vec& h) const { return rep_(h); }
    /// mu(h) = pi(h) on d, ad_h(h) on h* (ell-basis), as an operator on G(d).
    const Matrix& mu(std::size_t i) const { return mu_[i]; }
    Matrix mu(const Vec& h) const;

    /// Embeddings and projections between G(d) and its blocks.
    Vec from_d(const Vec& x) const;
    Vec from_dual(const Vec& h) const;
    Vec d_part(const Vec& v) const;
    Vec dual_part(const Vec& v) const;
    const Subspace& d_block() const { return d_block_; }
    const Subspace& dual_block() const { return dual_block_; }

private:
    Representation rep_;
    LieAlgebra algebra_;
    BilinearForm metric_;
    Matrix ell_;
    Matrix ell_inv_;
    std::vector<Vec> beta_table_;
    std::vector<Matrix> mu_;
    Subspace d_block_;
    Subspace dual_block_;
};

GdAlgebra build_gd(const Representation& rep);

/// mu(h) for h in h-coordinates.
Matrix mu(const GdAlgebra& gd, const Vec& h);

/// Matrix of lambda: G(d) -> g (columns are images of the G(d) basis):
/// x -> (0, x, 0) and ell(h) -> (h, 0, ell(h)).
Matrix lambda_map(const GdAlgebra& gd, const DoubleExtension& x);

/// Consistency checks on a double extension: Jacobi, ad-invariance of Q and
/// Q_minus, signature additivity, h a subalgebra, d + h* an ideal.
std::vector<Check> verify_double_extension(const DoubleExtension& x);

/// Checks on G(d): Jacobi, metric blocks, h* central, the pairing relation
/// <ell(h), [x1,x2]> = <pi(h)x1, x2>_d, the transfer identity for beta*,
/// and that mu is a homomorphism into skew derivations.
std::vector<Check> verify_gd(const GdAlgebra& gd);

/// lambda is an isometry onto m = h^perp (Q_minus).
std::vector<Check> verify_lambda(const GdAlgebra& gd, const DoubleExtension& x);

struct ReductiveSplit {
    Subspace h;
    Subspace m;
    std::vector<Check> checks;
    bool naturally_reductive() const;
};

/// m = h^perp in (g, Q). Checks that h is a subalgebra, [h,m] lies in m and
/// <[x,y]_m, z> + <y, [x,z]_m> = 0 on m. Throws Error(degenerate_form) when
/// Q is degenerate on h.
ReductiveSplit reductive_split(const LieAlgebra& g, const BilinearForm& q, const Subspace& h);
ReductiveSplit reductive_split(const DoubleExtension& x);

/// Reconstruction of the invariant form on gbar = m + [m,m] from a
/// naturally reductive inner product on m.
struct KostantForm {
    Subspace gbar;
    Subspace isotropy;  // h intersected with gbar
    /// Columns: basis of isotropy followed by the basis of m.
    Matrix basis;
    /// The form in that basis.
    BilinearForm q;
    std::size_t equations = 0;
    bool nondegenerate_on_isotropy = false;
};

/// `inner` is given on the echelon basis of m. Throws
/// Error(not_naturally_reductive) when the defining system is inconsistent
/// or the result is not ad-invariant, and Error(precondition) when the
/// h-parts of brackets of m fail to span h intersected with gbar.
KostantForm kostant_form(const LieAlgebra& g, const Subspace& h, const Subspace& m, const BilinearForm& inner);

/// Torsion -[x,y]_m and curvature -[[x,y]_h, z] of the canonical
/// connection, over the echelon basis of m.
struct CanonicalConnection {
    Tensor3 torsion;
    Tensor4 curvature;
};
CanonicalConnection canonical_connection(const LieAlgebra& g, const Subspace& h, const Subspace& m);

}  // namespace adinvar
