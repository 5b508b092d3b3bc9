#pragma once

#include "adinvar/bilinear_form.hpp"
#include "adinvar/matrix.hpp"
#include "adinvar/subspace.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adinvar {

/// [e_i, e_j] has coefficient `value` on e_k. Indices are 0-based, i < j.
struct BracketEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Scalar value;
};

/// Finite-dimensional algebra given by structure constants. Only pairs i < j
/// are stored; [e_j, e_i] = -[e_i, e_j] and [e_i, e_i] = 0 are implied, so
/// antisymmetry holds by construction. Jacobi is NOT enforced here: use
/// check_jacobi / require_jacobi (builders do so on everything they return).
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// Throws Error(invalid_input) on out-of-range indices, i >= j or a
    /// repeated (i, j, k) triple. Entries with value zero are dropped.
    LieAlgebra(std::size_t dim, std::vector<std::string> names, const std::vector<BracketEntry>& entries);

    static LieAlgebra abelian(std::size_t dim, std::vector<std::string> names = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }

    /// [e_i, e_j] for basis vectors.
    Vec bracket(std::size_t i, std::size_t j) const;
    /// Bilinear expansion; throws Error(dimension_mismatch) on bad lengths.
    Vec bracket(const Vec& x, const Vec& y) const;
    /// ad(e_i) as an operator matrix.
    const Matrix& ad(std::size_t i) const { return ad_[i]; }
    Matrix ad(const Vec& x) const;

    /// Nonzero entries, sorted by (i, j, k).
    std::vector<BracketEntry> entries() const;
    bool is_abelian() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

private:
    std::size_t pair_index(std::size_t i, std::size_t j) const;

    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;  // per pair i < j
    std::vector<Matrix> ad_;
};

struct JacobiViolation {
    std::size_t i, j, k;  // 0-based, i < j < k
    Vec cyclic_sum;
};

/// All basis triples i < j < k whose cyclic sum
/// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] is nonzero.
std::vector<JacobiViolation> check_jacobi(const LieAlgebra& l);
/// Throws Error(internal) naming the first violating triple.
void require_jacobi(const LieAlgebra& l, const std::string& context);

/// B([x,y],z) = -B(y,[x,z]) on all basis triples.
bool ad_invariant(const LieAlgebra& l, const BilinearForm& b);

/// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
bool is_derivation(const LieAlgebra& l, const Matrix& d);
/// B(Mx,y) + B(x,My) = 0, i.e. B M + M^T B = 0.
bool is_skew(const Matrix& m, const BilinearForm& b);

/// [S, T] spanned by brackets of basis vectors.
Subspace bracket_span(const LieAlgebra& l, const Subspace& s, const Subspace& t);
Subspace center(const LieAlgebra& l);
bool is_subalgebra(const LieAlgebra& l, const Subspace& s);
bool is_ideal(const LieAlgebra& l, const Subspace& s);

/// Terms C^0 = g, C^1, ... (or D^0, D^1, ...) until two consecutive terms
/// coincide. `step` is the k with term k = 0 != term k-1, when one exists.
struct Series {
    std::vector<Subspace> terms;
    std::optional<std::size_t> step;
};

Series derived_series(const LieAlgebra& l);
Series lower_central_series(const LieAlgebra& l);

/// Basis of the space of symmetric forms with B([x,y],z) + B(y,[x,z]) = 0.
std::vector<BilinearForm> invariant_forms(const LieAlgebra& l);

/// Structure constants of a subalgebra in the echelon basis of `s`.
LieAlgebra restrict_to(const LieAlgebra& l, const Subspace& s);
/// Killing form tr(ad x ad y).
BilinearForm killing_form(const LieAlgebra& l);

/// Lie algebra with its symmetric form, the unit every builder consumes.
struct MetricLieAlgebra {
    LieAlgebra algebra;
    BilinearForm form;
};

}  // namespace adinvar
