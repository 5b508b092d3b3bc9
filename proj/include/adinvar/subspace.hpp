#pragma once

#include "adinvar/matrix.hpp"

#include <optional>
#include <vector>

namespace adinvar {

/// Linear subspace of Q^n held as the rows of its reduced row echelon
/// basis. The echelon form is unique, so equality is plain data equality.
class Subspace {
public:
    /// Zero subspace of Q^ambient.
    explicit Subspace(std::size_t ambient = 0);

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace whole(std::size_t ambient);
    /// Span of the standard basis vectors e_first .. e_{first+count-1}.
    static Subspace coordinate_block(std::size_t ambient, std::size_t first, std::size_t count);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coefficients of v in basis(), or nullopt when v is not in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;
    /// Matrix whose columns are the basis vectors (ambient x dim).
    Matrix basis_matrix() const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {x : m x = 0} as a canonical subspace.
Subspace kernel_of(const Matrix& m);
/// Column space of m.
Subspace image_of(const Matrix& m);

/// Splits v = a + b with a in first, b in second. Requires the two subspaces
/// to be complementary in the ambient space (throws otherwise).
std::pair<Vec, Vec> decompose(const Vec& v, const Subspace& first, const Subspace& second);

}  // namespace adinvar
