#pragma once

#include "adinvar/double_extension.hpp"
#include "adinvar/report.hpp"
#include "adinvar/tensor.hpp"

#include <optional>
#include <vector>

namespace adinvar {

/// A candidate homogeneous structure with the tensors its axioms refer to.
struct HomStructure {
    Tensor3 t;
    Tensor3 nabla;        // Levi-Civita
    Tensor3 nabla_tilde;  // t - nabla
    Tensor4 r;            // curvature of nabla
};

/// T_{x1+h1*}(x2+h2*) = 1/2([x1,x2] + pi(h1)x2 - pi(h2)x1) + [h1,h2]*.
Tensor3 t_tensor(const GdAlgebra& gd);

/// T_x y = 1/2 lambda^{-1}([lambda x, lambda y]_m) computed inside the
/// double extension, m = h^perp for Q_minus and the projection along h.
Tensor3 t_tensor_lambda(const GdAlgebra& gd, const DoubleExtension& x);

/// nabla~_{x1+h1*}(x2+h2*) = pi(h1)x2 + [h1,h2]*.
Tensor3 nabla_tilde_gd(const GdAlgebra& gd);

/// Formula for the nilmanifold case (d abelian):
/// T_{v1+k1*}(v2+k2*) = 1/2(pi(k1)v2 - pi(k2)v1) + 1/2 beta(v1,v2) + [k1,k2]*.
/// Throws Error(precondition) when d is not abelian.
Tensor3 nilmanifold_t(const GdAlgebra& gd);

/// Assembles T, the Koszul connection, T - nabla and the curvature.
HomStructure assemble(const LieAlgebra& l, const BilinearForm& b, Tensor3 t);
HomStructure hom_structure(const GdAlgebra& gd);

/// Left-invariant form of the Ambrose-Singer conditions:
///   as.i        <T_a b, c> + <b, T_a c> = 0
///   as.i_prime  <nabla~_a b, c> + <b, nabla~_a c> = 0
///   as.ii       nabla_a R = T_a . R (derivation action)
///   as.ii_prime nabla~_a (R(b,c)d) - R(nabla~_a b, c)d - R(b, nabla~_a c)d - R(b,c)nabla~_a d = 0
///   as.iii      nabla_a T = T_a . T
///   as.iii_prime nabla~_a (T_b c) - T_{nabla~_a b} c - T_b (nabla~_a c) = 0
///   as.iv       T_a a = 0 and T_a b + T_b a = 0
/// Witness tuples are 1-based basis indices.
std::vector<Check> verify_as(const HomStructure& s, const BilinearForm& b);

/// Runs verify_as on hom_structure(gd) and adds the checks
/// as.nabla_tilde_formula (T - nabla equals nabla~_gd) and, when a double
/// extension is given, as.t_lambda_formula.
std::vector<Check> verify_as(const GdAlgebra& gd, const DoubleExtension* x = nullptr);

}  // namespace adinvar
