#pragma once

#include "adinvar/bilinear_form.hpp"
#include "adinvar/double_extension.hpp"
#include "adinvar/lie_algebra.hpp"
#include "adinvar/report.hpp"
#include "adinvar/tensor.hpp"

#include <optional>
#include <vector>

namespace adinvar {

/// Levi-Civita connection of a left-invariant metric from the Koszul
/// formula 2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>.
/// Throws Error(degenerate_form) for a degenerate form.
Tensor3 levi_civita(const LieAlgebra& l, const BilinearForm& b);

/// Closed form on G(d):
///   nabla_{x1+h1*}(x2+h2*) = 1/2 ([x1,x2] - pi(h1)x2 - pi(h2)x1),
/// with [x1,x2] the bracket of G(d) (so the beta term is included).
Tensor3 levi_civita_gd(const GdAlgebra& gd);

/// R(e_i,e_j) = [N_i, N_j] - N_{[e_i,e_j]} where N_i = nabla_{e_i}.
Tensor4 curvature(const Tensor3& nabla, const LieAlgebra& l);

/// Case-by-case closed form of the curvature of G(d).
Tensor4 curvature_gd(const GdAlgebra& gd);

/// Compares the d-d-d block of R with
/// 1/2 pi(b*(x,y))z - 1/4 pi(b*(y,z))x - 1/4 pi(b*(z,x))y + 1/4 beta(z,[x,y]_d) + R^d(x,y)z,
/// where R^d(x,y) = -1/4 ad_d([x,y]_d).
Check curvature_relation_check(const GdAlgebra& gd, const Tensor4& r);

/// R(x,y)z = -1/4 [[x,y],z] on all basis triples.
Check bi_invariant_check(const LieAlgebra& l, const Tensor4& r);

/// <x,x><y,y> - <x,y>^2.
Scalar plane_gram(const BilinearForm& b, const Vec& x, const Vec& y);

/// K = <R(x,y)y, x> / (<x,x><y,y> - <x,y>^2). Throws
/// Error(degenerate_plane) when the denominator vanishes.
Scalar sectional(const Tensor4& r, const BilinearForm& b, const Vec& x, const Vec& y);
Scalar sectional(const GdAlgebra& gd, const Vec& x, const Vec& y);

/// Closed form for an orthogonal pair with each vector inside d or inside h*:
///   d,d:   (1/4 <[x,y]_d,[x,y]_d> - 3/4 <beta(x,y),beta(x,y)>) / (<x,x><y,y>)
///   d,h*:  1/4 <pi(y*)x, pi(y*)x> / (<x,x><y,y>)
///   h*,h*: 0
/// Throws Error(precondition) for other inputs.
Scalar sectional_gd_closed(const GdAlgebra& gd, const Vec& x, const Vec& y);

struct PlaneCurvature {
    std::size_t i = 0;
    std::size_t j = 0;
    bool degenerate = false;
    std::optional<Scalar> k;
};
/// All coordinate planes span{e_i, e_j}, i < j.
std::vector<PlaneCurvature> coordinate_planes(const Tensor4& r, const BilinearForm& b);

/// Ric(x,y) = tr(z -> R(z,x)y). Throws Error(degenerate_form) for a
/// degenerate metric.
BilinearForm ricci(const Tensor4& r, const BilinearForm& b);
/// The operator T with Ric(x,y) = <Tx, y>.
Matrix ricci_operator(const Tensor4& r, const BilinearForm& b);

/// Ricci form of G(d) from the closed forms
///   Ric(x,h*)    = -1/4 tr(pi(h) ad_d x)
///   Ric(x,y)     = 1/2 sum_i eps_i <pi(z_i)^2 x, y> - 1/4 tr(ad_d x ad_d y)
///   Ric(h1*,h2*) = -1/4 tr(pi(h1) pi(h2)),
/// where the eps-weighted sum runs over an orthogonal basis of h.
BilinearForm ricci_gd(const GdAlgebra& gd);

/// The Ricci transformation from the closed forms
///   T(h*) = 1/4 sum_j eps_j [d_j, pi(h) d_j]
///   T(x)  = 1/2 sum_i eps_i pi(z_i)^2 x - 1/4 sum_j eps_j ad(d_j)^2 x.
Matrix ricci_operator_gd(const GdAlgebra& gd);

/// t -> exp(t xi) is a geodesic iff pi(h)x = 0 for xi = x + ell(h).
bool geodesic_one_param(const GdAlgebra& gd, const Vec& xi);
/// nabla_xi xi for the Koszul connection, the defining quantity.
Vec self_covariant_derivative(const Tensor3& nabla, const Vec& xi);

/// nabla_u v in S for all basis u, v of S. Throws Error(precondition) when
/// S is not a subalgebra.
bool totally_geodesic(const LieAlgebra& l, const BilinearForm& b, const Subspace& s);

/// <R(x,y)z, w> = <R(z,w)x, y> on all basis tuples.
Check pair_symmetry_check(const Tensor4& r, const BilinearForm& b);
bool check_pair_symmetry(const Tensor4& r, const BilinearForm& b);

/// Torsion-free and metric checks for a connection.
Check torsion_free_check(const Tensor3& nabla, const LieAlgebra& l);
Check metric_connection_check(const Tensor3& nabla, const BilinearForm& b);

/// Entrywise tensor equality, reporting differing (i,j,k[,l]) tuples.
Check tensor_equal_check(const std::string& name, const Tensor3& a, const Tensor3& b);
Check tensor_equal_check(const std::string& name, const Tensor4& a, const Tensor4& b);

}  // namespace adinvar
