#pragma once

#include "cr/holomap.hpp"

namespace cr {

// Metric of the one-sided domain {rho != 0}: g_ij = d_i d_jb (-log|rho|),
// assembled as (rho_i rho_jb - rho rho_ij)/rho^2 over ambient holomorphic ids.
Matrix<RatFn> metric_matrix(const Hypersurface& M);

// Ricci tensor of metric_matrix, computed from determinant polynomials:
// with P_ij = rho_i rho_jb - rho rho_ij and D = det P,
//   Ric_ij = -(D_ij D - D_i D_jb)/D^2 + 2m (rho_ij rho - rho_i rho_jb)/rho^2.
Matrix<RatFn> ricci_matrix(const Hypersurface& M);

// det g = det P / rho^{2m}
RatFn metric_determinant(const Hypersurface& M);

// c with Ric = c g exactly, nullopt when the metric is not Einstein
std::optional<Gaussian> einstein_constant(const Hypersurface& M);

struct IsometryResult {
    bool isometry = false;
    std::string witness;  // first nonvanishing Hessian entry of log|Q|
};

// A side-respecting map with factor Q pulls the target metric back to the
// source metric iff every ambient mixed Hessian entry of log|Q| vanishes.
IsometryResult isometry_check(const Hypersurface& src, const RatFn& Q);

}  // namespace cr
