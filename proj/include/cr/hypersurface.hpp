#pragma once

#include "cr/matrix.hpp"
#include "cr/ratfn.hpp"

namespace cr {

enum class ModelKind { Hyperquadric, Winkelmann };

// Rigid model hypersurface: a hyperquadric in C^{n+1} or a Winkelmann
// hypersurface in C^{n+2}, carrying its defining function and graded charts.
struct Hypersurface {
    ModelKind kind;
    int n;    // number of z variables
    int ell;  // signature index
    SpacePtr amb;   // holomorphic: z1..zn [, zeta], w
    SpacePtr surf;  // holomorphic: z1..zn [, zeta]; real: t
    Poly rho;       // ambient defining function; Im w leads, w_b coefficient i/2
    Poly phi;       // surface potential, on M: w = t + i*phi
    std::vector<int> eps;  // signs of the |z_k|^2 terms

    // number of (1,0) frame directions
    int cr_dim() const { return kind == ModelKind::Hyperquadric ? n : n + 1; }
    int w_id() const { return amb->holo_count() - 1; }
    int zeta_id() const { return kind == ModelKind::Winkelmann ? n : -1; }
    std::string str() const;
};

// kind, z-count, signature.  Hyperquadric: 0 <= ell <= n.  Winkelmann:
// 1 <= ell <= n (the hyperbolic pair always contributes one negative sign).
Hypersurface make_hypersurface(ModelKind kind, int n, int ell);

// Coefficients of the (1,0) tangent frame: Z[a][j] multiplies d/d(holo j).
// The transverse direction is xi = 2i d/dw in both models.
struct TangentFrame {
    std::vector<std::vector<Poly>> Z;
};
TangentFrame tangent_frame(const Hypersurface& M);

// Apply sum_j coef[j] d/d(holo j), or its conjugate field, to f.
Poly apply_field(const std::vector<Poly>& coef, const Poly& f, bool conjugated);
RatFn apply_field(const std::vector<Poly>& coef, const RatFn& f, bool conjugated);

// h_{ab} = -sum_{j,k} Z_a^j conj(Z_b^k) d^2 rho / dz_j dz_k-bar
Matrix<Poly> levi_matrix(const Hypersurface& M);

// Tangential coordinates of a point of M: values for z1..zn [, zeta] and t.
struct SurfacePoint {
    std::vector<Gaussian> z;
    mpq_class t = 0;
};

// Ambient coordinates (holo then bars) with w = t + i*phi(z, conj z).
std::vector<Gaussian> lift_point(const Hypersurface& M, const SurfacePoint& p);

// Substitute w -> t + i*phi, w_b -> t - i*phi, renaming into the surface chart.
Poly restrict_to_surface(const Hypersurface& M, const Poly& f);
RatFn restrict_to_surface(const Hypersurface& M, const RatFn& f);

}  // namespace cr
