#pragma once

#include <random>

#include "cr/holomap.hpp"

namespace cr {

// Second-order obstruction tensor attached to a side factor Q on the source.
// Entries are ambient rational functions, hermitian as a matrix.
//   A_ab = (Z_a Zb_b Q + Zb_b Z_a Q)/2 - (Z_a Q)(Zb_b Q)/Q - (xi Q + xib Q)/2 * h_ab
// For a side-reversing map pass sign = -1; the tensor is odd in the sign.
Matrix<RatFn> ahlfors_via_logQ(const Hypersurface& src, const RatFn& Q, int sign = 1);

// Same tensor from the component functions when the target is a hyperquadric;
// no logarithm or quotient of Q beyond a single 1/Q factor is formed.
Matrix<RatFn> ahlfors_explicit_hyperquadric(const RationalMap& H, const MapCheck& chk);

// Value at 0 for a map in normalized form (components vanish at 0, G_w(0)=1,
// F_w(0)=0, G_ww(0)=0); throws naming the violated condition otherwise.
Matrix<Gaussian> ahlfors_at_origin_normalized(const RationalMap& H);

struct RankReport {
    bool zero = false;       // tensor vanishes identically on the surface
    int generic_rank = 0;
    bool hermitian = true;
    std::vector<int> sample_ranks;  // aligned with the sampled points
    std::vector<SurfacePoint> samples;
};

// Rank of the tensor as a function on the hypersurface: generic rank by exact
// row reduction of the surface restriction, plus ranks at sample points.
RankReport rank_report(const Hypersurface& src, const Matrix<RatFn>& A,
                       const std::vector<SurfacePoint>& points);

// Rank of the evaluated tensor at one point; nullopt past a pole.
std::optional<int> rank_at(const Hypersurface& src, const Matrix<RatFn>& A, const SurfacePoint& p);

// Deterministic small rational surface points for sampling, avoiding poles of
// the given matrix; seed fixed by the caller.
std::vector<SurfacePoint> sample_points(const Hypersurface& src, const Matrix<RatFn>& A,
                                        int count, std::mt19937_64& rng);

}  // namespace cr
