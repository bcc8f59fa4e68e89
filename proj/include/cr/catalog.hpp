#pragma once

#include <random>

#include "cr/holomap.hpp"

namespace cr {

// Named self-map families of the two models.  materialize() builds the map
// for any admissible parameters; homothety_check() reports whether it is a
// genuine self-map and, when the side factor is constant, that constant.
struct AutoSpec {
    std::string family;  // translation | dilation | rotation | inversion |
                         // wink_scaling | wink_shear | wink_rotation
    std::vector<Gaussian> vec;  // b / a / diagonal-free U rows (flattened)
    Gaussian scalar;            // t0 / lambda / r
    std::vector<Gaussian> units;
};

RationalMap quadric_translation(const Hypersurface& M, const std::vector<Gaussian>& b, const mpq_class& t0);
RationalMap quadric_dilation(const Hypersurface& M, const mpq_class& lambda);
RationalMap quadric_rotation(const Hypersurface& M, const Matrix<Gaussian>& U);
RationalMap quadric_inversion(const Hypersurface& M);

RationalMap wink_scaling(const Hypersurface& M, const mpq_class& lambda, const std::vector<Gaussian>& u);
RationalMap wink_shear(const Hypersurface& M, const std::vector<Gaussian>& a, const mpq_class& r);
RationalMap wink_rotation(const Hypersurface& M, const Matrix<Gaussian>& U);

RationalMap materialize(const Hypersurface& M, const AutoSpec& spec);
RationalMap materialize_inverse(const Hypersurface& M, const AutoSpec& spec);

struct HomothetyResult {
    bool self_map = false;
    bool constant_factor = false;
    Gaussian factor;
    SideClass side = SideClass::Undetermined;
};

// base point for inversion must avoid w = 0; every family carries its own.
HomothetyResult homothety_check(const RationalMap& H, const SurfacePoint& base);
HomothetyResult homothety_check(const RationalMap& H);

// Sample automorphisms with small exact parameters, e.g. for rank-invariance
// sweeps.  Rotations use exact unit entries and hyperbolic boosts when the
// signature allows them.
std::vector<AutoSpec> quadric_catalog(const Hypersurface& M, int count, std::mt19937_64& rng);
std::vector<AutoSpec> winkelmann_catalog(const Hypersurface& M, int count, std::mt19937_64& rng);

// chi . H . psi for catalog moves psi (source) and chi (target).
RationalMap equivalence_move(const RationalMap& H, const AutoSpec& psi, const AutoSpec& chi);

// default base point of a family: origin except for inversion, which uses
// z = 0, w = 1 (t = 1 in tangential coordinates)
SurfacePoint family_base(const Hypersurface& M, const std::string& family);

}  // namespace cr
