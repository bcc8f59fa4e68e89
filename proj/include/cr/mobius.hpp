#pragma once

#include "cr/hypersurface.hpp"

namespace cr {

// Intrinsic chart of a Winkelmann model: z1..zn, zeta, real t, with contact
// potential phi; frame Z_a = d/dz_a + i phi_a d/dt.
struct MobiusModel {
    Hypersurface M;
    SpacePtr sp;               // surface chart space
    Poly phi;                  // in sp
    std::vector<Poly> phi_a;   // d phi / d(holo a)
    int m;                     // frame directions: n + 1
    int t_id;

    Poly field(int a, const Poly& f, bool conjugated) const;
};

MobiusModel make_mobius_model(int n, int ell);

// Second covariant derivative matrix G_{,ab} in the model connection; the
// only nonzero Christoffel symbol is the zeta-component over (z_n, z_n).
Matrix<Poly> b_operator(const MobiusModel& model, const Poly& G);

// c = (c_0, c_1..c_n, c_w): G = c_0 + sum c_k z_k + c_w (t + i phi)
Poly mobius_candidate(const MobiusModel& model, const std::vector<Gaussian>& c);

// true when every entry of b_operator vanishes; otherwise *witness names the
// first failing entry
bool verify_mobius_solution(const MobiusModel& model, const Poly& G, std::string* witness = nullptr);

}  // namespace cr
