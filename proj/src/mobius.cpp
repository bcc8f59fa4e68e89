#include "cr/mobius.hpp"

#include <stdexcept>

namespace cr {

MobiusModel make_mobius_model(int n, int ell) {
    Hypersurface M = make_hypersurface(ModelKind::Winkelmann, n, ell);
    MobiusModel model{M, M.surf, M.phi, {}, n + 1, 2 * M.surf->holo_count()};
    for (int a = 0; a < model.m; ++a) model.phi_a.push_back(model.phi.wirtinger(a));
    return model;
}

Poly MobiusModel::field(int a, const Poly& f, bool conjugated) const {
    if (!compatible(f.space(), sp)) throw std::invalid_argument("function not in the model chart");
    Poly ft = f.wirtinger(t_id);
    if (conjugated) return f.wirtinger(sp->bar(a)) - phi_a[a].conj() * Gaussian::i() * ft;
    return f.wirtinger(a) + phi_a[a] * Gaussian::i() * ft;
}

Matrix<Poly> b_operator(const MobiusModel& model, const Poly& G) {
    int m = model.m;
    int zn = model.M.n - 1;   // frame index carrying the quartic direction
    int zf = model.M.n;       // zeta frame index
    // Gamma^zeta_{zn zn} = -4i conj(z_n); all other symbols vanish
    Poly gamma = Poly::variable(model.sp, model.sp->bar(zn)) * Gaussian(mpq_class(0), mpq_class(-4));

    std::vector<Poly> ZG;
    for (int a = 0; a < m; ++a) ZG.push_back(model.field(a, G, false));

    Matrix<Poly> out(m, std::vector<Poly>(m, Poly(model.sp)));
    for (int b = 0; b < m; ++b) {
        for (int a = 0; a < m; ++a) {
            Poly val = model.field(b, ZG[a], false);
            if (a == zn && b == zn) val -= gamma * ZG[zf];
            out[a][b] = val;
        }
    }
    return out;
}

Poly mobius_candidate(const MobiusModel& model, const std::vector<Gaussian>& c) {
    int n = model.M.n;
    if ((int)c.size() != n + 2) {
        throw std::invalid_argument("candidate needs " + std::to_string(n + 2) + " coefficients: c0, c1..cn, cw");
    }
    Poly G = Poly::constant(model.sp, c[0]);
    for (int k = 0; k < n; ++k) G += Poly::variable(model.sp, k) * c[k + 1];
    Poly w = Poly::variable(model.sp, model.t_id) + model.phi * Gaussian::i();
    G += w * c[n + 1];
    return G;
}

bool verify_mobius_solution(const MobiusModel& model, const Poly& G, std::string* witness) {
    Matrix<Poly> D = b_operator(model, G);
    for (int a = 0; a < model.m; ++a) {
        for (int b = 0; b < model.m; ++b) {
            if (!D[a][b].is_zero()) {
                if (witness) {
                    *witness = "G_,(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") = " + D[a][b].str();
                }
                return false;
            }
        }
    }
    return true;
}

}  // namespace cr
