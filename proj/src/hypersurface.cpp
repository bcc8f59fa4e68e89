#include "cr/hypersurface.hpp"

#include <stdexcept>

namespace cr {

namespace {

const Gaussian kHalfI = Gaussian(mpq_class(0), mpq_class(1, 2));

}  // namespace

std::string Hypersurface::str() const {
    std::string base = kind == ModelKind::Hyperquadric ? "hyperquadric" : "winkelmann";
    return base + " n=" + std::to_string(n) + " ell=" + std::to_string(ell);
}

Hypersurface make_hypersurface(ModelKind kind, int n, int ell) {
    SpacePtr amb, surf;
    std::vector<int> eps;
    if (kind == ModelKind::Hyperquadric) {
        if (n < 1 || ell < 0 || ell > n) throw std::invalid_argument("hyperquadric needs n >= 1, 0 <= ell <= n");
        amb = make_ambient_space(n, false);
        surf = make_surface_space(n, false);
        eps.assign(n, 1);
        for (int k = 0; k < ell; ++k) eps[k] = -1;
    } else {
        if (n < 1 || ell < 1 || ell > n) throw std::invalid_argument("winkelmann needs n >= 1, 1 <= ell <= n");
        amb = make_ambient_space(n, true);
        surf = make_surface_space(n, true);
        eps.assign(n - 1, 1);
        for (int k = 0; k < ell - 1; ++k) eps[k] = -1;
    }

    const SpacePtr& A = amb;
    int w = amb->holo_count() - 1;
    // Im w = (w - w_b)/2i = -i/2 w + i/2 w_b
    Poly rho = Poly::variable(A, w) * (-kHalfI) + Poly::variable(A, A->bar(w)) * kHalfI;
    Poly phi(surf);
    auto zs = [&](int k) { return Poly::variable(surf, k); };
    auto zbs = [&](int k) { return Poly::variable(surf, surf->bar(k)); };
    auto za = [&](int k) { return Poly::variable(A, k); };
    auto zba = [&](int k) { return Poly::variable(A, A->bar(k)); };

    if (kind == ModelKind::Hyperquadric) {
        for (int k = 0; k < n; ++k) {
            Gaussian e = Gaussian(eps[k]);
            rho -= za(k) * zba(k) * e;
            phi += zs(k) * zbs(k) * e;
        }
    } else {
        int zn = n - 1, zt = n;  // ids of z_n and zeta
        // (z_n-bar * zeta - z_n * zeta-bar)/2i
        rho += (zba(zn) * za(zt) - za(zn) * zba(zt)) * (-kHalfI);
        rho -= (za(zn) * zba(zn)).pow(2);
        for (int k = 0; k + 1 < n; ++k) rho -= za(k) * zba(k) * Gaussian(eps[k]);
        phi += (zs(zn) * zbs(zt) - zbs(zn) * zs(zt)) * (-kHalfI);
        phi += (zs(zn) * zbs(zn)).pow(2);
        for (int k = 0; k + 1 < n; ++k) phi += zs(k) * zbs(k) * Gaussian(eps[k]);
    }
    return Hypersurface{kind, n, ell, amb, surf, rho, phi, eps};
}

TangentFrame tangent_frame(const Hypersurface& M) {
    const SpacePtr& A = M.amb;
    int H = A->holo_count();
    int w = M.w_id();
    TangentFrame fr;
    auto zero_row = [&] { return std::vector<Poly>(H, Poly(A)); };
    auto one = Poly::constant(A, Gaussian::one());
    auto two_i = Gaussian(mpq_class(0), mpq_class(2));
    if (M.kind == ModelKind::Hyperquadric) {
        for (int a = 0; a < M.n; ++a) {
            auto row = zero_row();
            row[a] = one;
            row[w] = Poly::variable(A, A->bar(a)) * (two_i * Gaussian(M.eps[a]));
            fr.Z.push_back(std::move(row));
        }
    } else {
        int zn = M.n - 1, zt = M.zeta_id();
        for (int a = 0; a + 1 < M.n; ++a) {
            auto row = zero_row();
            row[a] = one;
            row[w] = Poly::variable(A, A->bar(a)) * (two_i * Gaussian(M.eps[a]));
            fr.Z.push_back(std::move(row));
        }
        {
            auto row = zero_row();
            row[zn] = one;
            // zeta-bar + 4i z_n z_n-bar^2
            row[w] = Poly::variable(A, A->bar(zt)) +
                     Poly::variable(A, zn) * Poly::variable(A, A->bar(zn)).pow(2) *
                         Gaussian(mpq_class(0), mpq_class(4));
            fr.Z.push_back(std::move(row));
        }
        {
            auto row = zero_row();
            row[zt] = one;
            row[w] = -Poly::variable(A, A->bar(zn));
            fr.Z.push_back(std::move(row));
        }
    }
    return fr;
}

Poly apply_field(const std::vector<Poly>& coef, const Poly& f, bool conjugated) {
    const SpacePtr& sp = f.space();
    Poly acc(sp);
    for (int j = 0; j < (int)coef.size(); ++j) {
        if (coef[j].is_zero()) continue;
        Poly c = conjugated ? coef[j].conj() : coef[j];
        int v = conjugated ? sp->bar(j) : j;
        acc += c * f.wirtinger(v);
    }
    return acc;
}

RatFn apply_field(const std::vector<Poly>& coef, const RatFn& f, bool conjugated) {
    const SpacePtr& sp = f.space();
    RatFn acc(sp);
    for (int j = 0; j < (int)coef.size(); ++j) {
        if (coef[j].is_zero()) continue;
        Poly c = conjugated ? coef[j].conj() : coef[j];
        int v = conjugated ? sp->bar(j) : j;
        acc = acc + RatFn::from_poly(c) * f.wirtinger(v);
    }
    return acc;
}

Matrix<Poly> levi_matrix(const Hypersurface& M) {
    TangentFrame fr = tangent_frame(M);
    int m = M.cr_dim();
    int H = M.amb->holo_count();
    Matrix<Poly> h(m, std::vector<Poly>(m, Poly(M.amb)));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            Poly acc(M.amb);
            for (int j = 0; j < H; ++j) {
                if (fr.Z[a][j].is_zero()) continue;
                for (int k = 0; k < H; ++k) {
                    if (fr.Z[b][k].is_zero()) continue;
                    Poly mixed = M.rho.wirtinger(j).wirtinger(M.amb->bar(k));
                    if (mixed.is_zero()) continue;
                    acc += fr.Z[a][j] * fr.Z[b][k].conj() * mixed;
                }
            }
            h[a][b] = -acc;
        }
    }
    return h;
}

std::vector<Gaussian> lift_point(const Hypersurface& M, const SurfacePoint& p) {
    int Hs = M.surf->holo_count();
    if ((int)p.z.size() != Hs) throw std::invalid_argument("surface point needs " + std::to_string(Hs) + " complex coordinates");
    std::vector<Gaussian> sp(M.surf->total(), Gaussian::zero());
    for (int k = 0; k < Hs; ++k) {
        sp[k] = p.z[k];
        sp[M.surf->bar(k)] = p.z[k].conj();
    }
    sp[2 * Hs] = Gaussian(p.t);
    Gaussian ph = M.phi.eval(sp);
    if (!ph.is_real()) throw std::logic_error("surface potential evaluated non-real");

    int H = M.amb->holo_count();
    std::vector<Gaussian> amb(2 * H, Gaussian::zero());
    for (int k = 0; k < H - 1; ++k) {
        amb[k] = p.z[k];
        amb[M.amb->bar(k)] = p.z[k].conj();
    }
    Gaussian w = Gaussian(p.t, ph.re);
    amb[H - 1] = w;
    amb[M.amb->bar(H - 1)] = w.conj();
    return amb;
}

Poly restrict_to_surface(const Hypersurface& M, const Poly& f) {
    if (!compatible(f.space(), M.amb)) throw std::invalid_argument("restriction needs an ambient polynomial");
    int H = M.amb->holo_count();
    std::vector<Poly> images;
    images.reserve(2 * H);
    Poly t = Poly::variable(M.surf, 2 * (H - 1));
    Poly w_img = t + M.phi * Gaussian::i();
    for (int k = 0; k < H - 1; ++k) images.push_back(Poly::variable(M.surf, k));
    images.push_back(w_img);
    for (int k = 0; k < H - 1; ++k) images.push_back(Poly::variable(M.surf, M.surf->bar(k)));
    images.push_back(w_img.conj());
    return subst_poly(f, M.surf, images);
}

RatFn restrict_to_surface(const Hypersurface& M, const RatFn& f) {
    Poly n = restrict_to_surface(M, f.num());
    Poly d = restrict_to_surface(M, f.den());
    if (d.is_zero()) throw std::domain_error("denominator vanishes identically on the surface");
    return RatFn(n, d);
}

}  // namespace cr
