#include "cr/catalog.hpp"

#include <stdexcept>

namespace cr {

namespace {

RatFn var(const Hypersurface& M, int v) { return RatFn::variable(M.amb, v); }

void require_quadric(const Hypersurface& M, const char* who) {
    if (M.kind != ModelKind::Hyperquadric) throw std::invalid_argument(std::string(who) + " needs a hyperquadric");
}

void require_wink(const Hypersurface& M, const char* who) {
    if (M.kind != ModelKind::Winkelmann) throw std::invalid_argument(std::string(who) + " needs a Winkelmann model");
}

bool is_unit(const Gaussian& u) { return u.norm2() == 1; }

// U diag(eps) U^* relative to diag(eps): +1, -1, or 0 when neither
int isometry_sigma(const Matrix<Gaussian>& U, const std::vector<int>& eps) {
    size_t n = eps.size();
    if (U.size() != n) return 0;
    for (const auto& row : U) {
        if (row.size() != n) return 0;
    }
    for (int want : {1, -1}) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            for (size_t j = 0; j < n && ok; ++j) {
                Gaussian acc = Gaussian::zero();
                for (size_t k = 0; k < n; ++k) acc += U[i][k] * Gaussian(eps[k]) * U[j][k].conj();
                Gaussian target = i == j ? Gaussian(want * eps[i]) : Gaussian::zero();
                if (acc != target) ok = false;
            }
        }
        if (ok) return want;
    }
    return 0;
}

Matrix<Gaussian> unflatten(const std::vector<Gaussian>& v, size_t n) {
    if (v.size() != n * n) throw std::invalid_argument("rotation matrix needs " + std::to_string(n * n) + " entries");
    Matrix<Gaussian> U(n, std::vector<Gaussian>(n, Gaussian::zero()));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) U[i][j] = v[i * n + j];
    }
    return U;
}

Gaussian rand_unit(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    long a = 0, b = 0;
    while (a == 0 && b == 0) {
        a = d(rng);
        b = d(rng);
    }
    mpq_class n(a * a + b * b);
    return Gaussian(mpq_class(a * a - b * b) / n, mpq_class(2 * a * b) / n);
}

}  // namespace

RationalMap quadric_translation(const Hypersurface& M, const std::vector<Gaussian>& b, const mpq_class& t0) {
    require_quadric(M, "translation");
    if ((int)b.size() != M.n) throw std::invalid_argument("translation needs n shift entries");
    RationalMap H{M, M, {}};
    for (int k = 0; k < M.n; ++k) H.comp.push_back(var(M, k) + RatFn::constant(M.amb, b[k]));
    RatFn wc = var(M, M.w_id());
    Gaussian nb = Gaussian::zero();
    for (int k = 0; k < M.n; ++k) {
        wc = wc + var(M, k) * (Gaussian(mpq_class(0), mpq_class(2)) * Gaussian(M.eps[k]) * b[k].conj());
        nb += Gaussian(M.eps[k]) * b[k] * b[k].conj();
    }
    wc = wc + RatFn::constant(M.amb, Gaussian(t0, nb.re));
    H.comp.push_back(wc);
    return H;
}

RationalMap quadric_dilation(const Hypersurface& M, const mpq_class& lambda) {
    require_quadric(M, "dilation");
    if (lambda == 0) throw std::invalid_argument("dilation needs a nonzero scale");
    RationalMap H{M, M, {}};
    for (int k = 0; k < M.n; ++k) H.comp.push_back(var(M, k) * Gaussian(lambda));
    H.comp.push_back(var(M, M.w_id()) * Gaussian(lambda * lambda));
    return H;
}

RationalMap quadric_rotation(const Hypersurface& M, const Matrix<Gaussian>& U) {
    require_quadric(M, "rotation");
    if (isometry_sigma(U, M.eps) != 1) throw std::invalid_argument("rotation matrix does not preserve the signature form");
    RationalMap H{M, M, {}};
    for (int i = 0; i < M.n; ++i) {
        RatFn c(M.amb);
        for (int j = 0; j < M.n; ++j) c = c + var(M, j) * U[i][j];
        H.comp.push_back(c);
    }
    H.comp.push_back(var(M, M.w_id()));
    return H;
}

RationalMap quadric_inversion(const Hypersurface& M) {
    require_quadric(M, "inversion");
    RationalMap H{M, M, {}};
    RatFn w = var(M, M.w_id());
    for (int k = 0; k < M.n; ++k) H.comp.push_back(var(M, k) / w);
    H.comp.push_back(RatFn::constant(M.amb, Gaussian(-1)) / w);
    return H;
}

RationalMap wink_scaling(const Hypersurface& M, const mpq_class& lambda, const std::vector<Gaussian>& u) {
    require_wink(M, "scaling");
    if (lambda == 0) throw std::invalid_argument("scaling needs a nonzero scale");
    if ((int)u.size() != M.n) throw std::invalid_argument("scaling needs n unit factors");
    for (const auto& x : u) {
        if (!is_unit(x)) throw std::invalid_argument("scaling factor " + x.str() + " is not a unit");
    }
    Gaussian l(lambda);
    RationalMap H{M, M, {}};
    for (int k = 0; k + 1 < M.n; ++k) H.comp.push_back(var(M, k) * (l * l * u[k]));
    H.comp.push_back(var(M, M.n - 1) * (l * u[M.n - 1]));
    H.comp.push_back(var(M, M.zeta_id()) * (l * l * l * u[M.n - 1]));
    H.comp.push_back(var(M, M.w_id()) * (l * l * l * l));
    return H;
}

RationalMap wink_shear(const Hypersurface& M, const std::vector<Gaussian>& a, const mpq_class& r) {
    require_wink(M, "shear");
    if ((int)a.size() != M.n - 1) throw std::invalid_argument("shear needs n-1 coefficients");
    RationalMap H{M, M, {}};
    RatFn zn = var(M, M.n - 1);
    for (int k = 0; k + 1 < M.n; ++k) H.comp.push_back(var(M, k) + zn * a[k]);
    H.comp.push_back(zn);
    RatFn zc = var(M, M.zeta_id());
    Gaussian na = Gaussian::zero();
    for (int k = 0; k + 1 < M.n; ++k) {
        zc = zc + var(M, k) * (Gaussian(mpq_class(0), mpq_class(2)) * Gaussian(M.eps[k]) * a[k].conj());
        na += Gaussian(M.eps[k]) * a[k] * a[k].conj();
    }
    zc = zc + zn * Gaussian(r, na.re);
    H.comp.push_back(zc);
    H.comp.push_back(var(M, M.w_id()));
    return H;
}

RationalMap wink_rotation(const Hypersurface& M, const Matrix<Gaussian>& U) {
    require_wink(M, "rotation");
    if (M.n < 2) throw std::invalid_argument("rotation needs n >= 2");
    if (isometry_sigma(U, M.eps) == 0) throw std::invalid_argument("rotation matrix does not scale the signature form by +-1");
    RationalMap H{M, M, {}};
    for (int i = 0; i + 1 < M.n; ++i) {
        RatFn c(M.amb);
        for (int j = 0; j + 1 < M.n; ++j) c = c + var(M, j) * U[i][j];
        H.comp.push_back(c);
    }
    H.comp.push_back(var(M, M.n - 1));
    H.comp.push_back(var(M, M.zeta_id()));
    H.comp.push_back(var(M, M.w_id()));
    return H;
}

RationalMap materialize(const Hypersurface& M, const AutoSpec& s) {
    if (s.family == "translation") {
        if (!s.scalar.is_real()) throw std::invalid_argument("translation time shift must be real");
        return quadric_translation(M, s.vec, s.scalar.re);
    }
    if (s.family == "dilation") {
        if (!s.scalar.is_real()) throw std::invalid_argument("dilation scale must be real");
        return quadric_dilation(M, s.scalar.re);
    }
    if (s.family == "rotation") return quadric_rotation(M, unflatten(s.vec, M.n));
    if (s.family == "inversion") return quadric_inversion(M);
    if (s.family == "wink_scaling") {
        if (!s.scalar.is_real()) throw std::invalid_argument("scaling factor must be real");
        return wink_scaling(M, s.scalar.re, s.units);
    }
    if (s.family == "wink_shear") {
        if (!s.scalar.is_real()) throw std::invalid_argument("shear parameter must be real");
        return wink_shear(M, s.vec, s.scalar.re);
    }
    if (s.family == "wink_rotation") return wink_rotation(M, unflatten(s.vec, M.n - 1));
    throw std::invalid_argument("unknown automorphism family: " + s.family);
}

RationalMap materialize_inverse(const Hypersurface& M, const AutoSpec& s) {
    if (s.family == "translation") {
        AutoSpec t = s;
        for (auto& x : t.vec) x = -x;
        t.scalar = -t.scalar;
        return materialize(M, t);
    }
    if (s.family == "dilation" || s.family == "wink_scaling") {
        AutoSpec t = s;
        t.scalar = t.scalar.inverse();
        for (auto& x : t.units) x = x.conj();
        return materialize(M, t);
    }
    if (s.family == "rotation" || s.family == "wink_rotation") {
        size_t n = s.family == "rotation" ? M.n : M.n - 1;
        Matrix<Gaussian> U = unflatten(s.vec, n);
        std::vector<int> eps = M.eps;
        int sigma = isometry_sigma(U, eps);
        if (sigma == 0) throw std::invalid_argument("rotation matrix does not scale the signature form by +-1");
        // from U E U* = sigma E: U^{-1} = sigma E U* E
        AutoSpec t = s;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                t.vec[i * n + j] = Gaussian(sigma * eps[i] * eps[j]) * U[j][i].conj();
            }
        }
        return materialize(M, t);
    }
    if (s.family == "inversion") {
        RationalMap H = quadric_inversion(M);
        for (int k = 0; k < M.n; ++k) H.comp[k] = -H.comp[k];
        return H;
    }
    if (s.family == "wink_shear") {
        AutoSpec t = s;
        for (auto& x : t.vec) x = -x;
        t.scalar = -t.scalar;
        return materialize(M, t);
    }
    throw std::invalid_argument("unknown automorphism family: " + s.family);
}

SurfacePoint family_base(const Hypersurface& M, const std::string& family) {
    SurfacePoint p;
    p.z.assign(M.surf->holo_count(), Gaussian::zero());
    if (family == "inversion") p.t = 1;
    return p;
}

HomothetyResult homothety_check(const RationalMap& H, const SurfacePoint& base) {
    MapCheck chk = check_maps_into(H, base);
    HomothetyResult out;
    out.self_map = chk.maps_into;
    if (!chk.maps_into) return out;
    out.side = chk.side;
    if (chk.factor.is_constant()) {
        out.constant_factor = true;
        out.factor = chk.factor.as_constant();
    }
    return out;
}

HomothetyResult homothety_check(const RationalMap& H) {
    return homothety_check(H, family_base(H.src, ""));
}

std::vector<AutoSpec> quadric_catalog(const Hypersurface& M, int count, std::mt19937_64& rng) {
    require_quadric(M, "catalog");
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<int> pick(1, 6);
    std::vector<AutoSpec> out;
    auto rq = [&](int den) { return frac(small(rng), den); };
    while ((int)out.size() < count) {
        AutoSpec s;
        switch ((int)out.size() % 4) {
            case 0: {
                s.family = "translation";
                for (int k = 0; k < M.n; ++k) {
                    mpq_class re = rq(3), im = rq(5);
                    s.vec.push_back(Gaussian(re, im));
                }
                s.scalar = Gaussian(rq(2));
                break;
            }
            case 1: {
                s.family = "dilation";
                int p = pick(rng), q = pick(rng);
                mpq_class l(p, q);
                l.canonicalize();
                s.scalar = Gaussian(l);
                break;
            }
            case 2: {
                s.family = "rotation";
                // diagonal of exact units preserves any signature
                Matrix<Gaussian> U(M.n, std::vector<Gaussian>(M.n, Gaussian::zero()));
                for (int k = 0; k < M.n; ++k) U[k][k] = rand_unit(rng);
                for (const auto& row : U) {
                    for (const auto& x : row) s.vec.push_back(x);
                }
                break;
            }
            default: s.family = "inversion"; break;
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<AutoSpec> winkelmann_catalog(const Hypersurface& M, int count, std::mt19937_64& rng) {
    require_wink(M, "catalog");
    std::uniform_int_distribution<int> small(-4, 4);
    std::uniform_int_distribution<int> pick(1, 6);
    std::vector<AutoSpec> out;
    while ((int)out.size() < count) {
        AutoSpec s;
        switch ((int)out.size() % 3) {
            case 0: {
                s.family = "wink_scaling";
                int p = pick(rng), q = pick(rng);
                mpq_class l(p, q);
                l.canonicalize();
                s.scalar = Gaussian(l);
                for (int k = 0; k < M.n; ++k) s.units.push_back(rand_unit(rng));
                break;
            }
            case 1: {
                s.family = "wink_shear";
                for (int k = 0; k + 1 < M.n; ++k) s.vec.push_back(Gaussian(frac(small(rng), 3), frac(small(rng), 2)));
                s.scalar = Gaussian(frac(small(rng), 4));
                break;
            }
            default: {
                if (M.n < 2) {
                    s.family = "wink_shear";
                    s.scalar = Gaussian(frac(small(rng), 4));
                    break;
                }
                s.family = "wink_rotation";
                Matrix<Gaussian> U(M.n - 1, std::vector<Gaussian>(M.n - 1, Gaussian::zero()));
                for (int k = 0; k + 1 < M.n; ++k) U[k][k] = rand_unit(rng);
                for (const auto& row : U) {
                    for (const auto& x : row) s.vec.push_back(x);
                }
                break;
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

RationalMap equivalence_move(const RationalMap& H, const AutoSpec& psi, const AutoSpec& chi) {
    RationalMap pre = materialize(H.src, psi);
    RationalMap post = materialize(H.tgt, chi);
    return compose(compose(pre, H), post);
}

}  // namespace cr
