#include "cr/ahlfors.hpp"

#include <stdexcept>

namespace cr {

Matrix<RatFn> ahlfors_via_logQ(const Hypersurface& src, const RatFn& Q, int sign) {
    if (Q.is_zero()) throw std::domain_error("tensor of an identically vanishing side factor");
    if (!compatible(Q.space(), src.amb)) throw std::invalid_argument("side factor not in the source ambient space");
    TangentFrame fr = tangent_frame(src);
    Matrix<Poly> h = levi_matrix(src);
    int m = src.cr_dim();
    int w = src.w_id();
    const Gaussian half = Gaussian::rational(1, 2);
    const Gaussian two_i = Gaussian(mpq_class(0), mpq_class(2));

    // xi = 2i d/dw, so (xi + conj xi) Q = 2i dQ/dw - 2i dQ/dw_b
    RatFn xiQ = Q.wirtinger(w) * two_i - Q.wirtinger(src.amb->bar(w)) * two_i;

    std::vector<RatFn> ZQ, ZbQ;
    for (int a = 0; a < m; ++a) {
        ZQ.push_back(apply_field(fr.Z[a], Q, false));
        ZbQ.push_back(apply_field(fr.Z[a], Q, true));
    }

    Matrix<RatFn> A(m, std::vector<RatFn>(m, RatFn(src.amb)));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            RatFn mixed = apply_field(fr.Z[a], ZbQ[b], false) + apply_field(fr.Z[b], ZQ[a], true);
            RatFn val = mixed * half - ZQ[a] * ZbQ[b] / Q - xiQ * half * RatFn::from_poly(h[a][b]);
            A[a][b] = sign < 0 ? -val : val;
        }
    }
    return A;
}

Matrix<RatFn> ahlfors_explicit_hyperquadric(const RationalMap& H, const MapCheck& chk) {
    if (H.tgt.kind != ModelKind::Hyperquadric) {
        throw std::invalid_argument("explicit form needs a hyperquadric target");
    }
    if (!chk.maps_into) throw std::logic_error("tensor asked for a map that does not map into the target");
    if (chk.factor.is_zero()) throw std::domain_error("tensor of a degenerate map");
    int sign = chk.side == SideClass::Reversing ? -1 : 1;

    const Hypersurface& src = H.src;
    TangentFrame fr = tangent_frame(src);
    Matrix<Poly> h = levi_matrix(src);
    int m = src.cr_dim();
    int w = src.w_id();
    int N = H.tgt.n;
    const RatFn& Q = chk.factor;
    const Gaussian two_i = Gaussian(mpq_class(0), mpq_class(2));

    std::vector<RatFn> F, Fw, Fww, Fbar, Fwbar;
    for (int k = 0; k < N; ++k) {
        F.push_back(H.comp[k]);
        Fw.push_back(H.comp[k].wirtinger(w));
        Fww.push_back(Fw[k].wirtinger(w));
        Fbar.push_back(H.comp[k].conj());
        Fwbar.push_back(Fw[k].conj());
    }
    RatFn Gww = H.comp[N].wirtinger(w).wirtinger(w);

    // bracket multiplying the Levi form: i G_ww + 2 sum_k eps_k conj(F^k) F^k_ww
    RatFn bracket = Gww * Gaussian::i();
    for (int k = 0; k < N; ++k) bracket = bracket + Fbar[k] * Fww[k] * Gaussian(2 * H.tgt.eps[k]);

    Matrix<RatFn> A(m, std::vector<RatFn>(m, RatFn(src.amb)));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            RatFn t1(src.amb), t2(src.amb);
            for (int k = 0; k < N; ++k) {
                RatFn ZaFwk = apply_field(fr.Z[a], Fw[k], false);
                RatFn ZbFbk = apply_field(fr.Z[b], Fbar[k], true);
                t1 = t1 + ZaFwk * ZbFbk * Gaussian(H.tgt.eps[k]);
            }
            for (int j = 0; j < N; ++j) {
                for (int k = 0; k < N; ++k) {
                    RatFn ZbFbk = apply_field(fr.Z[b], Fbar[k], true);
                    RatFn ZaFj = apply_field(fr.Z[a], F[j], false);
                    t2 = t2 + Fw[k] * ZbFbk * Fwbar[j] * ZaFj * Gaussian(H.tgt.eps[j] * H.tgt.eps[k]);
                }
            }
            RatFn val = t1 * (-two_i) - t2 * Gaussian(4) / Q + bracket * RatFn::from_poly(h[a][b]);
            A[a][b] = sign < 0 ? -val : val;
        }
    }
    return A;
}

Matrix<Gaussian> ahlfors_at_origin_normalized(const RationalMap& H) {
    const Hypersurface& src = H.src;
    int m = src.cr_dim();
    int w = src.w_id();
    int N = H.tgt.n;
    if (H.tgt.kind != ModelKind::Hyperquadric) {
        throw std::invalid_argument("normalized origin form needs a hyperquadric target");
    }
    std::vector<Gaussian> origin(2 * src.amb->holo_count(), Gaussian::zero());

    auto at0 = [&](const RatFn& f, const std::string& what) {
        auto v = f.eval(origin);
        if (!v) throw std::domain_error("pole at the origin while checking " + what);
        return *v;
    };
    for (int k = 0; k < (int)H.comp.size(); ++k) {
        if (!at0(H.comp[k], "components vanish at 0").is_zero()) {
            throw std::invalid_argument("not normalized: component " + std::to_string(k + 1) + " does not vanish at 0");
        }
    }
    RatFn G = H.comp[N];
    if (!(at0(G.wirtinger(w), "G_w(0)") == Gaussian::one())) {
        throw std::invalid_argument("not normalized: G_w(0) != 1");
    }
    for (int k = 0; k < N; ++k) {
        if (!at0(H.comp[k].wirtinger(w), "F_w(0)").is_zero()) {
            throw std::invalid_argument("not normalized: F" + std::to_string(k + 1) + "_w(0) != 0");
        }
    }
    if (!at0(G.wirtinger(w).wirtinger(w), "G_ww(0)").is_zero()) {
        throw std::invalid_argument("not normalized: G_ww(0) != 0");
    }

    const Gaussian minus_two_i = Gaussian(mpq_class(0), mpq_class(-2));
    Matrix<Gaussian> A(m, std::vector<Gaussian>(m, Gaussian::zero()));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            Gaussian acc = Gaussian::zero();
            for (int k = 0; k < N; ++k) {
                Gaussian fa = at0(H.comp[k].wirtinger(w).wirtinger(a), "F_wz(0)");
                Gaussian fb = at0(H.comp[k].wirtinger(b), "F_z(0)");
                acc += Gaussian(H.tgt.eps[k]) * fa * fb.conj();
            }
            A[a][b] = minus_two_i * acc;
        }
    }
    return A;
}

std::optional<int> rank_at(const Hypersurface& src, const Matrix<RatFn>& A, const SurfacePoint& p) {
    std::vector<Gaussian> pt = lift_point(src, p);
    int m = (int)A.size();
    Matrix<Gaussian> M(m, std::vector<Gaussian>(m, Gaussian::zero()));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            auto v = A[a][b].eval(pt);
            if (!v) return std::nullopt;
            M[a][b] = *v;
        }
    }
    return mat_rank(std::move(M));
}

std::vector<SurfacePoint> sample_points(const Hypersurface& src, const Matrix<RatFn>& A,
                                        int count, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::vector<SurfacePoint> out;
    int Hs = src.surf->holo_count();
    int guard = 0;
    while ((int)out.size() < count && guard++ < 1000) {
        SurfacePoint p;
        for (int k = 0; k < Hs; ++k) {
            p.z.push_back(Gaussian(frac(num(rng), 7), frac(num(rng), 5)));
        }
        p.t = frac(num(rng), 3);
        std::vector<Gaussian> pt = lift_point(src, p);
        bool clean = true;
        for (const auto& row : A) {
            for (const auto& f : row) {
                if (f.den().eval(pt).is_zero()) {
                    clean = false;
                    break;
                }
            }
            if (!clean) break;
        }
        if (clean) out.push_back(std::move(p));
    }
    if ((int)out.size() < count) throw std::runtime_error("could not sample enough pole-free points");
    return out;
}

RankReport rank_report(const Hypersurface& src, const Matrix<RatFn>& A,
                       const std::vector<SurfacePoint>& points) {
    RankReport rep;
    int m = (int)A.size();
    rep.hermitian = true;
    for (int a = 0; a < m && rep.hermitian; ++a) {
        for (int b = 0; b < m; ++b) {
            if (A[a][b] != A[b][a].conj()) {
                rep.hermitian = false;
                break;
            }
        }
    }

    Matrix<RatFn> S(m, std::vector<RatFn>(m, RatFn(src.surf)));
    bool all_zero = true;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            S[a][b] = restrict_to_surface(src, A[a][b]);
            if (!S[a][b].is_zero()) all_zero = false;
        }
    }
    rep.zero = all_zero;
    rep.generic_rank = all_zero ? 0 : mat_rank(S);

    for (const auto& p : points) {
        auto r = rank_at(src, A, p);
        if (!r) continue;
        rep.samples.push_back(p);
        rep.sample_ranks.push_back(*r);
    }
    return rep;
}

}  // namespace cr
