#include "cr/kahler.hpp"

#include <stdexcept>

namespace cr {

namespace {

Matrix<Poly> numerator_matrix(const Hypersurface& M) {
    int m = M.amb->holo_count();
    const Poly& rho = M.rho;
    Matrix<Poly> P(m, std::vector<Poly>(m, Poly(M.amb)));
    for (int i = 0; i < m; ++i) {
        Poly ri = rho.wirtinger(i);
        for (int j = 0; j < m; ++j) {
            int jb = M.amb->bar(j);
            P[i][j] = ri * rho.wirtinger(jb) - rho * rho.wirtinger(i).wirtinger(jb);
        }
    }
    return P;
}

}  // namespace

Matrix<RatFn> metric_matrix(const Hypersurface& M) {
    Matrix<Poly> P = numerator_matrix(M);
    int m = M.amb->holo_count();
    RatFn rho2 = RatFn::from_poly(M.rho).pow(2);
    Matrix<RatFn> g(m, std::vector<RatFn>(m, RatFn(M.amb)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) g[i][j] = RatFn::from_poly(P[i][j]) / rho2;
    }
    return g;
}

RatFn metric_determinant(const Hypersurface& M) {
    Matrix<Poly> P = numerator_matrix(M);
    int m = M.amb->holo_count();
    Poly D = mat_det(P, Poly(M.amb));
    return RatFn::from_poly(D) / RatFn::from_poly(M.rho).pow(2 * m);
}

Matrix<RatFn> ricci_matrix(const Hypersurface& M) {
    Matrix<Poly> P = numerator_matrix(M);
    int m = M.amb->holo_count();
    Poly D = mat_det(P, Poly(M.amb));
    if (D.is_zero()) throw std::domain_error("degenerate side metric");
    RatFn D2 = RatFn::from_poly(D).pow(2);
    RatFn rho2 = RatFn::from_poly(M.rho).pow(2);
    Matrix<RatFn> ric(m, std::vector<RatFn>(m, RatFn(M.amb)));
    for (int i = 0; i < m; ++i) {
        Poly Di = D.wirtinger(i);
        for (int j = 0; j < m; ++j) {
            int jb = M.amb->bar(j);
            Poly Dij = Di.wirtinger(jb);
            RatFn logdet = RatFn::from_poly(Dij * D - Di * D.wirtinger(jb)) / D2;
            // 2m * d_i d_jb log|rho| = -2m * P[i][j] / rho^2
            RatFn logrho = RatFn::from_poly(P[i][j]) / rho2;
            ric[i][j] = -logdet - logrho * Gaussian(2 * m);
        }
    }
    return ric;
}

std::optional<Gaussian> einstein_constant(const Hypersurface& M) {
    Matrix<RatFn> g = metric_matrix(M);
    Matrix<RatFn> ric = ricci_matrix(M);
    int m = M.amb->holo_count();
    std::optional<Gaussian> c;
    for (int i = 0; i < m && !c; ++i) {
        for (int j = 0; j < m && !c; ++j) {
            if (g[i][j].is_zero()) continue;
            RatFn ratio = ric[i][j] / g[i][j];
            if (!ratio.is_constant()) return std::nullopt;
            c = ratio.as_constant();
        }
    }
    if (!c) return std::nullopt;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (ric[i][j] != g[i][j] * *c) return std::nullopt;
        }
    }
    return c;
}

IsometryResult isometry_check(const Hypersurface& src, const RatFn& Q) {
    if (Q.is_zero()) throw std::domain_error("isometry check on a degenerate side factor");
    if (!compatible(Q.space(), src.amb)) throw std::invalid_argument("side factor not in the source ambient space");
    int m = src.amb->holo_count();
    IsometryResult out;
    RatFn Q2 = Q.pow(2);
    for (int i = 0; i < m; ++i) {
        RatFn Qi = Q.wirtinger(i);
        for (int j = 0; j < m; ++j) {
            int jb = src.amb->bar(j);
            RatFn hess = (Qi.wirtinger(jb) * Q - Qi * Q.wirtinger(jb)) / Q2;
            if (!hess.is_zero()) {
                out.isometry = false;
                out.witness = "d2 log|Q| / d" + src.amb->name(i) + " d" + src.amb->name(jb) + " = " + hess.str();
                return out;
            }
        }
    }
    out.isometry = true;
    return out;
}

}  // namespace cr
