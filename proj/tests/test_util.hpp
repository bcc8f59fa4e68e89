#pragma once

#include <random>
#include <string>

#include "cr/expr.hpp"

namespace crt {

using namespace cr;

inline mpq_class rand_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return frac(num(rng), den(rng));
}

inline Gaussian rand_gauss(std::mt19937_64& rng) {
    return Gaussian(rand_rat(rng), rand_rat(rng));
}

inline Gaussian rand_gauss_nonzero(std::mt19937_64& rng) {
    Gaussian g = rand_gauss(rng);
    while (g.is_zero()) g = rand_gauss(rng);
    return g;
}

inline Poly rand_poly(const SpacePtr& sp, std::mt19937_64& rng, int max_terms = 4, int max_exp = 2) {
    Poly p(sp);
    std::uniform_int_distribution<int> tcount(1, max_terms), e(0, max_exp);
    int terms = tcount(rng);
    for (int t = 0; t < terms; ++t) {
        ExpVec ev(sp->total(), 0);
        for (int v = 0; v < sp->total(); ++v) ev[v] = static_cast<uint16_t>(e(rng));
        p.add_term(ev, rand_gauss(rng));
    }
    return p;
}

inline Poly rand_poly_nonzero(const SpacePtr& sp, std::mt19937_64& rng, int max_terms = 4, int max_exp = 2) {
    Poly p = rand_poly(sp, rng, max_terms, max_exp);
    while (p.is_zero()) p = rand_poly(sp, rng, max_terms, max_exp);
    return p;
}

inline std::vector<Gaussian> rand_point(const SpacePtr& sp, std::mt19937_64& rng) {
    std::vector<Gaussian> pt(sp->total(), Gaussian::zero());
    for (int v = 0; v < sp->holo_count(); ++v) {
        pt[v] = rand_gauss(rng);
        pt[sp->bar(v)] = pt[v].conj();
    }
    for (int v = 2 * sp->holo_count(); v < sp->total(); ++v) pt[v] = Gaussian(rand_rat(rng));
    return pt;
}

// parse helpers for expected values written as text
inline RatFn F(const SpacePtr& sp, const std::string& text, const ParamMap& params = {}) {
    return eval_ratfn(parse_expression(text), sp, params);
}

inline Poly P(const SpacePtr& sp, const std::string& text, const ParamMap& params = {}) {
    return F(sp, text, params).as_poly();
}

}  // namespace crt
