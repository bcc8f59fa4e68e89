#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cr/holomap.hpp"
#include "test_util.hpp"

using namespace crt;

TEST_CASE("quadric to winkelmann embedding, one variable") {
    auto src = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    auto tgt = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    for (const Gaussian& eps : {Gaussian(1), Gaussian(-1), Gaussian(frac(1, 2))}) {
        ParamMap pm{{"eps", eps}};
        RationalMap H{src, tgt,
                      {F(src.amb, "z1"), F(src.amb, "w*(eps + z1) - i*z1*(1 + 2*eps*z1)", pm),
                       F(src.amb, "w*(1 + eps*z1)", pm)}};
        auto chk = check_maps_into(H);
        CHECK(chk.maps_into);
        CHECK(chk.factor == F(src.amb, "1 + eps*(z1 + z1_b) + z1*z1_b", pm));
        CHECK(chk.side == SideClass::Preserving);
        CHECK(chk.factor_at_base == Gaussian(1));
        CHECK(chk.factor.is_real_valued());
    }
}

TEST_CASE("quadric to winkelmann embedding, general dimension") {
    for (auto [n, ell] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 1}}) {
        auto src = make_hypersurface(ModelKind::Hyperquadric, n, ell);
        auto tgt = make_hypersurface(ModelKind::Winkelmann, n, ell + 1);
        ParamMap pm{{"eps", Gaussian(1)}};
        std::string zn = "z" + std::to_string(n);
        std::vector<RatFn> comp;
        for (int k = 1; k < n; ++k)
            comp.push_back(F(src.amb, "(1 + eps*" + zn + ")*z" + std::to_string(k), pm));
        comp.push_back(F(src.amb, zn));
        comp.push_back(F(src.amb, "w*(eps + " + zn + ") - i*" + zn + "*(1 + 2*eps*" + zn + ")", pm));
        comp.push_back(F(src.amb, "w*(1 + eps*" + zn + ")", pm));
        RationalMap H{src, tgt, comp};
        auto chk = check_maps_into(H);
        CHECK(chk.maps_into);
        CHECK(chk.factor == F(src.amb, "(eps + " + zn + ")*(eps + " + zn + "_b)", pm));
        CHECK(chk.side == SideClass::Preserving);
    }
}

TEST_CASE("winkelmann to quadric embedding") {
    auto src = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    auto tgt = make_hypersurface(ModelKind::Hyperquadric, 3, 1);
    RationalMap H{src, tgt,
                  {F(src.amb, "(z1 - i*zeta)/2"), F(src.amb, "z1^2"), F(src.amb, "(z1 + i*zeta)/2"),
                   F(src.amb, "w")}};
    auto chk = check_maps_into(H);
    CHECK(chk.maps_into);
    CHECK(chk.factor == F(src.amb, "1"));
    CHECK(chk.side == SideClass::Preserving);
    CHECK(transversal_at(H, chk, SurfacePoint{{Gaussian(1), Gaussian(2)}, frac(1, 2)}));
}

TEST_CASE("coordinate swap reverses the side") {
    auto M = make_hypersurface(ModelKind::Hyperquadric, 2, 1);
    RationalMap H{M, M, {F(M.amb, "z2"), F(M.amb, "z1"), F(M.amb, "-w")}};
    auto chk = check_maps_into(H);
    CHECK(chk.maps_into);
    CHECK(chk.side == SideClass::Reversing);
    CHECK(chk.factor == F(M.amb, "-1"));
}

TEST_CASE("degenerate images collapse the factor") {
    auto src = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    auto tgt = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    for (const char* g : {"z1", "w", "w^2 + z1"}) {
        RationalMap H{src, tgt, {RatFn(src.amb), F(src.amb, g), RatFn(src.amb)}};
        auto chk = check_maps_into(H);
        CHECK(chk.maps_into);
        CHECK(chk.side == SideClass::Degenerate);
        CHECK(chk.factor.is_zero());
        CHECK(!transversal_at(H, chk, SurfacePoint{{Gaussian(1)}, 0}));
    }
}

TEST_CASE("maps that miss the target are reported") {
    auto src = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    auto tgt = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    RationalMap H{src, tgt, {F(src.amb, "z1"), RatFn(src.amb), F(src.amb, "2*w")}};
    auto chk = check_maps_into(H);
    CHECK(!chk.maps_into);
}

TEST_CASE("component validation") {
    auto src = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    auto tgt = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    RationalMap bad_count{src, tgt, {F(src.amb, "z1"), F(src.amb, "w")}};
    CHECK_THROWS_AS(check_maps_into(bad_count), std::invalid_argument);
    RationalMap not_holo{src, tgt, {F(src.amb, "z1_b"), F(src.amb, "w"), F(src.amb, "w")}};
    CHECK_THROWS_AS(check_maps_into(not_holo), std::invalid_argument);
}

TEST_CASE("inversion is transversal away from its pole") {
    auto M = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    RationalMap H{M, M, {F(M.amb, "z1/w"), F(M.amb, "-1/w")}};
    SurfacePoint base{{Gaussian::zero()}, 1};
    auto chk = check_maps_into(H, base);
    CHECK(chk.maps_into);
    CHECK(chk.factor == F(M.amb, "1/(w*w_b)"));
    CHECK(chk.side == SideClass::Preserving);
    CHECK(transversal_at(H, chk, SurfacePoint{{Gaussian(3)}, frac(-1, 2)}));
    // w vanishes at the origin of the surface chart
    CHECK_THROWS_AS(transversal_at(H, chk, SurfacePoint{{Gaussian::zero()}, 0}), std::domain_error);
}

TEST_CASE("the factor is multiplicative under composition") {
    auto M = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    RationalMap inner{M, M, {F(M.amb, "2*z1"), F(M.amb, "4*w")}};  // dilation
    auto src = M;
    auto tgt = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    ParamMap pm{{"eps", Gaussian(1)}};
    RationalMap outer{src, tgt,
                      {F(src.amb, "z1"), F(src.amb, "w*(eps + z1) - i*z1*(1 + 2*eps*z1)", pm),
                       F(src.amb, "w*(1 + eps*z1)", pm)}};
    RationalMap comp = compose(inner, outer);
    auto ci = check_maps_into(inner);
    auto co = check_maps_into(outer);
    auto cc = check_maps_into(comp);
    CHECK(cc.maps_into);
    CHECK(cc.factor == pullback(inner, co.factor) * ci.factor);
    CHECK(cc.factor == F(M.amb, "4*(1 + 2*z1)*(1 + 2*z1_b)"));

    auto M2 = make_hypersurface(ModelKind::Hyperquadric, 2, 0);
    RationalMap wrong{M2, M2, {F(M2.amb, "z1"), F(M2.amb, "z2"), F(M2.amb, "w")}};
    CHECK_THROWS_AS(compose(wrong, outer), std::invalid_argument);
}

TEST_CASE("series check accepts the square root embedding") {
    auto src = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    auto tgt = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    int order = 10;
    ParamMap none;
    SeriesMap H{src, tgt,
                {eval_series(parse_expression("sqrt(1 + z1) - 1"), src.amb, none, order),
                 eval_series(parse_expression("4*i*(sqrt(1 + z1) - 1 - z1)"), src.amb, none, order),
                 eval_series(parse_expression("w"), src.amb, none, order)},
                order};
    auto chk = check_maps_into(H);
    CHECK(chk.maps_into);
    CHECK(chk.remainder_order == 10);
    CHECK(chk.factor_order == 8);
    CHECK(chk.factor == TruncSeries::constant(src.amb, Gaussian::one(), 8));
    CHECK(chk.side == SideClass::Preserving);
}

TEST_CASE("series check flags a non-map") {
    auto src = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    auto tgt = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    int order = 8;
    ParamMap none;
    SeriesMap H{src, tgt,
                {eval_series(parse_expression("z1"), src.amb, none, order),
                 eval_series(parse_expression("0"), src.amb, none, order),
                 eval_series(parse_expression("2*w"), src.amb, none, order)},
                order};
    auto chk = check_maps_into(H);
    CHECK(!chk.maps_into);
}
