#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cr/ahlfors.hpp"
#include "test_util.hpp"

using namespace crt;

namespace {

RationalMap r_embedding(const Gaussian& eps) {
    auto src = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    auto tgt = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    ParamMap pm{{"eps", eps}};
    return RationalMap{src, tgt,
                       {F(src.amb, "z1"), F(src.amb, "w*(eps + z1) - i*z1*(1 + 2*eps*z1)", pm),
                        F(src.amb, "w*(1 + eps*z1)", pm)}};
}

RationalMap r_fix_family(const Gaussian& eps, const Gaussian& mu) {
    auto src = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    auto tgt = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    ParamMap pm{{"eps", eps}, {"mu", mu}};
    return RationalMap{
        src, tgt,
        {F(src.amb, "z1/(1 - mu*w)", pm),
         F(src.amb, "(-2*i*eps*z1^2 + eps*w*(1 - mu*w) + z1*(-i + w + 3*i*mu*w))/(1 - mu*w)^2", pm),
         F(src.amb, "w*(1 + eps*z1 - 2*mu*w)/(1 - mu*w)^2", pm)}};
}

bool all_zero(const Matrix<RatFn>& A) {
    for (const auto& row : A)
        for (const auto& f : row)
            if (!f.is_zero()) return false;
    return true;
}

bool zero_on_surface(const Hypersurface& M, const Matrix<RatFn>& A) {
    for (const auto& row : A)
        for (const auto& f : row)
            if (!restrict_to_surface(M, f).is_zero()) return false;
    return true;
}

bool same_on_surface(const Hypersurface& M, const Matrix<RatFn>& A, const Matrix<RatFn>& B) {
    for (size_t a = 0; a < A.size(); ++a)
        for (size_t b = 0; b < A.size(); ++b)
            if (!restrict_to_surface(M, A[a][b] - B[a][b]).is_zero()) return false;
    return true;
}

Matrix<RatFn> tensor_of(const RationalMap& H, MapCheck* out_chk = nullptr) {
    auto chk = check_maps_into(H, SurfacePoint{std::vector<Gaussian>(H.src.surf->holo_count(), Gaussian::zero()), 0});
    REQUIRE(chk.maps_into);
    int sign = chk.side == SideClass::Reversing ? -1 : 1;
    if (out_chk) *out_chk = chk;
    return ahlfors_via_logQ(H.src, chk.factor, sign);
}

}  // namespace

TEST_CASE("tensor vanishes exactly for the unit-shear embeddings") {
    for (const Gaussian& eps : {Gaussian(1), Gaussian(-1)}) {
        CHECK(all_zero(tensor_of(r_embedding(eps))));
    }
    // and for no other shear value
    for (const Gaussian& eps : {Gaussian::zero(), Gaussian(frac(1, 2)), Gaussian(2)}) {
        CHECK(!all_zero(tensor_of(r_embedding(eps))));
    }
}

TEST_CASE("tensor of the rational fix family matches the pinned value") {
    auto H = r_fix_family(Gaussian(frac(1, 2)), Gaussian(frac(1, 3)));
    MapCheck chk(H.src.amb);
    auto A = tensor_of(H, &chk);
    auto sp = H.src.amb;
    RatFn q_expected = F(sp,
                         "-27*(-2*w*w_b + w*z1_b + 4*w + w_b*z1 + 4*w_b - 6*z1*z1_b - 3*z1 - 3*z1_b - 6)"
                         "/(2*(w - 3)^2*(w_b - 3)^2)");
    CHECK(chk.factor == q_expected);
    CHECK(chk.side == SideClass::Preserving);
    REQUIRE(A.size() == 1);
    RatFn a_expected = F(sp,
                         "-27*(11*w*w_b + 22*i*w*z1*z1_b + 4*i*w*z1 - 21*w - 22*i*w_b*z1*z1_b"
                         " - 4*i*w_b*z1_b - 21*w_b + 44*z1^2*z1_b^2 + 8*z1^2*z1_b + 8*z1*z1_b^2"
                         " - 16*z1*z1_b - 12*i*z1 + 12*i*z1_b + 27)"
                         "/(2*(w - 3)^2*(w_b - 3)^2"
                         "*(-2*w*w_b + w*z1_b + 4*w + w_b*z1 + 4*w_b - 6*z1*z1_b - 3*z1 - 3*z1_b - 6))");
    CHECK(A[0][0] == a_expected);
    // the fix family is obstructed even at unit shear once mu is switched on
    CHECK(!all_zero(tensor_of(r_fix_family(Gaussian(1), Gaussian(frac(1, 3))))));
    CHECK(!all_zero(tensor_of(r_fix_family(Gaussian(-1), Gaussian(frac(1, 3))))));
}

TEST_CASE("tensor entries are hermitian and real on the diagonal") {
    for (const Gaussian& eps : {Gaussian(frac(1, 2)), Gaussian(2)}) {
        auto A = tensor_of(r_embedding(eps));
        for (size_t a = 0; a < A.size(); ++a) {
            for (size_t b = 0; b < A.size(); ++b) {
                CHECK(A[a][b] == A[b][a].conj());
            }
        }
    }
}

TEST_CASE("quadric automorphisms carry a vanishing tensor") {
    auto M = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    // inversion has a w-dependent factor, the sharpest test of the pairing
    RationalMap inv{M, M, {F(M.amb, "z1/w"), F(M.amb, "-1/w")}};
    auto chk = check_maps_into(inv, SurfacePoint{{Gaussian::zero()}, 1});
    REQUIRE(chk.maps_into);
    auto A = ahlfors_via_logQ(M, chk.factor, 1);
    CHECK(all_zero(A));
    // the explicit route gives a different ambient representative here; only
    // its restriction to the surface vanishes
    auto E = ahlfors_explicit_hyperquadric(inv, chk);
    CHECK(zero_on_surface(M, E));
}

TEST_CASE("both tensor formulas agree on quadric targets") {
    auto M = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    auto tgt = make_hypersurface(ModelKind::Hyperquadric, 3, 1);
    std::mt19937_64 rng(51);
    for (int it = 0; it < 5; ++it) {
        // (phi, phi, z1, w) lands in the mixed-signature quadric for any phi
        Poly phi = rand_poly(M.amb, rng, 3, 2);
        Poly holo(M.amb);
        for (const auto& [e, c] : phi.terms()) {
            ExpVec cut(e.begin(), e.begin() + 2);
            cut.resize(e.size(), 0);
            holo.add_term(cut, c);
        }
        RatFn f = RatFn::from_poly(holo);
        RationalMap H{M, tgt, {f, f, F(M.amb, "z1"), F(M.amb, "w")}};
        auto chk = check_maps_into(H);
        REQUIRE(chk.maps_into);
        CHECK(chk.factor == F(M.amb, "1"));
        auto A = ahlfors_via_logQ(M, chk.factor, 1);
        auto E = ahlfors_explicit_hyperquadric(H, chk);
        CHECK(same_on_surface(M, A, E));
    }
}

TEST_CASE("composing with the quadric embedding preserves the tensor") {
    // W^5_1 -> H^7_1 has unit factor, so the tensor of the composite equals
    // the tensor of the inner map; the explicit formula must agree too.
    auto wink = make_hypersurface(ModelKind::Winkelmann, 1, 1);
    auto quad = make_hypersurface(ModelKind::Hyperquadric, 3, 1);
    RationalMap phi{wink, quad,
                    {F(wink.amb, "(z1 - i*zeta)/2"), F(wink.amb, "z1^2"),
                     F(wink.amb, "(z1 + i*zeta)/2"), F(wink.amb, "w")}};
    for (const Gaussian& eps : {Gaussian(1), Gaussian(frac(1, 2))}) {
        RationalMap H = r_embedding(eps);
        RationalMap comp = compose(H, phi);
        auto chk_inner = check_maps_into(H);
        auto chk_comp = check_maps_into(comp);
        REQUIRE(chk_comp.maps_into);
        CHECK(chk_comp.factor == chk_inner.factor);
        auto A_inner = ahlfors_via_logQ(H.src, chk_inner.factor, 1);
        auto A_comp = ahlfors_via_logQ(comp.src, chk_comp.factor, 1);
        CHECK(A_inner == A_comp);
        auto E = ahlfors_explicit_hyperquadric(comp, chk_comp);
        CHECK(same_on_surface(comp.src, E, A_comp));
    }
}

TEST_CASE("origin value recovers a planted hermitian matrix") {
    // L lower triangular; the planted map has tensor L L^* at the origin
    std::vector<std::vector<Gaussian>> L = {{Gaussian(frac(1, 2)), Gaussian::zero()},
                                            {Gaussian(frac(1, 3), frac(1, 5)), Gaussian(frac(2, 7))}};
    int n = 2, N = n * n + 2 * n;
    auto src = make_hypersurface(ModelKind::Hyperquadric, n, 0);
    auto tgt = make_hypersurface(ModelKind::Hyperquadric, N, n);

    Matrix<Gaussian> A(n, std::vector<Gaussian>(n, Gaussian::zero()));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) A[j][k] += L[j][m] * L[k][m].conj();

    auto z = [&](int k) { return RatFn::variable(src.amb, k); };
    RatFn w = RatFn::variable(src.amb, src.w_id());
    auto zA = [&](int j) {
        RatFn acc(src.amb);
        for (int k = 0; k < n; ++k) acc = acc + z(k) * A[k][j];
        return acc;
    };
    std::vector<RatFn> comp;
    for (int j = 0; j < n; ++j) comp.push_back(zA(j) * w * Gaussian(frac(1, 2)));  // negative slots
    for (int a = 0; a < n; ++a) comp.push_back(z(a) + zA(a) * w * Gaussian(frac(0, 1), frac(1, 2)));
    for (int j = 0; j < n; ++j) {
        RatFn lz(src.amb);  // plain transpose pairing, no conjugation
        for (int m = 0; m < n; ++m) lz = lz + z(m) * L[m][j];
        for (int k = 0; k < n; ++k) comp.push_back(lz * z(k));
    }
    comp.push_back(w);
    RationalMap H{src, tgt, comp};

    auto chk = check_maps_into(H);
    REQUIRE(chk.maps_into);
    // factor = 1 + sum A_jk z_j z_k-bar
    RatFn nu(src.amb);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) nu = nu + z(j) * RatFn::variable(src.amb, src.amb->bar(k)) * A[j][k];
    CHECK(chk.factor == RatFn::constant(src.amb, Gaussian::one()) + nu);

    auto O = ahlfors_at_origin_normalized(H);
    REQUIRE(O.size() == (size_t)n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) CHECK(O[a][b] == A[a][b]);

    // and the two full-tensor routes agree with it at the origin
    auto full = ahlfors_via_logQ(src, chk.factor, 1);
    auto expl = ahlfors_explicit_hyperquadric(H, chk);
    CHECK(full == expl);
    auto origin = lift_point(src, SurfacePoint{std::vector<Gaussian>(n, Gaussian::zero()), 0});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) CHECK(*full[a][b].eval(origin) == A[a][b]);
}

TEST_CASE("origin normalization preconditions are named") {
    auto M = make_hypersurface(ModelKind::Hyperquadric, 1, 0);
    RationalMap shifted{M, M, {F(M.amb, "z1 + 1"), F(M.amb, "w + 2*i*z1 + i")}};
    CHECK(check_maps_into(shifted, SurfacePoint{{Gaussian(-1)}, 0}).maps_into);
    CHECK_THROWS_WITH_AS(ahlfors_at_origin_normalized(shifted),
                         doctest::Contains("does not vanish at 0"), std::invalid_argument);
    RationalMap dilated{M, M, {F(M.amb, "2*z1"), F(M.amb, "4*w")}};
    CHECK_THROWS_AS(ahlfors_at_origin_normalized(dilated), std::invalid_argument);
}

TEST_CASE("rank report distinguishes the family members") {
    auto H0 = r_embedding(Gaussian(1));
    auto A0 = tensor_of(H0);
    std::mt19937_64 rng(52);
    auto pts0 = sample_points(H0.src, A0, 3, rng);
    auto rep0 = rank_report(H0.src, A0, pts0);
    CHECK(rep0.zero);
    CHECK(rep0.generic_rank == 0);
    CHECK(rep0.hermitian);
    for (int r : rep0.sample_ranks) CHECK(r == 0);

    auto Hh = r_embedding(Gaussian(frac(1, 2)));
    auto Ah = tensor_of(Hh);
    auto ptsh = sample_points(Hh.src, Ah, 3, rng);
    auto reph = rank_report(Hh.src, Ah, ptsh);
    CHECK(!reph.zero);
    CHECK(reph.generic_rank == 1);
    for (int r : reph.sample_ranks) CHECK(r == 1);

    CHECK(rank_at(Hh.src, Ah, SurfacePoint{{Gaussian::zero()}, 0}) == 1);
}

TEST_CASE("explicit formula rejects non-quadric targets") {
    auto H = r_embedding(Gaussian(1));
    auto chk = check_maps_into(H);
    CHECK_THROWS_AS(ahlfors_explicit_hyperquadric(H, chk), std::invalid_argument);
}
