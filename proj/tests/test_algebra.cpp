#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace crt;

TEST_CASE("gaussian rational arithmetic") {
    Gaussian a(frac(1, 2), frac(-3, 4));
    Gaussian b(frac(2, 3), frac(1, 5));
    CHECK(a + b == Gaussian(frac(7, 6), frac(-11, 20)));
    CHECK(a * b == b * a);
    CHECK((a * b) * a.inverse() == b);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    CHECK((a * a.conj()).re == a.norm2());
    CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
    CHECK(Gaussian::rational("-14/21") == Gaussian(frac(-2, 3)));
    CHECK_THROWS(Gaussian::zero().inverse());
}

TEST_CASE("gaussian string forms") {
    CHECK(Gaussian::zero().str() == "0");
    CHECK(Gaussian(frac(3, 4)).str() == "3/4");
    CHECK(Gaussian::i().str() == "i");
    CHECK((-Gaussian::i()).str() == "-i");
    CHECK(Gaussian(frac(0, 1), frac(2, 5)).str() == "2/5*i");
    CHECK(Gaussian(frac(1, 2), frac(-1, 3)).str() == "1/2-1/3*i");
}

TEST_CASE("polynomial ring axioms hold on random inputs") {
    auto sp = make_ambient_space(2, false);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        Poly p = rand_poly(sp, rng), q = rand_poly(sp, rng), r = rand_poly(sp, rng);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == Poly(sp));
        CHECK(p * Poly::constant(sp, Gaussian::one()) == p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    auto sp = make_ambient_space(1, true);
    std::mt19937_64 rng(12);
    for (int it = 0; it < 100; ++it) {
        Poly p = rand_poly(sp, rng), q = rand_poly(sp, rng);
        auto pt = rand_point(sp, rng);
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    }
}

TEST_CASE("conjugation is an involutive anti-automorphism fixing reals") {
    auto sp = make_ambient_space(2, false);
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        Poly p = rand_poly(sp, rng), q = rand_poly(sp, rng);
        CHECK(p.conj().conj() == p);
        CHECK((p + q).conj() == p.conj() + q.conj());
        CHECK((p * q).conj() == p.conj() * q.conj());
        Poly re = p * p.conj();
        CHECK(re.is_real_valued());
        // conjugation commutes with evaluation at conjugation-closed points
        auto pt = rand_point(sp, rng);
        CHECK(p.conj().eval(pt) == p.eval(pt).conj());
    }
}

TEST_CASE("wirtinger derivatives commute and satisfy leibniz") {
    auto sp = make_ambient_space(2, true);
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> pick(0, sp->total() - 1);
    for (int it = 0; it < 200; ++it) {
        Poly p = rand_poly(sp, rng), q = rand_poly(sp, rng);
        int u = pick(rng), v = pick(rng);
        CHECK(p.wirtinger(u).wirtinger(v) == p.wirtinger(v).wirtinger(u));
        CHECK((p * q).wirtinger(u) == p.wirtinger(u) * q + p * q.wirtinger(u));
        // conj swaps the variable with its partner
        CHECK(p.wirtinger(u).conj() == p.conj().wirtinger(sp->partner(u)));
    }
}

TEST_CASE("wirtinger on monomials") {
    auto sp = make_ambient_space(1, false);  // z1, w
    Poly p = P(sp, "z1^3*w^2 + 2*z1");
    CHECK(p.wirtinger(0) == P(sp, "3*z1^2*w^2 + 2"));
    CHECK(p.wirtinger(1) == P(sp, "2*z1^3*w"));
    CHECK(p.wirtinger(sp->bar(0)).is_zero());
}

TEST_CASE("divide_linear reconstructs its input") {
    auto sp = make_ambient_space(2, false);
    std::mt19937_64 rng(15);
    int v = sp->bar(sp->holo_count() - 1);  // divide in w_b
    for (int it = 0; it < 200; ++it) {
        Poly p = rand_poly(sp, rng, 5, 2);
        // divisor c*v + e with constant nonzero c and e free of v
        Poly e = rand_poly(sp, rng, 3, 1);
        while (e.depends_on(v)) e = e.coeff_in(v, 0);
        Poly d = Poly::variable(sp, v) * rand_gauss_nonzero(rng) + e;
        auto [q, r] = divide_linear(p, d, v);
        CHECK(q * d + r == p);
        CHECK(!r.depends_on(v));
    }
}

TEST_CASE("divide_linear rejects bad divisors") {
    auto sp = make_ambient_space(1, false);
    Poly p = P(sp, "z1*w");
    CHECK_THROWS(divide_linear(p, P(sp, "w^2"), 1));
    CHECK_THROWS(divide_linear(p, P(sp, "z1*w + 1"), 1));  // nonconstant lead coefficient
}

TEST_CASE("coefficient extraction rebuilds the polynomial") {
    auto sp = make_ambient_space(2, false);
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<int> pick(0, sp->total() - 1);
    for (int it = 0; it < 100; ++it) {
        Poly p = rand_poly(sp, rng, 5, 3);
        int v = pick(rng);
        Poly back(sp);
        for (int k = 0; k <= p.degree_in(v); ++k) {
            Poly c = p.coeff_in(v, k);
            CHECK(!c.depends_on(v));
            back += c * Poly::variable(sp, v).pow(k);
        }
        CHECK(back == p);
    }
}

TEST_CASE("substitution by the identity and by constants") {
    auto sp = make_ambient_space(1, true);
    std::mt19937_64 rng(17);
    std::vector<Poly> ident;
    for (int v = 0; v < sp->total(); ++v) ident.push_back(Poly::variable(sp, v));
    for (int it = 0; it < 50; ++it) {
        Poly p = rand_poly(sp, rng);
        CHECK(subst_poly(p, sp, ident) == p);
        auto pt = rand_point(sp, rng);
        std::vector<Poly> consts;
        for (const auto& c : pt) consts.push_back(Poly::constant(sp, c));
        CHECK(subst_poly(p, sp, consts) == Poly::constant(sp, p.eval(pt)));
    }
}

TEST_CASE("exact division and gcd") {
    auto sp = make_ambient_space(2, false);
    std::mt19937_64 rng(18);
    for (int it = 0; it < 60; ++it) {
        Poly a = rand_poly_nonzero(sp, rng, 3, 1);
        Poly b = rand_poly_nonzero(sp, rng, 3, 1);
        auto q = exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
        Poly g = poly_gcd(a * b, b);
        // b divides both arguments, so it divides the gcd
        CHECK(exact_divide(g, poly_gcd(g, b)).has_value());
        CHECK(exact_divide(a * b, g).has_value());
        CHECK(exact_divide(b, g).has_value());
    }
    Poly z = Poly(sp);
    CHECK(poly_gcd(z, z).is_zero());
    Poly x = P(sp, "z1^2 - w^2"), y = P(sp, "z1 + w");
    CHECK(poly_gcd(x, y) == y);
}

TEST_CASE("rational functions reduce to canonical form") {
    auto sp = make_ambient_space(1, false);
    std::mt19937_64 rng(19);
    for (int it = 0; it < 60; ++it) {
        Poly p = rand_poly(sp, rng, 3, 1);
        Poly q = rand_poly_nonzero(sp, rng, 3, 1);
        Poly c = rand_poly_nonzero(sp, rng, 2, 1);
        CHECK(RatFn(p * c, q * c) == RatFn(p, q));
        RatFn f(p, q);
        CHECK(f.den().leading_coeff() == Gaussian::one());
        CHECK(poly_gcd(f.num(), f.den()).is_constant());
    }
}

TEST_CASE("rational function field axioms") {
    auto sp = make_ambient_space(1, false);
    std::mt19937_64 rng(20);
    for (int it = 0; it < 40; ++it) {
        RatFn f(rand_poly(sp, rng, 2, 1), rand_poly_nonzero(sp, rng, 2, 1));
        RatFn g(rand_poly(sp, rng, 2, 1), rand_poly_nonzero(sp, rng, 2, 1));
        RatFn h(rand_poly(sp, rng, 2, 1), rand_poly_nonzero(sp, rng, 2, 1));
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * (g + h) == f * g + f * h);
        if (!g.is_zero()) CHECK(f / g * g == f);
        CHECK(f - f == RatFn(sp));
        CHECK(f.conj().conj() == f);
        CHECK((f * g).conj() == f.conj() * g.conj());
    }
    CHECK_THROWS(RatFn(Poly::constant(sp, Gaussian::one()), Poly(sp)));
}

TEST_CASE("rational wirtinger quotient rule") {
    auto sp = make_ambient_space(1, false);
    std::mt19937_64 rng(21);
    for (int it = 0; it < 30; ++it) {
        RatFn f(rand_poly(sp, rng, 2, 2), rand_poly_nonzero(sp, rng, 2, 1));
        RatFn g(rand_poly(sp, rng, 2, 2), rand_poly_nonzero(sp, rng, 2, 1));
        for (int v = 0; v < sp->total(); ++v) {
            CHECK((f * g).wirtinger(v) == f.wirtinger(v) * g + f * g.wirtinger(v));
        }
    }
}

TEST_CASE("string output reparses to the same function") {
    auto sp = make_ambient_space(2, true);
    std::mt19937_64 rng(22);
    for (int it = 0; it < 60; ++it) {
        RatFn f(rand_poly(sp, rng, 4, 2), rand_poly_nonzero(sp, rng, 3, 1));
        CHECK(F(sp, f.str()) == f);
    }
    CHECK(Poly(sp).str() == "0");
}

TEST_CASE("weighted truncation agrees with weighted degree") {
    auto sp = make_ambient_space(1, true);  // weights: z1 -> 1, zeta -> 2, w -> 2
    Poly p = P(sp, "z1 + zeta*w + z1^2*zeta + w");
    CHECK(p.truncate_weighted(2) == P(sp, "z1 + w"));
    CHECK(p.truncate_weighted(4) == P(sp, "z1 + zeta*w + z1^2*zeta + w"));
    CHECK(P(sp, "zeta*w").weighted_degree() == 4);
    CHECK(P(sp, "z1^3").weighted_degree() == 3);
}

TEST_CASE("free-function spellings match the member operations") {
    auto sp = make_ambient_space(2, false);
    std::mt19937_64 rng(33);
    Poly p = rand_poly(sp, rng), q = rand_poly_nonzero(sp, rng);
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p * q) == conjugate(p) * conjugate(q));
    CHECK(wirtinger(p, 0) == p.wirtinger(0));
    RatFn f(p, q);
    CHECK(conjugate(f) == f.conj());
    CHECK(wirtinger(f, 1) == f.wirtinger(1));
    std::vector<RatFn> ids;
    for (int v = 0; v < sp->total(); ++v) ids.push_back(RatFn::variable(sp, v));
    CHECK(substitute(f, sp, ids) == f);
    CHECK(substitute(p, sp, ids) == RatFn::from_poly(p));
    TruncSeries s(p, 6);
    CHECK(conjugate(s) == s.conj());
    CHECK(wirtinger(s, 0) == s.wirtinger(0));
}
