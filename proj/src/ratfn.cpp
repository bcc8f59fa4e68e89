#include "cr/ratfn.hpp"

#include <stdexcept>

namespace cr {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!compatible(num_.space(), den_.space())) throw std::invalid_argument("space mismatch in fraction");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

RatFn RatFn::from_poly(Poly p) {
    RatFn f(p.space());
    f.num_ = std::move(p);
    return f;
}

RatFn RatFn::constant(const SpacePtr& sp, const Gaussian& c) { return from_poly(Poly::constant(sp, c)); }

RatFn RatFn::variable(const SpacePtr& sp, int v) { return from_poly(Poly::variable(sp, v)); }

void RatFn::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.space(), Gaussian::one());
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *exact_divide(num_, g);
        den_ = *exact_divide(den_, g);
    }
    Gaussian lead = den_.leading_coeff();
    if (!lead.is_one()) {
        Gaussian inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Gaussian RatFn::as_constant() const {
    if (!is_constant()) throw std::runtime_error("rational function is not constant: " + str());
    return num_.constant_term() / den_.constant_term();
}

Poly RatFn::as_poly() const {
    if (!is_poly()) throw std::runtime_error("rational function is not polynomial: " + str());
    return num_ * den_.constant_term().inverse();
}

RatFn RatFn::operator-() const {
    RatFn r(space());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

// The canonical-form invariants (num/den coprime, den monic) make the
// reductions below complete: after cancelling the cross gcds no common factor
// survives, so the results are assembled directly instead of re-reducing the
// much larger products.

RatFn RatFn::add_impl(const RatFn& o, bool negate) const {
    Poly rhs = negate ? -o.num_ : o.num_;
    Poly g = poly_gcd(den_, o.den_);
    RatFn r(space());
    if (g.is_constant()) {
        r.num_ = num_ * o.den_ + rhs * den_;
        if (!r.num_.is_zero()) r.den_ = den_ * o.den_;
        return r;
    }
    Poly bp = *exact_divide(den_, g), dp = *exact_divide(o.den_, g);
    Poly t = num_ * dp + rhs * bp;
    if (t.is_zero()) return r;
    Poly g2 = poly_gcd(t, g);
    if (g2.is_constant()) {
        r.num_ = t;
        r.den_ = g * bp * dp;
    } else {
        r.num_ = *exact_divide(t, g2);
        r.den_ = *exact_divide(g, g2) * bp * dp;
    }
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const { return add_impl(o, false); }

RatFn RatFn::operator-(const RatFn& o) const { return add_impl(o, true); }

RatFn RatFn::operator*(const RatFn& o) const {
    if (is_zero() || o.is_zero()) return RatFn(space());
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    RatFn r(space());
    r.num_ = (g1.is_constant() ? num_ : *exact_divide(num_, g1)) *
             (g2.is_constant() ? o.num_ : *exact_divide(o.num_, g2));
    r.den_ = (g2.is_constant() ? den_ : *exact_divide(den_, g2)) *
             (g1.is_constant() ? o.den_ : *exact_divide(o.den_, g1));
    return r;
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    if (is_zero()) return RatFn(space());
    Poly g1 = poly_gcd(num_, o.num_);
    Poly g2 = poly_gcd(den_, o.den_);
    Poly n = (g1.is_constant() ? num_ : *exact_divide(num_, g1)) *
             (g2.is_constant() ? o.den_ : *exact_divide(o.den_, g2));
    Poly d = (g2.is_constant() ? den_ : *exact_divide(den_, g2)) *
             (g1.is_constant() ? o.num_ : *exact_divide(o.num_, g1));
    Gaussian lead = d.leading_coeff();
    RatFn r(space());
    if (lead.is_one()) {
        r.num_ = n;
        r.den_ = d;
    } else {
        Gaussian inv = lead.inverse();
        r.num_ = n * inv;
        r.den_ = d * inv;
    }
    return r;
}

RatFn RatFn::operator*(const Gaussian& c) const {
    RatFn r(space());
    r.num_ = num_ * c;
    r.den_ = den_;
    if (c.is_zero()) r.den_ = Poly::constant(space(), Gaussian::one());
    return r;
}

RatFn RatFn::pow(int k) const {
    if (k < 0) {
        if (is_zero()) throw std::domain_error("zero to a negative power");
        return RatFn(den_, num_).pow(-k);
    }
    RatFn r = constant(space(), Gaussian::one());
    RatFn base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

RatFn RatFn::wirtinger(int v) const {
    Poly dw = den_.wirtinger(v);
    if (dw.is_zero()) return RatFn(num_.wirtinger(v), den_);
    // cancel the repeated part of den up front: with den = s*t, den' = s*u the
    // quotient rule collapses to (num'*t - num*u)/(den*t)
    Poly s = poly_gcd(den_, dw);
    if (s.is_constant()) return RatFn(num_.wirtinger(v) * den_ - num_ * dw, den_ * den_);
    Poly t = *exact_divide(den_, s);
    Poly u = *exact_divide(dw, s);
    return RatFn(num_.wirtinger(v) * t - num_ * u, den_ * t);
}

RatFn RatFn::conj() const {
    // conjugation is a ring automorphism, so coprimality survives; only the
    // monic normalization of the denominator needs redoing
    RatFn r(space());
    r.num_ = num_.conj();
    r.den_ = den_.conj();
    Gaussian lead = r.den_.leading_coeff();
    if (!lead.is_one()) {
        Gaussian inv = lead.inverse();
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

std::optional<Gaussian> RatFn::eval(const std::vector<Gaussian>& point) const {
    Gaussian d = den_.eval(point);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(point) / d;
}

std::string RatFn::str() const {
    if (is_poly()) return as_poly().str();
    std::string n = num_.str(), d = den_.str();
    auto wrap = [](const std::string& s) {
        bool atomic = s.find(' ') == std::string::npos && s.find('*') == std::string::npos &&
                      s.find('/') == std::string::npos && s.find('^') == std::string::npos;
        return atomic ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(d);
}

RatFn subst_ratfn(const Poly& p, const SpacePtr& to, const std::vector<RatFn>& images) {
    if ((int)images.size() != p.space()->total()) throw std::invalid_argument("substitution image count mismatch");
    RatFn r(to);
    for (const auto& [e, c] : p.terms()) {
        RatFn t = RatFn::constant(to, c);
        for (int v = 0; v < p.space()->total(); ++v) {
            int k = v < (int)e.size() ? e[v] : 0;
            if (k > 0) t = t * images[v].pow(k);
        }
        r = r + t;
    }
    return r;
}

RatFn subst_ratfn(const RatFn& f, const SpacePtr& to, const std::vector<RatFn>& images) {
    RatFn n = subst_ratfn(f.num(), to, images);
    RatFn d = subst_ratfn(f.den(), to, images);
    return n / d;
}

}  // namespace cr
