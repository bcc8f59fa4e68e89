#pragma once

#include "cr/poly.hpp"

namespace cr {

// Reduced fraction of polynomials.  Canonical form: gcd(num, den) = 1 and the
// denominator's grlex leading coefficient is 1, so equal functions compare
// equal componentwise.
class RatFn {
  public:
    explicit RatFn(SpacePtr sp) : num_(Poly(sp)), den_(Poly::constant(sp, Gaussian::one())) {}
    RatFn(Poly num, Poly den);
    static RatFn from_poly(Poly p);
    static RatFn constant(const SpacePtr& sp, const Gaussian& c);
    static RatFn variable(const SpacePtr& sp, int v);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const SpacePtr& space() const { return num_.space(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Gaussian as_constant() const;
    Poly as_poly() const;

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn operator*(const Gaussian& c) const;
    RatFn pow(int k) const;  // negative k inverts
    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    RatFn wirtinger(int v) const;
    RatFn conj() const;
    bool is_real_valued() const { return conj() == *this; }

    // exact evaluation; nullopt when the denominator vanishes
    std::optional<Gaussian> eval(const std::vector<Gaussian>& point) const;

    std::string str() const;

  private:
    Poly num_, den_;
    void reduce();
    RatFn add_impl(const RatFn& o, bool negate) const;
};

inline RatFn operator*(const Gaussian& c, const RatFn& f) { return f * c; }

RatFn subst_ratfn(const RatFn& f, const SpacePtr& to, const std::vector<RatFn>& images);
RatFn subst_ratfn(const Poly& p, const SpacePtr& to, const std::vector<RatFn>& images);

inline RatFn conjugate(const RatFn& f) { return f.conj(); }
inline RatFn wirtinger(const RatFn& f, int v) { return f.wirtinger(v); }
inline RatFn substitute(const RatFn& f, const SpacePtr& to, const std::vector<RatFn>& images) {
    return subst_ratfn(f, to, images);
}
inline RatFn substitute(const Poly& p, const SpacePtr& to, const std::vector<RatFn>& images) {
    return subst_ratfn(p, to, images);
}

}  // namespace cr
