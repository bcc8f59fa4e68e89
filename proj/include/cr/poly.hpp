#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cr/gaussian.hpp"
#include "cr/varspace.hpp"

namespace cr {

using ExpVec = std::vector<uint16_t>;

// Graded lexicographic order; the map's last element is the leading term.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

class Poly {
  public:
    using TermMap = std::map<ExpVec, Gaussian, GrlexLess>;

    explicit Poly(SpacePtr sp) : sp_(std::move(sp)) {}
    static Poly constant(const SpacePtr& sp, const Gaussian& c);
    static Poly variable(const SpacePtr& sp, int v);

    const SpacePtr& space() const { return sp_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Gaussian constant_term() const;
    // exact value when constant, throws otherwise
    Gaussian as_constant() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Gaussian& c) const;
    Poly pow(int k) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly wirtinger(int v) const;
    Poly conj() const;
    bool is_real_valued() const { return conj() == *this; }

    Gaussian eval(const std::vector<Gaussian>& point) const;

    int total_degree() const;
    int weighted_degree() const;
    int degree_in(int v) const;
    // coefficient of v^k as a polynomial free of v
    Poly coeff_in(int v, int k) const;
    bool depends_on(int v) const { return degree_in(v) > 0; }

    Poly truncate_weighted(int order) const;

    // leading term under grlex (throws on zero)
    const std::pair<const ExpVec, Gaussian>& leading() const;
    Gaussian leading_coeff() const { return leading().second; }

    void add_term(const ExpVec& e, const Gaussian& c);
    std::string str() const;

  private:
    SpacePtr sp_;
    TermMap terms_;
};

inline Poly operator*(const Gaussian& c, const Poly& p) { return p * c; }

inline Poly conjugate(const Poly& p) { return p.conj(); }
inline Poly wirtinger(const Poly& p, int v) { return p.wirtinger(v); }

// p = q*d + r with r free of v; requires d of degree exactly 1 in v with a
// nonzero constant coefficient on v.
std::pair<Poly, Poly> divide_linear(const Poly& p, const Poly& d, int v);

// Simultaneous substitution: images[v] (in space `to`) replaces variable v of
// p's space.  Pure polynomial version; the rational one lives in ratfn.hpp.
Poly subst_poly(const Poly& p, const SpacePtr& to, const std::vector<Poly>& images);

// Exact polynomial division; nullopt when b does not divide a.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

// Multivariate gcd over Q(i), primitive and grlex-monic; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace cr
