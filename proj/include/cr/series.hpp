#pragma once

#include "cr/ratfn.hpp"

namespace cr {

// Polynomial truncation of a power series: terms of weighted degree <= order
// are exact, everything above is discarded.  Arithmetic tracks the tightest
// order that stays valid.
class TruncSeries {
  public:
    TruncSeries(Poly p, int order) : order_(order), val_(p.truncate_weighted(order)) {}
    static TruncSeries constant(const SpacePtr& sp, const Gaussian& c, int order) {
        return TruncSeries(Poly::constant(sp, c), order);
    }
    static TruncSeries variable(const SpacePtr& sp, int v, int order) {
        return TruncSeries(Poly::variable(sp, v), order);
    }

    const Poly& poly() const { return val_; }
    int order() const { return order_; }
    const SpacePtr& space() const { return val_.space(); }
    bool is_zero() const { return val_.is_zero(); }

    TruncSeries operator-() const { return TruncSeries(-val_, order_); }
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const Gaussian& c) const { return TruncSeries(val_ * c, order_); }
    TruncSeries pow(int k) const;

    // reciprocal; requires a nonzero constant term
    TruncSeries inv() const;
    TruncSeries operator/(const TruncSeries& o) const { return *this * o.inv(); }

    // square root; the constant term must be a perfect rational square > 0
    TruncSeries sqrt() const;

    TruncSeries wirtinger(int v) const {
        return TruncSeries(val_.wirtinger(v), order_ - val_.space()->weight(v));
    }
    TruncSeries conj() const { return TruncSeries(val_.conj(), order_); }

    bool operator==(const TruncSeries& o) const { return order_ == o.order_ && val_ == o.val_; }

    std::string str() const { return val_.str(); }

  private:
    int order_;
    Poly val_;
};

// Substitute truncated series for the variables of a polynomial or a rational
// function (denominator must be a unit series after substitution).
TruncSeries series_lift(const Poly& p, const SpacePtr& to, const std::vector<TruncSeries>& images, int order);
TruncSeries series_lift(const RatFn& f, const SpacePtr& to, const std::vector<TruncSeries>& images, int order);

inline TruncSeries conjugate(const TruncSeries& s) { return s.conj(); }
inline TruncSeries wirtinger(const TruncSeries& s, int v) { return s.wirtinger(v); }

}  // namespace cr
