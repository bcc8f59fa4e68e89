#include "cr/series.hpp"

#include <stdexcept>

namespace cr {

namespace {

// exact square root of a positive rational, nullopt when not a perfect square
std::optional<mpq_class> rat_sqrt(const mpq_class& q) {
    if (q <= 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(rn, rd);
}

}  // namespace

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    return TruncSeries(val_ + o.val_, std::min(order_, o.order_));
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    return TruncSeries(val_ - o.val_, std::min(order_, o.order_));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    int ord = std::min(order_, o.order_);
    return TruncSeries((val_ * o.val_).truncate_weighted(ord), ord);
}

TruncSeries TruncSeries::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    TruncSeries r = constant(space(), Gaussian::one(), order_);
    TruncSeries base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

TruncSeries TruncSeries::inv() const {
    Gaussian c0 = val_.constant_term();
    if (c0.is_zero()) throw std::domain_error("series reciprocal needs a nonzero constant term");
    // 1/(c0(1+m)) = (1/c0) sum (-m)^j with m of positive weighted valuation
    Poly m = (val_ * c0.inverse() - Poly::constant(space(), Gaussian::one())).truncate_weighted(order_);
    Poly acc = Poly::constant(space(), Gaussian::one());
    Poly power = Poly::constant(space(), Gaussian::one());
    for (int j = 1; j <= order_; ++j) {
        power = (power * m).truncate_weighted(order_);
        if (power.is_zero()) break;
        acc += (j % 2 ? -power : power);
    }
    return TruncSeries(acc * c0.inverse(), order_);
}

TruncSeries TruncSeries::sqrt() const {
    Gaussian c0 = val_.constant_term();
    if (!c0.is_real()) throw std::domain_error("series square root needs a real constant term");
    auto root = rat_sqrt(c0.re);
    if (!root) throw std::domain_error("series square root: constant term is not a perfect rational square");
    // sqrt(c0(1+m)) = sqrt(c0) sum binom(1/2, j) m^j
    Poly m = (val_ * c0.inverse() - Poly::constant(space(), Gaussian::one())).truncate_weighted(order_);
    Poly acc = Poly::constant(space(), Gaussian::one());
    Poly power = Poly::constant(space(), Gaussian::one());
    mpq_class b(1);
    for (int j = 1; j <= order_; ++j) {
        power = (power * m).truncate_weighted(order_);
        if (power.is_zero()) break;
        b *= mpq_class(1, 2) - (j - 1);
        b /= j;
        acc += power * Gaussian(b, mpq_class(0));
    }
    return TruncSeries(acc * Gaussian(*root, mpq_class(0)), order_);
}

TruncSeries series_lift(const Poly& p, const SpacePtr& to, const std::vector<TruncSeries>& images, int order) {
    if ((int)images.size() != p.space()->total()) throw std::invalid_argument("series substitution image count mismatch");
    TruncSeries r = TruncSeries::constant(to, Gaussian::zero(), order);
    for (const auto& [e, c] : p.terms()) {
        TruncSeries t = TruncSeries::constant(to, c, order);
        for (int v = 0; v < p.space()->total(); ++v) {
            int k = v < (int)e.size() ? e[v] : 0;
            if (k > 0) t = t * images[v].pow(k);
        }
        r = r + t;
    }
    return r;
}

TruncSeries series_lift(const RatFn& f, const SpacePtr& to, const std::vector<TruncSeries>& images, int order) {
    TruncSeries n = series_lift(f.num(), to, images, order);
    TruncSeries d = series_lift(f.den(), to, images, order);
    return n / d;
}

}  // namespace cr
