#include "cr/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cr {

namespace {

int exp_at(const ExpVec& e, int v) { return v < (int)e.size() ? e[v] : 0; }

ExpVec make_exp(int n) { return ExpVec(n, 0); }

}  // namespace

Poly Poly::constant(const SpacePtr& sp, const Gaussian& c) {
    Poly p(sp);
    if (!c.is_zero()) p.terms_.emplace(make_exp(sp->total()), c);
    return p;
}

Poly Poly::variable(const SpacePtr& sp, int v) {
    if (v < 0 || v >= sp->total()) throw std::out_of_range("variable id out of range");
    Poly p(sp);
    ExpVec e = make_exp(sp->total());
    e[v] = 1;
    p.terms_.emplace(e, Gaussian::one());
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const ExpVec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](uint16_t x) { return x == 0; });
}

Gaussian Poly::constant_term() const {
    auto it = terms_.find(make_exp(sp_->total()));
    return it == terms_.end() ? Gaussian::zero() : it->second;
}

Gaussian Poly::as_constant() const {
    if (!is_constant()) throw std::runtime_error("polynomial is not constant: " + str());
    return constant_term();
}

void Poly::add_term(const ExpVec& e, const Gaussian& c) {
    if (c.is_zero()) return;
    ExpVec key = e;
    key.resize(sp_->total(), 0);
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(sp_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!compatible(sp_, o.sp_)) throw std::invalid_argument("space mismatch in +");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!compatible(sp_, o.sp_)) throw std::invalid_argument("space mismatch in -");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (!compatible(sp_, o.sp_)) throw std::invalid_argument("space mismatch in *");
    Poly r(sp_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(sp_->total());
            for (int v = 0; v < sp_->total(); ++v) {
                int s = exp_at(ea, v) + exp_at(eb, v);
                if (s > 60000) throw std::overflow_error("monomial exponent overflow");
                e[v] = (uint16_t)s;
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Gaussian& c) const {
    Poly r(sp_);
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Poly r = Poly::constant(sp_, Gaussian::one());
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

Poly Poly::wirtinger(int v) const {
    Poly r(sp_);
    for (const auto& [e, c] : terms_) {
        int k = exp_at(e, v);
        if (k == 0) continue;
        ExpVec d = e;
        d[v] = (uint16_t)(k - 1);
        r.add_term(d, c * Gaussian(k));
    }
    return r;
}

Poly Poly::conj() const {
    Poly r(sp_);
    for (const auto& [e, c] : terms_) {
        ExpVec d(sp_->total(), 0);
        for (int v = 0; v < sp_->total(); ++v) d[sp_->partner(v)] = (uint16_t)exp_at(e, v);
        r.add_term(d, c.conj());
    }
    return r;
}

Gaussian Poly::eval(const std::vector<Gaussian>& point) const {
    if ((int)point.size() != sp_->total()) throw std::invalid_argument("point size mismatch");
    Gaussian acc = Gaussian::zero();
    for (const auto& [e, c] : terms_) {
        Gaussian t = c;
        for (int v = 0; v < sp_->total(); ++v) {
            for (int k = 0; k < exp_at(e, v); ++k) t *= point[v];
        }
        acc += t;
    }
    return acc;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

int Poly::weighted_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int v = 0; v < sp_->total(); ++v) s += exp_at(e, v) * sp_->weight(v);
        d = std::max(d, s);
    }
    return d;
}

int Poly::degree_in(int v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_at(e, v));
    return d;
}

Poly Poly::coeff_in(int v, int k) const {
    Poly r(sp_);
    for (const auto& [e, c] : terms_) {
        if (exp_at(e, v) != k) continue;
        ExpVec d = e;
        d[v] = 0;
        r.add_term(d, c);
    }
    return r;
}

Poly Poly::truncate_weighted(int order) const {
    Poly r(sp_);
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int v = 0; v < sp_->total(); ++v) s += exp_at(e, v) * sp_->weight(v);
        if (s <= order) r.terms_.emplace(e, c);
    }
    return r;
}

const std::pair<const ExpVec, Gaussian>& Poly::leading() const {
    if (terms_.empty()) throw std::runtime_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

namespace {

// coefficient as a printable factor in front of a monomial
std::string coeff_factor(const Gaussian& c) {
    if (c.is_real()) return rat_str(c.re);
    if (c.re == 0) {
        if (c.im == 1) return "i";
        if (c.im == -1) return "-i";
        return rat_str(c.im) + "*i";
    }
    return "(" + c.str() + ")";
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono;
        for (int v = 0; v < sp_->total(); ++v) {
            int k = exp_at(it->first, v);
            if (k == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += sp_->name(v);
            if (k > 1) mono += "^" + std::to_string(k);
        }
        std::string term;
        if (mono.empty()) {
            term = coeff_factor(it->second);
        } else if (it->second.is_one()) {
            term = mono;
        } else if (it->second == Gaussian(-1)) {
            term = "-" + mono;
        } else {
            term = coeff_factor(it->second) + "*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

std::pair<Poly, Poly> divide_linear(const Poly& p, const Poly& d, int v) {
    if (d.degree_in(v) != 1) throw std::invalid_argument("divisor is not linear in the variable");
    Poly lead = d.coeff_in(v, 1);
    if (!lead.is_constant()) throw std::invalid_argument("divisor has non-constant leading coefficient");
    Gaussian c = lead.as_constant();
    const SpacePtr& sp = p.space();
    Poly q(sp), r = p;
    Poly var = Poly::variable(sp, v);
    while (r.degree_in(v) >= 1) {
        int k = r.degree_in(v);
        Poly qk = r.coeff_in(v, k) * c.inverse();
        Poly shift = qk * var.pow(k - 1);
        q += shift;
        r -= shift * d;
    }
    return {q, r};
}

Poly subst_poly(const Poly& p, const SpacePtr& to, const std::vector<Poly>& images) {
    if ((int)images.size() != p.space()->total()) throw std::invalid_argument("substitution image count mismatch");
    Poly r(to);
    for (const auto& [e, c] : p.terms()) {
        Poly t = Poly::constant(to, c);
        for (int v = 0; v < p.space()->total(); ++v) {
            int k = v < (int)e.size() ? e[v] : 0;
            if (k > 0) t = t * images[v].pow(k);
        }
        r += t;
    }
    return r;
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly(a.space());
    Poly q(a.space()), r = a;
    Gaussian lb = b.leading_coeff();
    const ExpVec& eb = b.leading().first;
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading();
        ExpVec e(r.space()->total(), 0);
        for (int v = 0; v < r.space()->total(); ++v) {
            int d = (v < (int)er.size() ? er[v] : 0) - (v < (int)eb.size() ? eb[v] : 0);
            if (d < 0) return std::nullopt;
            e[v] = (uint16_t)d;
        }
        Poly t(a.space());
        t.add_term(e, cr / lb);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * p.leading_coeff().inverse();
}

// gcd of all coefficients of p viewed in the main variable v
Poly content_in(const Poly& p, int v) {
    Poly g(p.space());
    for (int k = 0; k <= p.degree_in(v); ++k) {
        Poly c = p.coeff_in(v, k);
        if (!c.is_zero()) g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// prem(a, b) = lc_v(b)^(deg_v a - deg_v b + 1) * a  mod  b.  The full power of
// the leading coefficient (not just one factor per reduction step) is what
// makes the subresultant divisions below exact.
Poly pseudo_rem(const Poly& a, const Poly& b, int v) {
    Poly r = a;
    int db = b.degree_in(v);
    Poly lb = b.coeff_in(v, db);
    Poly var = Poly::variable(a.space(), v);
    int e = a.degree_in(v) - db + 1;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        Poly lr = r.coeff_in(v, dr);
        r = r * lb - lr * var.pow(dr - db) * b;
        --e;
    }
    while (e-- > 0) r = r * lb;
    return r;
}

// dense coefficient list of p in v after substituting pt[u] for every other
// variable; trailing zeros trimmed, so an empty result means the image is 0
std::vector<Gaussian> project_uni(const Poly& p, int v, const std::vector<mpq_class>& pt) {
    int n = p.space()->total();
    std::vector<std::vector<mpq_class>> pw(n);
    std::vector<Gaussian> out(p.degree_in(v) + 1);
    for (const auto& [e, c] : p.terms()) {
        mpq_class s(1);
        int k = 0;
        for (int u = 0; u < n; ++u) {
            int x = exp_at(e, u);
            if (!x) continue;
            if (u == v) {
                k = x;
                continue;
            }
            auto& tab = pw[u];
            if (tab.empty()) tab.emplace_back(1);
            while ((int)tab.size() <= x) tab.push_back(tab.back() * pt[u]);
            s *= tab[x];
        }
        out[k] += Gaussian(c.re * s, c.im * s);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

int uni_gcd_degree(std::vector<Gaussian> A, std::vector<Gaussian> B) {
    auto trim = [](std::vector<Gaussian>& P) {
        while (!P.empty() && P.back().is_zero()) P.pop_back();
    };
    trim(A);
    trim(B);
    while (!B.empty()) {
        Gaussian inv = B.back().inverse();
        for (auto& c : B) c = c * inv;
        while (A.size() >= B.size()) {
            Gaussian f = A.back();
            size_t shift = A.size() - B.size();
            for (size_t j = 0; j + 1 < B.size(); ++j) A[shift + j] -= f * B[j];
            A.pop_back();
            trim(A);
            if (A.empty()) break;
        }
        std::swap(A, B);
    }
    return (int)A.size() - 1;
}

// Proves gcd(a, b) constant.  For each variable v both operands contain,
// specialize the remaining variables at a random integer point and take the
// univariate gcd of the images.  The true gcd's image divides it and keeps its
// v-degree as long as the leading coefficient of a or of b (either of which
// the gcd's leading coefficient divides) survives the specialization, so a
// degree-0 image gcd proves the gcd is free of v.  Free of every shared
// variable means constant.  A positive image degree is merely inconclusive.
bool coprime_by_projection(const Poly& a, const Poly& b) {
    int n = a.space()->total();
    std::vector<int> common;
    for (int u = 0; u < n; ++u)
        if (a.depends_on(u) && b.depends_on(u)) common.push_back(u);
    if (common.empty()) return true;
    uint64_t lcg = 0x2545f4914f6cdd1dull;
    for (int v : common) {
        Poly la = a.coeff_in(v, a.degree_in(v));
        Poly lb = b.coeff_in(v, b.degree_in(v));
        bool proved = false;
        for (int attempt = 0; attempt < 4 && !proved; ++attempt) {
            std::vector<mpq_class> pt(n);
            std::vector<Gaussian> gpt(n);
            for (int u = 0; u < n; ++u) {
                lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
                pt[u] = mpq_class((long)(2 + (lcg >> 33) % 19));
                gpt[u] = Gaussian(pt[u]);
            }
            if (la.eval(gpt).is_zero() && lb.eval(gpt).is_zero()) continue;
            auto A = project_uni(a, v, pt);
            auto B = project_uni(b, v, pt);
            if (A.empty() || B.empty()) continue;
            proved = uni_gcd_degree(A, B) == 0;
        }
        if (!proved) return false;
    }
    return true;
}

Poly monomial_gcd(const Poly& a, const Poly& b) {
    int n = a.space()->total();
    ExpVec e(n, 60000u);
    auto fold = [&](const Poly& p) {
        for (const auto& [ee, c] : p.terms()) {
            for (int v = 0; v < n; ++v) e[v] = std::min<uint16_t>(e[v], v < (int)ee.size() ? ee[v] : 0);
        }
    };
    fold(a);
    fold(b);
    Poly g(a.space());
    g.add_term(e, Gaussian::one());
    return g;
}

bool is_monomial(const Poly& p) { return p.terms().size() == 1; }

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.space(), Gaussian::one());
    if (a == b) return monic(a);
    if (is_monomial(a) || is_monomial(b)) return monomial_gcd(a, b);
    if (auto q = exact_divide(a, b)) {
        (void)q;
        return monic(b);
    }
    if (auto q = exact_divide(b, a)) {
        (void)q;
        return monic(a);
    }
    if (coprime_by_projection(a, b)) return Poly::constant(a.space(), Gaussian::one());

    // main variable: shared, with the smallest minimum degree (shortest
    // remainder sequence); the gcd cannot involve a non-shared variable
    int v = -1;
    long best = 0;
    for (int u = 0; u < a.space()->total(); ++u) {
        int da = a.degree_in(u), db = b.degree_in(u);
        if (da == 0 || db == 0) continue;
        long score = 1000L * std::min(da, db) + std::max(da, db);
        if (v < 0 || score < best) {
            v = u;
            best = score;
        }
    }
    if (v < 0) return Poly::constant(a.space(), Gaussian::one());

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly pa = *exact_divide(a, ca), pb = *exact_divide(b, cb);
    Poly cg = poly_gcd(ca, cb);

    // subresultant remainder sequence: each division is by a known factor, so
    // no per-step content gcds are needed and coefficients stay bounded
    Poly A = pa, B = pb;
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    const Poly one = Poly::constant(a.space(), Gaussian::one());
    Poly g(a.space()), gc = one, hc = one;
    while (true) {
        if (B.degree_in(v) == 0) {
            g = one;
            break;
        }
        int delta = A.degree_in(v) - B.degree_in(v);
        Poly R = pseudo_rem(A, B, v);
        if (R.is_zero()) {
            g = *exact_divide(B, content_in(B, v));
            break;
        }
        Poly lead = B.coeff_in(v, B.degree_in(v));
        std::optional<Poly> next = exact_divide(R, gc * hc.pow(delta));
        if (!next) next = exact_divide(R, content_in(R, v));
        A = B;
        B = *next;
        gc = lead;
        if (delta == 1) {
            hc = gc;
        } else if (delta > 1) {
            auto hn = exact_divide(gc.pow(delta), hc.pow(delta - 1));
            hc = hn ? *hn : gc;
        }
    }
    return monic(cg * g);
}

}  // namespace cr
