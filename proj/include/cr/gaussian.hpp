#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cr {

// Exact element of Q(i).  Arithmetic never rounds; equality is structural.
struct Gaussian {
    mpq_class re;
    mpq_class im;

    Gaussian() : re(0), im(0) {}
    Gaussian(long r) : re(r), im(0) {}
    Gaussian(const mpq_class& r) : re(r), im(0) {}
    Gaussian(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian zero() { return Gaussian(); }
    static Gaussian one() { return Gaussian(1); }
    static Gaussian i() { return Gaussian(mpq_class(0), mpq_class(1)); }
    // q must be "p" or "p/q"; mpq_class string input is not auto-canonical.
    static Gaussian rational(const std::string& q) {
        mpq_class v(q);
        v.canonicalize();
        return Gaussian(v);
    }
    static Gaussian rational(long p, long q) {
        mpq_class v(p, q);
        v.canonicalize();
        return Gaussian(v);
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    Gaussian conj() const { return Gaussian(re, -im); }
    mpq_class norm2() const { return re * re + im * im; }

    Gaussian operator-() const { return Gaussian(-re, -im); }
    Gaussian operator+(const Gaussian& o) const { return Gaussian(re + o.re, im + o.im); }
    Gaussian operator-(const Gaussian& o) const { return Gaussian(re - o.re, im - o.im); }
    Gaussian operator*(const Gaussian& o) const {
        return Gaussian(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Gaussian inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(i)");
        mpq_class n = norm2();
        return Gaussian(re / n, -im / n);
    }
    Gaussian operator/(const Gaussian& o) const { return *this * o.inverse(); }

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gaussian& o) const { return !(*this == o); }
    // Total order (re, then im); used only for canonical serialization choices.
    bool operator<(const Gaussian& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    std::string str() const;
};

std::string rat_str(const mpq_class& q);

// canonical p/q; the raw mpq_class(p, q) constructor does not reduce
inline mpq_class frac(long p, long q) {
    mpq_class v(p, q);
    v.canonicalize();
    return v;
}

}  // namespace cr
