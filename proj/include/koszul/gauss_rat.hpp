#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace koszul {

// Exact Gaussian rational re + im*i with mpq components.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long v) : re_(v), im_(0) {}
    GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {}
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    static GaussRat ratio(long num, long den) {
        if (den == 0) throw std::domain_error("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussRat(q);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    // Squared modulus, a nonnegative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }

    GaussRat inverse() const {
        mpq_class n = norm();
        if (n == 0) throw std::domain_error("division by zero");
        return GaussRat(re_ / n, -im_ / n);
    }

    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        return a * b.inverse();
    }

    GaussRat pow(unsigned k) const {
        GaussRat acc(1);
        GaussRat base = *this;
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // Total order for use as a map key; not an arithmetic comparison.
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    // Renders re-parseable text: "0", "-1", "3/2", "i", "-i", "2*i", "1-1/2*i".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (re_ != 0) out += re_.get_str();
        if (im_ != 0) {
            if (im_ == 1) {
                out += out.empty() ? "i" : "+i";
            } else if (im_ == -1) {
                out += "-i";
            } else {
                std::string m = im_.get_str();
                if (!out.empty() && m[0] != '-') out += '+';
                out += m + "*i";
            }
        }
        return out;
    }

private:
    mpq_class re_;
    mpq_class im_;
};

}
