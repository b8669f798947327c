#pragma once

#include "poly.hpp"

#include <memory>
#include <string>
#include <utility>

namespace koszul {

// Element of the coefficient tower: num / nrm^den_pow, where nrm is the
// squared pointwise norm of the registered section.  Fractions are kept
// unreduced but always combined over a common denominator, so zero testing
// is exactly zero testing of the numerator.
class Frac {
public:
    explicit Frac(Poly num) : num_(std::move(num)), den_pow_(0) {}

    Frac(Poly num, uint32_t den_pow, std::shared_ptr<const Poly> norm)
        : num_(std::move(num)), den_pow_(den_pow), norm_(std::move(norm)) {
        if (num_.is_zero() || den_pow_ == 0) {
            den_pow_ = 0;
            norm_.reset();
        } else {
            internal_check(norm_ != nullptr, "denominator without a norm");
            internal_check(!norm_->is_zero(), "zero norm");
        }
    }

    static Frac zero(uint32_t n) { return Frac(Poly::zero(n)); }
    static Frac one(uint32_t n) { return Frac(Poly::one(n)); }
    static Frac constant(uint32_t n, GaussRat c) { return Frac(Poly::constant(n, std::move(c))); }

    uint32_t nvars() const { return num_.nvars(); }
    const Poly& num() const { return num_; }
    uint32_t den_pow() const { return den_pow_; }
    const std::shared_ptr<const Poly>& norm() const { return norm_; }

    bool is_zero() const { return num_.is_zero(); }

    bool has_jets() const { return num_.has_jets(); }

    Frac operator-() const { return Frac(-num_, den_pow_, norm_); }

    Frac& operator+=(const Frac& o) { return combine(o, false); }
    Frac& operator-=(const Frac& o) { return combine(o, true); }

    friend Frac operator+(Frac a, const Frac& b) { return a += b; }
    friend Frac operator-(Frac a, const Frac& b) { return a -= b; }

    friend Frac operator*(const Frac& a, const Frac& b) {
        auto norm = merged_norm(a, b);
        return Frac(a.num_ * b.num_, a.den_pow_ + b.den_pow_, std::move(norm));
    }

    friend Frac operator*(const GaussRat& c, const Frac& f) {
        return Frac(c * f.num_, f.den_pow_, f.norm_);
    }

    friend Frac operator*(const Poly& p, const Frac& f) {
        return Frac(p * f.num_, f.den_pow_, f.norm_);
    }

    Frac& operator*=(const Frac& o) { return *this = *this * o; }

    friend bool operator==(const Frac& a, const Frac& b) {
        Frac d = a;
        d -= b;
        return d.is_zero();
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    // The norm is invariant under conjugation, so only the numerator flips.
    Frac conjugate() const { return Frac(num_.conjugate(), den_pow_, norm_); }

    // Quotient rule; the denominator power grows by one when present.
    Frac wirtinger_dbar(uint32_t dir) const {
        if (den_pow_ == 0) return Frac(num_.wirtinger_dbar(dir));
        Poly dn = num_.wirtinger_dbar(dir) * (*norm_) -
                  GaussRat(long(den_pow_)) * (num_ * norm_->wirtinger_dbar(dir));
        return Frac(std::move(dn), den_pow_ + 1, norm_);
    }

    std::string str(const std::vector<std::string>& names) const {
        if (den_pow_ == 0) return num_.str(names);
        std::string out = '(' + num_.str(names) + ")/nrm";
        if (den_pow_ > 1) out += '^' + std::to_string(den_pow_);
        return out;
    }

private:
    Frac& combine(const Frac& o, bool negate) {
        auto norm = merged_norm(*this, o);
        uint32_t p = std::max(den_pow_, o.den_pow_);
        Poly a = num_;
        for (uint32_t k = den_pow_; k < p; ++k) a *= *norm;
        Poly b = o.num_;
        for (uint32_t k = o.den_pow_; k < p; ++k) b *= *norm;
        if (negate)
            a -= b;
        else
            a += b;
        *this = Frac(std::move(a), p, std::move(norm));
        return *this;
    }

    static std::shared_ptr<const Poly> merged_norm(const Frac& a, const Frac& b) {
        internal_check(a.num_.nvars() == b.num_.nvars(), "mixed variable counts");
        if (a.norm_ && b.norm_) {
            internal_check(a.norm_ == b.norm_ || *a.norm_ == *b.norm_,
                           "mixed section norms");
            return a.norm_;
        }
        return a.norm_ ? a.norm_ : b.norm_;
    }

    Poly num_;
    uint32_t den_pow_;
    std::shared_ptr<const Poly> norm_;
};

}
