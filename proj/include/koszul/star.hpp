#pragma once

#include "check_report.hpp"
#include "exterior.hpp"

#include <functional>

namespace koszul {

// Trivialization data for the flat frame: the holomorphic volume density f
// with |f| = 1, so that psi = f dz_1..dz_n (x) e_1..e_n.
struct FrameData {
    uint32_t n;
    GaussRat f;

    FrameData(uint32_t n, GaussRat f_ = GaussRat(1)) : n(n), f(std::move(f_)) {
        if (f.norm() != 1)
            throw std::domain_error("frame density must have unit modulus");
    }

    uint32_t full() const { return (uint32_t(1) << n) - 1; }

    Form psi() const {
        return Form::word(n, ExteriorWord{full(), 0, 0, full()},
                          Frac::constant(n, f));
    }

    // Euclidean volume form dz_1..dz_n ^ dzbar_1..dzbar_n, normalized so its
    // coefficient in the canonical word basis is (-1)^{n(n+1)/2} i^n.
    GaussRat dv_coefficient() const {
        GaussRat c = GaussRat::i().pow(n);
        if ((n * (n + 1) / 2) & 1) c = -c;
        return c;
    }

    Form dv() const {
        return Form::word(n, ExteriorWord{full(), full(), 0, 0},
                          Frac::constant(n, dv_coefficient()));
    }
};

// Conjugate-linear star on the mixed words dzbar_A (x) e^C: complements both
// index sets, conjugates the coefficient and scales by the complementary
// shuffle signs, (-1)^{(n-p)q} and i^n / f.
inline Form star_v(const Form& beta, const FrameData& frame) {
    internal_check(beta.n() == frame.n, "mixed dimensions");
    uint32_t full = frame.full();
    GaussRat global = GaussRat::i().pow(frame.n) * frame.f.inverse();
    Form out(frame.n);
    for (const auto& [w, c] : beta.terms()) {
        if (w.holo || w.vec)
            throw std::domain_error("star is defined on dzbar/covector words");
        uint32_t ac = full & ~w.anti;
        uint32_t cc = full & ~w.covec;
        int p = std::popcount(w.anti);
        int q = std::popcount(w.covec);
        int expo = mask_inversions(w.anti, ac) + mask_inversions(w.covec, cc) +
                   (int(frame.n) - p) * q;
        GaussRat s = global;
        if (expo & 1) s = -s;
        out.add_term(ExteriorWord{0, ac, cc, 0}, s * c.conjugate());
    }
    return out;
}

using StarFn = std::function<Form(const Form&, const FrameData&)>;

// Checks star_v star_v = (-1)^{p-q} on every word.
inline CheckReport check_star_involution(uint32_t n, const FrameData& frame) {
    CheckReport rep;
    for (const ExteriorWord& w : all_words(n, false, true, true, false)) {
        Form b = Form::word(n, w);
        Form twice = star_v(star_v(b, frame), frame);
        int p = std::popcount(w.anti);
        int q = std::popcount(w.covec);
        Form expected = ((p - q) & 1) ? -b : b;
        ++rep.cases;
        if (twice != expected)
            rep.fail("star^2 mismatch on " + word_str(w));
    }
    return rep;
}

// Checks <a,b> dv = psi _| (a ^ star b) componentwise on scalar multiples of
// the canonical words, reading the right side off the full dz/dzbar word.
inline CheckReport check_star_defining_property(uint32_t n, const FrameData& frame,
                                                const StarFn& star = {}) {
    const StarFn& st = star ? star : StarFn(star_v);
    CheckReport rep;
    Form psi = frame.psi();
    ExteriorWord top{frame.full(), frame.full(), 0, 0};
    GaussRat dv = frame.dv_coefficient();
    std::vector<ExteriorWord> words = all_words(n, false, true, true, false);
    for (const ExteriorWord& wa : words)
        for (const ExteriorWord& wb : words)
            for (GaussRat scale : {GaussRat(1), GaussRat::i()}) {
                Form a = Form::word(n, wa);
                Form b = Form::word(n, wb, Frac::constant(n, scale));
                Frac lhs = dv * fiber_inner(a, b);
                Frac rhs = contract(psi, wedge(a, st(b, frame))).coefficient(top);
                ++rep.cases;
                if (lhs != rhs)
                    rep.fail("defining property mismatch on " + word_str(wa) +
                             " , " + (scale == GaussRat(1) ? "" : "i*") + word_str(wb));
            }
    return rep;
}

struct AdjointReport {
    bool literal_pass = true;
    bool signed_pass = true;
    bool dropped_term_zero = true;
    std::size_t cases = 0;
    std::string literal_witness;
    std::string signed_witness;
    std::string dropped_witness;
};

// Compares <iota_s a, b> with <a, star iota_s star b> over all word pairs:
// the literal identity and its global sign flip, plus the vanishing of
// a ^ star b on the degree-adjacent pairs that the Leibniz bookkeeping
// discards.
inline AdjointReport check_pointwise_adjoint(uint32_t n, const std::vector<GaussRat>& svals,
                                             const FrameData& frame) {
    internal_check(svals.size() == n, "component count mismatch");
    AdjointReport rep;
    std::vector<Frac> s;
    s.reserve(n);
    for (const GaussRat& v : svals) s.push_back(Frac::constant(n, v));
    std::vector<ExteriorWord> words = all_words(n, false, true, true, false);
    for (const ExteriorWord& wa : words)
        for (const ExteriorWord& wb : words) {
            Form a = Form::word(n, wa);
            Form b = Form::word(n, wb);
            Frac lhs = fiber_inner(iota(a, s), b);
            Frac rhs = fiber_inner(a, star_v(iota(star_v(b, frame), s), frame));
            ++rep.cases;
            std::string tag = word_str(wa) + " , " + word_str(wb);
            if (lhs != rhs) {
                if (rep.literal_pass) rep.literal_witness = tag;
                rep.literal_pass = false;
            }
            if (lhs != -rhs) {
                if (rep.signed_pass) rep.signed_witness = tag;
                rep.signed_pass = false;
            }
            if (std::popcount(wa.covec) == std::popcount(wb.covec) + 1 &&
                !wedge(a, star_v(b, frame)).is_zero()) {
                if (rep.dropped_term_zero) rep.dropped_witness = tag;
                rep.dropped_term_zero = false;
            }
        }
    return rep;
}

}
