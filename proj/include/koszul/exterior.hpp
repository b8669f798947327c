#pragma once

#include "frac.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace koszul {

// Anticommuting word over four generator families, each a bitmask over the
// n directions: dz_k (holo), dzbar_k (anti), frame covectors e^k (covec),
// frame vectors e_k (vec).  Canonical order within a word is
// holo < anti < covec < vec, ascending index inside each block.
struct ExteriorWord {
    uint32_t holo = 0;
    uint32_t anti = 0;
    uint32_t covec = 0;
    uint32_t vec = 0;

    friend auto operator<=>(const ExteriorWord&, const ExteriorWord&) = default;

    int generators() const {
        return std::popcount(holo) + std::popcount(anti) +
               std::popcount(covec) + std::popcount(vec);
    }

    // Total degree: form generators count +1, covectors and vectors -1.
    int sharp() const {
        return std::popcount(holo) + std::popcount(anti) -
               std::popcount(covec) - std::popcount(vec);
    }

    bool odd() const { return generators() & 1; }
};

// Number of pairs (x in a, y in b) with x > y: the crossings needed to merge
// two ascending runs of the same family.
inline int mask_inversions(uint32_t a, uint32_t b) {
    int total = 0;
    while (b) {
        uint32_t y = uint32_t(std::countr_zero(b));
        total += std::popcount(a >> (y + 1));
        b &= b - 1;
    }
    return total;
}

// Sign of sorting the concatenation of two canonical words into canonical
// form; 0 if a generator repeats.  On success out holds the merged word.
inline int wedge_sign(const ExteriorWord& a, const ExteriorWord& b, ExteriorWord& out) {
    if ((a.holo & b.holo) | (a.anti & b.anti) | (a.covec & b.covec) | (a.vec & b.vec))
        return 0;
    int ah = std::popcount(a.holo), aa = std::popcount(a.anti);
    int ac = std::popcount(a.covec), av = std::popcount(a.vec);
    int bh = std::popcount(b.holo), ba = std::popcount(b.anti);
    int bc = std::popcount(b.covec);
    int cross = bh * (aa + ac + av) + ba * (ac + av) + bc * av +
                mask_inversions(a.holo, b.holo) + mask_inversions(a.anti, b.anti) +
                mask_inversions(a.covec, b.covec) + mask_inversions(a.vec, b.vec);
    out = ExteriorWord{a.holo | b.holo, a.anti | b.anti, a.covec | b.covec, a.vec | b.vec};
    return (cross & 1) ? -1 : 1;
}

class Form {
public:
    explicit Form(uint32_t n) : n_(n) {}

    static Form zero(uint32_t n) { return Form(n); }

    static Form scalar(uint32_t n, Frac c) {
        Form f(n);
        f.add_term(ExteriorWord{}, std::move(c));
        return f;
    }

    static Form one(uint32_t n) { return scalar(n, Frac::one(n)); }

    static Form word(uint32_t n, ExteriorWord w, Frac c) {
        Form f(n);
        f.add_term(w, std::move(c));
        return f;
    }

    static Form word(uint32_t n, ExteriorWord w) {
        return word(n, w, Frac::one(n));
    }

    uint32_t n() const { return n_; }
    const std::map<ExteriorWord, Frac>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExteriorWord& w, const Frac& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Frac coefficient(const ExteriorWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Frac::zero(n_) : it->second;
    }

    Form operator-() const {
        Form out(n_);
        for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
        return out;
    }

    Form& operator+=(const Form& o) {
        internal_check(n_ == o.n_, "mixed dimensions");
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Form& operator-=(const Form& o) {
        internal_check(n_ == o.n_, "mixed dimensions");
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }

    // Left multiplication by an even scalar coefficient.
    friend Form operator*(const Frac& c, const Form& f) {
        Form out(f.n_);
        for (const auto& [w, fc] : f.terms_) out.add_term(w, c * fc);
        return out;
    }
    friend Form operator*(const GaussRat& c, const Form& f) {
        Form out(f.n_);
        for (const auto& [w, fc] : f.terms_) out.add_term(w, c * fc);
        return out;
    }

    friend bool operator==(const Form& a, const Form& b) {
        if (a.n_ != b.n_) return false;
        Form d = a;
        d -= b;
        return d.is_zero();
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    std::optional<int> homogeneous_sharp() const {
        std::optional<int> deg;
        for (const auto& [w, c] : terms_) {
            int s = w.sharp();
            if (!deg)
                deg = s;
            else if (*deg != s)
                return std::nullopt;
        }
        return deg;
    }

    std::string str(const std::vector<std::string>& names) const;

private:
    uint32_t n_;
    std::map<ExteriorWord, Frac> terms_;
};

inline Form wedge(const Form& a, const Form& b) {
    internal_check(a.n() == b.n(), "mixed dimensions");
    Form out(a.n());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            ExteriorWord w;
            int s = wedge_sign(wa, wb, w);
            if (s == 0) continue;
            Frac c = ca * cb;
            if (s < 0) c = -c;
            out.add_term(w, c);
        }
    return out;
}

// Interior product against the vector field with the given components:
// contraction of each covector slot with the antiderivation sign, which
// counts every generator standing left of the removed covector.
inline Form iota(const Form& f, const std::vector<Frac>& vals) {
    internal_check(vals.size() == f.n(), "component count mismatch");
    Form out(f.n());
    for (const auto& [w, c] : f.terms()) {
        int before_covec = std::popcount(w.holo) + std::popcount(w.anti);
        uint32_t rest = w.covec;
        while (rest) {
            uint32_t k = uint32_t(std::countr_zero(rest));
            rest &= rest - 1;
            int crossings = before_covec +
                            std::popcount(w.covec & ((uint32_t(1) << k) - 1));
            ExteriorWord w2 = w;
            w2.covec &= ~(uint32_t(1) << k);
            Frac term = c * vals[k];
            if (crossings & 1) term = -term;
            out.add_term(w2, term);
        }
    }
    return out;
}

// Vector-slot contraction u _| theta, where u carries the vector factors and
// theta the covector factors.  Characterized against the duality pairing by
//   <u _| theta, nu*> = (-1)^{(i+j)l + (p+q)#u + l(l-1)/2} <u, theta ^ nu*>
// for every covector word nu*, with (i+j) the form degree of the u term,
// (p,q) the form bidegree of the theta term and l its covector degree.
inline Form contract(const Form& u, const Form& theta) {
    internal_check(u.n() == theta.n(), "mixed dimensions");
    Form out(u.n());
    for (const auto& [wu, cu] : u.terms()) {
        if (wu.covec)
            throw std::domain_error("contract source carries covector factors");
        for (const auto& [wt, ct] : theta.terms()) {
            if (wt.vec)
                throw std::domain_error("contract argument carries vector factors");
            uint32_t need = wt.covec;
            uint32_t have = wu.vec;
            if (need & ~have) continue;
            if ((wu.holo & wt.holo) | (wu.anti & wt.anti)) continue;
            uint32_t left = have & ~need;
            int ij = std::popcount(wu.holo) + std::popcount(wu.anti);
            int l = std::popcount(need);
            int pq = std::popcount(wt.holo) + std::popcount(wt.anti);
            int sharp_u = ij - std::popcount(have);
            int expo = ij * l + pq * sharp_u + l * (l - 1) / 2;
            expo += mask_inversions(need, left);
            expo += std::popcount(wt.holo) * std::popcount(wu.anti) +
                    mask_inversions(wu.holo, wt.holo) +
                    mask_inversions(wu.anti, wt.anti);
            ExteriorWord w{wu.holo | wt.holo, wu.anti | wt.anti, 0, left};
            Frac c = cu * ct;
            if (expo & 1) c = -c;
            out.add_term(w, c);
        }
    }
    return out;
}

// Pointwise Hermitian pairing in which the canonical words are orthonormal;
// conjugate linear in the second slot.
inline Frac fiber_inner(const Form& a, const Form& b) {
    internal_check(a.n() == b.n(), "mixed dimensions");
    Frac acc = Frac::zero(a.n());
    for (const auto& [w, ca] : a.terms()) {
        auto it = b.terms().find(w);
        if (it != b.terms().end()) acc += ca * it->second.conjugate();
    }
    return acc;
}

// Every word over the enabled generator families, in word order.
inline std::vector<ExteriorWord> all_words(uint32_t n, bool use_holo, bool use_anti,
                                           bool use_covec, bool use_vec) {
    uint32_t full = (uint32_t(1) << n) - 1;
    std::vector<ExteriorWord> out;
    auto limit = [&](bool used) { return used ? full : uint32_t(0); };
    for (uint32_t h = 0;; ++h) {
        for (uint32_t a = 0;; ++a) {
            for (uint32_t c = 0;; ++c) {
                for (uint32_t v = 0;; ++v) {
                    out.push_back(ExteriorWord{h, a, c, v});
                    if (v >= limit(use_vec)) break;
                }
                if (c >= limit(use_covec)) break;
            }
            if (a >= limit(use_anti)) break;
        }
        if (h >= limit(use_holo)) break;
    }
    return out;
}

inline std::string word_str(const ExteriorWord& w) {
    auto block = [](const char* tag, uint32_t mask) {
        if (!mask) return std::string();
        std::string out = tag;
        out += '[';
        bool first = true;
        while (mask) {
            uint32_t k = uint32_t(std::countr_zero(mask));
            mask &= mask - 1;
            if (!first) out += ',';
            out += std::to_string(k + 1);
            first = false;
        }
        out += ']';
        return out;
    };
    std::string out;
    for (const std::string& part : {block("dz", w.holo), block("dzb", w.anti),
                                    block("e", w.covec), block("e_", w.vec)}) {
        if (part.empty()) continue;
        if (!out.empty()) out += '^';
        out += part;
    }
    return out.empty() ? "1" : out;
}

inline std::string Form::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str(names);
        std::string ws = word_str(w);
        std::string term;
        if (w == ExteriorWord{}) {
            term = cs;
        } else if (cs == "1") {
            term = ws;
        } else if (cs == "-1") {
            term = '-' + ws;
        } else {
            bool bare = cs.find_first_of("+*/") == std::string::npos &&
                        cs.find('-', 1) == std::string::npos;
            term = (bare ? cs : '(' + cs + ')') + '*' + ws;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += term;
        } else {
            out += '+' + term;
        }
    }
    return out;
}

}
