#pragma once

#include "monomial_order.hpp"
#include "poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace koszul {

// Holomorphic polynomial in dense-exponent term form, terms sorted with the
// leading term first.
struct GBTerm {
    ExpVec m;
    GaussRat c;
};

struct GBPoly {
    std::vector<GBTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const GBTerm& lead() const { return terms.front(); }
};

inline GBPoly to_gb(const Poly& p, const MonomialOrder& order) {
    GBPoly out;
    for (const auto& [m, c] : p.terms()) {
        internal_check(!m.has_jets(), "ideal layer needs plain polynomials");
        const std::size_t n = m.exps.size() / 2;
        for (std::size_t k = n; k < m.exps.size(); ++k)
            internal_check(m.exps[k] == 0, "ideal layer needs holomorphic polynomials");
        out.terms.push_back({ExpVec(m.exps.begin(), m.exps.begin() + long(n)), c});
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [&](const GBTerm& a, const GBTerm& b) { return order.greater(a.m, b.m); });
    return out;
}

inline Poly from_gb(uint32_t n, const GBPoly& p) {
    Poly out(n);
    for (const GBTerm& t : p.terms) out.add_term(
        Monomial{[&] {
            std::vector<uint32_t> e(2 * n, 0);
            std::copy(t.m.begin(), t.m.end(), e.begin());
            return e;
        }(), {}},
        t.c);
    return out;
}

inline void gb_add_term(GBPoly& p, const ExpVec& m, const GaussRat& c,
                        const MonomialOrder& order) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(p.terms.begin(), p.terms.end(), m,
        [&](const GBTerm& t, const ExpVec& key) { return order.greater(t.m, key); });
    if (it != p.terms.end() && it->m == m) {
        it->c += c;
        if (it->c.is_zero()) p.terms.erase(it);
    } else {
        p.terms.insert(it, {m, c});
    }
}

// p -= c x^m q
inline void gb_sub_scaled(GBPoly& p, const ExpVec& m, const GaussRat& c,
                          const GBPoly& q, const MonomialOrder& order) {
    for (const GBTerm& t : q.terms)
        gb_add_term(p, exp_add(m, t.m), -(c * t.c), order);
}

struct DivisionRecord {
    std::vector<GBPoly> quotients;
    GBPoly remainder;
};

// Classic multivariate division: each leading term is cancelled by the first
// divisor whose leading monomial divides it, otherwise moved to the
// remainder.  No remainder term is divisible by any divisor lead.
inline DivisionRecord gb_divide(GBPoly p, const std::vector<GBPoly>& divisors,
                                const MonomialOrder& order) {
    DivisionRecord rec;
    rec.quotients.resize(divisors.size());
    while (!p.is_zero()) {
        const GBTerm lt = p.lead();
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            const GBPoly& d = divisors[k];
            if (d.is_zero() || !exp_divides(d.lead().m, lt.m)) continue;
            ExpVec qm = exp_sub(lt.m, d.lead().m);
            GaussRat qc = lt.c / d.lead().c;
            gb_add_term(rec.quotients[k], qm, qc, order);
            gb_sub_scaled(p, qm, qc, d, order);
            reduced = true;
            break;
        }
        if (!reduced) {
            rec.remainder.terms.push_back(lt);
            p.terms.erase(p.terms.begin());
        }
    }
    return rec;
}

struct GroebnerBasis {
    uint32_t n = 0;
    MonomialOrder order;
    std::vector<Poly> generators;
    std::vector<Poly> basis;
    // basis[i] = sum_j transform[i][j] generators[j]
    std::vector<std::vector<Poly>> transform;
    std::vector<GBPoly> gb;
    std::vector<GBPoly> gens_gb;
};

// Buchberger with the coprime-lead criterion and degree-ordered pair
// selection, followed by the usual minimalization, tail reduction and monic
// scaling.  Cofactors over the input generators are carried through every
// step, so the returned transform matrix is exact.
inline GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& order) {
    internal_check(!gens.empty(), "empty generator list");
    const uint32_t n = gens.front().nvars();
    for (const Poly& g : gens) internal_check(g.nvars() == n, "mixed variable counts");

    struct Item {
        GBPoly p;
        std::vector<GBPoly> cof;
    };
    std::vector<Item> items;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        GBPoly g = to_gb(gens[j], order);
        if (g.is_zero()) continue;
        Item it;
        it.p = std::move(g);
        it.cof.resize(gens.size());
        gb_add_term(it.cof[j], ExpVec(n, 0), GaussRat(1), order);
        items.push_back(std::move(it));
    }

    struct Pair {
        std::size_t i, j;
        ExpVec lcm;
    };
    std::vector<Pair> pending;
    auto queue_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j, exp_lcm(items[i].p.lead().m, items[j].p.lead().m)});
    };
    for (std::size_t j = 0; j < items.size(); ++j) queue_pairs_with(j);

    auto pair_before = [&](const Pair& a, const Pair& b) {
        if (a.lcm != b.lcm) return order.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k)
            if (pair_before(pending[k], pending[best])) best = k;
        Pair pr = pending[best];
        pending.erase(pending.begin() + long(best));

        const Item& A = items[pr.i];
        const Item& B = items[pr.j];
        if (exp_coprime(A.p.lead().m, B.p.lead().m)) continue;

        ExpVec ma = exp_sub(pr.lcm, A.p.lead().m);
        ExpVec mb = exp_sub(pr.lcm, B.p.lead().m);
        GaussRat ca = A.p.lead().c.inverse();
        GaussRat cb = B.p.lead().c.inverse();

        Item s;
        s.cof.resize(gens.size());
        gb_sub_scaled(s.p, ma, -ca, A.p, order);
        gb_sub_scaled(s.p, mb, cb, B.p, order);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            gb_sub_scaled(s.cof[j], ma, -ca, A.cof[j], order);
            gb_sub_scaled(s.cof[j], mb, cb, B.cof[j], order);
        }

        // full reduction of the S-polynomial, cofactors updated in step
        std::vector<GBPoly> divisors;
        divisors.reserve(items.size());
        for (const Item& it : items) divisors.push_back(it.p);
        DivisionRecord rec = gb_divide(s.p, divisors, order);
        if (rec.remainder.is_zero()) continue;
        Item fresh;
        fresh.p = std::move(rec.remainder);
        fresh.cof = std::move(s.cof);
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (rec.quotients[k].is_zero()) continue;
            for (const GBTerm& qt : rec.quotients[k].terms)
                for (std::size_t j = 0; j < gens.size(); ++j)
                    gb_sub_scaled(fresh.cof[j], qt.m, qt.c, items[k].cof[j], order);
        }
        items.push_back(std::move(fresh));
        queue_pairs_with(items.size() - 1);
    }

    // minimal basis: drop members whose lead is divisible by another lead
    std::vector<std::size_t> by_lead(items.size());
    for (std::size_t k = 0; k < by_lead.size(); ++k) by_lead[k] = k;
    std::sort(by_lead.begin(), by_lead.end(), [&](std::size_t a, std::size_t b) {
        if (items[a].p.lead().m != items[b].p.lead().m)
            return order.less(items[a].p.lead().m, items[b].p.lead().m);
        return a < b;
    });
    std::vector<Item> kept;
    for (std::size_t k : by_lead) {
        bool redundant = false;
        for (const Item& g : kept)
            if (exp_divides(g.p.lead().m, items[k].p.lead().m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(items[k]));
    }

    // tail reduction against the other members
    for (std::size_t k = 0; k < kept.size(); ++k) {
        std::vector<GBPoly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            others.push_back(j == k ? GBPoly{} : kept[j].p);
        DivisionRecord rec = gb_divide(kept[k].p, others, order);
        internal_check(!rec.remainder.is_zero(), "reduced basis member vanished");
        kept[k].p = std::move(rec.remainder);
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (rec.quotients[j].is_zero()) continue;
            for (const GBTerm& qt : rec.quotients[j].terms)
                for (std::size_t g = 0; g < gens.size(); ++g)
                    gb_sub_scaled(kept[k].cof[g], qt.m, qt.c, kept[j].cof[g], order);
        }
    }

    // monic scaling
    for (Item& it : kept) {
        GaussRat inv = it.p.lead().c.inverse();
        for (GBTerm& t : it.p.terms) t.c *= inv;
        for (GBPoly& c : it.cof)
            for (GBTerm& t : c.terms) t.c *= inv;
    }

    GroebnerBasis out;
    out.n = n;
    out.order = order;
    out.generators = gens;
    for (const Item& it : kept) {
        out.gb.push_back(it.p);
        out.basis.push_back(from_gb(n, it.p));
        std::vector<Poly> row;
        for (const GBPoly& c : it.cof) row.push_back(from_gb(n, c));
        out.transform.push_back(std::move(row));
    }
    for (const Poly& g : gens) out.gens_gb.push_back(to_gb(g, order));
    return out;
}

inline Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
    return from_gb(gb.n, gb_divide(to_gb(p, gb.order), gb.gb, gb.order).remainder);
}

// Cofactors of p over the original generators, present exactly when p lies
// in the ideal.
inline std::optional<std::vector<Poly>> lift_to_generators(const Poly& p,
                                                           const GroebnerBasis& gb) {
    DivisionRecord rec = gb_divide(to_gb(p, gb.order), gb.gb, gb.order);
    if (!rec.remainder.is_zero()) return std::nullopt;
    std::vector<Poly> out(gb.generators.size(), Poly::zero(gb.n));
    for (std::size_t k = 0; k < gb.gb.size(); ++k) {
        if (rec.quotients[k].is_zero()) continue;
        Poly q = from_gb(gb.n, rec.quotients[k]);
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += q * gb.transform[k][j];
    }
    return out;
}

// Minimal exponents of the pure-power leads, one per variable, when all
// exist; the zero-dimensionality test.
inline std::optional<std::vector<uint32_t>> staircase_bounds(const GroebnerBasis& gb) {
    std::vector<uint32_t> bounds(gb.n, 0);
    for (const GBPoly& g : gb.gb) {
        const ExpVec& m = g.lead().m;
        int support = -1;
        for (uint32_t v = 0; v < gb.n; ++v)
            if (m[v] > 0) {
                support = (support < 0) ? int(v) : -2;
                if (support == -2) break;
            }
        if (support >= 0) {
            uint32_t v = uint32_t(support);
            if (bounds[v] == 0 || m[v] < bounds[v]) bounds[v] = m[v];
        }
        if (m == ExpVec(gb.n, 0)) return std::vector<uint32_t>(gb.n, 0);
    }
    for (uint32_t v = 0; v < gb.n; ++v)
        if (bounds[v] == 0) return std::nullopt;
    return bounds;
}

inline bool is_zero_dimensional(const GroebnerBasis& gb) {
    return staircase_bounds(gb).has_value();
}

// Monomials outside the leading-term ideal, enumerated with the first
// declared variable cycling fastest.
inline std::vector<ExpVec> standard_monomials(const GroebnerBasis& gb) {
    auto bounds = staircase_bounds(gb);
    if (!bounds)
        throw NotZeroDimensional(
            "the section ideal is not zero-dimensional, so the quotient space "
            "is infinite; the zero set is positive-dimensional");
    std::vector<ExpVec> out;
    ExpVec cur(gb.n, 0);
    for (;;) {
        bool standard = true;
        for (const GBPoly& g : gb.gb)
            if (exp_divides(g.lead().m, cur)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(cur);
        uint32_t v = 0;
        while (v < gb.n) {
            if (++cur[v] < (*bounds)[v]) break;
            cur[v] = 0;
            ++v;
        }
        if (v == gb.n) break;
    }
    return out;
}

}
