#pragma once

#include "groebner.hpp"
#include "linalg.hpp"

#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace koszul {

struct KoszulComplex {
    uint32_t n = 0;
    std::vector<Poly> s;
    uint32_t max_deg = 0;
};

inline KoszulComplex build_koszul(std::vector<Poly> s) {
    KoszulComplex kc;
    kc.n = uint32_t(s.size());
    if (kc.n == 0) throw SpecError("section needs at least one component");
    for (const Poly& p : s) {
        if (p.nvars() != kc.n)
            throw SpecError("section component count must match the variable count");
        if (!p.is_holomorphic())
            throw SpecError("section components must be holomorphic");
        kc.max_deg = std::max(kc.max_deg, p.total_degree());
    }
    kc.s = std::move(s);
    return kc;
}

// All exponent vectors of total degree <= cap, grouped by degree, graded
// lexicographic inside each degree.  Prefixes are degree slices, and the
// numbering agrees between different caps.
struct MonomialIndex {
    std::vector<ExpVec> mons;
    std::map<ExpVec, std::size_t> pos;
    std::vector<std::size_t> upto;  // upto[d] = count of monomials of degree <= d

    static MonomialIndex build(uint32_t n, uint32_t cap) {
        MonomialIndex mi;
        mi.upto.resize(cap + 1);
        ExpVec cur(n, 0);
        for (uint32_t d = 0; d <= cap; ++d) {
            emit(mi, cur, 0, d, n);
            mi.upto[d] = mi.mons.size();
        }
        for (std::size_t k = 0; k < mi.mons.size(); ++k) mi.pos[mi.mons[k]] = k;
        return mi;
    }

private:
    static void emit(MonomialIndex& mi, ExpVec& cur, uint32_t var, uint32_t left, uint32_t n) {
        if (var + 1 == n) {
            cur[var] = left;
            mi.mons.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (uint32_t e = left + 1; e-- > 0;) {
            cur[var] = e;
            emit(mi, cur, var + 1, left - e, n);
        }
        cur[var] = 0;
    }
};

// Cumulative dimensions of the homology of the degree-truncated complex:
// dims[j][d] counts classes of cycles supported in monomial degree <= d,
// modulo boundaries of chains inside the full truncation.  Levels up to
// degree_bound - max_deg are retained.
struct HomologyTable {
    uint32_t n = 0;
    uint32_t degree_bound = 0;
    uint32_t max_deg = 0;
    int window_max = -1;
    std::vector<std::vector<std::size_t>> dims;
    std::vector<bool> stabilized;

    std::size_t last(uint32_t j) const { return dims[j].back(); }
};

namespace detail {

// Matrix of the Koszul boundary from j-fold wedges with monomial degree <= D
// into (j-1)-fold wedges indexed against a degree D + max_deg table.  Column
// (mi, ki) sits at mi * #K + ki, so degree slices are column prefixes.
struct BoundaryMatrix {
    std::vector<uint32_t> ks_from;  // masks with popcount j
    std::vector<uint32_t> ks_to;    // masks with popcount j-1
    std::size_t cols = 0, rows = 0;
    // sparse columns: list of (row, coeff)
    std::vector<std::vector<std::pair<std::size_t, GaussRat>>> col_entries;
};

inline std::vector<uint32_t> masks_of_weight(uint32_t n, uint32_t j) {
    std::vector<uint32_t> out;
    for (uint32_t m = 0; m < (uint32_t(1) << n); ++m)
        if (uint32_t(std::popcount(m)) == j) out.push_back(m);
    return out;
}

inline BoundaryMatrix boundary_matrix(const KoszulComplex& kc, uint32_t j,
                                      const MonomialIndex& dom, const MonomialIndex& tgt) {
    BoundaryMatrix bm;
    bm.ks_from = masks_of_weight(kc.n, j);
    bm.ks_to = masks_of_weight(kc.n, j - 1);
    std::map<uint32_t, std::size_t> kpos;
    for (std::size_t k = 0; k < bm.ks_to.size(); ++k) kpos[bm.ks_to[k]] = k;
    bm.cols = dom.mons.size() * bm.ks_from.size();
    bm.rows = tgt.mons.size() * bm.ks_to.size();
    bm.col_entries.resize(bm.cols);
    for (std::size_t mi = 0; mi < dom.mons.size(); ++mi) {
        const ExpVec& m = dom.mons[mi];
        for (std::size_t ki = 0; ki < bm.ks_from.size(); ++ki) {
            uint32_t K = bm.ks_from[ki];
            auto& col = bm.col_entries[mi * bm.ks_from.size() + ki];
            uint32_t rest = K;
            while (rest) {
                uint32_t k = uint32_t(std::countr_zero(rest));
                rest &= rest - 1;
                bool neg = std::popcount(K & ((uint32_t(1) << k) - 1)) & 1;
                std::size_t k2 = kpos.at(K & ~(uint32_t(1) << k));
                for (const auto& [sm, sc] : kc.s[k].terms()) {
                    ExpVec prod = m;
                    for (uint32_t v = 0; v < kc.n; ++v) prod[v] += sm.exps[v];
                    std::size_t row = tgt.pos.at(prod) * bm.ks_to.size() + k2;
                    col.push_back({row, neg ? -sc : sc});
                }
            }
        }
    }
    return bm;
}

inline std::vector<GaussRat> dense_col(const BoundaryMatrix& bm, std::size_t c) {
    std::vector<GaussRat> v(bm.rows);
    for (const auto& [r, val] : bm.col_entries[c]) v[r] += val;
    return v;
}

}  // namespace detail

inline HomologyTable truncated_homology_dims(const KoszulComplex& kc, uint32_t D) {
    HomologyTable table;
    table.n = kc.n;
    table.degree_bound = D;
    table.max_deg = kc.max_deg;
    table.window_max = int(D) - int(kc.max_deg);
    if (table.window_max < 0)
        throw BoundExceeded(
            "degree bound " + std::to_string(D) +
            " is below the largest section component degree " +
            std::to_string(kc.max_deg) + "; raise --degree-bound");
    const uint32_t W = uint32_t(table.window_max);

    MonomialIndex dom = MonomialIndex::build(kc.n, D);
    MonomialIndex tgt = MonomialIndex::build(kc.n, D + kc.max_deg);

    std::vector<detail::BoundaryMatrix> mats(kc.n + 2);
    for (uint32_t j = 1; j <= kc.n; ++j)
        mats[j] = detail::boundary_matrix(kc, j, dom, tgt);

    // cycle counts: columns are fed in degree order, so each slice rank is
    // read off one elimination per level
    std::vector<std::vector<std::size_t>> Z(kc.n + 1, std::vector<std::size_t>(W + 1));
    for (uint32_t j = 0; j <= kc.n; ++j) {
        std::size_t nk = detail::masks_of_weight(kc.n, j).size();
        if (j == 0) {
            for (uint32_t d = 0; d <= W; ++d) Z[0][d] = dom.upto[d] * nk;
            continue;
        }
        IncrementalRank ir;
        std::size_t added = 0;
        for (uint32_t d = 0; d <= W; ++d) {
            std::size_t limit = dom.upto[d] * nk;
            for (; added < limit; ++added) ir.add(detail::dense_col(mats[j], added));
            Z[j][d] = limit - ir.rank();
        }
    }

    // boundary counts: rank of the whole matrix minus the rank of the rows
    // above each level, rows fed from the top degree downward
    std::vector<std::vector<std::size_t>> B(kc.n + 1, std::vector<std::size_t>(W + 1));
    for (uint32_t j = 0; j < kc.n; ++j) {
        const detail::BoundaryMatrix& bm = mats[j + 1];
        std::size_t nk = bm.ks_to.size();
        std::vector<std::vector<GaussRat>> rows(bm.rows, std::vector<GaussRat>(bm.cols));
        for (std::size_t c = 0; c < bm.cols; ++c)
            for (const auto& [r, val] : bm.col_entries[c]) rows[r][c] += val;
        IncrementalRank ir;
        std::vector<std::size_t> rank_above(W + 2, 0);
        std::size_t row_end = bm.rows;
        for (uint32_t d = W + 1; d-- > 0;) {
            std::size_t row_begin = tgt.upto[d] * nk;
            for (std::size_t r = row_begin; r < row_end; ++r) ir.add(std::move(rows[r]));
            rank_above[d] = ir.rank();
            row_end = row_begin;
        }
        for (std::size_t r = 0; r < row_end; ++r) ir.add(std::move(rows[r]));
        std::size_t full = ir.rank();
        for (uint32_t d = 0; d <= W; ++d) B[j][d] = full - rank_above[d];
    }

    table.dims.assign(kc.n + 1, std::vector<std::size_t>(W + 1));
    table.stabilized.assign(kc.n + 1, false);
    for (uint32_t j = 0; j <= kc.n; ++j) {
        for (uint32_t d = 0; d <= W; ++d) {
            internal_check(Z[j][d] >= B[j][d], "negative homology dimension");
            table.dims[j][d] = Z[j][d] - B[j][d];
        }
        table.stabilized[j] =
            W >= 1 && table.dims[j][W] == table.dims[j][W - 1];
    }
    return table;
}

// Quotient dimension by staircase count under the given order.
inline std::size_t h0_dimension(const std::vector<Poly>& s,
                                const MonomialOrder& order = {}) {
    return standard_monomials(buchberger(s, order)).size();
}

inline bool is_regular_sequence(const std::vector<Poly>& s,
                                const MonomialOrder& order = {}) {
    for (const Poly& p : s)
        if (p.is_zero()) return false;
    return is_zero_dimensional(buchberger(s, order));
}

struct VanishingReport {
    bool zero_dimensional = false;
    std::optional<std::size_t> h0;
    HomologyTable table;
    bool higher_vanish = true;
    bool pass = false;
    std::string witness;
};

// Renders a chain as a readable combination of monomial multiples of the
// frame words e[..].
inline std::string chain_str(const KoszulComplex& kc, const MonomialIndex& mi,
                             const std::vector<uint32_t>& ks,
                             const std::vector<GaussRat>& v,
                             const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c].is_zero()) continue;
        std::size_t m = c / ks.size(), k = c % ks.size();
        Poly mono = Poly::from_exponents(kc.n, mi.mons[m], v[c]);
        std::string term = mono.str(names);
        bool bare = term.find_first_of("+*/") == std::string::npos &&
                    term.find('-', 1) == std::string::npos;
        if (!bare) term = '(' + term + ')';
        term += "*" + word_str(ExteriorWord{0, 0, ks[k], 0});
        if (out.empty())
            out = term;
        else
            out += (term[0] == '-') ? term : '+' + term;
    }
    return out.empty() ? "0" : out;
}

// Vanishing verdict for the higher homology over the certified window, with
// an explicit nonvanishing cycle when the verdict is FAIL.
inline VanishingReport check_vanishing(const KoszulComplex& kc, uint32_t D,
                                       const MonomialOrder& order = {}) {
    VanishingReport rep;
    GroebnerBasis gb = buchberger(kc.s, order);
    rep.zero_dimensional = is_zero_dimensional(gb);
    if (rep.zero_dimensional) rep.h0 = standard_monomials(gb).size();
    rep.table = truncated_homology_dims(kc, D);

    const uint32_t W = uint32_t(rep.table.window_max);
    std::optional<std::pair<uint32_t, uint32_t>> first_bad;
    for (uint32_t j = 1; j <= kc.n && !first_bad; ++j)
        for (uint32_t d = 0; d <= W; ++d)
            if (rep.table.dims[j][d] > 0) {
                first_bad = {j, d};
                break;
            }
    rep.higher_vanish = !first_bad;

    std::vector<std::string> names;
    for (uint32_t k = 0; k < kc.n; ++k) names.push_back("z" + std::to_string(k + 1));

    if (first_bad) {
        auto [j, d] = *first_bad;
        MonomialIndex dom = MonomialIndex::build(kc.n, D);
        MonomialIndex tgt = MonomialIndex::build(kc.n, D + kc.max_deg);
        detail::BoundaryMatrix mj = detail::boundary_matrix(kc, j, dom, tgt);
        std::vector<uint32_t> ks = detail::masks_of_weight(kc.n, j);
        std::size_t ncols = dom.upto[d] * ks.size();
        MatQ sub(mj.rows, ncols);
        for (std::size_t c = 0; c < ncols; ++c)
            for (const auto& [r, val] : mj.col_entries[c]) sub.at(r, c) += val;
        std::vector<std::vector<GaussRat>> cycles = kernel_basis(sub);

        // boundaries live in the enlarged target coordinates, so cycles are
        // zero-padded up to that length before the span test
        IncrementalRank boundary_span;
        if (j < kc.n) {
            detail::BoundaryMatrix up = detail::boundary_matrix(kc, j + 1, dom, tgt);
            for (std::size_t c = 0; c < up.cols; ++c)
                boundary_span.add(detail::dense_col(up, c));
        }
        std::size_t full_len = tgt.mons.size() * ks.size();
        for (const std::vector<GaussRat>& cyc : cycles) {
            std::vector<GaussRat> padded = cyc;
            padded.resize(full_len);
            IncrementalRank probe = boundary_span;
            if (probe.add(std::move(padded))) {
                rep.witness = "nonvanishing class in homological degree " +
                              std::to_string(j) + " at monomial degree " +
                              std::to_string(d) + ": " +
                              chain_str(kc, dom, ks, cyc, names);
                break;
            }
        }
        if (rep.witness.empty())
            rep.witness = "positive homology dimension in degree " +
                          std::to_string(j) + " at level " + std::to_string(d);
    } else if (!rep.zero_dimensional) {
        rep.witness =
            "the section ideal is not zero-dimensional; the quotient is infinite";
    }

    rep.pass = rep.zero_dimensional && rep.higher_vanish;

    // two independent quotient counts must agree once the filtered count has
    // settled inside the window
    if (rep.pass && rep.h0 && rep.table.stabilized[0] &&
        rep.table.last(0) != *rep.h0) {
        rep.pass = false;
        rep.witness = "filtered quotient count " + std::to_string(rep.table.last(0)) +
                      " disagrees with the staircase count " + std::to_string(*rep.h0);
    }
    return rep;
}

}
