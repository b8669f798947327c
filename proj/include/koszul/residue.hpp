#pragma once

#include "groebner.hpp"
#include "linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace koszul {

inline Poly poly_det(const std::vector<std::vector<Poly>>& m, uint32_t n) {
    std::size_t sz = m.size();
    if (sz == 0) return Poly::one(n);
    if (sz == 1) return m[0][0];
    Poly acc(n);
    for (std::size_t c = 0; c < sz; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(sz - 1);
        for (std::size_t r = 1; r < sz; ++r) {
            std::vector<Poly> row;
            row.reserve(sz - 1);
            for (std::size_t cc = 0; cc < sz; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        Poly contrib = m[0][c] * poly_det(minor, n);
        if (c & 1)
            acc -= contrib;
        else
            acc += contrib;
    }
    return acc;
}

// det of the holomorphic Jacobian matrix d s_i / d z_j.
inline Poly jacobian(const std::vector<Poly>& s) {
    internal_check(!s.empty(), "empty section");
    uint32_t n = s.front().nvars();
    internal_check(s.size() == n, "section length must match the variable count");
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly::zero(n)));
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) m[i][j] = s[i].wirtinger_d(j);
    return poly_det(m, n);
}

// Pure-power presentation: minimal exponents N_i with x_i^{N_i} in the
// ideal, cofactor rows expressing each pure power over the generators, and
// the determinant of that transition matrix.
struct PurePowerData {
    uint32_t n = 0;
    std::vector<uint32_t> powers;
    std::vector<std::vector<Poly>> cofactors;
    Poly det_transition = Poly(0);
};

inline PurePowerData pure_power_data(const GroebnerBasis& gb, uint32_t power_bound) {
    PurePowerData out;
    out.n = gb.n;
    for (uint32_t v = 0; v < gb.n; ++v) {
        std::optional<uint32_t> found;
        for (uint32_t N = 1; N <= power_bound; ++N) {
            std::vector<uint32_t> exps(gb.n, 0);
            exps[v] = N;
            if (normal_form(Poly::from_exponents(gb.n, exps), gb).is_zero()) {
                found = N;
                break;
            }
        }
        if (!found)
            throw NotLocalAtOrigin(
                "no pure power of variable " + std::to_string(v + 1) +
                " lies in the section ideal within power bound " +
                std::to_string(power_bound) +
                "; raise --power-bound, or the zero set is not finite");
        out.powers.push_back(*found);
        std::vector<uint32_t> exps(gb.n, 0);
        exps[v] = *found;
        auto lift = lift_to_generators(Poly::from_exponents(gb.n, exps), gb);
        internal_check(lift.has_value(), "lift of a reduced pure power failed");
        out.cofactors.push_back(std::move(*lift));
    }
    out.det_transition = poly_det(out.cofactors, gb.n);
    return out;
}

// Residue through the transition to pure powers: the coefficient of
// x^{N-1} in h det(A), which equals that coefficient in the normal form
// modulo the monomial ideal (x_i^{N_i}) since reduction only deletes terms.
inline GaussRat grothendieck_residue(const Poly& numerator, const PurePowerData& ppd) {
    if (!numerator.is_holomorphic())
        throw std::domain_error("residue numerator must be holomorphic");
    Poly g = numerator * ppd.det_transition;
    std::vector<uint32_t> corner(ppd.n);
    for (uint32_t v = 0; v < ppd.n; ++v) corner[v] = ppd.powers[v] - 1;
    return g.coefficient_at(corner);
}

// Independent evaluation: the sum of h/J over the listed simple zeros.
// Guards reject points that are not zeros, degenerate zeros, duplicates and
// an incomplete list when the expected count is supplied.
inline GaussRat residue_sum_oracle(const Poly& numerator, const std::vector<Poly>& s,
                                   const std::vector<std::vector<GaussRat>>& zeros,
                                   std::optional<std::size_t> expected_count = {}) {
    internal_check(!s.empty(), "empty section");
    uint32_t n = s.front().nvars();
    if (expected_count && zeros.size() != *expected_count)
        throw std::invalid_argument(
            "zero list has " + std::to_string(zeros.size()) + " points but the quotient dimension is " +
            std::to_string(*expected_count) + "; the oracle needs every zero exactly once");
    for (std::size_t a = 0; a < zeros.size(); ++a)
        for (std::size_t b = a + 1; b < zeros.size(); ++b)
            if (zeros[a] == zeros[b])
                throw std::invalid_argument("duplicate point in the zero list");
    Poly jac = jacobian(s);
    GaussRat acc;
    for (const std::vector<GaussRat>& p : zeros) {
        if (p.size() != n) throw std::invalid_argument("point dimension mismatch");
        for (const Poly& comp : s)
            if (!comp.evaluate(p).is_zero())
                throw std::invalid_argument("listed point is not a zero of the section");
        GaussRat jp = jac.evaluate(p);
        if (jp.is_zero())
            throw std::domain_error(
                "vanishing Jacobian at a listed zero; the oracle needs simple zeros");
        acc += numerator.evaluate(p) * jp.inverse();
    }
    return acc;
}

struct GramMatrix {
    std::vector<ExpVec> basis;
    MatQ entries{0, 0};
};

// Trace pairing on the standard monomial basis of the quotient.
inline GramMatrix trace_pairing_matrix(const GroebnerBasis& gb, uint32_t power_bound) {
    GramMatrix g;
    g.basis = standard_monomials(gb);
    PurePowerData ppd = pure_power_data(gb, power_bound);
    std::size_t mu = g.basis.size();
    g.entries = MatQ(mu, mu);
    std::vector<Poly> monos;
    monos.reserve(mu);
    for (const ExpVec& e : g.basis) monos.push_back(Poly::from_exponents(gb.n, e));
    for (std::size_t p = 0; p < mu; ++p)
        for (std::size_t q = p; q < mu; ++q) {
            GaussRat r = grothendieck_residue(monos[p] * monos[q], ppd);
            g.entries.at(p, q) = r;
            g.entries.at(q, p) = r;
        }
    return g;
}

struct NondegenerateReport {
    std::size_t dim = 0;
    std::size_t rank = 0;
    bool pass = false;
};

// Exact rank of the Gram matrix; the rank is recomputed here so a modified
// matrix is judged on its actual entries.
inline NondegenerateReport check_nondegenerate(const GramMatrix& g) {
    NondegenerateReport rep;
    rep.dim = g.basis.size();
    rep.rank = rank_fraction_free(g.entries);
    rep.pass = rep.rank == rep.dim;
    return rep;
}

}
