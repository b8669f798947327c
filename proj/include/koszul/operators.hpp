#pragma once

#include "check_report.hpp"
#include "errors.hpp"
#include "exterior.hpp"

#include <memory>
#include <vector>

namespace koszul {

// A holomorphic section together with the derived data every twisted
// operator needs: the squared norm and the rescaled conjugate components.
struct SectionContext {
    uint32_t n = 0;
    std::vector<Poly> s;
    std::shared_ptr<const Poly> norm;
    std::vector<Frac> s_plain;
    std::vector<Frac> s_conj_over_norm;

    static SectionContext make(std::vector<Poly> comps) {
        SectionContext ctx;
        ctx.n = uint32_t(comps.size());
        if (ctx.n == 0) throw SpecError("section needs at least one component");
        bool all_zero = true;
        for (const Poly& p : comps) {
            if (p.nvars() != ctx.n)
                throw SpecError("section component count must match the variable count");
            if (!p.is_holomorphic())
                throw SpecError("section components must be holomorphic");
            if (!p.is_zero()) all_zero = false;
        }
        if (all_zero) throw SpecError("section must not be identically zero");
        ctx.s = std::move(comps);
        Poly nrm(ctx.n);
        for (const Poly& p : ctx.s) nrm += p * p.conjugate();
        ctx.norm = std::make_shared<const Poly>(std::move(nrm));
        for (const Poly& p : ctx.s) {
            ctx.s_plain.push_back(Frac(p));
            ctx.s_conj_over_norm.push_back(Frac(p.conjugate(), 1, ctx.norm));
        }
        return ctx;
    }

    // sigma = sum_k (conj(s_k)/nrm) e^k, the covector dual to s off the zero set.
    Form sigma() const {
        Form out(n);
        for (uint32_t k = 0; k < n; ++k)
            out.add_term(ExteriorWord{0, 0, uint32_t(1) << k, 0}, s_conj_over_norm[k]);
        return out;
    }
};

// dzbar differential: coefficients are differentiated and the new dzbar_d
// generator crosses the dz block and the smaller dzbar generators.
inline Form dbar(const Form& f) {
    Form out(f.n());
    for (const auto& [w, c] : f.terms()) {
        for (uint32_t d = 0; d < f.n(); ++d) {
            if (w.anti & (uint32_t(1) << d)) continue;
            Frac dc = c.wirtinger_dbar(d);
            if (dc.is_zero()) continue;
            int crossings = std::popcount(w.holo) +
                            std::popcount(w.anti & ((uint32_t(1) << d) - 1));
            ExteriorWord w2 = w;
            w2.anti |= uint32_t(1) << d;
            out.add_term(w2, (crossings & 1) ? -dc : dc);
        }
    }
    return out;
}

inline Form iota_s(const Form& f, const SectionContext& ctx) {
    return iota(f, ctx.s_plain);
}

inline Form dbar_s(const Form& f, const SectionContext& ctx) {
    return dbar(f) + iota_s(f, ctx);
}

inline Form t_s(const Form& f, const SectionContext& ctx) {
    return wedge(ctx.sigma(), f);
}

// Anticommutator of dbar with t_s; equals wedging by the even curvature term
// dbar sigma.
inline Form bracket_dbar_ts(const Form& f, const SectionContext& ctx) {
    return dbar(t_s(f, ctx)) + t_s(dbar(f), ctx);
}

inline Form curvature(const SectionContext& ctx) {
    return dbar(ctx.sigma());
}

// Inverse of (1 + curvature wedge): the alternating geometric sum, which
// terminates because the curvature carries one covector per factor.
inline Form neumann_inverse(const Form& f, const SectionContext& ctx) {
    Form b = curvature(ctx);
    Form acc = f;
    Form term = f;
    for (uint32_t k = 1; k <= ctx.n; ++k) {
        term = wedge(b, term);
        if (term.is_zero()) break;
        if (k & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

inline Frac cutoff(uint32_t n) { return Frac(Poly::jet(n)); }

inline Form dbar_cutoff(uint32_t n) {
    Form out(n);
    for (uint32_t d = 0; d < n; ++d)
        out.add_term(ExteriorWord{0, uint32_t(1) << d, 0, 0},
                     Frac(Poly::jet(n, JetKey{{d}})));
    return out;
}

// Gluing operator: rho alpha + dbar rho ^ t_s(neumann(alpha)).
inline Form t_rho(const Form& f, const SectionContext& ctx) {
    Form glued = t_s(neumann_inverse(f, ctx), ctx);
    return cutoff(ctx.n) * f + wedge(dbar_cutoff(ctx.n), glued);
}

// Correction operator: (1 - rho) t_s(neumann(alpha)).
inline Form r_rho(const Form& f, const SectionContext& ctx) {
    Frac one_minus = Frac::one(ctx.n) - cutoff(ctx.n);
    return one_minus * t_s(neumann_inverse(f, ctx), ctx);
}

// Homotopy identity: dbar_s r_rho + r_rho dbar_s = 1 - t_rho.
inline CheckReport check_homotopy(const Form& alpha, const SectionContext& ctx) {
    CheckReport rep;
    Form lhs = dbar_s(r_rho(alpha, ctx), ctx) + r_rho(dbar_s(alpha, ctx), ctx);
    Form rhs = alpha - t_rho(alpha, ctx);
    ++rep.cases;
    if (lhs != rhs) {
        std::vector<std::string> names;
        for (uint32_t k = 0; k < ctx.n; ++k)
            names.push_back("z" + std::to_string(k + 1));
        rep.fail("homotopy defect " + (lhs - rhs).str(names));
    }
    return rep;
}

enum class Op { Dbar, IotaS, DbarS, Ts, BracketDbarTs, Neumann, TRho, RRho };

inline int op_degree(Op op) {
    switch (op) {
        case Op::Dbar:
        case Op::IotaS:
        case Op::DbarS:
            return 1;
        case Op::Ts:
        case Op::RRho:
            return -1;
        case Op::BracketDbarTs:
        case Op::Neumann:
        case Op::TRho:
            return 0;
    }
    return 0;
}

inline const char* op_name(Op op) {
    switch (op) {
        case Op::Dbar: return "dbar";
        case Op::IotaS: return "iota_s";
        case Op::DbarS: return "dbar_s";
        case Op::Ts: return "t_s";
        case Op::BracketDbarTs: return "[dbar,t_s]";
        case Op::Neumann: return "neumann";
        case Op::TRho: return "t_rho";
        case Op::RRho: return "r_rho";
    }
    return "?";
}

// Composition applied left to right, with the declared total degree.
struct OperatorExpr {
    std::vector<Op> ops;

    int degree() const {
        int d = 0;
        for (Op op : ops) d += op_degree(op);
        return d;
    }

    Form apply(Form f, const SectionContext& ctx) const {
        for (Op op : ops) {
            switch (op) {
                case Op::Dbar: f = dbar(f); break;
                case Op::IotaS: f = iota_s(f, ctx); break;
                case Op::DbarS: f = dbar_s(f, ctx); break;
                case Op::Ts: f = t_s(f, ctx); break;
                case Op::BracketDbarTs: f = bracket_dbar_ts(f, ctx); break;
                case Op::Neumann: f = neumann_inverse(f, ctx); break;
                case Op::TRho: f = t_rho(f, ctx); break;
                case Op::RRho: f = r_rho(f, ctx); break;
            }
        }
        return f;
    }
};

}
