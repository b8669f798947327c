#pragma once

#include <bit>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "digest.hpp"
#include "exterior.hpp"
#include "operators.hpp"
#include "star.hpp"

namespace koszul {

// Deterministic randomness for the battery: one engine per family and
// dimension, values reduced by modulus so the stream is stable across
// standard library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}

    long pick(long lo, long hi) {
        return lo + long(g_() % uint64_t(hi - lo + 1));
    }

    GaussRat int_coeff() { return GaussRat(pick(-3, 3)); }

    GaussRat gauss_coeff() {
        return GaussRat(mpq_class(pick(-3, 3)), mpq_class(pick(-3, 3)));
    }

    uint32_t mask(uint32_t n) { return uint32_t(g_() % (uint64_t(1) << n)); }

private:
    std::mt19937_64 g_;
};

inline Poly random_holo_poly(Rng& rng, uint32_t n, long max_terms = 3,
                             long max_deg = 3) {
    Poly p(n);
    long t = rng.pick(1, max_terms);
    for (long k = 0; k < t; ++k) {
        Poly term = Poly::constant(n, rng.int_coeff());
        long budget = rng.pick(0, max_deg);
        for (long b = 0; b < budget; ++b)
            term = term * Poly::variable(n, uint32_t(rng.pick(0, long(n) - 1)));
        p += term;
    }
    return p;
}

inline Poly random_mixed_poly(Rng& rng, uint32_t n, bool with_jet, long max_terms = 2,
                              long max_deg = 2) {
    Poly p(n);
    long t = rng.pick(1, max_terms);
    for (long k = 0; k < t; ++k) {
        Poly term = Poly::constant(n, rng.gauss_coeff());
        long budget = rng.pick(0, max_deg);
        for (long b = 0; b < budget; ++b) {
            uint32_t slot = uint32_t(rng.pick(0, 2 * long(n) - 1));
            term = term * (slot < n ? Poly::variable(n, slot)
                                    : Poly::conj_variable(n, slot - n));
        }
        if (with_jet && rng.pick(0, 1)) term = term * Poly::jet(n);
        p += term;
    }
    return p;
}

inline SectionContext random_section(Rng& rng, uint32_t n) {
    for (;;) {
        std::vector<Poly> comps;
        bool nonzero = false;
        for (uint32_t k = 0; k < n; ++k) {
            comps.push_back(random_holo_poly(rng, n));
            if (!comps.back().is_zero()) nonzero = true;
        }
        if (nonzero) return SectionContext::make(std::move(comps));
    }
}

inline Frac random_frac(Rng& rng, const SectionContext& ctx, bool need_nonzero = false) {
    for (;;) {
        Poly num = random_mixed_poly(rng, ctx.n, false);
        if (need_nonzero && num.is_zero()) continue;
        return Frac(std::move(num), uint32_t(rng.pick(0, 1)), ctx.norm);
    }
}

// Random form in the subalgebra spanned by dzbar and e^ words.
inline Form random_e_form(Rng& rng, const SectionContext& ctx) {
    Form f(ctx.n);
    long t = rng.pick(1, 2);
    for (long k = 0; k < t; ++k)
        f.add_term(ExteriorWord{0, rng.mask(ctx.n), rng.mask(ctx.n), 0},
                   random_frac(rng, ctx));
    return f;
}

// Independent contraction oracle.  The contraction u _| theta of single
// words is reconstructed from its defining property: testing against every
// pure covector word nu* with the elementary duality pairing
//   <x (x) e_L, y (x) e^M> = delta_{L,M} (x ^ y)
// on ascending words, so only the wedge product and the stated global sign
// enter, never the closed-form crossing bookkeeping.
inline Form oracle_contract(uint32_t n, const ExteriorWord& wu, const ExteriorWord& wt) {
    internal_check(wu.covec == 0, "oracle source carries covector factors");
    internal_check(wt.vec == 0, "oracle argument carries vector factors");
    int k = std::popcount(wu.vec);
    int l = std::popcount(wt.covec);
    int form_u = std::popcount(wu.holo) + std::popcount(wu.anti);
    int pq = std::popcount(wt.holo) + std::popcount(wt.anti);
    long expo = long(form_u) * l + long(pq) * wu.sharp() + long(l) * (l - 1) / 2;
    Form out(n);
    if (k < l) return out;
    for (uint32_t m = 0; m < (uint32_t(1) << n); ++m) {
        if (std::popcount(m) != k - l) continue;
        Form rhs = wedge(Form::word(n, wt), Form::word(n, ExteriorWord{0, 0, m, 0}));
        for (const auto& [w, c] : rhs.terms()) {
            if (w.covec != wu.vec || w.vec != 0) continue;
            ExteriorWord merged;
            int sgn = wedge_sign(ExteriorWord{wu.holo, wu.anti, 0, 0},
                                 ExteriorWord{w.holo, w.anti, 0, 0}, merged);
            if (sgn == 0) continue;
            Frac coeff = (sgn < 0) ? -c : c;
            if (expo & 1) coeff = -coeff;
            out.add_term(ExteriorWord{merged.holo, merged.anti, 0, m}, coeff);
        }
    }
    return out;
}

struct FamilyResult {
    std::string name;
    uint32_t bound = 0;
    std::size_t cases = 0;
    bool pass = true;
    bool skipped = false;
    std::string witness;
    std::string note;
};

struct BatteryResult {
    uint64_t seed = 0;
    uint32_t n_max = 0;
    std::vector<FamilyResult> families;
    bool pass = true;
};

namespace detail {

inline void check_form_eq(FamilyResult& fr, const Form& a, const Form& b,
                          const std::string& tag) {
    ++fr.cases;
    if (fr.pass && !(a == b)) {
        fr.pass = false;
        fr.witness = tag;
    }
}

inline std::string case_tag(uint32_t n, long rep, const std::string& extra = "") {
    std::string out = "n=" + std::to_string(n) + " case " + std::to_string(rep);
    if (!extra.empty()) out += ": " + extra;
    return out;
}

}  // namespace detail

inline BatteryResult run_battery(uint64_t seed, uint32_t n_max) {
    BatteryResult out;
    out.seed = seed;
    out.n_max = n_max;

    auto family = [&](const char* name, uint32_t cap, auto&& body) {
        FamilyResult fr;
        fr.name = name;
        fr.bound = cap;
        if (n_max > cap) {
            fr.skipped = true;
            fr.note = "n_max " + std::to_string(n_max) + " exceeds this family's bound " +
                      std::to_string(cap) + ", skipped";
        } else {
            for (uint32_t n = 1; n <= n_max && fr.pass; ++n) {
                Rng rng(fnv1a64(name) ^ (seed * 0x9E3779B97F4A7C15ULL + n));
                body(fr, rng, n);
            }
        }
        if (!fr.pass) out.pass = false;
        out.families.push_back(std::move(fr));
    };

    family("wedge-graded-commutativity", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        SectionContext ctx = random_section(rng, n);
        for (long rep = 0; rep < 20 && fr.pass; ++rep) {
            ExteriorWord wa{rng.mask(n), rng.mask(n), rng.mask(n), rng.mask(n)};
            ExteriorWord wb{rng.mask(n), rng.mask(n), rng.mask(n), rng.mask(n)};
            Form a = Form::word(n, wa, random_frac(rng, ctx));
            Form b = Form::word(n, wb, random_frac(rng, ctx));
            Form lhs = wedge(a, b);
            Form rhs = wedge(b, a);
            if (wa.odd() && wb.odd()) rhs = -rhs;
            detail::check_form_eq(fr, lhs, rhs,
                                  detail::case_tag(n, rep, word_str(wa) + " , " + word_str(wb)));
        }
    });

    family("wedge-associativity", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        SectionContext ctx = random_section(rng, n);
        for (long rep = 0; rep < 12 && fr.pass; ++rep) {
            auto rand_form = [&] {
                Form f(n);
                f.add_term(ExteriorWord{rng.mask(n), rng.mask(n), rng.mask(n), rng.mask(n)},
                           random_frac(rng, ctx));
                f.add_term(ExteriorWord{rng.mask(n), rng.mask(n), rng.mask(n), rng.mask(n)},
                           random_frac(rng, ctx));
                return f;
            };
            Form a = rand_form(), b = rand_form(), c = rand_form();
            detail::check_form_eq(fr, wedge(wedge(a, b), c), wedge(a, wedge(b, c)),
                                  detail::case_tag(n, rep));
        }
    });

    family("iota-antiderivation", 4, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        for (long rep = 0; rep < 20 && fr.pass; ++rep) {
            std::vector<Frac> vals;
            for (uint32_t k = 0; k < n; ++k)
                vals.push_back(Frac::constant(n, rng.gauss_coeff()));
            ExteriorWord wa{rng.mask(n), rng.mask(n), rng.mask(n), rng.mask(n)};
            Form a = Form::word(n, wa, Frac::constant(n, rng.gauss_coeff()));
            Form b(n);
            b.add_term(ExteriorWord{rng.mask(n), rng.mask(n), rng.mask(n), rng.mask(n)},
                       Frac::constant(n, rng.gauss_coeff()));
            b.add_term(ExteriorWord{rng.mask(n), rng.mask(n), rng.mask(n), rng.mask(n)},
                       Frac::constant(n, rng.gauss_coeff()));
            Form lhs = iota(wedge(a, b), vals);
            Form second = wedge(a, iota(b, vals));
            if (wa.odd()) second = -second;
            Form rhs = wedge(iota(a, vals), b) + second;
            detail::check_form_eq(fr, lhs, rhs, detail::case_tag(n, rep, word_str(wa)));
        }
    });

    family("nilpotency", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        for (long rep = 0; rep < 10 && fr.pass; ++rep) {
            SectionContext ctx = random_section(rng, n);
            Form f = random_e_form(rng, ctx);
            Form zero(n);
            detail::check_form_eq(fr, dbar(dbar(f)), zero,
                                  detail::case_tag(n, rep, "dbar^2"));
            detail::check_form_eq(fr, iota_s(iota_s(f, ctx), ctx), zero,
                                  detail::case_tag(n, rep, "iota_s^2"));
            detail::check_form_eq(fr, dbar_s(dbar_s(f, ctx), ctx), zero,
                                  detail::case_tag(n, rep, "dbar_s^2"));
        }
    });

    family("mixed-partials", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        auto check = [&](const Poly& a, const Poly& b, long rep, const char* tag) {
            ++fr.cases;
            if (fr.pass && !(a == b)) {
                fr.pass = false;
                fr.witness = detail::case_tag(n, rep, tag);
            }
        };
        for (long rep = 0; rep < 20 && fr.pass; ++rep) {
            Poly p = random_mixed_poly(rng, n, true, 3, 3);
            uint32_t d1 = uint32_t(rng.pick(0, long(n) - 1));
            uint32_t d2 = uint32_t(rng.pick(0, long(n) - 1));
            check(p.wirtinger_dbar(d1).wirtinger_dbar(d2),
                  p.wirtinger_dbar(d2).wirtinger_dbar(d1), rep, "dbar dbar");
            Poly q = random_mixed_poly(rng, n, false, 3, 3);
            check(q.wirtinger_d(d1).wirtinger_d(d2), q.wirtinger_d(d2).wirtinger_d(d1),
                  rep, "d d");
            check(q.wirtinger_d(d1).wirtinger_dbar(d2), q.wirtinger_dbar(d2).wirtinger_d(d1),
                  rep, "d dbar");
        }
    });

    family("conjugation-involution", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        auto check = [&](const Poly& a, const Poly& b, long rep, const char* tag) {
            ++fr.cases;
            if (fr.pass && !(a == b)) {
                fr.pass = false;
                fr.witness = detail::case_tag(n, rep, tag);
            }
        };
        for (long rep = 0; rep < 20 && fr.pass; ++rep) {
            Poly p = random_mixed_poly(rng, n, false, 3, 3);
            Poly q = random_mixed_poly(rng, n, false, 3, 3);
            check(p.conjugate().conjugate(), p, rep, "double conjugate");
            check((p * q).conjugate(), p.conjugate() * q.conjugate(), rep,
                  "conjugate of product");
            check((p + q).conjugate(), p.conjugate() + q.conjugate(), rep,
                  "conjugate of sum");
        }
    });

    family("fraction-arithmetic", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        auto check = [&](const Frac& a, const Frac& b, long rep, const char* tag) {
            ++fr.cases;
            if (fr.pass && !(a == b)) {
                fr.pass = false;
                fr.witness = detail::case_tag(n, rep, tag);
            }
        };
        for (long rep = 0; rep < 15 && fr.pass; ++rep) {
            SectionContext ctx = random_section(rng, n);
            Frac a = random_frac(rng, ctx), b = random_frac(rng, ctx),
                 c = random_frac(rng, ctx);
            check((a + b) * c, a * c + b * c, rep, "distributivity");
            check((a + b) - a, b, rep, "cancellation");
            ++fr.cases;
            if (fr.pass && !(a - a).is_zero()) {
                fr.pass = false;
                fr.witness = detail::case_tag(n, rep, "self difference");
            }
            check(a.conjugate().conjugate(), a, rep, "double conjugate");
        }
    });

    family("iota-ts-commutator", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        for (long rep = 0; rep < 20 && fr.pass; ++rep) {
            SectionContext ctx = random_section(rng, n);
            Form f = random_e_form(rng, ctx);
            Form lhs = iota_s(t_s(f, ctx), ctx) + t_s(iota_s(f, ctx), ctx);
            detail::check_form_eq(fr, lhs, f, detail::case_tag(n, rep));
        }
    });

    family("ts-squared", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        for (long rep = 0; rep < 10 && fr.pass; ++rep) {
            SectionContext ctx = random_section(rng, n);
            Form f = random_e_form(rng, ctx);
            detail::check_form_eq(fr, t_s(t_s(f, ctx), ctx), Form::zero(n),
                                  detail::case_tag(n, rep));
        }
    });

    family("curvature-centrality", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        for (long rep = 0; rep < 5 && fr.pass; ++rep) {
            SectionContext ctx = random_section(rng, n);
            Form f = random_e_form(rng, ctx);
            Form bf = bracket_dbar_ts(f, ctx);
            detail::check_form_eq(fr, iota_s(bf, ctx), bracket_dbar_ts(iota_s(f, ctx), ctx),
                                  detail::case_tag(n, rep, "iota_s"));
            detail::check_form_eq(fr, dbar(bf), bracket_dbar_ts(dbar(f), ctx),
                                  detail::case_tag(n, rep, "dbar"));
            detail::check_form_eq(fr, t_s(bf, ctx), bracket_dbar_ts(t_s(f, ctx), ctx),
                                  detail::case_tag(n, rep, "t_s"));
        }
    });

    family("curvature-form-match", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        for (long rep = 0; rep < 10 && fr.pass; ++rep) {
            SectionContext ctx = random_section(rng, n);
            Form f = random_e_form(rng, ctx);
            detail::check_form_eq(fr, bracket_dbar_ts(f, ctx),
                                  wedge(curvature(ctx), f), detail::case_tag(n, rep));
        }
    });

    family("neumann-telescoping", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        for (long rep = 0; rep < 6 && fr.pass; ++rep) {
            SectionContext ctx = random_section(rng, n);
            Form f = random_e_form(rng, ctx);
            Form nf = neumann_inverse(f, ctx);
            detail::check_form_eq(fr, nf + bracket_dbar_ts(nf, ctx), f,
                                  detail::case_tag(n, rep));
        }
    });

    family("homotopy-identity", 2, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        SectionContext ctx = random_section(rng, n);
        for (const ExteriorWord& w : all_words(n, false, true, true, false)) {
            if (!fr.pass) break;
            CheckReport rep = check_homotopy(Form::word(n, w), ctx);
            ++fr.cases;
            if (fr.pass && !rep.pass) {
                fr.pass = false;
                fr.witness = "n=" + std::to_string(n) + " word " + word_str(w) + ": " +
                             rep.witness;
            }
        }
        for (long rep = 0; rep < 2 && fr.pass; ++rep) {
            CheckReport cr = check_homotopy(random_e_form(rng, ctx), ctx);
            ++fr.cases;
            if (fr.pass && !cr.pass) {
                fr.pass = false;
                fr.witness = detail::case_tag(n, rep, cr.witness);
            }
        }
    });

    family("star-involution", 4, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        (void)rng;
        for (const GaussRat& f : {GaussRat(1), GaussRat(mpq_class(3, 5), mpq_class(4, 5))}) {
            FrameData frame(n, f);
            CheckReport rep = check_star_involution(n, frame);
            fr.cases += rep.cases;
            if (fr.pass && !rep.pass) {
                fr.pass = false;
                fr.witness = "n=" + std::to_string(n) + " f=" + f.str() + ": " + rep.witness;
            }
        }
    });

    family("star-defining-property", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        (void)rng;
        for (const GaussRat& f : {GaussRat(1), GaussRat::i()}) {
            FrameData frame(n, f);
            CheckReport rep = check_star_defining_property(n, frame);
            fr.cases += rep.cases;
            if (fr.pass && !rep.pass) {
                fr.pass = false;
                fr.witness = "n=" + std::to_string(n) + " f=" + f.str() + ": " + rep.witness;
            }
        }
    });

    family("contraction-oracle", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        (void)rng;
        std::vector<ExteriorWord> us = all_words(n, true, true, false, true);
        std::vector<ExteriorWord> ts = all_words(n, true, true, true, false);
        for (const ExteriorWord& wu : us)
            for (const ExteriorWord& wt : ts) {
                if (!fr.pass) return;
                detail::check_form_eq(fr, contract(Form::word(n, wu), Form::word(n, wt)),
                                      oracle_contract(n, wu, wt),
                                      "n=" + std::to_string(n) + " " + word_str(wu) +
                                          " _| " + word_str(wt));
            }
    });

    family("pointwise-adjoint", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        bool sign_flip_everywhere = true;
        for (long rep = 0; rep < 3; ++rep) {
            std::vector<GaussRat> svals;
            bool nonzero = false;
            while (!nonzero) {
                svals.clear();
                for (uint32_t k = 0; k < n; ++k) {
                    svals.push_back(rng.gauss_coeff());
                    if (!svals.back().is_zero()) nonzero = true;
                }
            }
            AdjointReport ar = check_pointwise_adjoint(n, svals, FrameData(n, GaussRat(1)));
            fr.cases += ar.cases;
            if (!ar.signed_pass) sign_flip_everywhere = false;
            if (fr.pass && !ar.literal_pass) {
                fr.pass = false;
                fr.witness = "n=" + std::to_string(n) + ": first mismatched pair " +
                             ar.literal_witness;
            }
        }
        if (!fr.pass && sign_flip_everywhere && fr.note.empty())
            fr.note =
                "every mismatched pair satisfies the identity after a global sign flip "
                "of the right side";
    });

    family("dropped-term-vanishing", 4, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        for (long rep = 0; rep < 2; ++rep) {
            std::vector<GaussRat> svals;
            for (uint32_t k = 0; k < n; ++k) svals.push_back(rng.gauss_coeff());
            AdjointReport ar = check_pointwise_adjoint(n, svals, FrameData(n, GaussRat(1)));
            fr.cases += ar.cases;
            if (fr.pass && !ar.dropped_term_zero) {
                fr.pass = false;
                fr.witness = "n=" + std::to_string(n) + ": pair " + ar.dropped_witness;
            }
        }
    });

    family("degree-bookkeeping", 3, [](FamilyResult& fr, Rng& rng, uint32_t n) {
        static const Op all_ops[] = {Op::Dbar, Op::IotaS,         Op::DbarS,
                                     Op::Ts,   Op::BracketDbarTs, Op::Neumann,
                                     Op::TRho, Op::RRho};
        for (long rep = 0; rep < 5 && fr.pass; ++rep) {
            SectionContext ctx = random_section(rng, n);
            ExteriorWord w{0, rng.mask(n), rng.mask(n), 0};
            Form f = Form::word(n, w, random_frac(rng, ctx, true));
            for (Op op : all_ops) {
                Form g = OperatorExpr{{op}}.apply(f, ctx);
                ++fr.cases;
                auto hs = g.homogeneous_sharp();
                if (fr.pass && hs && *hs != w.sharp() + op_degree(op)) {
                    fr.pass = false;
                    fr.witness = detail::case_tag(
                        n, rep, std::string(op_name(op)) + " on " + word_str(w));
                }
            }
        }
    });

    return out;
}

}  // namespace koszul
