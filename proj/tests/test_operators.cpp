#include <catch2/catch_amalgamated.hpp>

#include <koszul.hpp>

using namespace koszul;

namespace {

SectionContext line() { return SectionContext::make({Poly::variable(1, 0)}); }

SectionContext plane() {
    return SectionContext::make({Poly::variable(2, 0), Poly::variable(2, 1)});
}

Form w(uint32_t n, uint32_t holo, uint32_t anti, uint32_t covec, uint32_t vec) {
    return Form::word(n, ExteriorWord{holo, anti, covec, vec});
}

}

TEST_CASE("section context validation") {
    CHECK_THROWS_AS(SectionContext::make({}), SpecError);
    CHECK_THROWS_AS(SectionContext::make({Poly::variable(2, 0)}), SpecError);
    CHECK_THROWS_AS(SectionContext::make({Poly::conj_variable(1, 0)}), SpecError);
    CHECK_THROWS_AS(SectionContext::make({Poly::zero(1)}), SpecError);
}

TEST_CASE("section context data") {
    SectionContext ctx = line();
    Poly z = Poly::variable(1, 0);
    CHECK(*ctx.norm == z * z.conjugate());
    CHECK(ctx.sigma() ==
          Form::word(1, ExteriorWord{0, 0, 1, 0}, Frac(z.conjugate(), 1, ctx.norm)));
}

TEST_CASE("dbar squares to zero") {
    Poly z = Poly::variable(2, 0), zb2 = Poly::conj_variable(2, 1);
    Form f = Form::scalar(2, Frac(z * zb2 * zb2)) + w(2, 1, 0, 1, 0) +
             Form::word(2, ExteriorWord{0, 1, 0, 0}, Frac(Poly::jet(2)));
    CHECK(!dbar(f).is_zero());
    CHECK(dbar(dbar(f)).is_zero());

    SectionContext ctx = plane();
    Form g = Form::scalar(2, Frac(zb2, 1, ctx.norm)) + w(2, 0, 0, 3, 0);
    CHECK(dbar_s(dbar_s(g, ctx), ctx).is_zero());
}

TEST_CASE("twisted differential and contraction homotopy") {
    SectionContext ctx = line();
    Poly z = Poly::variable(1, 0);
    CHECK(t_s(Form::one(1), ctx) ==
          Form::word(1, ExteriorWord{0, 0, 1, 0}, Frac(z.conjugate(), 1, ctx.norm)));

    // iota_s t_s + t_s iota_s = 1 off the zero set
    for (const Form& f : {Form::one(1), w(1, 0, 1, 0, 0), w(1, 0, 1, 1, 0)}) {
        Form lhs = iota_s(t_s(f, ctx), ctx) + t_s(iota_s(f, ctx), ctx);
        CHECK(lhs == f);
    }
    SectionContext p = plane();
    Form f = w(2, 0, 1, 2, 0);
    CHECK(iota_s(t_s(f, p), p) + t_s(iota_s(f, p), p) == f);
}

TEST_CASE("bracket equals curvature multiplication") {
    SectionContext ctx = plane();
    Form b = curvature(ctx);
    CHECK(b == dbar(ctx.sigma()));
    for (const Form& f : {Form::one(2), w(2, 0, 1, 0, 0), w(2, 0, 0, 1, 0),
                          w(2, 0, 1, 2, 0)})
        CHECK(bracket_dbar_ts(f, ctx) == wedge(b, f));
}

TEST_CASE("neumann series inverts 1 + curvature") {
    SectionContext ctx = plane();
    Form b = curvature(ctx);
    for (const Form& f : {Form::one(2), w(2, 0, 1, 1, 0),
                          Form::word(2, ExteriorWord{0, 0, 1, 0},
                                     Frac(Poly::conj_variable(2, 0), 1, ctx.norm))}) {
        Form g = neumann_inverse(f, ctx);
        CHECK(g + wedge(b, g) == f);
        CHECK(neumann_inverse(f + wedge(b, f), ctx) == f);
    }
}

TEST_CASE("cutoff jets feed the glued operators") {
    for (uint32_t n : {uint32_t(1), uint32_t(2)})
        CHECK(dbar(Form::scalar(n, cutoff(n))) == dbar_cutoff(n));
}

TEST_CASE("homotopy identity on fixed forms") {
    SectionContext ctx = line();
    for (const Form& alpha : {Form::one(1), w(1, 0, 1, 0, 0), w(1, 0, 0, 1, 0),
                              w(1, 0, 1, 1, 0)}) {
        CheckReport rep = check_homotopy(alpha, ctx);
        INFO(rep.witness);
        CHECK(rep.pass);
    }
    SectionContext p = plane();
    Form mixed = Form::word(2, ExteriorWord{0, 1, 2, 0},
                            Frac(Poly::conj_variable(2, 1), 1, p.norm));
    CheckReport rep = check_homotopy(mixed, p);
    INFO(rep.witness);
    CHECK(rep.pass);
}

TEST_CASE("operator degree table") {
    CHECK(op_degree(Op::Dbar) == 1);
    CHECK(op_degree(Op::IotaS) == 1);
    CHECK(op_degree(Op::DbarS) == 1);
    CHECK(op_degree(Op::Ts) == -1);
    CHECK(op_degree(Op::RRho) == -1);
    CHECK(op_degree(Op::BracketDbarTs) == 0);
    CHECK(op_degree(Op::Neumann) == 0);
    CHECK(op_degree(Op::TRho) == 0);
    CHECK(std::string(op_name(Op::BracketDbarTs)) == "[dbar,t_s]");

    OperatorExpr expr{{Op::Dbar, Op::Ts}};
    CHECK(expr.degree() == 0);
    SectionContext ctx = line();
    Form f = w(1, 0, 0, 1, 0);
    CHECK(expr.apply(f, ctx) == t_s(dbar(f), ctx));
}

TEST_CASE("operators shift the total degree as declared") {
    SectionContext ctx = plane();
    Form f = w(2, 0, 1, 1, 0);  // sharp 0
    REQUIRE(f.homogeneous_sharp() == 0);
    for (Op op : {Op::Dbar, Op::IotaS, Op::DbarS, Op::Ts, Op::BracketDbarTs,
                  Op::Neumann, Op::TRho, Op::RRho}) {
        Form g = OperatorExpr{{op}}.apply(f, ctx);
        if (g.is_zero()) continue;
        CHECK(g.homogeneous_sharp() == op_degree(op));
    }
}
