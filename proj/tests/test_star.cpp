#include <catch2/catch_amalgamated.hpp>

#include <koszul.hpp>

using namespace koszul;

namespace {

Form w(uint32_t n, uint32_t holo, uint32_t anti, uint32_t covec, uint32_t vec) {
    return Form::word(n, ExteriorWord{holo, anti, covec, vec});
}

Form scaled(uint32_t n, uint32_t anti, uint32_t covec, GaussRat c) {
    return Form::word(n, ExteriorWord{0, anti, covec, 0}, Frac::constant(n, c));
}

// C-linear defect of the star, for the negative control below
Form star_c_linear(const Form& b, const FrameData& frame) {
    Form conj_coeffs(b.n());
    for (const auto& [word, c] : b.terms()) conj_coeffs.add_term(word, c.conjugate());
    return star_v(conj_coeffs, frame);
}

}

TEST_CASE("frame data") {
    CHECK_THROWS_AS(FrameData(1, GaussRat(2)), std::domain_error);
    CHECK_THROWS_AS(FrameData(2, GaussRat(mpq_class(1), mpq_class(1))),
                    std::domain_error);
    FrameData unit(2, GaussRat(mpq_class(3, 5), mpq_class(4, 5)));
    CHECK(unit.f.norm() == 1);

    CHECK(FrameData(1).dv_coefficient() == -GaussRat::i());
    CHECK(FrameData(2).dv_coefficient() == GaussRat(1));
    CHECK(FrameData(1).psi() == w(1, 1, 0, 0, 1));
}

TEST_CASE("star table on the line") {
    FrameData fr(1);
    GaussRat i = GaussRat::i();
    CHECK(star_v(Form::one(1), fr) == scaled(1, 1, 1, i));
    CHECK(star_v(w(1, 0, 1, 0, 0), fr) == scaled(1, 0, 1, i));
    CHECK(star_v(w(1, 0, 0, 1, 0), fr) == scaled(1, 1, 0, -i));
    CHECK(star_v(w(1, 0, 1, 1, 0), fr) == Form::scalar(1, Frac::constant(1, i)));
    // conjugate linearity
    CHECK(star_v(Form::scalar(1, Frac::constant(1, i)), fr) ==
        (-i) * star_v(Form::one(1), fr));
}

TEST_CASE("star in two variables") {
    CHECK(star_v(w(2, 0, 1, 1, 0), FrameData(2)) == w(2, 0, 2, 2, 0));
    GaussRat f(mpq_class(3, 5), mpq_class(4, 5));
    Form got = star_v(w(2, 0, 1, 1, 0), FrameData(2, f));
    CHECK(got == Form::word(2, ExteriorWord{0, 2, 2, 0},
                            Frac::constant(2, f.inverse())));
    CHECK_THROWS_AS(star_v(w(2, 1, 0, 0, 0), FrameData(2)), std::domain_error);
    CHECK_THROWS_AS(star_v(w(2, 0, 0, 0, 1), FrameData(2)), std::domain_error);
}

TEST_CASE("star involution") {
    for (uint32_t n = 1; n <= 4; ++n)
        for (GaussRat f : {GaussRat(1), GaussRat(mpq_class(3, 5), mpq_class(4, 5))}) {
            CheckReport rep = check_star_involution(n, FrameData(n, f));
            INFO(rep.witness);
            CHECK(rep.pass);
            CHECK(rep.cases == (std::size_t(1) << (2 * n)));
        }
}

TEST_CASE("star defining property") {
    for (uint32_t n = 1; n <= 2; ++n)
        for (GaussRat f : {GaussRat(1), GaussRat::i()}) {
            CheckReport rep = check_star_defining_property(n, FrameData(n, f));
            INFO(rep.witness);
            CHECK(rep.pass);
        }
}

TEST_CASE("broken stars fail the defining property") {
    StarFn negated = [](const Form& b, const FrameData& fr) {
        return -star_v(b, fr);
    };
    CHECK(!check_star_defining_property(1, FrameData(1), negated).pass);
    CHECK(!check_star_defining_property(1, FrameData(1), star_c_linear).pass);
}

TEST_CASE("pointwise adjoint comparison") {
    AdjointReport rep = check_pointwise_adjoint(1, {GaussRat(1)}, FrameData(1));
    CHECK(!rep.literal_pass);
    CHECK(rep.literal_witness == "e[1] , 1");
    CHECK(rep.signed_pass);
    CHECK(rep.dropped_term_zero);

    // the frozen witness pair, spelled out
    Form e1 = w(1, 0, 0, 1, 0);
    std::vector<Frac> s = {Frac::one(1)};
    FrameData fr(1);
    Frac lhs = fiber_inner(iota(e1, s), Form::one(1));
    Frac rhs = fiber_inner(e1, star_v(iota(star_v(Form::one(1), fr), s), fr));
    CHECK(lhs == Frac::one(1));
    CHECK(rhs == Frac::constant(1, GaussRat(-1)));

    AdjointReport rep2 =
        check_pointwise_adjoint(2, {GaussRat::i(), GaussRat(2)}, FrameData(2));
    CHECK(!rep2.literal_pass);
    CHECK(rep2.signed_pass);
    CHECK(rep2.dropped_term_zero);
    CHECK(rep2.cases == 256);
}
