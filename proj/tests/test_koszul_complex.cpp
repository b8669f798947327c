#include <catch2/catch_amalgamated.hpp>

#include <koszul.hpp>

using namespace koszul;

namespace {

std::vector<Poly> coords(uint32_t n) {
    std::vector<Poly> out;
    for (uint32_t k = 0; k < n; ++k) out.push_back(Poly::variable(n, k));
    return out;
}

std::vector<Poly> circle_pair() {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    return {x * y, x * x + y * y};
}

}

TEST_CASE("complex construction validates the section") {
    CHECK_THROWS_AS(build_koszul({}), SpecError);
    CHECK_THROWS_AS(build_koszul({Poly::variable(2, 0)}), SpecError);
    CHECK_THROWS_AS(build_koszul({Poly::conj_variable(1, 0)}), SpecError);
    CHECK(build_koszul(circle_pair()).max_deg == 2);
}

TEST_CASE("degree bound below the section degree is rejected") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    KoszulComplex kc = build_koszul({x * x, y * y * y});
    CHECK_THROWS_WITH(truncated_homology_dims(kc, 2),
                      Catch::Matchers::ContainsSubstring("raise --degree-bound"));
}

TEST_CASE("homology table for the circle pair") {
    HomologyTable t = truncated_homology_dims(build_koszul(circle_pair()), 8);
    CHECK(t.window_max == 6);
    CHECK(t.dims[0] == std::vector<std::size_t>{1, 3, 4, 4, 4, 4, 4});
    for (uint32_t j = 1; j <= 2; ++j)
        for (std::size_t d = 0; d <= 6; ++d) CHECK(t.dims[j][d] == 0);
    CHECK(t.stabilized[0]);
    CHECK(t.stabilized[1]);
    CHECK(t.last(0) == 4);
}

TEST_CASE("vanishing verdicts on regular sequences") {
    VanishingReport r1 = check_vanishing(build_koszul(coords(2)), 4);
    CHECK(r1.pass);
    CHECK(r1.h0 == 1);
    CHECK(r1.witness.empty());

    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    VanishingReport r2 = check_vanishing(build_koszul({x * x, y * y * y}), 10);
    CHECK(r2.pass);
    CHECK(r2.h0 == 6);

    VanishingReport r3 = check_vanishing(build_koszul(circle_pair()), 8);
    CHECK(r3.pass);
    CHECK(r3.h0 == 4);

    Poly z = Poly::variable(1, 0);
    VanishingReport r4 = check_vanishing(build_koszul({z * z - Poly::one(1)}), 4);
    CHECK(r4.pass);
    CHECK(r4.h0 == 2);
    CHECK(r4.table.dims[0] == std::vector<std::size_t>{1, 2, 2});
}

TEST_CASE("repeated component fails with a degree one witness") {
    Poly x = Poly::variable(2, 0);
    VanishingReport rep = check_vanishing(build_koszul({x, x}), 4);
    CHECK(!rep.pass);
    CHECK(!rep.zero_dimensional);
    CHECK(!rep.higher_vanish);
    CHECK(rep.witness ==
          "nonvanishing class in homological degree 1 at monomial degree 0: "
          "-1*e[1]+1*e[2]");
}

TEST_CASE("regular sequence detection") {
    CHECK(is_regular_sequence(coords(2)));
    CHECK(is_regular_sequence(coords(3)));
    Poly x = Poly::variable(2, 0);
    CHECK(!is_regular_sequence({x, x}));
    CHECK(!is_regular_sequence({x, Poly::zero(2)}));
    CHECK(h0_dimension(coords(3)) == 1);
}
