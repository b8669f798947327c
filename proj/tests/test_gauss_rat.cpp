#include <catch2/catch_amalgamated.hpp>

#include <koszul.hpp>

using namespace koszul;

TEST_CASE("gaussian rational arithmetic") {
    GaussRat a(mpq_class(1), mpq_class(2));
    GaussRat b(mpq_class(3), mpq_class(-1));
    CHECK(a * b == GaussRat(mpq_class(5), mpq_class(5)));
    CHECK(a + b == GaussRat(mpq_class(4), mpq_class(1)));
    CHECK(a - b == GaussRat(mpq_class(-2), mpq_class(3)));
    CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
    CHECK(-GaussRat::i() == GaussRat(mpq_class(0), mpq_class(-1)));
}

TEST_CASE("conjugate, norm and inverse") {
    GaussRat a(mpq_class(1), mpq_class(2));
    CHECK(a.conj() == GaussRat(mpq_class(1), mpq_class(-2)));
    CHECK(a.norm() == 5);
    CHECK(a * a.inverse() == GaussRat(1));
    CHECK(GaussRat::i().inverse() == -GaussRat::i());
    CHECK_THROWS_AS(GaussRat().inverse(), std::domain_error);
    CHECK(a / a == GaussRat(1));
}

TEST_CASE("powers") {
    GaussRat w(mpq_class(1), mpq_class(1));
    CHECK(w.pow(0) == GaussRat(1));
    CHECK(w.pow(2) == GaussRat(mpq_class(0), mpq_class(2)));
    CHECK(GaussRat::i().pow(4) == GaussRat(1));
    CHECK(GaussRat::i().pow(3) == -GaussRat::i());
}

TEST_CASE("ratio canonicalizes") {
    CHECK(GaussRat::ratio(2, 4) == GaussRat::ratio(1, 2));
    CHECK(GaussRat::ratio(3, -2) == GaussRat::ratio(-3, 2));
    CHECK_THROWS_AS(GaussRat::ratio(1, 0), std::domain_error);
}

TEST_CASE("string rendering") {
    CHECK(GaussRat().str() == "0");
    CHECK(GaussRat(-1).str() == "-1");
    CHECK(GaussRat::ratio(3, 2).str() == "3/2");
    CHECK(GaussRat::i().str() == "i");
    CHECK((-GaussRat::i()).str() == "-i");
    CHECK(GaussRat(mpq_class(0), mpq_class(2)).str() == "2*i");
    CHECK(GaussRat(mpq_class(1), mpq_class(-1, 2)).str() == "1-1/2*i");
}

TEST_CASE("map key order is a strict total order") {
    std::vector<GaussRat> vals = {GaussRat(0), GaussRat(1), GaussRat(-1),
                                  GaussRat::i(), -GaussRat::i(),
                                  GaussRat(mpq_class(1), mpq_class(2)),
                                  GaussRat::ratio(1, 2)};
    for (const GaussRat& x : vals)
        for (const GaussRat& y : vals) {
            bool lt = x < y, gt = y < x, eq = x == y;
            CHECK((int(lt) + int(gt) + int(eq)) == 1);
        }
}
