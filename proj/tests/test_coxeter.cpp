#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vbf/bfun.hpp"
#include "vbf/coxeter.hpp"

#include <stdexcept>

using namespace vbf;

namespace {
Rational rat(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("degree tables for small types") {
    const CoxeterDatum a2 = coxeter_datum("A2");
    CHECK(a2.rank == 2);
    CHECK(a2.degrees == std::vector<int>{2, 3});
    CHECK(a2.positive_root_count == 3);
    CHECK(a2.crystallographic);

    const CoxeterDatum g2 = coxeter_datum("G2");
    CHECK(g2.degrees == std::vector<int>{2, 6});
    CHECK(g2.positive_root_count == 6);

    const CoxeterDatum b2 = coxeter_datum("B2");
    CHECK(b2.degrees == std::vector<int>{2, 4});
    CHECK(b2.positive_root_count == 4);

    const CoxeterDatum d4 = coxeter_datum("D4");
    CHECK(d4.degrees == std::vector<int>{2, 4, 4, 6});
    CHECK(d4.positive_root_count == 12);

    const CoxeterDatum e8 = coxeter_datum("E8");
    CHECK(e8.degrees == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
    CHECK(e8.positive_root_count == 120);

    const CoxeterDatum i7 = coxeter_datum("I2(7)");
    CHECK(i7.degrees == std::vector<int>{2, 7});
    CHECK(i7.positive_root_count == 7);
    CHECK_FALSE(i7.crystallographic);
    CHECK(coxeter_datum("I2(6)").crystallographic);

    CHECK_FALSE(coxeter_datum("H3").crystallographic);
    CHECK_FALSE(coxeter_datum("H4").crystallographic);
}

TEST_CASE("every supported type satisfies the two table identities") {
    for (const std::string& label : supported_type_labels()) {
        const CoxeterDatum d = coxeter_datum(label);
        long sum = 0;
        for (int deg : d.degrees) sum += deg - 1;
        CHECK(sum == d.positive_root_count);
        CHECK(static_cast<long>(d.max_degree()) * d.rank == 2 * d.positive_root_count);
    }
}

TEST_CASE("unknown labels are rejected") {
    for (const char* bad : {"Q9", "A0", "B1", "D3", "E9", "F5", "G3", "H5", "I2(2)", "I2()",
                            "A", "", "A2x", "I3(5)"})
        CHECK_THROWS_AS(coxeter_datum(bad), std::invalid_argument);
}

TEST_CASE("quotient discriminant b-function") {
    CHECK(opdam_b(coxeter_datum("A1")) == FactoredBPoly::from_root(rat(-1)));

    CHECK(opdam_b(coxeter_datum("A2")) ==
          FactoredBPoly::from_roots({{rat(-1), 1}, {rat(-5, 6), 1}, {rat(-7, 6), 1}}));

    CHECK(opdam_b(coxeter_datum("G2")) ==
          FactoredBPoly::from_roots(
              {{rat(-1), 2}, {rat(-2, 3), 1}, {rat(-5, 6), 1}, {rat(-7, 6), 1}, {rat(-4, 3), 1}}));

    // degree equals the number of reflecting hyperplanes, for every type
    for (const std::string& label : supported_type_labels()) {
        const CoxeterDatum d = coxeter_datum(label);
        CHECK(opdam_b(d).degree() == d.positive_root_count);
    }
}

TEST_CASE("witness root and interval for every supported type") {
    for (const std::string& label : supported_type_labels()) {
        const CoxeterDatum d = coxeter_datum(label);
        const FactoredBPoly b = opdam_b(d);
        // the factor (s + 1/2 + 1/d_max) is always present
        CHECK(b.has_root(-(rat(1, 2) + rat(1, d.max_degree()))));
        const auto ex = root_extrema(b);
        REQUIRE(ex.has_value());
        CHECK(ex->first < rat(0));
        CHECK(ex->second > rat(-2));
    }
}

TEST_CASE("n/d root check") {
    CHECK(nd_root_check(FactoredBPoly::from_root(rat(-1)), coxeter_datum("A1")));

    BFunctionEngine engine;
    // -rank/d = -2/3 for A2 against the conjectured 3-variable b-function
    CHECK(nd_root_check(engine.conjectured(3), coxeter_datum("A2")));
    CHECK_FALSE(nd_root_check(FactoredBPoly::from_root(rat(-1, 2)), coxeter_datum("A2")));
}

TEST_CASE("discriminant b divides the rescaled Vandermonde b") {
    BFunctionEngine engine;
    CHECK(budur_check(opdam_b(coxeter_datum("A2")), engine.conjectured(3)));
    CHECK(budur_check(opdam_b(coxeter_datum("A3")), engine.conjectured(4)));
    CHECK_FALSE(budur_check(FactoredBPoly::from_root(rat(-1, 4)),
                            FactoredBPoly::from_root(rat(-1))));
}
