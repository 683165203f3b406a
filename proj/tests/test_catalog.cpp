#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "admiss.hpp"
#include "catalog.hpp"
#include "helpers.hpp"
#include "weil.hpp"

using namespace fpmcert;
using namespace fpmcert::testing;

TEST_CASE("catalog names dispatch and parameter validation") {
    auto names = catalog_names();
    CHECK(names.size() == 7);
    for (const auto& name : names) {
        CatalogParams params;
        params.p = (name == "simple-ss" || name == "zeta6") ? 7 : 5;
        if (name == "cyclotomic") params.n = 4;
        if (name == "nfold") params.m = 2;
        if (name == "distinct-curves") {
            params.p = 3; // only a = 0 is supersingular when p >= 5
            params.a1 = Int(0);
            params.a2 = Int(3);
        }
        CatalogEntry e = catalog_entry(name, params);
        CHECK(e.name == name);
        CHECK(e.module.dim() >= 2);
    }
    CatalogParams p5;
    p5.p = 5;
    CHECK_THROWS_AS(catalog_entry("unknown", p5), SchemaError);
    CHECK_THROWS_AS(catalog_entry("cyclotomic", p5), SchemaError); // missing n
    CHECK_THROWS_AS(catalog_entry("nfold", p5), SchemaError);      // missing m
}

TEST_CASE("repeated block example: char poly and invariants for several primes") {
    for (long p : {2, 5, 13}) {
        CatalogEntry e = example_ss_square(Int(p));
        CHECK(e.module.dim() == 4);
        ZPoly expect = ZPoly::of({p, 0, 1}) * ZPoly::of({p, 0, 1});
        CHECK(e.module.char_poly() == expect);
        CHECK(is_supersingular(e.module.char_poly(), Int(p)).is_supersingular);
        Subspace full = Subspace::full(4);
        CHECK(e.module.t_H(full) == 2);
        CHECK(e.module.t_N(full) == 2);
    }
}

TEST_CASE("split cyclotomic pair: char poly is the quartic cyclotomic transform") {
    for (long p : {7, 13}) {
        CatalogEntry e = example_simple_ss(Int(p));
        CHECK(e.module.char_poly() == cyclotomic_weil_family(3, Int(p)));
        CHECK(e.module.scalars().n == 3);
    }
    CHECK_THROWS_AS(example_simple_ss(Int(5)), NotSplit); // 5 != 1 mod 3
    CatalogEntry z6 = example_variant(Int(7), VariantKind::Zeta6);
    CHECK(z6.module.char_poly() == cyclotomic_weil_family(6, Int(7)));
    CatalogEntry z4 = example_variant(Int(5), VariantKind::Zeta4);
    CHECK(z4.module.char_poly() == cyclotomic_weil_family(4, Int(5)));
    CHECK_THROWS_AS(example_variant(Int(7), VariantKind::Zeta4), NotSplit);
}

TEST_CASE("general cyclotomic family builds the right dimension and char poly") {
    CatalogEntry e = example_cyclotomic(5, Int(11));
    CHECK(e.module.dim() == 8);
    CHECK(e.module.char_poly() == cyclotomic_weil_family(5, Int(11)));
    CHECK_THROWS_AS(example_cyclotomic(5, Int(7)), NotSplit); // 7 != 1 mod 5
}

TEST_CASE("distinct curve pair validates its inputs") {
    CatalogEntry e = remark_distinct_curves(Int(3), Int(0), Int(3));
    CHECK(e.module.dim() == 4);
    CHECK(e.module.char_poly() == ZPoly::of({3, 0, 1}) * ZPoly::of({3, 3, 1}));
    // a = 1 gives an ordinary (not supersingular) quadratic
    CHECK_THROWS_AS(remark_distinct_curves(Int(3), Int(0), Int(1)), NotSupersingularFactor);
    CHECK_THROWS_AS(remark_distinct_curves(Int(3), Int(3), Int(3)), EqualCoefficients);
}

TEST_CASE("expected facts carry exactly one disputed claim, on the repeated block entry") {
    CatalogEntry e = example_ss_square(Int(5));
    int disputed = 0;
    for (const auto& f : e.expected) disputed += f.disputed ? 1 : 0;
    CHECK(disputed == 1);
    for (const auto& f : e.expected)
        if (f.disputed) CHECK(f.key == "semisimple");
    // no other entry disputes anything
    for (const auto& entry : {example_simple_ss(Int(7)), example_nfold(Int(5), 2),
                              remark_distinct_curves(Int(3), Int(0), Int(3))})
        for (const auto& f : entry.expected) CHECK(!f.disputed);
}

TEST_CASE("nfold chain filtration has half-dimensional Fil^1") {
    for (int m = 2; m <= 4; ++m) {
        CatalogEntry e = example_nfold(Int(5), m);
        CHECK(e.module.dim() == 2 * m);
        CHECK(e.module.fil(1).dim() == m);
        auto ht = e.module.hodge_tate_type();
        CHECK(ht.kind == HodgeTateKind::Type01);
    }
}
