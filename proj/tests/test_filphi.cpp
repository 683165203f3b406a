#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"

using namespace fpmcert;
using namespace fpmcert::testing;

namespace {

FilteredPhiModule two_block_example(long p) {
    // companion blocks of X^2 + p, Fil^1 = span(x1, y1 + x2)
    ScalarContext scal(Int(p), 1);
    CMat f(4, 4);
    f.at(1, 0) = crat(1);
    f.at(0, 1) = crat(-p);
    f.at(3, 2) = crat(1);
    f.at(2, 3) = crat(-p);
    std::map<int, Subspace> steps;
    steps[0] = Subspace::full(4);
    steps[1] = Subspace::span(4, {cvec({1, 0, 0, 0}), cvec({0, 1, 1, 0})});
    steps[2] = Subspace::zero(4);
    return FilteredPhiModule(std::move(scal), std::move(f), std::move(steps));
}

} // namespace

TEST_CASE("filtration persistence convention") {
    FilteredPhiModule m = two_block_example(5);
    CHECK(m.fil(-3).is_full());
    CHECK(m.fil(0).is_full());
    CHECK(m.fil(1).dim() == 2);
    CHECK(m.fil(2).is_zero());
    CHECK(m.fil(9).is_zero());
    CHECK(m.first_level() == 1);
    CHECK(m.last_level() == 1);
    auto ht = m.hodge_tate_type();
    CHECK(ht.kind == HodgeTateKind::Type01);
    CHECK(ht.fil1_dim == 2);
}

TEST_CASE("t_H and t_N of the basic example") {
    FilteredPhiModule m = two_block_example(5);
    Subspace full = Subspace::full(4);
    CHECK(m.t_H(full) == 2);
    CHECK(m.t_N(full) == 2); // v_5(det phi) = v_5(25)
    Subspace d1 = Subspace::span(4, {cvec({1, 0, 0, 0}), cvec({0, 1, 0, 0})});
    REQUIRE(m.is_phi_stable(d1));
    CHECK(m.t_N(d1) == 1);
    CHECK(m.t_H(d1) == 1); // d1 cap Fil^1 = span(x1)
}

TEST_CASE("phi span is the smallest stable subspace containing the seed") {
    std::mt19937 rng(12);
    for (int iter = 0; iter < 100; ++iter) {
        FilteredPhiModule m = random_module(rng, Int(7), 4);
        Subspace seed = Subspace::span(4, {random_vector(rng, 4)});
        Subspace w = m.phi_span(seed);
        CHECK(m.is_phi_stable(w));
        CHECK(w.contains(seed));
        // minimality: span of iterated images of the seed vector equals w
        std::vector<std::vector<CycloElement>> iter_rows;
        auto v = seed.basis().row(0);
        for (int k = 0; k < 4; ++k) {
            iter_rows.push_back(v);
            v = m.frobenius().apply(v);
        }
        CHECK(Subspace::span(4, iter_rows) == w);
    }
}

TEST_CASE("t_N and t_H are additive in short exact sequences") {
    std::mt19937 rng(34);
    int done = 0;
    while (done < 200) {
        FilteredPhiModule m = random_module(rng, Int(5), 4);
        Subspace w = m.phi_span(Subspace::span(4, {random_vector(rng, 4)}));
        if (w.is_zero() || w.is_full()) continue;
        FilteredPhiModule sub = m.submodule(w);
        FilteredPhiModule quo = m.quotient(w);
        Subspace fw = Subspace::full(w.dim());
        Subspace fq = Subspace::full(4 - w.dim());
        CHECK(m.t_N(w) == sub.t_N(fw));
        CHECK(sub.t_N(fw) + quo.t_N(fq) == m.t_N(Subspace::full(4)));
        CHECK(m.t_H(w) == sub.t_H(fw));
        CHECK(sub.t_H(fw) + quo.t_H(fq) == m.t_H(Subspace::full(4)));
        ++done;
    }
}

TEST_CASE("duality and Tate twist identities") {
    std::mt19937 rng(56);
    for (int iter = 0; iter < 200; ++iter) {
        int dim = 2 + (iter % 3);
        FilteredPhiModule m = random_module(rng, Int(3), dim);
        Subspace full = Subspace::full(dim);
        FilteredPhiModule dual = m.dual();
        CHECK(dual.t_N(full) == -m.t_N(full));
        CHECK(dual.t_H(full) == -m.t_H(full));
        FilteredPhiModule tw = m.tate_twist();
        CHECK(tw.t_N(full) == m.t_N(full) + dim);
        CHECK(tw.t_H(full) == m.t_H(full) + dim);
        // double dual restores the invariants
        FilteredPhiModule dd = dual.dual();
        CHECK(dd.t_N(full) == m.t_N(full));
        CHECK(dd.t_H(full) == m.t_H(full));
        CHECK(dd.char_poly_exact() == m.char_poly_exact());
    }
}

TEST_CASE("char poly and phi semisimplicity") {
    FilteredPhiModule m = two_block_example(5);
    CHECK(m.char_poly() == ZPoly::of({25, 0, 10, 0, 1}));
    CHECK(m.is_phi_semisimple()); // (X^2+5)^2 with X^2+5 squarefree min poly
    CHECK(m.min_poly().degree() == 2);

    // a non-semisimple Frobenius: single Jordan block for eigenvalue 1
    ScalarContext scal(Int(5), 1);
    CMat j = cmat({{1, 1}, {0, 1}});
    std::map<int, Subspace> steps;
    steps[0] = Subspace::full(2);
    steps[1] = Subspace::zero(2);
    FilteredPhiModule jm(std::move(scal), std::move(j), std::move(steps));
    CHECK(!jm.is_phi_semisimple());
}

TEST_CASE("non-integer char poly is rejected on demand") {
    ScalarContext scal(Int(5), 1);
    CMat f = cmat({{1, 0}, {0, 1}});
    f.at(0, 0) = CycloElement(Rat(1, 2));
    std::map<int, Subspace> steps;
    steps[0] = Subspace::full(2);
    steps[1] = Subspace::zero(2);
    FilteredPhiModule m(std::move(scal), std::move(f), std::move(steps));
    CHECK_THROWS_AS(m.char_poly(), NonIntegerCharPoly);
}

TEST_CASE("stability check and quotient filtration") {
    FilteredPhiModule m = two_block_example(13);
    Subspace d1 = Subspace::span(4, {cvec({1, 0, 0, 0}), cvec({0, 1, 0, 0})});
    FilteredPhiModule q = m.quotient(d1);
    CHECK(q.dim() == 2);
    // image of Fil^1 in the quotient is the line spanned by y1 + x2 -> x2
    CHECK(q.fil(1).dim() == 1);
    CHECK(q.t_H(Subspace::full(2)) == 1);
    CHECK(q.t_N(Subspace::full(2)) == 1);
    Subspace not_stable = Subspace::span(4, {cvec({1, 0, 0, 0})});
    CHECK(!m.is_phi_stable(not_stable));
    CHECK_THROWS_AS(m.quotient(not_stable), NotStable);
}
