#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "weil.hpp"

using namespace fpmcert;

namespace {

/// Independent supersingularity oracle, no Newton polygons involved.
///
/// Write h(X) = A(X^2) + X B(X^2). The even polynomial
/// u(Y) = A(pY)^2 - pY B(pY)^2 is, up to a nonzero constant, the product of
/// (Y - alpha^2/p) over the roots alpha of h. All roots of h have absolute
/// value sqrt(p) in every complex embedding, so h is supersingular (all
/// alpha/sqrt(p) roots of unity) exactly when every root of u is a root of
/// unity, i.e. when the squarefree part of u divides a product of cyclotomic
/// polynomials. deg u <= deg h, so only Phi_n with phi(n) <= deg h can occur
/// (n <= 30 suffices for degree <= 8: phi(n) > 8 for all n > 30).
bool supersingular_oracle(const ZPoly& h, const Int& p) {
    int d = h.degree();
    std::vector<Int> a, b;
    for (int i = 0; i <= d; i += 2) a.push_back(h.coeff(i));
    for (int i = 1; i <= d; i += 2) b.push_back(h.coeff(i));
    auto subst_py = [&](const std::vector<Int>& c) {
        // c(Y) -> c(pY)
        std::vector<Int> out(c.size());
        Int pk = 1;
        for (size_t i = 0; i < c.size(); ++i) {
            out[i] = c[i] * pk;
            pk *= p;
        }
        return ZPoly(out);
    };
    ZPoly ap = subst_py(a), bp = subst_py(b);
    ZPoly u = ap * ap - ZPoly::of({0, 1}) * bp * bp * ZPoly::constant(p);
    REQUIRE(!u.is_zero());
    ZPoly rest = squarefree_part(u);
    for (int n = 1; n <= 30 && rest.degree() > 0; ++n) {
        ZPoly phi = cyclotomic(n);
        for (;;) {
            auto q = divide_exact(rest, phi);
            if (!q.has_value()) break;
            rest = *q;
        }
    }
    return rest.degree() == 0;
}

} // namespace

TEST_CASE("weil verdicts on hand-checked polynomials") {
    // X^2 + 5: roots +-i sqrt(5), |alpha| = sqrt(5)
    CHECK(is_weil(ZPoly::of({5, 0, 1}), 5).is_weil);
    // X^2 - X + 5: Frobenius of an elliptic curve over F_5 (a_1 = 1)
    CHECK(is_weil(ZPoly::of({5, -1, 1}), 5).is_weil);
    // X^2 - 5X + 5: |a_1| = 5 > 2 sqrt(5) fails the root bound
    auto v = is_weil(ZPoly::of({5, -5, 1}), 5);
    CHECK(!v.is_weil);
    CHECK(v.failure_reason == WeilFailure::RealRootsEscape);
    // boundary case a_1 = 2 sqrt(p) is only integral for square p; for p = 2,
    // X^2 - 3X + 2 has roots 1, 2 of absolute value != sqrt(2)
    CHECK(!is_weil(ZPoly::of({2, -3, 1}), 2).is_weil);
    // odd degree
    auto odd = is_weil(ZPoly::of({5, 0, 0, 1}), 5);
    CHECK(!odd.is_weil);
    CHECK(odd.failure_reason == WeilFailure::OddDegree);
    // not monic
    CHECK(is_weil(ZPoly::of({5, 0, 2}), 5).failure_reason == WeilFailure::NotMonic);
    // functional equation: X^4 + X^2 + 25 has constant 25 = p^2 but the
    // coefficient symmetry c_1 = p * c_3 fails... build a genuine failure:
    // (X^2+5)(X^2+1) has roots of absolute value 1
    CHECK(!is_weil(ZPoly::of({5, 0, 6, 0, 1}), 5).is_weil);
    // odd multiplicity of X^2 - p
    auto om = is_weil(ZPoly::of({-5, 0, 1}) * ZPoly::of({5, 0, 1}), 5);
    CHECK(!om.is_weil);
    CHECK(om.failure_reason == WeilFailure::OddX2pMultiplicity);
    // even multiplicity of X^2 - p is fine: (X^2-5)^2
    CHECK(is_weil(ZPoly::of({-5, 0, 1}) * ZPoly::of({-5, 0, 1}), 5).is_weil);
}

TEST_CASE("supersingular verdicts on the named corpus") {
    struct Case {
        ZPoly h;
        long p;
        bool weil, ss;
    };
    ZPoly x2p5 = ZPoly::of({5, 0, 1});
    std::vector<Case> corpus = {
        {ZPoly::of({2, 0, 1}), 2, true, true},            // X^2 + 2
        {ZPoly::of({3, 0, 1}), 3, true, true},            // X^2 + 3
        {ZPoly::of({2, 2, 1}), 2, true, true},            // X^2 + 2X + 2
        {ZPoly::of({2, -2, 1}), 2, true, true},           // X^2 - 2X + 2
        {ZPoly::of({3, 3, 1}), 3, true, true},            // X^2 + 3X + 3
        {ZPoly::of({3, -3, 1}), 3, true, true},           // X^2 - 3X + 3
        {x2p5 * x2p5, 5, true, true},                     // (X^2+5)^2
        {x2p5 * x2p5 * x2p5, 5, true, true},              // (X^2+5)^3
        {x2p5 * x2p5 * x2p5 * x2p5, 5, true, true},       // (X^2+5)^4
        {ZPoly::of({49, 0, 7, 0, 1}), 7, true, true},     // X^4 + 7X^2 + 49
        {ZPoly::of({169, 0, 13, 0, 1}), 13, true, true},  // X^4 + 13X^2 + 169
        {ZPoly::of({169, 0, -13, 0, 1}), 13, true, true}, // X^4 - 13X^2 + 169
        {ZPoly::of({25, 0, 0, 0, 1}), 5, true, true},     // X^4 + 25
        {cyclotomic_weil_family(5, 11), 11, true, true},  // 11^4 Phi_5(X^2/11)
        {ZPoly::of({5, -1, 1}), 5, true, false},          // ordinary elliptic
        {ZPoly::of({7, 1, 1}), 7, true, false},           // ordinary elliptic
        {ZPoly::of({1, 1, 1}), 5, false, false},          // roots on unit circle
    };
    for (const auto& c : corpus) {
        CAPTURE(c.h.to_string());
        auto w = is_weil(c.h, c.p);
        CHECK(w.is_weil == c.weil);
        if (!c.weil) {
            CHECK_THROWS_AS(is_supersingular(c.h, c.p), NotWeil);
            continue;
        }
        auto s = is_supersingular(c.h, c.p);
        CHECK(s.is_supersingular == c.ss);
        CHECK(s.is_supersingular == supersingular_oracle(c.h, c.p));
        if (c.ss) {
            REQUIRE(s.slopes.size() == 1);
            CHECK(s.slopes[0].first == Rat(1, 2));
            CHECK(s.slopes[0].second == c.h.degree());
        }
    }
}

TEST_CASE("supersingular test agrees with the cyclotomic oracle on random Weil quadratics") {
    // all integer quadratics X^2 + aX + p with a^2 <= 4p are Weil; the
    // supersingular ones are exactly those with p | a
    for (long p : {2, 3, 5, 7, 11, 13}) {
        long bound = 2;
        while (bound * bound <= 4 * p) ++bound;
        --bound;
        for (long a = -bound; a <= bound; ++a) {
            ZPoly h = ZPoly::of({p, a, 1});
            auto w = is_weil(h, p);
            REQUIRE(w.is_weil);
            auto s = is_supersingular(h, p);
            CHECK(s.is_supersingular == supersingular_oracle(h, p));
            CHECK(s.is_supersingular == (a % p == 0));
        }
    }
}

TEST_CASE("random products of Weil quadratics stay Weil and supersingular iff all factors are") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        long p = std::vector<long>{2, 3, 5, 7}[iter % 4];
        long bound = 2;
        while (bound * bound <= 4 * p) ++bound;
        --bound;
        std::uniform_int_distribution<long> ad(-bound, bound);
        std::uniform_int_distribution<int> kd(1, 3);
        int k = kd(rng);
        ZPoly h = ZPoly::of({1});
        bool all_ss = true;
        for (int i = 0; i < k; ++i) {
            long a = ad(rng);
            h = h * ZPoly::of({p, a, 1});
            if (a % p != 0) all_ss = false;
        }
        auto w = is_weil(h, p);
        CHECK(w.is_weil);
        auto s = is_supersingular(h, p);
        CHECK(s.is_supersingular == all_ss);
        CHECK(s.is_supersingular == supersingular_oracle(h, p));
    }
}

TEST_CASE("cyclotomic weil family expansion") {
    // p^2 Phi_4(X^2/p) = X^4 + p^2
    CHECK(cyclotomic_weil_family(4, 13) == ZPoly::of({169, 0, 0, 0, 1}));
    // p^2 Phi_3(X^2/p) = X^4 + pX^2 + p^2
    CHECK(cyclotomic_weil_family(3, 7) == ZPoly::of({49, 0, 7, 0, 1}));
    // p^2 Phi_6(X^2/p) = X^4 - pX^2 + p^2
    CHECK(cyclotomic_weil_family(6, 7) == ZPoly::of({49, 0, -7, 0, 1}));
    // phi(5) = 4: 11^4 Phi_5(X^2/11) is monic of degree 8
    ZPoly f5 = cyclotomic_weil_family(5, 11);
    CHECK(f5.degree() == 8);
    CHECK(f5.is_monic());
    CHECK(f5.coeff(0) == Int(14641));
    // the split requirement
    CHECK_THROWS_AS(cyclotomic_weil_family(3, 5, true), NotSplit);
    CHECK(cyclotomic_weil_family(3, 7, true) == cyclotomic_weil_family(3, 7));
}
