#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "polyarith.hpp"

using namespace fpmcert;

namespace {

/// Independent resultant oracle: Sylvester matrix determinant by fraction-free
/// Bareiss elimination over Z.
Int sylvester_resultant(const ZPoly& f, const ZPoly& g) {
    int m = f.degree(), n = g.degree();
    REQUIRE(m >= 0);
    REQUIRE(n >= 0);
    if (m == 0 && n == 0) return 1;
    int size = m + n;
    std::vector<std::vector<Rat>> a(size, std::vector<Rat>(size, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[i][i + j] = Rat(f.coeff(m - j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[n + i][i + j] = Rat(g.coeff(n - j));
    // the library follows res(f, g) = lc(g)^deg f * prod f(beta) over roots
    // beta of g, which differs from the Sylvester determinant by (-1)^(mn)
    bool negate = (m % 2) && (n % 2);
    // plain fraction-based Gaussian elimination; det of an integer matrix
    Rat det(1);
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < size; ++r) {
            Rat fac = a[r][col] / a[col][col];
            for (int c2 = col; c2 < size; ++c2) a[r][c2] -= fac * a[col][c2];
        }
    }
    det.canonicalize();
    REQUIRE(det.get_den() == 1);
    return negate ? Int(-det.get_num()) : det.get_num();
}

ZPoly random_zpoly(std::mt19937& rng, int max_deg, int bound) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> cd(-bound, bound);
    for (;;) {
        int d = dd(rng);
        std::vector<Int> c(d + 1);
        for (auto& x : c) x = Int(cd(rng));
        ZPoly p(c);
        if (!p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("polynomial ring basics") {
    ZPoly f = ZPoly::of({-1, 0, 1});  // X^2 - 1
    ZPoly g = ZPoly::of({1, 1});      // X + 1
    auto q = divide_exact(f, g);
    REQUIRE(q.has_value());
    CHECK(*q == ZPoly::of({-1, 1}));
    CHECK(!divide_exact(f, ZPoly::of({2, 1})).has_value());

    auto [quo, rem] = divmod_monic(ZPoly::of({1, 2, 3, 4}), ZPoly::of({1, 0, 1}));
    CHECK(quo * ZPoly::of({1, 0, 1}) + rem == ZPoly::of({1, 2, 3, 4}));
    CHECK(rem.degree() < 2);

    CHECK(squarefree_part(ZPoly::of({0, 0, 1})) == ZPoly::of({0, 1}));
    CHECK(ZPoly::of({4, 0, 1}).eval(Int(3)) == 13);
}

TEST_CASE("cyclotomic polynomials and euler phi") {
    CHECK(cyclotomic(1) == ZPoly::of({-1, 1}));
    CHECK(cyclotomic(2) == ZPoly::of({1, 1}));
    CHECK(cyclotomic(3) == ZPoly::of({1, 1, 1}));
    CHECK(cyclotomic(4) == ZPoly::of({1, 0, 1}));
    CHECK(cyclotomic(5) == ZPoly::of({1, 1, 1, 1, 1}));
    CHECK(cyclotomic(6) == ZPoly::of({1, -1, 1}));
    CHECK(cyclotomic(12) == ZPoly::of({1, 0, -1, 0, 1}));
    // product of Phi_d over d | n is X^n - 1
    for (int n : {1, 2, 6, 12, 30}) {
        ZPoly prod = ZPoly::of({1});
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        std::vector<Int> xn(n + 1, 0);
        xn[0] = -1;
        xn[n] = 1;
        CHECK(prod == ZPoly(xn));
    }
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);
    for (int n = 1; n <= 30; ++n) CHECK(cyclotomic(n).degree() == euler_phi(n));
}

TEST_CASE("primality and valuations") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
    CHECK(vp(Int(48), Int(2)) == 4);
    CHECK(vp(Rat(5, 8), Int(2)) == -3);
    CHECK(vp(Rat(50, 3), Int(5)) == 2);
}

TEST_CASE("newton polygon slopes are root valuations, ascending") {
    // X^2 + 5: both roots have valuation 1/2
    auto np = newton_polygon(ZPoly::of({5, 0, 1}), Int(5));
    CHECK(np.pure_slope(Rat(1, 2)));
    // X^2 - X + 5 (ordinary): valuations 0 and 1
    np = newton_polygon(ZPoly::of({5, -1, 1}), Int(5));
    REQUIRE(np.slopes.size() == 2);
    CHECK(np.slopes[0] == std::pair{Rat(0), 1});
    CHECK(np.slopes[1] == std::pair{Rat(1), 1});
    // (X^2+5)^2 * (X-5): slopes 1/2 (x4) then 1
    ZPoly h = ZPoly::of({5, 0, 1}) * ZPoly::of({5, 0, 1}) * ZPoly::of({-5, 1});
    np = newton_polygon(h, Int(5));
    REQUIRE(np.slopes.size() == 2);
    CHECK(np.slopes[0] == std::pair{Rat(1, 2), 4});
    CHECK(np.slopes[1] == std::pair{Rat(1), 1});
}

TEST_CASE("newton polygon slope multiset is multiplicative") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        Int p = (iter % 2) ? 2 : 7;
        ZPoly f = random_zpoly(rng, 4, 6);
        ZPoly g = random_zpoly(rng, 4, 6);
        if (f.coeff(0) == 0 || g.coeff(0) == 0) continue; // nonzero constant term
        auto collect = [&](const ZPoly& h) {
            std::map<Rat, int> ms;
            for (auto& [s, k] : newton_polygon(h, p).slopes) ms[s] += k;
            return ms;
        };
        auto mf = collect(f), mg = collect(g), mfg = collect(f * g);
        for (auto& [s, k] : mg) mf[s] += k;
        CHECK(mf == mfg);
    }
}

TEST_CASE("sturm root counting with surd endpoints") {
    // g = X^2 - 5 has both roots in [-2*sqrt(2), 2*sqrt(2)] (since 8 > 5)
    ZPoly g = ZPoly::of({-5, 0, 1});
    CHECK(sturm_roots_in_interval(g, Endpoint::surd(Rat(-2), 2), Endpoint::surd(Rat(2), 2)) == 2);
    // ... but not in [-2*sqrt(1), 2*sqrt(1)]
    CHECK(sturm_roots_in_interval(g, Endpoint::rational(Rat(-2)), Endpoint::rational(Rat(2))) == 0);
    // whole line
    CHECK(sturm_roots_in_interval(g, Endpoint::neg_inf(), Endpoint::pos_inf()) == 2);
    // interval is half-open (lo, hi]: root at hi counts, root at lo does not
    ZPoly lin = ZPoly::of({-2, 1}); // X - 2
    CHECK(sturm_roots_in_interval(lin, Endpoint::rational(Rat(0)), Endpoint::rational(Rat(2))) == 1);
    CHECK(sturm_roots_in_interval(lin, Endpoint::rational(Rat(2)), Endpoint::rational(Rat(4))) == 0);
    // X^3 - 2X: roots -sqrt(2), 0, sqrt(2)
    ZPoly c = ZPoly::of({0, -2, 0, 1});
    CHECK(sturm_roots_in_interval(c, Endpoint::rational(Rat(-1)), Endpoint::rational(Rat(1))) == 1);
    CHECK(sturm_roots_in_interval(c, Endpoint::neg_inf(), Endpoint::pos_inf()) == 3);
}

TEST_CASE("resultant convention and special values") {
    // res(X - a, X - b) = b - a
    CHECK(resultant(ZPoly::of({-3, 1}), ZPoly::of({-7, 1})) == 4);
    CHECK(resultant(ZPoly::of({-7, 1}), ZPoly::of({-3, 1})) == -4);
    // res(f, g) = 0 iff common root
    CHECK(resultant(ZPoly::of({-1, 0, 1}), ZPoly::of({-1, 1})) == 0);
    CHECK(resultant(ZPoly::of({1, 0, 1}), ZPoly::of({1, 1, 1})) != 0);
}

TEST_CASE("resultant agrees with the Sylvester determinant oracle") {
    std::mt19937 rng(987654);
    int checked = 0;
    while (checked < 250) {
        ZPoly f = random_zpoly(rng, 5, 9);
        ZPoly g = random_zpoly(rng, 5, 9);
        if (f.degree() < 1 || g.degree() < 1) continue;
        CHECK(resultant(f, g) == sylvester_resultant(f, g));
        ++checked;
    }
}
