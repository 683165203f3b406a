#include "weil.hpp"

namespace fpmcert {

const char* to_string(WeilFailure f) {
    switch (f) {
        case WeilFailure::NotMonic: return "NotMonic";
        case WeilFailure::OddDegree: return "OddDegree";
        case WeilFailure::OddX2pMultiplicity: return "OddX2pMultiplicity";
        case WeilFailure::FunctionalEquationFails: return "FunctionalEquationFails";
        case WeilFailure::RealRootsEscape: return "RealRootsEscape";
    }
    return "?";
}

static Int int_pow(const Int& p, int e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

WeilVerdict is_weil(const ZPoly& h, const Int& p) {
    WeilVerdict v;
    if (h.is_zero() || !h.is_monic()) {
        v.failure_reason = WeilFailure::NotMonic;
        return v;
    }
    if (h.degree() % 2 != 0) {
        v.failure_reason = WeilFailure::OddDegree;
        return v;
    }
    // divide out the maximal power of X^2 - p
    ZPoly x2p = ZPoly::monomial(2) - ZPoly::constant(p);
    ZPoly h1 = h;
    int m = 0;
    for (;;) {
        auto q = divide_exact(h1, x2p);
        if (!q) break;
        h1 = *q;
        ++m;
    }
    v.x2_minus_p_multiplicity = m;
    if (m % 2 != 0) {
        v.failure_reason = WeilFailure::OddX2pMultiplicity;
        return v;
    }
    int e = h1.degree() / 2;
    // functional equation X^(2e) h1(p/X) = p^e h1(X): c_j = p^(e-j) c_(2e-j)
    for (int j = 0; j < e; ++j) {
        if (h1.coeff(j) != int_pow(p, e - j) * h1.coeff(2 * e - j)) {
            v.failure_reason = WeilFailure::FunctionalEquationFails;
            return v;
        }
    }
    // real Weil transform: peel b_k * X^(e-k) * (X^2+p)^k from the top
    ZPoly r = h1, g;
    g.c.assign(e + 1, 0);
    ZPoly x2pp = ZPoly::monomial(2) + ZPoly::constant(p);
    for (int k = e; k >= 0; --k) {
        Int bk = r.coeff(e + k);
        g.c[k] = bk;
        if (bk != 0) {
            ZPoly term = ZPoly::constant(bk) * ZPoly::monomial(e - k);
            ZPoly pw = ZPoly::constant(1);
            for (int i = 0; i < k; ++i) pw = pw * x2pp;
            r = r - term * pw;
        }
    }
    g.trim();
    if (!r.is_zero()) {
        // cannot happen once the functional equation holds
        v.failure_reason = WeilFailure::FunctionalEquationFails;
        return v;
    }
    v.real_weil_polynomial = g;
    if (g.degree() > 0) {
        ZPoly s = squarefree_part(g);
        Endpoint lo = Endpoint::surd(Rat(-2), p), hi = Endpoint::surd(Rat(2), p);
        int total = sturm_roots_in_interval(s, Endpoint::neg_inf(), Endpoint::pos_inf());
        int inside = sturm_roots_in_interval(s, lo, hi);
        bool boundary_root = sign_at(QPoly(s), lo) == 0 || sign_at(QPoly(s), hi) == 0;
        if (total != s.degree() || inside != total || boundary_root) {
            // a root at exactly +-2*sqrt(p) would come from (X^2-p)^2,
            // already divided out, so boundary roots are also failures
            v.failure_reason = WeilFailure::RealRootsEscape;
            return v;
        }
    }
    v.is_weil = true;
    return v;
}

SupersingularVerdict is_supersingular(const ZPoly& h, const Int& p) {
    WeilVerdict w = is_weil(h, p);
    if (!w.is_weil)
        throw NotWeil(h.to_string() + " is not a " + p.get_str() + "-Weil polynomial (" +
                      to_string(*w.failure_reason) + ")");
    SupersingularVerdict v;
    NewtonPolygon np = newton_polygon(h, p);
    v.slopes = np.slopes;
    v.is_supersingular = np.pure_slope(Rat(1, 2));
    return v;
}

ZPoly cyclotomic_weil_family(int n, const Int& p, bool require_split) {
    if (n < 3) throw ArithmeticError("cyclotomic Weil family needs order n >= 3");
    if (require_split && (p - 1) % n != 0)
        throw NotSplit("p = " + p.get_str() + " is not 1 mod " + std::to_string(n));
    ZPoly phi = cyclotomic(n);
    int d = phi.degree();
    ZPoly h;
    h.c.assign(2 * d + 1, 0);
    for (int i = 0; i <= d; ++i) h.c[2 * i] = phi.c[i] * int_pow(p, d - i);
    h.trim();
    return h;
}

} // namespace fpmcert
