#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace fpmcert {

using Int = mpz_class;
using Rat = mpq_class;

/// Univariate polynomial with exact integer coefficients, lowest degree first.
/// The zero polynomial is the empty coefficient vector.
struct ZPoly {
    std::vector<Int> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static ZPoly constant(const Int& v);
    static ZPoly monomial(int deg, const Int& lead = 1);
    static ZPoly of(std::initializer_list<long> coeffs); // lowest degree first

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const Int& coeff(int i) const;
    const Int& lead() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    ZPoly derivative() const;
    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c == b.c; }

    std::string to_string() const; // "X^4+7*X^2+49" style, for reports and errors
};

/// Exact division a / b; returns nullopt when b does not divide a in Z[X].
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

/// Quotient and remainder by a monic divisor (exact in Z[X]).
std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b);

/// Rational polynomial, lowest degree first, used by Sturm chains.
struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    explicit QPoly(const ZPoly& z);

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rat eval(const Rat& x) const;
    QPoly derivative() const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(const QPoly& a, const QPoly& b); // monic gcd
QPoly squarefree_part(const QPoly& a);
ZPoly squarefree_part(const ZPoly& a); // primitive squarefree part

/// Lower convex hull of {(i, v_p(c_i)) : c_i != 0} with its slope multiset.
struct NewtonPolygon {
    std::vector<std::pair<int, Int>> vertices;    // (abscissa, valuation)
    std::vector<std::pair<Rat, int>> slopes;      // (slope, multiplicity), ascending
    bool pure_slope(const Rat& s) const;
};

NewtonPolygon newton_polygon(const ZPoly& h, const Int& p);
/// Same hull construction from precomputed points (abscissa, valuation),
/// abscissae strictly increasing. Used when coefficients live in Q(zeta_n)
/// and valuations come through the embedding.
NewtonPolygon newton_polygon_points(const std::vector<std::pair<int, Int>>& pts);

/// nth cyclotomic polynomial, by exact division of X^n - 1 by lower ones.
ZPoly cyclotomic(int n);

int euler_phi(int n);
bool is_prime(const Int& n);
Int vp(const Int& x, const Int& p);  // requires x != 0
Rat vp(const Rat& x, const Int& p);  // requires x != 0

/// Endpoint of a real interval: -inf, +inf, a rational, or an exact
/// quadratic surd c*sqrt(m) (m >= 0), so bounds like 2*sqrt(p) need no
/// floating point.
struct Endpoint {
    enum class Kind { NegInf, PosInf, Rational, Surd } kind;
    Rat q;   // Rational value, or the coefficient c of c*sqrt(m)
    Int m{0};

    static Endpoint neg_inf() { return {Kind::NegInf, 0, 0}; }
    static Endpoint pos_inf() { return {Kind::PosInf, 0, 0}; }
    static Endpoint rational(const Rat& v) { return {Kind::Rational, v, 0}; }
    static Endpoint surd(const Rat& coeff, const Int& rad) { return {Kind::Surd, coeff, rad}; }
};

/// Sign of g at an endpoint (for +-inf: sign of the leading behaviour).
int sign_at(const QPoly& g, const Endpoint& e);

/// Number of distinct real roots of g in (lo, hi], by Sturm sign counting.
int sturm_roots_in_interval(const ZPoly& g, const Endpoint& lo, const Endpoint& hi);

/// Resultant via the subresultant polynomial remainder sequence.
Int resultant(const ZPoly& f, const ZPoly& g);

} // namespace fpmcert
