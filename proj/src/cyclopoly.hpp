#pragma once

#include "cyclo.hpp"

namespace fpmcert {

/// Univariate polynomial over Q(zeta_n), lowest degree first.
struct CPoly {
    std::vector<CycloElement> c;

    CPoly() = default;
    explicit CPoly(std::vector<CycloElement> coeffs) : c(std::move(coeffs)) { trim(); }
    explicit CPoly(const ZPoly& z, int n = 1);

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const CycloElement& lead() const { return c.back(); }
    bool is_monic() const;
    CPoly monic() const;

    CPoly derivative() const;
    CycloElement eval(const CycloElement& x) const;

    /// Lower to Z[X]; throws NonIntegerCharPoly when a coefficient is not a
    /// rational integer.
    ZPoly to_zpoly() const;
    bool has_rational_integer_coeffs() const;

    friend CPoly operator+(const CPoly& a, const CPoly& b);
    friend CPoly operator-(const CPoly& a, const CPoly& b);
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    friend bool operator==(const CPoly& a, const CPoly& b);

    std::string to_string() const;
};

std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b);
CPoly gcd(const CPoly& a, const CPoly& b); // monic
CPoly squarefree_part(const CPoly& a);
CPoly cpoly_pow(const CPoly& a, int e);

} // namespace fpmcert
