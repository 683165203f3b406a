#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyarith.hpp"

namespace fpmcert {

/// Exact element of Q(zeta_n), stored as the canonical representative
/// modulo Phi_n: coefficients of 1, zeta, ..., zeta^(phi(n)-1).
/// n = 1 gives plain rationals. All arithmetic is exact.
class CycloElement {
public:
    CycloElement() : n_(1), c_(1, Rat(0)) {}
    explicit CycloElement(const Rat& r, int n = 1);
    static CycloElement zeta(int n); // the generator zeta_n
    static CycloElement from_coeffs(int n, std::vector<Rat> coeffs);

    int order() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()

    CycloElement promoted(int n) const; // reinterpret in Q(zeta_n), n_ | n

    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator/(const CycloElement& a, const CycloElement& b);
    friend bool operator==(const CycloElement& a, const CycloElement& b);
    CycloElement& operator+=(const CycloElement& b) { return *this = *this + b; }
    CycloElement& operator-=(const CycloElement& b) { return *this = *this - b; }
    CycloElement& operator*=(const CycloElement& b) { return *this = *this * b; }

    CycloElement inverse() const;
    CycloElement pow(long e) const;

    /// Total order on elements of a fixed Q(zeta_n), for deterministic
    /// tie-breaking in witness searches (lexicographic on coefficients).
    int compare(const CycloElement& b) const;

    std::string to_string() const; // exact, e.g. "1/2 + 3*z^2"

private:
    int n_;
    std::vector<Rat> c_; // length phi(n), reduced mod Phi_n
    static void align(CycloElement& a, CycloElement& b);
};

/// Hensel-lifted embedding of Q(zeta_n) into Q_p (requires p = 1 mod n):
/// zeta_n maps to the canonical root of Phi_n in Z_p, lifted from the
/// smallest positive residue of exact order n mod p.
class PadicEmbedding {
public:
    PadicEmbedding(const Int& p, int n, int precision);

    const Int& prime() const { return p_; }
    int order() const { return n_; }
    int precision() const { return prec_; }
    const Int& root() const { return root_; }          // in [0, p^prec)
    const Int& modulus() const { return pN_; }          // p^prec

    PadicEmbedding with_precision(int precision) const;

private:
    Int p_;
    int n_;
    int prec_;
    Int root_;
    Int pN_;
};

PadicEmbedding hensel_root(const Int& p, int n, int precision);

constexpr int kDefaultPrecision = 32;
constexpr int kMaxPrecision = 4096;

/// Capped-precision p-adic value with an exact valuation claim.
/// valuation == nullopt encodes a certified zero (+infinity).
struct PadicApprox {
    std::optional<Int> valuation;
    Int unit{0}; // unit part mod p^N; meaningless when valuation is nullopt

    bool is_zero() const { return !valuation.has_value(); }
};

/// Image of x under the embedding. Throws PrecisionExhausted when the image
/// vanishes mod p^N without an exact-zero certificate, DenominatorAtP when a
/// coefficient denominator is divisible by p.
PadicApprox embed(const CycloElement& x, const PadicEmbedding& e);

/// Exact p-adic valuation of the embedded element; nullopt for x == 0.
/// Always terminates: precision is raised internally up to the norm-resultant
/// bound before concluding.
std::optional<Int> valuation(const CycloElement& x, const PadicEmbedding& e);

} // namespace fpmcert
