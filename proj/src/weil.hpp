#pragma once

#include <optional>

#include "polyarith.hpp"

namespace fpmcert {

enum class WeilFailure {
    NotMonic,
    OddDegree,
    OddX2pMultiplicity,
    FunctionalEquationFails,
    RealRootsEscape,
};

const char* to_string(WeilFailure f);

struct WeilVerdict {
    bool is_weil = false;
    int x2_minus_p_multiplicity = 0;
    ZPoly real_weil_polynomial; // the transform g with h1(X) = X^e g(X + p/X)
    std::optional<WeilFailure> failure_reason;
};

/// Decides whether h is a p-Weil polynomial: monic, even degree, even
/// multiplicity of X^2 - p, functional equation on the quotient, and all
/// roots of the real transform g in [-2*sqrt(p), 2*sqrt(p)] (exact Sturm
/// counting with squared endpoint comparisons).
WeilVerdict is_weil(const ZPoly& h, const Int& p);

struct SupersingularVerdict {
    bool is_supersingular = false;
    std::vector<std::pair<Rat, int>> slopes; // (slope, multiplicity)
};

/// Pure Newton slope 1/2 test; requires is_weil(h, p), throws NotWeil otherwise.
SupersingularVerdict is_supersingular(const ZPoly& h, const Int& p);

/// p^d * Phi_n(X^2 / p) expanded in Z[X], d = phi(n). With require_split,
/// throws NotSplit unless p = 1 mod n (the module construction needs that).
ZPoly cyclotomic_weil_family(int n, const Int& p, bool require_split = false);

} // namespace fpmcert
