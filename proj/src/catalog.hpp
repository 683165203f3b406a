#pragma once

#include <optional>

#include "filphi.hpp"
#include "weil.hpp"

namespace fpmcert {

/// A fact asserted by the source construction, carried alongside the module
/// so reports can compare computed verdicts against it. `disputed` marks
/// claims the tool is expected to contradict (surfaced, never suppressed).
struct ExpectedFact {
    std::string key;
    std::string value;
    bool disputed = false;
};

struct CatalogEntry {
    std::string name;
    Int p;
    int n = 1;
    std::string params;
    FilteredPhiModule module;
    std::vector<ExpectedFact> expected;
};

/// Two companion blocks of X^2+p with Fil^1 = span(x1, y1+x2); char poly
/// (X^2+p)^2.
CatalogEntry example_ss_square(const Int& p, int precision = kDefaultPrecision);

/// Blocks of X^2 - zeta_3 p and X^2 - zeta_3^{-1} p, same filtration shape;
/// char poly X^4 + p X^2 + p^2. Requires p = 1 mod 3.
CatalogEntry example_simple_ss(const Int& p, int precision = kDefaultPrecision);

enum class VariantKind { Zeta6, Zeta4 };

/// zeta_6 / zeta_4 variants of example_simple_ss; char poly X^4 - p X^2 + p^2
/// resp. X^4 + p^2.
CatalogEntry example_variant(const Int& p, VariantKind kind, int precision = kDefaultPrecision);

/// dim 2*phi(n) module with blocks X^2 - zeta_n^{e} p over the units e of
/// Z/n (ascending, so block j pairs with block d+1-j via e -> -e) and the
/// chain-linking filtration span(x1, y1+x2, ..., y_{d-1}+x_d).
CatalogEntry example_cyclotomic(int n, const Int& p, int precision = kDefaultPrecision);

/// Blocks companion to X^2+a1 X+p and X^2+a2 X+p (both supersingular Weil
/// quadratics, a1 != a2) with the non-split filtration.
CatalogEntry remark_distinct_curves(const Int& p, const Int& a1, const Int& a2,
                                    int precision = kDefaultPrecision);

/// m companion blocks of X^2+p with the chain-linking filtration; char poly
/// (X^2+p)^m.
CatalogEntry example_nfold(const Int& p, int m, int precision = kDefaultPrecision);

/// Dispatch by name ("ss-square", "simple-ss", "zeta6", "zeta4",
/// "cyclotomic", "distinct-curves", "nfold") with parameters as used by the
/// CLI; throws SchemaError for unknown names or missing parameters.
struct CatalogParams {
    Int p;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<Int> a1, a2;
    int precision = kDefaultPrecision;
};
CatalogEntry catalog_entry(const std::string& name, const CatalogParams& params);
std::vector<std::string> catalog_names();

} // namespace fpmcert
