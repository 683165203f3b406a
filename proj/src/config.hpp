#pragma once

#include <map>
#include <string>

#include "filphi.hpp"

namespace fpmcert {

/// Parsed module description. Matrix and basis entries are expressions over
/// integer literals, "p" and "z" (z = zeta_{cyclo_order}) with + - * / ^ and
/// parentheses, reduced to canonical CycloElements at parse time.
struct ModuleConfig {
    Int prime;
    int cyclo_order = 1;
    int precision = kDefaultPrecision;
    std::vector<std::vector<CycloElement>> frobenius;
    std::map<int, std::vector<std::vector<CycloElement>>> filtration; // level -> basis vectors
};

/// Strict parse of the JSON config text: missing or unknown fields are
/// SchemaErrors, malformed JSON or expressions are ParseErrors, z with
/// cyclo_order 1 and division by zero are ArithmeticErrors.
ModuleConfig parse_config(const std::string& text);

FilteredPhiModule build_module(const ModuleConfig& cfg);

/// Single scalar expression -> element of Q(zeta_n) (exposed for tests).
CycloElement parse_entry(const std::string& expr, const Int& p, int n);

/// Canonical expression string for a scalar, parseable by parse_entry.
std::string entry_string(const CycloElement& x);

/// Config JSON for an explicit module (used by the catalog subcommand; the
/// round trip parse_config(emit_config(m)) rebuilds the identical module).
std::string emit_config(const FilteredPhiModule& m);

} // namespace fpmcert
