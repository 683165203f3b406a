#pragma once

#include "json.hpp"

#include "catalog.hpp"
#include "config.hpp"

namespace fpmcert {

/// Full certification pipeline: condition (1) (semisimple Frobenius +
/// supersingular Weil char poly), condition (2) (Hodge-Tate type (0,1)),
/// admissibility, subobjects/splitting/semisimplicity, condition (3)
/// (polarization form). Deterministic; stage failures become entries of the
/// report's "errors" array, never silent omissions.
nlohmann::ordered_json run_pipeline(const FilteredPhiModule& m);

/// Pipeline plus the entry's asserted facts compared against the computed
/// verdicts (the "paper_claims" report section; disputed claims are marked,
/// never suppressed).
nlohmann::ordered_json run_pipeline_entry(const CatalogEntry& entry);

/// Human-readable summary of a report.
std::string report_text(const nlohmann::ordered_json& report);

/// Independent witness checker: re-verifies every witness embedded in the
/// report (inadmissibility witnesses, splitting complements, semisimple
/// decompositions, polarization delta) against the module rebuilt from the
/// config, through filphi/polar verification entry points only.
nlohmann::ordered_json verify_report(const FilteredPhiModule& m,
                                     const nlohmann::ordered_json& report);

// serialization helpers shared with tests and the C API
nlohmann::ordered_json scalar_json(const CycloElement& x);
CycloElement scalar_from_json(const nlohmann::json& v, int n);
nlohmann::ordered_json subspace_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& v, int dim, int n);

} // namespace fpmcert
