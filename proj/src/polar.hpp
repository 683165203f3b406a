#pragma once

#include <optional>

#include "filphi.hpp"

namespace fpmcert {

/// Matrix of an antisymmetric p-similitude delta: D* -> D over dual/primal
/// bases, with Fil^1 totally isotropic.
struct PolarizationWitness {
    CMat delta;
    int solution_space_dim;
};

struct PolarizationResult {
    enum class Status { Witness, NoneFound, GridExhausted } status;
    std::optional<PolarizationWitness> witness;
    std::string certificate; // NoneFound: why no invertible solution exists
    int solution_space_dim = 0;
};

/// Basis of the linear space {Delta : Delta^T = -Delta, F Delta F^T = p Delta,
/// Delta . ann(Fil^1) contained in Fil^1}, exact over Q(zeta_n).
std::vector<CMat> similitude_solution_space(const FilteredPhiModule& m);

/// Search the solution space for an invertible element on the integer grid
/// {0..dim}^s (sufficient for the degree-<=dim determinant form); NoneFound
/// carries a det-vanishes-identically certificate.
PolarizationResult find_polarization(const FilteredPhiModule& m, int dim_cap = 8);

/// Full witness re-verification from raw module data, independent of the
/// solver: antisymmetry, p-similitude relation, isotropy (with equality
/// delta((Fil^1)^perp) = Fil^1 when dim Fil^1 = dim/2), invertibility.
bool verify_polarization(const FilteredPhiModule& m, const CMat& delta);

/// Dimension cross-check of the dagger involution alpha -> delta alpha^T
/// delta^{-1} on the phi-commutant: its fixed space must match the space of
/// antisymmetric p-similitudes without the filtration constraint.
bool dagger_dimension_check(const FilteredPhiModule& m, const CMat& delta);

} // namespace fpmcert
