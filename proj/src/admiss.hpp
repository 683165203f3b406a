#pragma once

#include <optional>

#include "filphi.hpp"

namespace fpmcert {

enum class LatticeKind { FiniteLattice, PureSlopeHalfFamilies, Unsupported };
const char* to_string(LatticeKind k);

/// One irreducible-over-Q_p factor of the characteristic polynomial, with
/// its isotypic component.
struct StableFactor {
    CPoly poly;         // coefficients in Q(zeta_n), irreducible over Q_p
    int multiplicity;
    Rat slope;
    Subspace component; // kernel of poly(phi)^multiplicity
};

struct StableStructure {
    std::vector<StableFactor> factors;
    LatticeKind lattice_kind;
};

/// Isotypic decomposition from the factorization of char_poly over Q_p.
/// Factors are found among exactly representable candidates (linear and
/// quadratic integer polynomials, X^2 - zeta_n^e p) and certified
/// irreducible over Q_p; anything outside throws FactorizationUnsupported.
StableStructure stable_structure(const FilteredPhiModule& m);

enum class Verdict3 { Yes, No, Unknown };

struct AdmissibilityVerdict {
    enum class Status { Admissible, Inadmissible, Unknown } status;
    std::optional<Subspace> witness; // phi-stable with t_H > t_N, re-verified
    std::string checked_families;
};

AdmissibilityVerdict is_admissible(const FilteredPhiModule& m);

struct SubobjectList {
    std::vector<Subspace> members;  // explicit members, deterministic order
    bool positive_dimensional_family = false;
};

/// All phi-stable W with t_H(W) = t_N(W) (finite lattice), or explicit
/// pencil members plus a family flag for the pure-slope-1/2 case.
SubobjectList subobjects(const FilteredPhiModule& m);

struct SplitVerdict {
    enum class Status { Splits, NonSplit, Unknown } status;
    std::optional<Subspace> complement_witness;
    std::string obstruction;
};

SplitVerdict is_split(const FilteredPhiModule& m, const Subspace& w);

struct SemisimplicityVerdict {
    enum class Status { Semisimple, NotSemisimple, Unknown } status;
    std::vector<Subspace> decomposition;       // simple subobjects, when Semisimple
    std::optional<Subspace> obstruction_witness; // subobject with no complement
    std::string obstruction;
};

SemisimplicityVerdict is_semisimple(const FilteredPhiModule& m);

/// Re-verifies a Splits witness through filphi operations only (independent
/// of the search path).
bool verify_split_witness(const FilteredPhiModule& m, const Subspace& w, const Subspace& c);

/// Square test in Q_p, exact via the embedding (used by the quadratic
/// irreducibility certificates).
bool is_square_in_qp(const CycloElement& x, const ScalarContext& scal);

} // namespace fpmcert
