#pragma once

#include <map>

#include "matrix.hpp"

namespace fpmcert {

/// Scalar field context: entries live in Q(zeta_n), valuations are taken
/// through the canonical embedding into Q_p.
struct ScalarContext {
    Int p;
    int n;
    int precision;
    PadicEmbedding embedding;

    ScalarContext(const Int& prime, int order, int prec = kDefaultPrecision)
        : p(prime), n(order), precision(prec), embedding(prime, order, prec) {}
};

enum class HodgeTateKind { Type01, Other };

struct HodgeTateType {
    HodgeTateKind kind;
    int fil1_dim;
};

/// A filtered phi-module (D, Fil): invertible Frobenius matrix in column
/// convention (phi of the j-th basis vector is the j-th column) and a
/// decreasing filtration given by its distinct steps. Between supplied
/// levels the value of the previous step persists; below the first step the
/// filtration is all of D, above the last it is zero.
class FilteredPhiModule {
public:
    FilteredPhiModule(ScalarContext scalars, CMat frobenius, std::map<int, Subspace> steps);

    int dim() const { return dim_; }
    const ScalarContext& scalars() const { return scal_; }
    const CMat& frobenius() const { return frob_; }
    const std::map<int, Subspace>& fil_steps() const { return steps_; }
    Subspace fil(int i) const;
    int first_level() const; // smallest i with Fil^i != D
    int last_level() const;  // largest i with Fil^i != 0

    bool is_phi_stable(const Subspace& w) const;
    HodgeTateType hodge_tate_type() const;

    /// Newton invariant of a phi-stable subspace: v_p(det phi|_W).
    Rat t_N(const Subspace& w) const;
    /// Hodge invariant: sum_i i * dim(W cap Fil^i / W cap Fil^(i+1)).
    Rat t_H(const Subspace& w) const;

    FilteredPhiModule dual() const;
    FilteredPhiModule tate_twist() const;
    /// Smallest phi-stable subspace containing w.
    Subspace phi_span(const Subspace& w) const;
    /// Quotient by a phi-stable subspace, in the canonical complement basis
    /// (the non-pivot coordinates of w's echelon form).
    FilteredPhiModule quotient(const Subspace& w) const;
    /// w as a module of its own, with the induced filtration, in the basis
    /// given by w's echelon rows.
    FilteredPhiModule submodule(const Subspace& w) const;

    CPoly char_poly_exact() const;  // over Q(zeta_n)
    ZPoly char_poly() const;        // throws NonIntegerCharPoly
    CPoly min_poly() const;         // squarefree part of char poly when semisimple
    bool is_phi_semisimple() const;

private:
    int dim_;
    ScalarContext scal_;
    CMat frob_;
    std::map<int, Subspace> steps_; // distinct filtration steps
};

} // namespace fpmcert
