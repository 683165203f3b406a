#pragma once

#include "cyclopoly.hpp"

namespace fpmcert {

/// Dense matrix over Q(zeta_n). Small dimensions, exact arithmetic only.
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, CycloElement(Rat(0))) {}
    static CMat identity(int n);
    static CMat from_rows(std::vector<std::vector<CycloElement>> rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    CycloElement& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const CycloElement& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
    std::vector<CycloElement> row(int i) const;

    CMat transpose() const;
    CycloElement det() const;       // square only
    CMat inverse() const;           // throws ArithmeticError if singular
    CycloElement trace() const;
    int rank() const;

    /// Reduced row echelon form (canonical) and its pivot columns.
    std::pair<CMat, std::vector<int>> rref() const;
    /// Basis of the column kernel {x : A x = 0}, as rows, echelonized.
    CMat kernel() const;
    /// Characteristic polynomial det(X*I - A), by Faddeev-LeVerrier.
    CPoly char_poly() const;
    /// p(A) for a polynomial p over Q(zeta_n).
    CMat eval_poly(const CPoly& p) const;

    friend CMat operator*(const CMat& a, const CMat& b);
    friend CMat operator+(const CMat& a, const CMat& b);
    friend CMat operator-(const CMat& a, const CMat& b);
    friend bool operator==(const CMat& a, const CMat& b);
    CMat scaled(const CycloElement& s) const;

    /// Apply to a row vector: v * A^T, i.e. the image of v under the
    /// column-convention map A.
    std::vector<CycloElement> apply(const std::vector<CycloElement>& v) const;

    std::string to_string() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<CycloElement> a_;
};

/// Subspace of an ambient coordinate space, held as the unique reduced
/// echelon basis (rows). Two Subspace values are equal iff their bases are
/// identical.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace span(int ambient, const std::vector<std::vector<CycloElement>>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const CMat& basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const std::vector<CycloElement>& v) const;
    bool contains(const Subspace& w) const;
    Subspace sum(const Subspace& w) const;
    Subspace intersect(const Subspace& w) const;
    /// {u : B u = 0} for basis rows B -- the annihilator in dual coordinates.
    Subspace annihilator() const;
    /// Image under the column-convention map given by M (rows v -> v*M^T).
    Subspace image(const CMat& m) const;
    /// Coordinates not used as pivots: the canonical complement indices.
    std::vector<int> non_pivot_coords() const;
    const std::vector<int>& pivots() const { return pivots_; }

    /// Express v in the basis (v must lie in the subspace).
    std::vector<CycloElement> coordinates(const std::vector<CycloElement>& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    int compare(const Subspace& b) const; // deterministic total order

    std::string to_string() const;

private:
    int ambient_ = 0;
    CMat basis_; // rref rows, no zero rows
    std::vector<int> pivots_;
};

} // namespace fpmcert
