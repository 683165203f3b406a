#include "polar.hpp"

#include <sstream>

namespace fpmcert {

namespace {

// variable order for antisymmetric unknowns: (i,j) with i < j, lexicographic
int var_index(int i, int j, int d) {
    return i * d - i * (i + 1) / 2 + (j - i - 1);
}

CMat delta_from_vars(const std::vector<CycloElement>& x, int d) {
    CMat delta(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            delta.at(i, j) = x[var_index(i, j, d)];
            delta.at(j, i) = -x[var_index(i, j, d)];
        }
    return delta;
}

/// Coefficient vector of the linear form Delta_{kl} in the (i<j) variables.
void add_entry(std::vector<CycloElement>& row, int k, int l, int d, const CycloElement& coeff) {
    if (k == l) return;
    if (k < l)
        row[var_index(k, l, d)] += coeff;
    else
        row[var_index(l, k, d)] -= coeff;
}

std::vector<CMat> antisym_similitude_space(const FilteredPhiModule& m, bool with_isotropy) {
    const CMat& f = m.frobenius();
    int d = m.dim();
    int nv = d * (d - 1) / 2;
    CycloElement p_elt(Rat(m.scalars().p), 1);
    std::vector<std::vector<CycloElement>> rows;

    // (F Delta F^T)_{ij} = p Delta_{ij} for i < j (both sides antisymmetric)
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            std::vector<CycloElement> row(nv, CycloElement(Rat(0)));
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    add_entry(row, k, l, d, f.at(i, k) * f.at(j, l));
            add_entry(row, i, j, d, -p_elt);
            rows.push_back(row);
        }

    if (with_isotropy) {
        // Delta u in Fil^1 for u in ann(Fil^1): a . (Delta u) = 0 for every
        // annihilator generator a
        Subspace fil1 = m.fil(1);
        Subspace perp_space = fil1.annihilator();
        const CMat& perp = perp_space.basis();
        for (int ui = 0; ui < perp.rows(); ++ui)
            for (int ai = 0; ai < perp.rows(); ++ai) {
                std::vector<CycloElement> row(nv, CycloElement(Rat(0)));
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l)
                        add_entry(row, k, l, d, perp.at(ai, k) * perp.at(ui, l));
                rows.push_back(row);
            }
    }

    CMat constraints = rows.empty() ? CMat(0, nv) : CMat::from_rows(rows);
    CMat kern = constraints.kernel(); // echelonized rows, deterministic
    std::vector<CMat> basis;
    for (int i = 0; i < kern.rows(); ++i) basis.push_back(delta_from_vars(kern.row(i), d));
    return basis;
}

} // namespace

std::vector<CMat> similitude_solution_space(const FilteredPhiModule& m) {
    return antisym_similitude_space(m, true);
}

bool verify_polarization(const FilteredPhiModule& m, const CMat& delta) {
    int d = m.dim();
    if (delta.rows() != d || delta.cols() != d) return false;
    CycloElement zero(Rat(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!(delta.at(i, j) + delta.at(j, i) == zero)) return false;
    const CMat& f = m.frobenius();
    CycloElement p_elt(Rat(m.scalars().p), 1);
    if (!(f * delta * f.transpose() == delta.scaled(p_elt))) return false;
    if (delta.det().is_zero()) return false;
    Subspace fil1 = m.fil(1);
    Subspace perp = fil1.annihilator();
    std::vector<std::vector<CycloElement>> images;
    for (int i = 0; i < perp.dim(); ++i) {
        std::vector<CycloElement> u = perp.basis().row(i);
        std::vector<CycloElement> w(d, CycloElement(Rat(0)));
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) w[k] += delta.at(k, l) * u[l];
        if (!fil1.contains(w)) return false;
        images.push_back(w);
    }
    if (2 * fil1.dim() == d) {
        // invertible + totally isotropic of half dimension: the image must be
        // exactly Fil^1
        if (Subspace::span(d, images) != fil1) return false;
    }
    return true;
}

PolarizationResult find_polarization(const FilteredPhiModule& m, int dim_cap) {
    PolarizationResult res;
    std::vector<CMat> basis = similitude_solution_space(m);
    int s = static_cast<int>(basis.size());
    res.solution_space_dim = s;
    int d = m.dim();
    if (s == 0) {
        res.status = PolarizationResult::Status::NoneFound;
        res.certificate = "solution space of the similitude/isotropy constraints is zero";
        return res;
    }
    if (s > dim_cap) {
        res.status = PolarizationResult::Status::GridExhausted;
        res.certificate = "solution space dimension exceeds the grid cap";
        return res;
    }
    // det restricted to the solution space has per-variable degree <= d, so
    // vanishing on the whole grid {0..d}^s proves det == 0 identically
    std::vector<int> t(s, 0);
    while (true) {
        CMat delta(d, d);
        for (int i = 0; i < s; ++i)
            if (t[i] != 0) delta = delta + basis[i].scaled(CycloElement(Rat(t[i])));
        if (!delta.det().is_zero()) {
            if (!verify_polarization(m, delta))
                throw ArithmeticError("polarization witness failed independent re-verification");
            res.status = PolarizationResult::Status::Witness;
            res.witness = PolarizationWitness{delta, s};
            return res;
        }
        // lexicographic odometer, leftmost coordinate most significant
        int k = s - 1;
        while (k >= 0 && t[k] == d) t[k--] = 0;
        if (k < 0) break;
        ++t[k];
    }
    res.status = PolarizationResult::Status::NoneFound;
    std::ostringstream os;
    os << "det vanishes identically on the " << s
       << "-dimensional solution space (exact grid {0.." << d << "}^" << s << ")";
    res.certificate = os.str();
    return res;
}

bool dagger_dimension_check(const FilteredPhiModule& m, const CMat& delta) {
    const CMat& f = m.frobenius();
    int d = m.dim();
    int nv = d * d;
    auto vidx = [d](int i, int j) { return i * d + j; };
    std::vector<std::vector<CycloElement>> rows;
    // commutant: (F A - A F)_{ij} = 0
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<CycloElement> row(nv, CycloElement(Rat(0)));
            for (int k = 0; k < d; ++k) {
                row[vidx(k, j)] += f.at(i, k);
                row[vidx(i, k)] -= f.at(k, j);
            }
            rows.push_back(row);
        }
    // dagger-fixed: A = delta A^T delta^{-1}, imposed as A delta = delta A^T
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<CycloElement> row(nv, CycloElement(Rat(0)));
            for (int k = 0; k < d; ++k) {
                row[vidx(i, k)] += delta.at(k, j);
                row[vidx(j, k)] -= delta.at(i, k);
            }
            rows.push_back(row);
        }
    int fixed_dim = CMat::from_rows(rows).kernel().rows();
    int morphism_dim = static_cast<int>(antisym_similitude_space(m, false).size());
    return fixed_dim == morphism_dim;
}

} // namespace fpmcert
