#pragma once

#include <map>
#include <random>
#include <vector>

#include "filphi.hpp"

namespace fpmcert::testing {

inline CycloElement crat(long num, long den = 1) {
    return CycloElement(Rat(num, den));
}

inline std::vector<CycloElement> cvec(std::initializer_list<long> vs) {
    std::vector<CycloElement> out;
    for (long v : vs) out.push_back(crat(v));
    return out;
}

inline CMat cmat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<CycloElement>> r;
    for (auto& row : rows) r.push_back(cvec(row));
    return CMat::from_rows(r);
}

/// Random invertible integer matrix with entries in [-bound, bound].
inline CMat random_invertible(std::mt19937& rng, int dim, int bound = 3) {
    std::uniform_int_distribution<long> d(-bound, bound);
    for (;;) {
        CMat a(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) a.at(i, j) = crat(d(rng));
        if (!a.det().is_zero()) return a;
    }
}

inline std::vector<CycloElement> random_vector(std::mt19937& rng, int dim, int bound = 3) {
    std::uniform_int_distribution<long> d(-bound, bound);
    for (;;) {
        std::vector<CycloElement> v(dim, crat(0));
        bool nonzero = false;
        for (auto& x : v) {
            x = crat(d(rng));
            if (!x.is_zero()) nonzero = true;
        }
        if (nonzero) return v;
    }
}

/// Companion matrix of a monic X^d + c_{d-1}X^{d-1} + ... + c_0 in column
/// convention.
inline CMat companion(const std::vector<long>& low_coeffs) {
    int d = static_cast<int>(low_coeffs.size());
    CMat a(d, d);
    for (int i = 1; i < d; ++i) a.at(i, i - 1) = crat(1);
    for (int i = 0; i < d; ++i) a.at(i, d - 1) = crat(-low_coeffs[i]);
    return a;
}

/// A module with a random invertible Frobenius and a random filtration step,
/// used by invariant-law property tests (not necessarily admissible).
inline FilteredPhiModule random_module(std::mt19937& rng, const Int& p, int dim) {
    ScalarContext scal(p, 1);
    CMat frob = random_invertible(rng, dim);
    std::uniform_int_distribution<int> kd(1, dim - 1);
    int k = kd(rng);
    std::vector<std::vector<CycloElement>> rows;
    for (int i = 0; i < k; ++i) rows.push_back(random_vector(rng, dim));
    Subspace fil1 = Subspace::span(dim, rows);
    std::map<int, Subspace> steps;
    steps[0] = Subspace::full(dim);
    steps[1] = fil1;
    steps[2] = Subspace::zero(dim);
    return FilteredPhiModule(std::move(scal), std::move(frob), std::move(steps));
}

} // namespace fpmcert::testing
