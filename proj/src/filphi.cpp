#include "filphi.hpp"

namespace fpmcert {

FilteredPhiModule::FilteredPhiModule(ScalarContext scalars, CMat frobenius,
                                     std::map<int, Subspace> steps)
    : dim_(frobenius.rows()), scal_(std::move(scalars)), frob_(std::move(frobenius)),
      steps_(std::move(steps)) {
    if (frob_.rows() != frob_.cols()) throw SchemaError("Frobenius matrix must be square");
    if (frob_.det().is_zero()) throw SchemaError("Frobenius matrix must be invertible");
    Subspace prev = Subspace::full(dim_);
    for (const auto& [lvl, sub] : steps_) {
        if (sub.ambient() != dim_) throw SchemaError("filtration step has wrong ambient dimension");
        if (!prev.contains(sub)) throw SchemaError("filtration is not decreasing");
        prev = sub;
    }
}

Subspace FilteredPhiModule::fil(int i) const {
    if (steps_.empty()) return i <= 0 ? Subspace::full(dim_) : Subspace::zero(dim_);
    auto it = steps_.upper_bound(i);
    if (it == steps_.begin()) return Subspace::full(dim_);
    if (it == steps_.end() && i > steps_.rbegin()->first) return Subspace::zero(dim_);
    return std::prev(it)->second;
}

int FilteredPhiModule::first_level() const {
    for (const auto& [lvl, sub] : steps_)
        if (!sub.is_full()) return lvl;
    return steps_.empty() ? 1 : steps_.rbegin()->first + 1;
}

int FilteredPhiModule::last_level() const {
    int last = 0;
    for (const auto& [lvl, sub] : steps_)
        if (!sub.is_zero()) last = lvl;
    return last;
}

bool FilteredPhiModule::is_phi_stable(const Subspace& w) const {
    return w.contains(w.image(frob_));
}

HodgeTateType FilteredPhiModule::hodge_tate_type() const {
    Subspace f0 = fil(0), f1 = fil(1), f2 = fil(2);
    int d1 = f1.dim();
    if (f0.is_full() && f2.is_zero() && d1 > 0 && d1 < dim_)
        return {HodgeTateKind::Type01, d1};
    return {HodgeTateKind::Other, d1};
}

Rat FilteredPhiModule::t_N(const Subspace& w) const {
    if (!is_phi_stable(w)) throw NotStable("t_N of a non-phi-stable subspace");
    if (w.is_zero()) return Rat(0);
    // matrix of phi restricted to w, in w's basis
    std::vector<std::vector<CycloElement>> cols;
    for (int i = 0; i < w.dim(); ++i) cols.push_back(w.coordinates(frob_.apply(w.basis().row(i))));
    CMat rest = CMat::from_rows(cols).transpose();
    CycloElement d = rest.det();
    auto v = valuation(d, scal_.embedding);
    if (!v) throw ArithmeticError("restricted Frobenius is singular");
    return Rat(*v);
}

Rat FilteredPhiModule::t_H(const Subspace& w) const {
    Rat sum = 0;
    int lo = steps_.empty() ? 1 : steps_.begin()->first;
    int hi = steps_.empty() ? 0 : steps_.rbegin()->first;
    for (int i = lo; i <= hi + 1; ++i) {
        int di = w.intersect(fil(i)).dim();
        int di1 = w.intersect(fil(i + 1)).dim();
        if (di != di1) sum += Rat(i) * (di - di1);
    }
    // levels below lo all intersect in dim(w): the graded piece at lo-1 and
    // lower is zero except possibly at lo-1 when fil(lo) is a proper step
    int dlo = w.intersect(fil(lo)).dim();
    if (dlo != w.dim()) sum += Rat(lo - 1) * (w.dim() - dlo);
    return sum;
}

FilteredPhiModule FilteredPhiModule::dual() const {
    CMat fd = frob_.transpose().inverse();
    // Fil^i D* = annihilator of Fil^(1-i) D; scan the level range where it
    // can change and record the distinct steps
    std::map<int, Subspace> steps;
    int lo = steps_.empty() ? 1 : steps_.begin()->first;
    int hi = steps_.empty() ? 0 : steps_.rbegin()->first;
    Subspace prev = Subspace::full(dim_);
    for (int i = -hi; i <= -lo + 2; ++i) {
        Subspace s = fil(1 - i).annihilator();
        if (!(s == prev)) {
            steps[i] = s;
            prev = s;
        }
    }
    return FilteredPhiModule(scal_, fd, std::move(steps));
}

FilteredPhiModule FilteredPhiModule::tate_twist() const {
    CMat f = frob_.scaled(CycloElement(Rat(scal_.p), scal_.n));
    std::map<int, Subspace> steps;
    for (const auto& [lvl, sub] : steps_) steps[lvl + 1] = sub;
    return FilteredPhiModule(scal_, f, std::move(steps));
}

Subspace FilteredPhiModule::phi_span(const Subspace& w) const {
    Subspace cur = w;
    for (;;) {
        Subspace next = cur.sum(cur.image(frob_));
        if (next.dim() == cur.dim()) return cur;
        cur = next;
    }
}

FilteredPhiModule FilteredPhiModule::quotient(const Subspace& w) const {
    if (!is_phi_stable(w)) throw NotStable("quotient by a non-phi-stable subspace");
    std::vector<int> comp = w.non_pivot_coords();
    int qd = static_cast<int>(comp.size());
    // reduce mod w, then keep the complement coordinates
    auto project = [&](std::vector<CycloElement> v) {
        for (int i = 0; i < w.dim(); ++i) {
            CycloElement f = v[w.pivots()[i]];
            if (f.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) v[j] -= f * w.basis().at(i, j);
        }
        std::vector<CycloElement> out(qd);
        for (int k = 0; k < qd; ++k) out[k] = v[comp[k]];
        return out;
    };
    CMat qf(qd, qd);
    for (int k = 0; k < qd; ++k) {
        std::vector<CycloElement> ek(dim_, CycloElement(Rat(0)));
        ek[comp[k]] = CycloElement(Rat(1));
        auto img = project(frob_.apply(ek));
        for (int i = 0; i < qd; ++i) qf.at(i, k) = img[i];
    }
    std::map<int, Subspace> steps;
    for (const auto& [lvl, sub] : steps_) {
        std::vector<std::vector<CycloElement>> rows;
        for (int i = 0; i < sub.dim(); ++i) rows.push_back(project(sub.basis().row(i)));
        steps[lvl] = Subspace::span(qd, rows);
    }
    return FilteredPhiModule(scal_, std::move(qf), std::move(steps));
}

FilteredPhiModule FilteredPhiModule::submodule(const Subspace& w) const {
    if (!is_phi_stable(w)) throw NotStable("submodule of a non-phi-stable subspace");
    int k = w.dim();
    CMat sf(k, k);
    for (int j = 0; j < k; ++j) {
        auto coords = w.coordinates(frob_.apply(w.basis().row(j)));
        for (int i = 0; i < k; ++i) sf.at(i, j) = coords[i];
    }
    std::map<int, Subspace> steps;
    for (const auto& [lvl, sub] : steps_) {
        Subspace inter = w.intersect(sub);
        std::vector<std::vector<CycloElement>> rows;
        for (int i = 0; i < inter.dim(); ++i) rows.push_back(w.coordinates(inter.basis().row(i)));
        steps[lvl] = Subspace::span(k, rows);
    }
    return FilteredPhiModule(scal_, std::move(sf), std::move(steps));
}

CPoly FilteredPhiModule::char_poly_exact() const { return frob_.char_poly(); }

ZPoly FilteredPhiModule::char_poly() const { return char_poly_exact().to_zpoly(); }

CPoly FilteredPhiModule::min_poly() const {
    return squarefree_part(char_poly_exact()).monic();
}

bool FilteredPhiModule::is_phi_semisimple() const {
    CPoly m = min_poly();
    CMat z = frob_.eval_poly(m);
    return z == CMat(dim_, dim_);
}

} // namespace fpmcert
