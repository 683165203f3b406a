#include "pipeline.hpp"

#include <sstream>

#include "admiss.hpp"
#include "polar.hpp"
#include "weil.hpp"

namespace fpmcert {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string rat_string(const Rat& r) {
    return r.get_str();
}

ordered_json zpoly_json(const ZPoly& h) {
    ordered_json out = ordered_json::array();
    for (const Int& c : h.c) {
        if (c.fits_slong_p())
            out.push_back(c.get_si());
        else
            out.push_back(c.get_str());
    }
    return out;
}

std::string zpoly_coeff_string(const ZPoly& h) {
    std::string s = "[";
    for (size_t i = 0; i < h.c.size(); ++i) {
        if (i) s += ",";
        s += h.c[i].get_str();
    }
    return s + "]";
}

ordered_json slopes_json(const std::vector<std::pair<Rat, int>>& slopes) {
    ordered_json out = ordered_json::array();
    for (const auto& [s, mult] : slopes) out.push_back({rat_string(s), mult});
    return out;
}

const char* status_string(AdmissibilityVerdict::Status s) {
    switch (s) {
        case AdmissibilityVerdict::Status::Admissible: return "Admissible";
        case AdmissibilityVerdict::Status::Inadmissible: return "Inadmissible";
        case AdmissibilityVerdict::Status::Unknown: return "Unknown";
    }
    return "?";
}
const char* status_string(SplitVerdict::Status s) {
    switch (s) {
        case SplitVerdict::Status::Splits: return "Splits";
        case SplitVerdict::Status::NonSplit: return "NonSplit";
        case SplitVerdict::Status::Unknown: return "Unknown";
    }
    return "?";
}
const char* status_string(SemisimplicityVerdict::Status s) {
    switch (s) {
        case SemisimplicityVerdict::Status::Semisimple: return "Semisimple";
        case SemisimplicityVerdict::Status::NotSemisimple: return "NotSemisimple";
        case SemisimplicityVerdict::Status::Unknown: return "Unknown";
    }
    return "?";
}
const char* status_string(PolarizationResult::Status s) {
    switch (s) {
        case PolarizationResult::Status::Witness: return "Witness";
        case PolarizationResult::Status::NoneFound: return "NoneFound";
        case PolarizationResult::Status::GridExhausted: return "GridExhausted";
    }
    return "?";
}

ordered_json matrix_json(const CMat& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

CMat matrix_from_json(const json& rows, int n) {
    std::vector<std::vector<CycloElement>> out;
    for (const json& r : rows) {
        std::vector<CycloElement> row;
        for (const json& v : r) row.push_back(scalar_from_json(v, n));
        out.push_back(std::move(row));
    }
    return CMat::from_rows(out);
}

void record_error(ordered_json& errors, const char* section, const Error& e) {
    errors.push_back({{"section", section}, {"error", e.kind()}, {"message", e.what()}});
}

} // namespace

ordered_json scalar_json(const CycloElement& x) {
    if (x.is_rational()) return ordered_json(rat_string(x.rational_value()));
    ordered_json coeffs = ordered_json::array();
    for (const Rat& c : x.coeffs()) coeffs.push_back(rat_string(c));
    return coeffs;
}

CycloElement scalar_from_json(const json& v, int n) {
    auto rat = [](const std::string& s) {
        Rat r(s);
        r.canonicalize();
        return r;
    };
    if (v.is_string()) return CycloElement(rat(v.get<std::string>()), 1);
    if (v.is_array()) {
        std::vector<Rat> coeffs;
        for (const json& c : v) coeffs.push_back(rat(c.get<std::string>()));
        return CycloElement::from_coeffs(n, std::move(coeffs));
    }
    throw SchemaError("scalar must be a rational string or coefficient array");
}

ordered_json subspace_json(const Subspace& s) {
    ordered_json out;
    out["dim"] = s.dim();
    out["basis"] = matrix_json(s.basis());
    return out;
}

Subspace subspace_from_json(const json& v, int dim, int n) {
    std::vector<std::vector<CycloElement>> rows;
    for (const json& r : v.at("basis")) {
        std::vector<CycloElement> row;
        for (const json& e : r) row.push_back(scalar_from_json(e, n));
        rows.push_back(std::move(row));
    }
    return Subspace::span(dim, rows);
}

ordered_json run_pipeline(const FilteredPhiModule& m) {
    const ScalarContext& sc = m.scalars();
    ordered_json rep;
    ordered_json errors = ordered_json::array();
    rep["schema"] = "fpmcert-report/1";
    {
        ordered_json in;
        in["prime"] = sc.p.fits_slong_p() ? ordered_json(sc.p.get_si()) : ordered_json(sc.p.get_str());
        in["cyclo_order"] = sc.n;
        in["precision"] = sc.precision;
        in["dim"] = m.dim();
        rep["input"] = in;
    }

    bool cond1_ok = false, cond2_ok = false, adm_ok = false, cond3_ok = false;

    try {
        ordered_json c1;
        bool phiss = m.is_phi_semisimple();
        c1["phi_semisimple"] = phiss;
        ZPoly cp = m.char_poly();
        c1["char_poly"] = zpoly_json(cp);
        WeilVerdict w = is_weil(cp, sc.p);
        ordered_json wj;
        wj["is_weil"] = w.is_weil;
        wj["x2_minus_p_multiplicity"] = w.x2_minus_p_multiplicity;
        wj["real_weil_polynomial"] = zpoly_json(w.real_weil_polynomial);
        wj["failure_reason"] = w.failure_reason ? ordered_json(to_string(*w.failure_reason))
                                                : ordered_json(nullptr);
        c1["weil"] = wj;
        ordered_json sj;
        if (w.is_weil) {
            SupersingularVerdict sv = is_supersingular(cp, sc.p);
            sj["is_supersingular"] = sv.is_supersingular;
            sj["slopes"] = slopes_json(sv.slopes);
            cond1_ok = phiss && sv.is_supersingular;
        } else {
            NewtonPolygon np = newton_polygon(cp, sc.p);
            sj["is_supersingular"] = false;
            sj["slopes"] = slopes_json(np.slopes);
        }
        c1["supersingular"] = sj;
        rep["condition1"] = c1;
    } catch (const Error& e) {
        rep["condition1"] = nullptr;
        record_error(errors, "condition1", e);
    }

    try {
        HodgeTateType ht = m.hodge_tate_type();
        ordered_json c2;
        c2["kind"] = ht.kind == HodgeTateKind::Type01 ? "Type01" : "Other";
        c2["fil1_dim"] = ht.fil1_dim;
        Subspace full = Subspace::full(m.dim());
        c2["t_H"] = rat_string(m.t_H(full));
        c2["t_N"] = rat_string(m.t_N(full));
        rep["condition2"] = c2;
        cond2_ok = ht.kind == HodgeTateKind::Type01;
    } catch (const Error& e) {
        rep["condition2"] = nullptr;
        record_error(errors, "condition2", e);
    }

    AdmissibilityVerdict av;
    av.status = AdmissibilityVerdict::Status::Unknown;
    try {
        av = is_admissible(m);
        ordered_json aj;
        aj["status"] = status_string(av.status);
        aj["witness"] = av.witness ? subspace_json(*av.witness) : ordered_json(nullptr);
        aj["checked_families"] = av.checked_families;
        rep["admissibility"] = aj;
        adm_ok = av.status == AdmissibilityVerdict::Status::Admissible;
    } catch (const Error& e) {
        rep["admissibility"] = nullptr;
        record_error(errors, "admissibility", e);
    }

    try {
        SubobjectList subs = subobjects(m);
        ordered_json sj;
        ordered_json members = ordered_json::array();
        for (const Subspace& s : subs.members) members.push_back(subspace_json(s));
        sj["members"] = members;
        sj["positive_dimensional_family"] = subs.positive_dimensional_family;
        rep["subobjects"] = sj;

        ordered_json splits = ordered_json::array();
        for (const Subspace& s : subs.members) {
            SplitVerdict v = is_split(m, s);
            ordered_json e;
            e["subobject"] = subspace_json(s);
            e["status"] = status_string(v.status);
            e["complement"] =
                v.complement_witness ? subspace_json(*v.complement_witness) : ordered_json(nullptr);
            e["obstruction"] = v.obstruction;
            splits.push_back(e);
        }
        rep["splitting"] = splits;
    } catch (const Error& e) {
        rep["subobjects"] = nullptr;
        rep["splitting"] = nullptr;
        record_error(errors, "subobjects", e);
    }

    try {
        ordered_json sj;
        if (av.status == AdmissibilityVerdict::Status::Inadmissible) {
            sj["status"] = "NotApplicable";
            sj["obstruction"] = "module is not admissible";
            sj["decomposition"] = ordered_json::array();
            sj["obstruction_witness"] = nullptr;
        } else {
            SemisimplicityVerdict v = is_semisimple(m);
            sj["status"] = status_string(v.status);
            ordered_json dec = ordered_json::array();
            for (const Subspace& s : v.decomposition) dec.push_back(subspace_json(s));
            sj["decomposition"] = dec;
            sj["obstruction_witness"] =
                v.obstruction_witness ? subspace_json(*v.obstruction_witness) : ordered_json(nullptr);
            sj["obstruction"] = v.obstruction;
        }
        rep["semisimple"] = sj;
    } catch (const Error& e) {
        rep["semisimple"] = nullptr;
        record_error(errors, "semisimple", e);
    }

    try {
        ordered_json cj;
        if (m.hodge_tate_type().kind != HodgeTateKind::Type01) {
            cj["status"] = "NotApplicable";
            cj["certificate"] = "polarization search requires Hodge-Tate type (0,1)";
            cj["solution_space_dim"] = nullptr;
            cj["delta"] = nullptr;
            rep["condition3"] = cj;
            rep["dagger_dimension_check"] = nullptr;
        } else {
            PolarizationResult pr = find_polarization(m);
            cj["status"] = status_string(pr.status);
            cj["solution_space_dim"] = pr.solution_space_dim;
            cj["delta"] = pr.witness ? matrix_json(pr.witness->delta) : ordered_json(nullptr);
            cj["certificate"] = pr.certificate;
            rep["condition3"] = cj;
            cond3_ok = pr.status == PolarizationResult::Status::Witness;
            rep["dagger_dimension_check"] =
                pr.witness ? ordered_json(dagger_dimension_check(m, pr.witness->delta))
                           : ordered_json(nullptr);
        }
    } catch (const Error& e) {
        rep["condition3"] = nullptr;
        rep["dagger_dimension_check"] = nullptr;
        record_error(errors, "condition3", e);
    }

    rep["abelian_variety_realizable"] =
        cond1_ok && cond2_ok && adm_ok && cond3_ok && errors.empty();
    rep["errors"] = errors;
    return rep;
}

namespace {

std::string computed_value(const FilteredPhiModule& m, const ordered_json& rep,
                           const std::string& key) {
    auto block_span = [&](int block) {
        std::vector<std::vector<CycloElement>> rows(2, std::vector<CycloElement>(
                                                          m.dim(), CycloElement(Rat(0))));
        rows[0][2 * block] = CycloElement(Rat(1));
        rows[1][2 * block + 1] = CycloElement(Rat(1));
        return Subspace::span(m.dim(), rows);
    };
    try {
        if (key == "char_poly") return zpoly_coeff_string(m.char_poly());
        if (key == "supersingular")
            return rep.at("condition1").at("supersingular").at("is_supersingular").get<bool>()
                       ? "true" : "false";
        if (key == "admissible") return rep.at("admissibility").at("status").get<std::string>();
        if (key == "polarization") return rep.at("condition3").at("status").get<std::string>();
        if (key == "semisimple") return rep.at("semisimple").at("status").get<std::string>();
        if (key == "split(D1)") {
            SplitVerdict v = is_split(m, block_span(0));
            return status_string(v.status);
        }
        Subspace full = Subspace::full(m.dim());
        if (key == "t_H(D)") return rat_string(m.t_H(full));
        if (key == "t_N(D)") return rat_string(m.t_N(full));
        if (key == "t_H(D1)") return rat_string(m.t_H(block_span(0)));
        if (key == "t_H(D2)") return rat_string(m.t_H(block_span(1)));
        if (key == "t_N(D1)") return rat_string(m.t_N(block_span(0)));
        if (key == "t_N(D2)") return rat_string(m.t_N(block_span(1)));
        return "unsupported claim key";
    } catch (const Error& e) {
        return std::string("error: ") + e.what();
    } catch (const json::exception& e) {
        return std::string("error: ") + e.what();
    }
}

} // namespace

ordered_json run_pipeline_entry(const CatalogEntry& entry) {
    ordered_json rep = run_pipeline(entry.module);
    ordered_json meta;
    meta["name"] = entry.name;
    meta["params"] = entry.params;
    rep["entry"] = meta;
    ordered_json claims = ordered_json::array();
    for (const ExpectedFact& f : entry.expected) {
        std::string got = computed_value(entry.module, rep, f.key);
        ordered_json c;
        c["key"] = f.key;
        c["claimed"] = f.value;
        c["computed"] = got;
        c["matches"] = got == f.value;
        c["disputed"] = f.disputed;
        claims.push_back(c);
    }
    rep["paper_claims"] = claims;
    return rep;
}

std::string report_text(const ordered_json& rep) {
    std::ostringstream os;
    auto line = [&os](const std::string& k, const std::string& v) {
        os << "  " << k << ": " << v << "\n";
    };
    os << "certificate report\n";
    if (rep.contains("entry"))
        line("entry", rep["entry"]["name"].get<std::string>() + " (" +
                          rep["entry"]["params"].get<std::string>() + ")");
    const auto& in = rep.at("input");
    os << "  module: dim " << in.at("dim") << ", p = " << in.at("prime")
       << ", cyclo order " << in.at("cyclo_order") << ", precision " << in.at("precision") << "\n";
    if (!rep.at("condition1").is_null()) {
        const auto& c1 = rep["condition1"];
        line("condition (1) phi semisimple", c1["phi_semisimple"].get<bool>() ? "yes" : "no");
        line("condition (1) char poly", c1["char_poly"].dump());
        line("condition (1) weil", c1["weil"]["is_weil"].get<bool>() ? "yes" : "no");
        line("condition (1) supersingular",
             c1["supersingular"]["is_supersingular"].get<bool>() ? "yes" : "no");
    }
    if (!rep.at("condition2").is_null()) {
        const auto& c2 = rep["condition2"];
        line("condition (2) Hodge-Tate type", c2["kind"].get<std::string>() + ", dim Fil^1 = " +
                                                  std::to_string(c2["fil1_dim"].get<int>()));
        line("t_H(D)", c2["t_H"].get<std::string>());
        line("t_N(D)", c2["t_N"].get<std::string>());
    }
    if (!rep.at("admissibility").is_null()) {
        line("admissibility", rep["admissibility"]["status"].get<std::string>() + " (" +
                                  rep["admissibility"]["checked_families"].get<std::string>() + ")");
    }
    if (!rep.at("subobjects").is_null()) {
        std::string s = std::to_string(rep["subobjects"]["members"].size()) + " members";
        if (rep["subobjects"]["positive_dimensional_family"].get<bool>())
            s += " plus a positive-dimensional family";
        line("subobjects", s);
    }
    if (!rep.at("splitting").is_null()) {
        for (const auto& e : rep["splitting"]) {
            line("split(dim-" + std::to_string(e["subobject"]["dim"].get<int>()) + " subobject)",
                 e["status"].get<std::string>());
        }
    }
    if (!rep.at("semisimple").is_null())
        line("semisimple", rep["semisimple"]["status"].get<std::string>());
    if (!rep.at("condition3").is_null()) {
        std::string s = rep["condition3"]["status"].get<std::string>();
        if (!rep["condition3"]["certificate"].get<std::string>().empty())
            s += " (" + rep["condition3"]["certificate"].get<std::string>() + ")";
        line("condition (3) polarization", s);
    }
    if (!rep.at("dagger_dimension_check").is_null())
        line("dagger dimension check",
             rep["dagger_dimension_check"].get<bool>() ? "ok" : "MISMATCH");
    line("abelian variety realizable",
         rep.at("abelian_variety_realizable").get<bool>() ? "yes" : "no");
    if (rep.contains("paper_claims")) {
        for (const auto& c : rep["paper_claims"]) {
            std::string s = "claimed " + c["claimed"].get<std::string>() + ", computed " +
                            c["computed"].get<std::string>() + " -> " +
                            (c["matches"].get<bool>() ? "match" : "MISMATCH");
            if (c["disputed"].get<bool>()) s += " [claim disputed]";
            line("claim " + c["key"].get<std::string>(), s);
        }
    }
    for (const auto& e : rep.at("errors"))
        line("error in " + e["section"].get<std::string>(), e["message"].get<std::string>());
    return os.str();
}

ordered_json verify_report(const FilteredPhiModule& m, const ordered_json& rep) {
    int checked = 0;
    std::vector<std::string> failures;
    int n = m.scalars().n;
    auto check = [&](bool ok, const std::string& what) {
        ++checked;
        if (!ok) failures.push_back(what);
    };

    if (rep.contains("admissibility") && !rep["admissibility"].is_null() &&
        rep["admissibility"]["status"] == "Inadmissible" &&
        !rep["admissibility"]["witness"].is_null()) {
        Subspace w = subspace_from_json(rep["admissibility"]["witness"], m.dim(), n);
        check(m.is_phi_stable(w) && m.t_H(w) > m.t_N(w), "inadmissibility witness");
    }
    if (rep.contains("splitting") && !rep["splitting"].is_null()) {
        for (const auto& e : rep["splitting"]) {
            if (e["status"] != "Splits") continue;
            Subspace s = subspace_from_json(e["subobject"], m.dim(), n);
            Subspace c = subspace_from_json(e["complement"], m.dim(), n);
            check(m.is_phi_stable(s) && m.t_H(s) == m.t_N(s), "splitting subobject");
            check(verify_split_witness(m, s, c), "splitting complement witness");
        }
    }
    if (rep.contains("semisimple") && !rep["semisimple"].is_null() &&
        rep["semisimple"]["status"] == "Semisimple") {
        int total = 0;
        Subspace sum = Subspace::zero(m.dim());
        for (const auto& pj : rep["semisimple"]["decomposition"]) {
            Subspace part = subspace_from_json(pj, m.dim(), n);
            check(m.is_phi_stable(part) && m.t_H(part) == m.t_N(part),
                  "semisimple decomposition part");
            total += part.dim();
            sum = sum.sum(part);
        }
        check(total == m.dim() && sum.is_full(), "semisimple decomposition direct sum");
    }
    if (rep.contains("condition3") && !rep["condition3"].is_null() &&
        rep["condition3"]["status"] == "Witness") {
        CMat delta = matrix_from_json(rep["condition3"]["delta"], n);
        check(verify_polarization(m, delta), "polarization witness");
    }

    ordered_json out;
    out["witnesses_checked"] = checked;
    out["all_ok"] = failures.empty();
    ordered_json fj = ordered_json::array();
    for (const std::string& f : failures) fj.push_back(f);
    out["failures"] = fj;
    return out;
}

} // namespace fpmcert
