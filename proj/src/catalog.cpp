#include "catalog.hpp"

#include <numeric>
#include <sstream>

namespace fpmcert {

namespace {

CycloElement czero(int n) { return CycloElement(Rat(0), n); }
CycloElement cone(int n) { return CycloElement(Rat(1), n); }

/// Block diagonal of companion matrices of X^2 + a_i X + b_i (column
/// convention: columns (0,1) and (-b,-a)).
CMat companion_blocks(int n, const std::vector<std::pair<CycloElement, CycloElement>>& ab) {
    int d = 2 * static_cast<int>(ab.size());
    CMat f(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) f.at(i, j) = czero(n);
    for (size_t k = 0; k < ab.size(); ++k) {
        int o = 2 * static_cast<int>(k);
        f.at(o + 1, o) = cone(n);
        f.at(o, o + 1) = -ab[k].second;     // -b
        f.at(o + 1, o + 1) = -ab[k].first;  // -a
    }
    return f;
}

/// Fil^1 = span(x1, y1+x2, y2+x3, ..., y_{m-1}+x_m) for m blocks.
Subspace chain_filtration(int n, int m) {
    int d = 2 * m;
    std::vector<std::vector<CycloElement>> rows;
    std::vector<CycloElement> x1(d, czero(n));
    x1[0] = cone(n);
    rows.push_back(x1);
    for (int j = 1; j < m; ++j) {
        std::vector<CycloElement> v(d, czero(n));
        v[2 * j - 1] = cone(n);
        v[2 * j] = cone(n);
        rows.push_back(v);
    }
    return Subspace::span(d, rows);
}

std::string coeff_list(const ZPoly& h) {
    std::string s = "[";
    for (size_t i = 0; i < h.c.size(); ++i) {
        if (i) s += ",";
        s += h.c[i].get_str();
    }
    return s + "]";
}

ZPoly quadratic(const Int& a, const Int& b) {
    return ZPoly({b, a, Int(1)});
}

FilteredPhiModule make_module(const Int& p, int n, int precision, CMat f, Subspace fil1) {
    ScalarContext sc(p, n, precision);
    return FilteredPhiModule(sc, std::move(f), {{1, std::move(fil1)}});
}

void require_split(const Int& p, int n) {
    if (n > 1 && (p - 1) % n != 0)
        throw NotSplit("p = " + p.get_str() + " is not 1 mod " + std::to_string(n));
}

} // namespace

CatalogEntry example_ss_square(const Int& p, int precision) {
    if (!is_prime(p)) throw InvalidPrime(p.get_str() + " is not prime");
    CMat f = companion_blocks(1, {{czero(1), CycloElement(Rat(p), 1)},
                                  {czero(1), CycloElement(Rat(p), 1)}});
    ZPoly x2p = ZPoly({p, Int(0), Int(1)});
    CatalogEntry e{"ss-square", p, 1, "p=" + p.get_str(),
                   make_module(p, 1, precision, f, chain_filtration(1, 2)), {}};
    e.expected = {
        {"char_poly", coeff_list(x2p * x2p)},
        {"supersingular", "true"},
        {"admissible", "Admissible"},
        {"t_H(D)", "2"}, {"t_N(D)", "2"},
        {"t_N(D1)", "1"}, {"t_N(D2)", "1"},
        {"t_H(D1)", "1"}, {"t_H(D2)", "0"},
        {"polarization", "Witness"},
        {"semisimple", "NotSemisimple", /*disputed=*/true},
    };
    return e;
}

namespace {

CatalogEntry zeta_pair_entry(const std::string& name, const Int& p, int n, int precision,
                             long exponent) {
    if (!is_prime(p)) throw InvalidPrime(p.get_str() + " is not prime");
    require_split(p, n);
    CycloElement z = CycloElement::zeta(n).pow(exponent);
    CycloElement pe(Rat(p), n);
    CMat f = companion_blocks(n, {{czero(n), -(z * pe)}, {czero(n), -(z.inverse() * pe)}});
    CatalogEntry e{name, p, n, "p=" + p.get_str() + " n=" + std::to_string(n),
                   make_module(p, n, precision, f, chain_filtration(n, 2)), {}};
    return e;
}

} // namespace

CatalogEntry example_simple_ss(const Int& p, int precision) {
    CatalogEntry e = zeta_pair_entry("simple-ss", p, 3, precision, 1);
    Int p2 = p * p;
    e.expected = {
        {"char_poly", coeff_list(ZPoly({p2, Int(0), p, Int(0), Int(1)}))},
        {"supersingular", "true"},
        {"admissible", "Admissible"},
        {"split(D1)", "NonSplit"},
        {"semisimple", "NotSemisimple"},
        {"polarization", "Witness"},
    };
    return e;
}

CatalogEntry example_variant(const Int& p, VariantKind kind, int precision) {
    int n = (kind == VariantKind::Zeta6) ? 6 : 4;
    CatalogEntry e = zeta_pair_entry(kind == VariantKind::Zeta6 ? "zeta6" : "zeta4", p, n,
                                     precision, 1);
    Int p2 = p * p;
    ZPoly cp = (kind == VariantKind::Zeta6) ? ZPoly({p2, Int(0), -p, Int(0), Int(1)})
                                            : ZPoly({p2, Int(0), Int(0), Int(0), Int(1)});
    e.expected = {
        {"char_poly", coeff_list(cp)},
        {"supersingular", "true"},
    };
    return e;
}

CatalogEntry example_cyclotomic(int n, const Int& p, int precision) {
    if (n < 3) throw SchemaError("cyclotomic family needs n >= 3");
    if (!is_prime(p)) throw InvalidPrime(p.get_str() + " is not prime");
    require_split(p, n);
    // units of Z/n ascending: e pairs with n-e across the antidiagonal
    std::vector<long> units;
    for (long e = 1; e < n; ++e)
        if (std::gcd(e, static_cast<long>(n)) == 1) units.push_back(e);
    int d = static_cast<int>(units.size());
    CycloElement z = CycloElement::zeta(n), pe(Rat(p), n);
    std::vector<std::pair<CycloElement, CycloElement>> ab;
    for (long e : units) ab.push_back({czero(n), -(z.pow(e) * pe)});
    CMat f = companion_blocks(n, ab);
    CatalogEntry entry{"cyclotomic", p, n, "p=" + p.get_str() + " n=" + std::to_string(n),
                       make_module(p, n, precision, f, chain_filtration(n, d)), {}};
    entry.expected = {
        {"char_poly", coeff_list(cyclotomic_weil_family(n, p))},
        {"supersingular", "true"},
    };
    return entry;
}

CatalogEntry remark_distinct_curves(const Int& p, const Int& a1, const Int& a2, int precision) {
    if (!is_prime(p)) throw InvalidPrime(p.get_str() + " is not prime");
    if (a1 == a2) throw EqualCoefficients("the two quadratics must differ");
    for (const Int& a : {a1, a2}) {
        ZPoly q = quadratic(a, p);
        WeilVerdict w = is_weil(q, p);
        if (!w.is_weil)
            throw NotSupersingularFactor(q.to_string() + " is not a Weil polynomial (" +
                                         to_string(*w.failure_reason) + ")");
        if (!is_supersingular(q, p).is_supersingular)
            throw NotSupersingularFactor(q.to_string() + " is not supersingular");
    }
    CMat f = companion_blocks(1, {{CycloElement(Rat(a1), 1), CycloElement(Rat(p), 1)},
                                  {CycloElement(Rat(a2), 1), CycloElement(Rat(p), 1)}});
    CatalogEntry e{"distinct-curves", p, 1,
                   "p=" + p.get_str() + " a1=" + a1.get_str() + " a2=" + a2.get_str(),
                   make_module(p, 1, precision, f, chain_filtration(1, 2)), {}};
    e.expected = {
        {"char_poly", coeff_list(quadratic(a1, p) * quadratic(a2, p))},
        {"admissible", "Admissible"},
        {"polarization", "NoneFound"},
    };
    return e;
}

CatalogEntry example_nfold(const Int& p, int m, int precision) {
    if (!is_prime(p)) throw InvalidPrime(p.get_str() + " is not prime");
    if (m < 2) throw SchemaError("nfold needs m >= 2");
    std::vector<std::pair<CycloElement, CycloElement>> ab(
        m, {czero(1), CycloElement(Rat(p), 1)});
    CMat f = companion_blocks(1, ab);
    ZPoly x2p = ZPoly({p, Int(0), Int(1)}), cp = ZPoly::constant(1);
    for (int i = 0; i < m; ++i) cp = cp * x2p;
    CatalogEntry e{"nfold", p, 1, "p=" + p.get_str() + " m=" + std::to_string(m),
                   make_module(p, 1, precision, f, chain_filtration(1, m)), {}};
    e.expected = {
        {"char_poly", coeff_list(cp)},
        {"supersingular", "true"},
    };
    return e;
}

std::vector<std::string> catalog_names() {
    return {"ss-square", "simple-ss", "zeta6", "zeta4", "cyclotomic", "distinct-curves", "nfold"};
}

CatalogEntry catalog_entry(const std::string& name, const CatalogParams& params) {
    if (name == "ss-square") return example_ss_square(params.p, params.precision);
    if (name == "simple-ss") return example_simple_ss(params.p, params.precision);
    if (name == "zeta6") return example_variant(params.p, VariantKind::Zeta6, params.precision);
    if (name == "zeta4") return example_variant(params.p, VariantKind::Zeta4, params.precision);
    if (name == "cyclotomic") {
        if (!params.n) throw SchemaError("cyclotomic entry needs n");
        return example_cyclotomic(*params.n, params.p, params.precision);
    }
    if (name == "distinct-curves") {
        if (!params.a1 || !params.a2) throw SchemaError("distinct-curves entry needs a1 and a2");
        return remark_distinct_curves(params.p, *params.a1, *params.a2, params.precision);
    }
    if (name == "nfold") {
        if (!params.m) throw SchemaError("nfold entry needs m");
        return example_nfold(params.p, *params.m, params.precision);
    }
    throw SchemaError("unknown catalog entry: " + name);
}

} // namespace fpmcert
