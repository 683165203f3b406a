#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace fpmcert {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

/// Recursive-descent evaluator for the entry-expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' integer)?
///   atom   := integer | 'p' | 'z' | '(' expr ')'
class EntryParser {
public:
    EntryParser(const std::string& s, const Int& p, int n) : s_(s), p_(p), n_(n) {}

    CycloElement run() {
        CycloElement v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    const std::string& s_;
    Int p_;
    int n_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("entry expression \"" + s_ + "\" at position " +
                         std::to_string(pos_) + ": " + why);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    CycloElement expr() {
        CycloElement v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    CycloElement term() {
        CycloElement v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                CycloElement d = factor();
                if (d.is_zero()) throw ArithmeticError("division by zero in \"" + s_ + "\"");
                v = v / d;
            } else {
                return v;
            }
        }
    }
    CycloElement factor() {
        if (eat('-')) return -factor();
        CycloElement v = atom();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected integer exponent");
            long e = std::stol(s_.substr(start, pos_ - start));
            if (neg) {
                if (v.is_zero()) throw ArithmeticError("zero to a negative power in \"" + s_ + "\"");
                v = v.inverse();
            }
            v = v.pow(e);
        }
        return v;
    }
    CycloElement atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            CycloElement v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'p') { ++pos_; return CycloElement(Rat(p_), 1); }
        if (c == 'z') {
            ++pos_;
            if (n_ == 1)
                throw ArithmeticError("z used with cyclo_order 1 in \"" + s_ + "\"");
            return CycloElement::zeta(n_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return CycloElement(Rat(Int(s_.substr(start, pos_ - start))), 1);
        }
        fail("unexpected character");
    }
};

CycloElement entry_from_json(const json& v, const Int& p, int n) {
    if (v.is_number_integer()) return CycloElement(Rat(static_cast<long>(v.get<long long>())), 1);
    if (v.is_string()) return parse_entry(v.get<std::string>(), p, n);
    throw SchemaError("matrix entries must be integers or expression strings");
}

std::vector<std::vector<CycloElement>> matrix_from_json(const json& rows, const Int& p, int n,
                                                        const char* what) {
    if (!rows.is_array() || rows.empty())
        throw SchemaError(std::string(what) + " must be a non-empty array of rows");
    std::vector<std::vector<CycloElement>> out;
    for (const json& r : rows) {
        if (!r.is_array()) throw SchemaError(std::string(what) + " rows must be arrays");
        std::vector<CycloElement> row;
        for (const json& v : r) row.push_back(entry_from_json(v, p, n));
        out.push_back(std::move(row));
    }
    return out;
}

long int_field(const json& o, const char* key) {
    if (!o.at(key).is_number_integer()) throw SchemaError(std::string(key) + " must be an integer");
    return o.at(key).get<long>();
}

} // namespace

CycloElement parse_entry(const std::string& expr, const Int& p, int n) {
    return EntryParser(expr, p, n).run();
}

ModuleConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw SchemaError("config must be a JSON object");
    static const std::vector<std::string> known = {"prime", "cyclo_order", "precision",
                                                  "frobenius", "filtration"};
    for (auto it = root.begin(); it != root.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw SchemaError("unknown config field: " + it.key());
    }
    for (const char* req : {"prime", "frobenius", "filtration"})
        if (!root.contains(req)) throw SchemaError(std::string("missing config field: ") + req);

    ModuleConfig cfg;
    cfg.prime = Int(int_field(root, "prime"));
    if (!is_prime(cfg.prime)) throw InvalidPrime(cfg.prime.get_str() + " is not prime");
    if (root.contains("cyclo_order")) {
        cfg.cyclo_order = static_cast<int>(int_field(root, "cyclo_order"));
        if (cfg.cyclo_order < 1) throw SchemaError("cyclo_order must be positive");
    }
    if (root.contains("precision")) {
        cfg.precision = static_cast<int>(int_field(root, "precision"));
        if (cfg.precision < 1 || cfg.precision > kMaxPrecision)
            throw SchemaError("precision out of range");
    }

    cfg.frobenius = matrix_from_json(root.at("frobenius"), cfg.prime, cfg.cyclo_order, "frobenius");
    size_t d = cfg.frobenius.size();
    for (const auto& row : cfg.frobenius)
        if (row.size() != d) throw SchemaError("frobenius matrix must be square");

    if (!root.at("filtration").is_array())
        throw SchemaError("filtration must be an array of {level, basis} steps");
    for (const json& step : root.at("filtration")) {
        if (!step.is_object() || !step.contains("level") || !step.contains("basis"))
            throw SchemaError("each filtration step needs level and basis");
        for (auto it = step.begin(); it != step.end(); ++it)
            if (it.key() != "level" && it.key() != "basis")
                throw SchemaError("unknown filtration field: " + it.key());
        int level = static_cast<int>(int_field(step, "level"));
        std::vector<std::vector<CycloElement>> basis;
        if (!step.at("basis").is_array())
            throw SchemaError("filtration basis must be an array");
        if (!step.at("basis").empty())
            basis = matrix_from_json(step.at("basis"), cfg.prime, cfg.cyclo_order, "filtration basis");
        for (const auto& v : basis)
            if (v.size() != d) throw SchemaError("filtration basis vector has wrong length");
        if (cfg.filtration.count(level)) throw SchemaError("duplicate filtration level");
        cfg.filtration[level] = std::move(basis);
    }
    if (cfg.filtration.empty()) throw SchemaError("filtration must contain at least one step");
    return cfg;
}

FilteredPhiModule build_module(const ModuleConfig& cfg) {
    int d = static_cast<int>(cfg.frobenius.size());
    ScalarContext sc(cfg.prime, cfg.cyclo_order, cfg.precision);
    CMat f = CMat::from_rows(cfg.frobenius);
    std::map<int, Subspace> steps;
    for (const auto& [level, basis] : cfg.filtration)
        steps[level] = basis.empty() ? Subspace::zero(d) : Subspace::span(d, basis);
    return FilteredPhiModule(sc, f, steps);
}

std::string entry_string(const CycloElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    const auto& c = x.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        std::string term = c[i].get_num().get_str();
        if (c[i].get_den() != 1) term += "/" + c[i].get_den().get_str();
        if (i > 0) {
            term = "(" + term + ")*z";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

std::string emit_config(const FilteredPhiModule& m) {
    ordered_json root;
    root["prime"] = m.scalars().p.get_str();
    // prime fits an integer in all catalog uses; keep numeric when possible
    if (m.scalars().p.fits_slong_p()) root["prime"] = m.scalars().p.get_si();
    root["cyclo_order"] = m.scalars().n;
    root["precision"] = m.scalars().precision;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(entry_string(m.frobenius().at(i, j)));
        rows.push_back(row);
    }
    root["frobenius"] = rows;
    ordered_json fil = ordered_json::array();
    for (const auto& [level, sub] : m.fil_steps()) {
        ordered_json step;
        step["level"] = level;
        ordered_json basis = ordered_json::array();
        for (int i = 0; i < sub.dim(); ++i) {
            ordered_json v = ordered_json::array();
            for (int j = 0; j < sub.ambient(); ++j) v.push_back(entry_string(sub.basis().at(i, j)));
            basis.push_back(v);
        }
        step["basis"] = basis;
        fil.push_back(step);
    }
    root["filtration"] = fil;
    return root.dump(2) + "\n";
}

} // namespace fpmcert
