#include "cyclopoly.hpp"

#include <algorithm>
#include <sstream>

namespace fpmcert {

CPoly::CPoly(const ZPoly& z, int n) {
    for (const auto& a : z.c) c.emplace_back(CycloElement(Rat(a), n));
    trim();
}

void CPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

bool CPoly::is_monic() const {
    return !c.empty() && c.back() == CycloElement(Rat(1));
}

CPoly CPoly::monic() const {
    if (is_zero()) return *this;
    CPoly r = *this;
    CycloElement inv = c.back().inverse();
    for (auto& x : r.c) x = x * inv;
    return r;
}

CPoly CPoly::derivative() const {
    CPoly r;
    for (int i = 1; i < static_cast<int>(c.size()); ++i)
        r.c.push_back(c[i] * CycloElement(Rat(i)));
    r.trim();
    return r;
}

CycloElement CPoly::eval(const CycloElement& x) const {
    CycloElement v{Rat(0)};
    for (int i = degree(); i >= 0; --i) v = v * x + c[i];
    return v;
}

bool CPoly::has_rational_integer_coeffs() const {
    for (const auto& a : c)
        if (!a.is_rational() || Int(a.rational_value().get_den()) != 1) return false;
    return true;
}

ZPoly CPoly::to_zpoly() const {
    ZPoly r;
    for (const auto& a : c) {
        if (!a.is_rational() || Int(a.rational_value().get_den()) != 1)
            throw NonIntegerCharPoly("coefficient " + a.to_string() + " is not a rational integer");
        r.c.push_back(Int(a.rational_value().get_num()));
    }
    r.trim();
    return r;
}

CPoly operator+(const CPoly& a, const CPoly& b) {
    CPoly r;
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t i = 0; i < n; ++i) {
        CycloElement v{Rat(0)};
        if (i < a.c.size()) v += a.c[i];
        if (i < b.c.size()) v += b.c[i];
        r.c.push_back(v);
    }
    r.trim();
    return r;
}

CPoly operator-(const CPoly& a, const CPoly& b) {
    CPoly r;
    size_t n = std::max(a.c.size(), b.c.size());
    for (size_t i = 0; i < n; ++i) {
        CycloElement v{Rat(0)};
        if (i < a.c.size()) v += a.c[i];
        if (i < b.c.size()) v -= b.c[i];
        r.c.push_back(v);
    }
    r.trim();
    return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    CPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, CycloElement(Rat(0)));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

bool operator==(const CPoly& a, const CPoly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}

std::string CPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int i = degree(); i >= 0; --i) {
        if (c[i].is_zero()) continue;
        if (i < degree()) os << " + ";
        os << "(" << c[i].to_string() << ")";
        if (i > 0) os << "*X";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    CPoly r = a, q;
    int db = b.degree();
    CycloElement linv = b.lead().inverse();
    if (a.degree() >= db) q.c.assign(a.degree() - db + 1, CycloElement(Rat(0)));
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        CycloElement f = r.lead() * linv;
        q.c[k] = f;
        for (int i = 0; i <= db; ++i) r.c[k + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

CPoly gcd(const CPoly& a, const CPoly& b) {
    CPoly f = a, g = b;
    while (!g.is_zero()) {
        CPoly r = divmod(f, g).second;
        f = g;
        g = r;
    }
    return f.monic();
}

CPoly squarefree_part(const CPoly& a) {
    if (a.is_zero() || a.degree() == 0) return a;
    CPoly d = gcd(a, a.derivative());
    return divmod(a, d).first;
}

CPoly cpoly_pow(const CPoly& a, int e) {
    CPoly r(ZPoly::constant(1));
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

} // namespace fpmcert
