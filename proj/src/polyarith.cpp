#include "polyarith.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fpmcert {

// ---------------------------------------------------------------- ZPoly

ZPoly ZPoly::constant(const Int& v) {
    ZPoly r;
    if (v != 0) r.c = {v};
    return r;
}

ZPoly ZPoly::monomial(int deg, const Int& lead) {
    ZPoly r;
    if (lead == 0) return r;
    r.c.assign(deg + 1, 0);
    r.c[deg] = lead;
    return r;
}

ZPoly ZPoly::of(std::initializer_list<long> coeffs) {
    ZPoly r;
    for (long v : coeffs) r.c.emplace_back(v);
    r.trim();
    return r;
}

void ZPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int& ZPoly::coeff(int i) const {
    static const Int zero = 0;
    if (i < 0 || i >= static_cast<int>(c.size())) return zero;
    return c[i];
}

ZPoly ZPoly::derivative() const {
    ZPoly r;
    for (int i = 1; i < static_cast<int>(c.size()); ++i) r.c.push_back(c[i] * i);
    r.trim();
    return r;
}

Int ZPoly::eval(const Int& x) const {
    Int v = 0;
    for (int i = degree(); i >= 0; --i) v = v * x + c[i];
    return v;
}

Rat ZPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (int i = degree(); i >= 0; --i) v = v * x + Rat(c[i]);
    return v;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    r.trim();
    return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

std::string ZPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        Int a = c[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        Int mag = abs(a);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero() || !b.is_monic()) throw ArithmeticError("divmod_monic: divisor must be monic");
    ZPoly r = a, q;
    int db = b.degree();
    if (a.degree() >= db) q.c.assign(a.degree() - db + 1, 0);
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Int f = r.lead();
        q.c[k] = f;
        for (int i = 0; i <= db; ++i) r.c[k + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return ZPoly{};
    ZPoly r = a, q;
    int db = b.degree();
    if (a.degree() < db) return std::nullopt;
    q.c.assign(a.degree() - db + 1, 0);
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Int f, rem;
        mpz_tdiv_qr(f.get_mpz_t(), rem.get_mpz_t(), r.lead().get_mpz_t(), b.lead().get_mpz_t());
        if (rem != 0) return std::nullopt;
        q.c[k] = f;
        for (int i = 0; i <= db; ++i) r.c[k + i] -= f * b.c[i];
        r.trim();
    }
    if (!r.is_zero()) return std::nullopt;
    q.trim();
    return q;
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(const ZPoly& z) {
    for (const auto& a : z.c) c.emplace_back(a);
}

void QPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat QPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (int i = degree(); i >= 0; --i) v = v * x + c[i];
    return v;
}

QPoly QPoly::derivative() const {
    QPoly r;
    for (int i = 1; i < static_cast<int>(c.size()); ++i) r.c.push_back(c[i] * i);
    r.trim();
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = (i < a.c.size() ? a.c[i] : Rat(0)) + (i < b.c.size() ? b.c[i] : Rat(0));
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = (i < a.c.size() ? a.c[i] : Rat(0)) - (i < b.c.size() ? b.c[i] : Rat(0));
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    QPoly r = a, q;
    int db = b.degree();
    if (a.degree() >= db) q.c.assign(a.degree() - db + 1, 0);
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Rat f = r.c.back() / b.c.back();
        q.c[k] = f;
        for (int i = 0; i <= db; ++i) r.c[k + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly f = a, g = b;
    while (!g.is_zero()) {
        QPoly r = divmod(f, g).second;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    Rat lead = f.c.back();
    for (auto& x : f.c) x /= lead;
    return f;
}

QPoly squarefree_part(const QPoly& a) {
    if (a.is_zero() || a.degree() == 0) return a;
    QPoly d = gcd(a, a.derivative());
    return divmod(a, d).first;
}

ZPoly squarefree_part(const ZPoly& a) {
    QPoly s = squarefree_part(QPoly(a));
    // clear denominators, make primitive with positive leading coefficient
    Int den = 1;
    for (const auto& x : s.c) den = lcm(den, Int(x.get_den()));
    ZPoly r;
    for (const auto& x : s.c) r.c.push_back(Int(x.get_num()) * (den / Int(x.get_den())));
    r.trim();
    if (r.is_zero()) return r;
    Int g = 0;
    for (const auto& x : r.c) g = gcd(g, x);
    if (r.lead() < 0) g = -g;
    for (auto& x : r.c) x /= g;
    return r;
}

// ------------------------------------------------------- Newton polygon

bool NewtonPolygon::pure_slope(const Rat& s) const {
    return slopes.size() == 1 && slopes[0].first == s;
}

NewtonPolygon newton_polygon(const ZPoly& h, const Int& p) {
    if (h.is_zero()) throw ZeroPolynomial("newton_polygon of the zero polynomial");
    std::vector<std::pair<int, Int>> pts;
    for (int i = 0; i <= h.degree(); ++i)
        if (h.coeff(i) != 0) pts.emplace_back(i, vp(h.coeff(i), p));
    return newton_polygon_points(pts);
}

NewtonPolygon newton_polygon_points(const std::vector<std::pair<int, Int>>& pts) {
    if (pts.empty()) throw ZeroPolynomial("newton polygon of the zero polynomial");
    // lower convex hull, abscissae already increasing
    std::vector<std::pair<int, Int>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if it lies strictly below segment a--pt
            Int cross = (b.second - a.second) * (pt.first - a.first) -
                        (pt.second - a.second) * (b.first - a.first);
            if (cross >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    NewtonPolygon np;
    np.vertices = hull;
    // slopes as root valuations: the negated hull slopes, ascending
    for (size_t k = 1; k < hull.size(); ++k) {
        int run = hull[k].first - hull[k - 1].first;
        Rat slope = Rat(hull[k - 1].second - hull[k].second) / run;
        slope.canonicalize();
        np.slopes.emplace_back(slope, run);
    }
    std::sort(np.slopes.begin(), np.slopes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return np;
}

// ---------------------------------------------------------- cyclotomic

ZPoly cyclotomic(int n) {
    static std::map<int, ZPoly> cache;
    if (n < 1) throw ArithmeticError("cyclotomic order must be positive");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ZPoly xn1 = ZPoly::monomial(n) - ZPoly::constant(1);
    ZPoly phi = xn1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        phi = divmod_monic(phi, cyclotomic(d)).first;
    }
    cache[n] = phi;
    return phi;
}

int euler_phi(int n) {
    int result = n, m = n;
    for (int q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            result -= result / q;
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Int vp(const Int& x, const Int& p) {
    if (x == 0) throw ArithmeticError("valuation of zero");
    Int v = 0, y = x, r, q;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        y = q;
        v += 1;
    }
}

Rat vp(const Rat& x, const Int& p) {
    if (x == 0) throw ArithmeticError("valuation of zero");
    return Rat(vp(Int(x.get_num()), p) - vp(Int(x.get_den()), p));
}

// --------------------------------------------------------------- Sturm

int sign_at(const QPoly& g, const Endpoint& e) {
    if (g.is_zero()) return 0;
    switch (e.kind) {
        case Endpoint::Kind::NegInf: {
            int s = sgn(g.c.back());
            return (g.degree() % 2 == 0) ? s : -s;
        }
        case Endpoint::Kind::PosInf:
            return sgn(g.c.back());
        case Endpoint::Kind::Rational:
            return sgn(g.eval(e.q));
        case Endpoint::Kind::Surd: {
            // g(c*sqrt(m)) = ge(c^2 m) + c*sqrt(m)*go(c^2 m), compared via squares
            if (e.m == 0) return sgn(g.eval(Rat(0)));
            Rat t = e.q * e.q * Rat(e.m);
            QPoly ge, go;
            for (int i = 0; i <= g.degree(); ++i)
                ((i % 2 == 0) ? ge : go).c.push_back(g.c[i]);
            ge.trim();
            go.trim();
            Rat A = ge.eval(t);
            Rat B = e.q * go.eval(t);
            int sa = sgn(A), sb = sgn(B);
            if (sb == 0) return sa;
            if (sa == 0) return sb;
            if (sa == sb) return sa;
            int cmpsq = cmp(A * A, B * B * Rat(e.m));
            if (cmpsq == 0) return 0;
            return cmpsq > 0 ? sa : sb;
        }
    }
    return 0;
}

static int sign_variations(const std::vector<QPoly>& chain, const Endpoint& e) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        int s = sign_at(f, e);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sturm_roots_in_interval(const ZPoly& g, const Endpoint& lo, const Endpoint& hi) {
    if (g.is_zero()) throw ZeroPolynomial("Sturm count of the zero polynomial");
    QPoly f = squarefree_part(QPoly(g));
    if (f.degree() <= 0) return 0;
    std::vector<QPoly> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        for (auto& x : r.c) x = -x;
        if (r.is_zero()) break;
        chain.push_back(r);
    }
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

// ----------------------------------------------------------- resultant

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
static ZPoly prem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    int db = b.degree();
    Int lb = b.lead();
    int e = a.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Int f = r.lead();
        // r = lb*r - f*X^k*b
        for (auto& x : r.c) x *= lb;
        for (int i = 0; i <= db; ++i) r.c[k + i] -= f * b.c[i];
        r.trim();
        --e;
    }
    if (e > 0) {
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), e);
        for (auto& x : r.c) x *= scale;
    }
    return r;
}

// Subresultant PRS resultant in the standard convention
// res(f,g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f.
static Int resultant_std(ZPoly A, ZPoly B) {
    if (A.is_zero() || B.is_zero()) throw ZeroPolynomial("resultant with zero polynomial");
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() % 2) && (B.degree() % 2)) s = -s;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), B.lead().get_mpz_t(), A.degree());
        return s * r;
    }
    // contents out
    auto content = [](const ZPoly& f) {
        Int g = 0;
        for (const auto& x : f.c) g = gcd(g, x);
        return g;
    };
    Int ca = content(A), cb = content(B);
    for (auto& x : A.c) x /= ca;
    for (auto& x : B.c) x /= cb;
    Int t = 1, tmp;
    mpz_pow_ui(tmp.get_mpz_t(), ca.get_mpz_t(), B.degree());
    t *= tmp;
    mpz_pow_ui(tmp.get_mpz_t(), cb.get_mpz_t(), A.degree());
    t *= tmp;
    Int g = 1, h = 1;
    for (;;) {
        int d1 = A.degree(), d2 = B.degree();
        int delta = d1 - d2;
        if ((d1 % 2) && (d2 % 2)) s = -s;
        ZPoly R = prem(A, B);
        A = B;
        Int divisor = g, hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), delta);
        divisor *= hp;
        B = R;
        for (auto& x : B.c) x /= divisor;
        g = A.lead();
        if (delta > 0) {
            Int ge;
            mpz_pow_ui(ge.get_mpz_t(), g.get_mpz_t(), delta);
            Int he;
            mpz_pow_ui(he.get_mpz_t(), h.get_mpz_t(), delta - 1);
            h = ge / he;
        }
        if (B.is_zero()) return 0;
        if (B.degree() == 0) {
            Int le;
            mpz_pow_ui(le.get_mpz_t(), B.lead().get_mpz_t(), A.degree());
            Int he;
            mpz_pow_ui(he.get_mpz_t(), h.get_mpz_t(), A.degree() - 1);
            return s * t * (le / he);
        }
    }
}

Int resultant(const ZPoly& f, const ZPoly& g) {
    // convention fixed by resultant(X-a, X-b) = b-a, i.e. the standard
    // resultant with arguments swapped
    return resultant_std(g, f);
}

} // namespace fpmcert
