#include "cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fpmcert {

// reduce a coefficient vector (any length) mod Phi_n, return phi(n) coeffs
static std::vector<Rat> reduce_mod_phi(int n, std::vector<Rat> poly) {
    ZPoly phin = cyclotomic(n);
    int d = phin.degree();
    for (int k = static_cast<int>(poly.size()) - 1; k >= d; --k) {
        Rat f = poly[k];
        if (f == 0) continue;
        for (int i = 0; i <= d; ++i) poly[k - d + i] -= f * Rat(phin.c[i]);
    }
    poly.resize(d, Rat(0));
    for (auto& x : poly) x.canonicalize();
    return poly;
}

CycloElement::CycloElement(const Rat& r, int n) : n_(n), c_(euler_phi(n), Rat(0)) {
    c_[0] = r;
    c_[0].canonicalize();
}

CycloElement CycloElement::zeta(int n) {
    CycloElement z;
    z.n_ = n;
    std::vector<Rat> poly(2, Rat(0));
    poly[1] = 1;
    z.c_ = reduce_mod_phi(n, std::move(poly));
    return z;
}

CycloElement CycloElement::from_coeffs(int n, std::vector<Rat> coeffs) {
    CycloElement z;
    z.n_ = n;
    z.c_ = reduce_mod_phi(n, std::move(coeffs));
    return z;
}

bool CycloElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool CycloElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycloElement::rational_value() const {
    if (!is_rational()) throw ArithmeticError("not a rational element: " + to_string());
    return c_[0];
}

CycloElement CycloElement::promoted(int n) const {
    if (n == n_) return *this;
    if (n % n_ != 0) throw ArithmeticError("incompatible cyclotomic orders");
    int stride = n / n_;
    std::vector<Rat> poly(static_cast<size_t>(c_.size() - 1) * stride + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) poly[i * stride] = c_[i];
    return from_coeffs(n, std::move(poly));
}

void CycloElement::align(CycloElement& a, CycloElement& b) {
    if (a.n_ == b.n_) return;
    int n = std::lcm(a.n_, b.n_);
    a = a.promoted(n);
    b = b.promoted(n);
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    CycloElement x = a, y = b;
    CycloElement::align(x, y);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    CycloElement x = a, y = b;
    CycloElement::align(x, y);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

CycloElement operator-(const CycloElement& a) {
    CycloElement x = a;
    for (auto& v : x.c_) v = -v;
    return x;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    CycloElement x = a, y = b;
    CycloElement::align(x, y);
    std::vector<Rat> prod(x.c_.size() + y.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < y.c_.size(); ++j) prod[i + j] += x.c_[i] * y.c_[j];
    }
    return CycloElement::from_coeffs(x.n_, std::move(prod));
}

CycloElement operator/(const CycloElement& a, const CycloElement& b) {
    return a * b.inverse();
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    CycloElement x = a, y = b;
    CycloElement::align(x, y);
    return x.c_ == y.c_;
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero in Q(zeta_n)");
    if (is_rational()) {
        CycloElement r(Rat(1) / c_[0], n_);
        return r;
    }
    // extended Euclid in Q[X]: u*f + v*Phi_n = 1, inverse = u(zeta)
    QPoly f;
    f.c = c_;
    f.trim();
    QPoly g{QPoly(cyclotomic(n_))};
    QPoly r0 = g, r1 = f;
    QPoly s0, s1;
    s1.c = {Rat(1)}; // coefficients of f in the Bezout combination
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        QPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd (a nonzero constant since Phi_n is irreducible)
    Rat lead = r0.c.back();
    std::vector<Rat> u = s0.c;
    for (auto& x : u) x /= lead;
    return from_coeffs(n_, std::move(u));
}

CycloElement CycloElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElement r(Rat(1), n_), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

int CycloElement::compare(const CycloElement& b) const {
    CycloElement x = *this, y = b;
    align(x, y);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        int c = cmp(x.c_[i], y.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string CycloElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        Rat mag = abs(a);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ------------------------------------------------------------ embedding

static Int pow_int(const Int& p, int e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

static bool has_exact_order(const Int& r, int n, const Int& p) {
    Int nn(n), e;
    mpz_powm(e.get_mpz_t(), r.get_mpz_t(), nn.get_mpz_t(), p.get_mpz_t());
    if (e != 1) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime(Int(q))) continue;
        Int m(n / q);
        mpz_powm(e.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (e == 1) return false;
    }
    return true;
}

PadicEmbedding::PadicEmbedding(const Int& p, int n, int precision)
    : p_(p), n_(n), prec_(precision) {
    if (!is_prime(p)) throw InvalidPrime(p.get_str() + " is not prime");
    if (n < 1) throw ArithmeticError("cyclotomic order must be positive");
    if (precision < 1 || precision > kMaxPrecision)
        throw PrecisionExhausted("precision out of range [1, 4096]");
    if ((p - 1) % n != 0 && n != 1)
        throw NotSplit("p = " + p.get_str() + " is not 1 mod " + std::to_string(n));
    pN_ = pow_int(p_, prec_);
    // smallest positive residue of exact multiplicative order n mod p
    Int r = 0;
    for (Int cand = 1; cand < p_; ++cand) {
        if (has_exact_order(cand, n_, p_)) {
            r = cand;
            break;
        }
    }
    if (r == 0) throw NotSplit("no residue of order " + std::to_string(n) + " mod " + p.get_str());
    // Newton iteration on Phi_n, doubling the working precision
    ZPoly phi = cyclotomic(n_);
    ZPoly dphi = phi.derivative();
    Int mod = p_;
    root_ = r;
    int have = 1;
    while (have < prec_) {
        have = std::min(2 * have, prec_);
        mod = pow_int(p_, have);
        Int fx = phi.eval(root_) % mod;
        Int dfx = dphi.eval(root_) % mod;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw PrecisionExhausted("Hensel derivative not invertible");
        root_ = (root_ - fx * inv) % mod;
        if (root_ < 0) root_ += mod;
    }
    root_ %= pN_;
}

PadicEmbedding PadicEmbedding::with_precision(int precision) const {
    return PadicEmbedding(p_, n_, precision);
}

PadicEmbedding hensel_root(const Int& p, int n, int precision) {
    return PadicEmbedding(p, n, precision);
}

PadicApprox embed(const CycloElement& x, const PadicEmbedding& e) {
    CycloElement y = x;
    if (y.order() != e.order()) {
        if (y.is_rational()) y = CycloElement(y.rational_value(), 1);
        if (e.order() % y.order() != 0)
            throw ArithmeticError("element order does not divide embedding order");
        y = y.promoted(e.order());
    }
    if (y.is_zero()) return PadicApprox{std::nullopt, 0};
    const Int& p = e.prime();
    // clear denominators: y = (1/den) * sum num_i zeta^i
    Int den = 1;
    for (const auto& q : y.coeffs()) den = lcm(den, Int(q.get_den()));
    if (den % p == 0) throw DenominatorAtP("coefficient denominator divisible by " + p.get_str());
    const Int& mod = e.modulus();
    Int val = 0, zk = 1;
    for (const auto& q : y.coeffs()) {
        Int num = Int(q.get_num()) * (den / Int(q.get_den()));
        val = (val + num * zk) % mod;
        zk = (zk * e.root()) % mod;
    }
    if (val < 0) val += mod;
    if (val == 0)
        throw PrecisionExhausted("image vanishes mod p^" + std::to_string(e.precision()) +
                                 " without an exact-zero certificate");
    Int v = vp(val, p);
    Int unit = val / pow_int(p, static_cast<int>(v.get_si()));
    Int dinv;
    Int umod = mod / pow_int(p, static_cast<int>(v.get_si()));
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), umod.get_mpz_t());
    unit = (unit * dinv) % umod;
    return PadicApprox{v, unit};
}

std::optional<Int> valuation(const CycloElement& x0, const PadicEmbedding& e) {
    if (x0.is_zero()) return std::nullopt;
    // scale out powers of p in denominators: the valuation shifts back exactly
    Int den = 1;
    for (const auto& q : x0.coeffs()) den = lcm(den, Int(q.get_den()));
    Int shift = den % e.prime() == 0 ? vp(den, e.prime()) : Int(0);
    CycloElement x = x0;
    if (shift > 0) {
        Int scale = 1;
        for (Int i = 0; i < shift; ++i) scale *= e.prime();
        x = x * CycloElement(Rat(scale), x0.order());
    }
    auto adjust = [&](std::optional<Int> v) -> std::optional<Int> {
        if (v) *v -= shift;
        return v;
    };
    try {
        return adjust(embed(x, e).valuation);
    } catch (const PrecisionExhausted&) {
        // raise precision up to the norm-resultant bound, which certifies
        // the valuation of any nonzero element
        CycloElement y = x;
        if (y.order() != e.order()) {
            if (y.is_rational()) y = CycloElement(y.rational_value(), 1);
            y = y.promoted(e.order());
        }
        Int den = 1;
        for (const auto& q : y.coeffs()) den = lcm(den, Int(q.get_den()));
        ZPoly num;
        for (const auto& q : y.coeffs()) num.c.push_back(Int(q.get_num()) * (den / Int(q.get_den())));
        num.trim();
        Int norm = resultant(num, cyclotomic(e.order()));
        Int bound = vp(norm, e.prime());
        int needed = static_cast<int>(bound.get_si()) + 1;
        if (needed > kMaxPrecision)
            throw PrecisionExhausted("norm bound " + bound.get_str() + " exceeds the precision cap");
        PadicEmbedding e2 = e.with_precision(std::max(needed, e.precision()));
        return adjust(embed(x, e2).valuation); // cannot vanish mod p^(bound+1)
    }
}

} // namespace fpmcert
