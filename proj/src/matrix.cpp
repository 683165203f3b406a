#include "matrix.hpp"

#include <sstream>

namespace fpmcert {

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycloElement(Rat(1));
    return m;
}

CMat CMat::from_rows(std::vector<std::vector<CycloElement>> rows) {
    if (rows.empty()) return {};
    CMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw ArithmeticError("ragged rows in matrix construction");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<CycloElement> CMat::row(int i) const {
    std::vector<CycloElement> v(c_);
    for (int j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

CMat CMat::transpose() const {
    CMat t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

CMat operator*(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows()) throw ArithmeticError("matrix product shape mismatch");
    CMat m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

CMat operator+(const CMat& a, const CMat& b) {
    CMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
    return m;
}

CMat operator-(const CMat& a, const CMat& b) {
    CMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
    return m;
}

bool operator==(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

CMat CMat::scaled(const CycloElement& s) const {
    CMat m = *this;
    for (auto& x : m.a_) x = x * s;
    return m;
}

std::vector<CycloElement> CMat::apply(const std::vector<CycloElement>& v) const {
    if (static_cast<int>(v.size()) != c_) throw ArithmeticError("vector length mismatch");
    std::vector<CycloElement> w(r_, CycloElement(Rat(0)));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (!at(i, j).is_zero()) w[i] += at(i, j) * v[j];
    return w;
}

std::pair<CMat, std::vector<int>> CMat::rref() const {
    CMat m = *this;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.c_ && row < m.r_; ++col) {
        int pr = -1;
        for (int i = row; i < m.r_; ++i)
            if (!m.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.c_; ++j) std::swap(m.at(pr, j), m.at(row, j));
        CycloElement inv = m.at(row, col).inverse();
        for (int j = col; j < m.c_; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.r_; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            CycloElement f = m.at(i, col);
            for (int j = col; j < m.c_; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

int CMat::rank() const { return static_cast<int>(rref().second.size()); }

CycloElement CMat::det() const {
    if (r_ != c_) throw ArithmeticError("determinant of a non-square matrix");
    CMat m = *this;
    CycloElement d{Rat(1)};
    for (int col = 0; col < c_; ++col) {
        int pr = -1;
        for (int i = col; i < r_; ++i)
            if (!m.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) return CycloElement(Rat(0));
        if (pr != col) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(pr, j), m.at(col, j));
            d = -d;
        }
        d = d * m.at(col, col);
        CycloElement inv = m.at(col, col).inverse();
        for (int i = col + 1; i < r_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            CycloElement f = m.at(i, col) * inv;
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

CMat CMat::inverse() const {
    if (r_ != c_) throw ArithmeticError("inverse of a non-square matrix");
    CMat aug(r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = CycloElement(Rat(1));
    }
    auto [rr, piv] = aug.rref();
    for (int i = 0; i < r_; ++i)
        if (static_cast<int>(piv.size()) <= i || piv[i] != i)
            throw ArithmeticError("matrix is singular");
    CMat inv(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) inv.at(i, j) = rr.at(i, c_ + j);
    return inv;
}

CycloElement CMat::trace() const {
    CycloElement t{Rat(0)};
    for (int i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
    return t;
}

CMat CMat::kernel() const {
    auto [rr, piv] = rref();
    std::vector<bool> is_pivot(c_, false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<std::vector<CycloElement>> basis;
    for (int j = 0; j < c_; ++j) {
        if (is_pivot[j]) continue;
        std::vector<CycloElement> v(c_, CycloElement(Rat(0)));
        v[j] = CycloElement(Rat(1));
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -rr.at(static_cast<int>(k), j);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return CMat(0, c_);
    return CMat::from_rows(std::move(basis)).rref().first;
}

CPoly CMat::char_poly() const {
    if (r_ != c_) throw ArithmeticError("characteristic polynomial of a non-square matrix");
    int n = r_;
    std::vector<CycloElement> coeffs(n + 1, CycloElement(Rat(0)));
    coeffs[n] = CycloElement(Rat(1));
    CMat M = CMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        M = (*this) * M;
        CycloElement ck = M.trace() * CycloElement(Rat(-1, k));
        coeffs[n - k] = ck;
        for (int i = 0; i < n; ++i) M.at(i, i) += ck;
    }
    return CPoly(std::move(coeffs));
}

CMat CMat::eval_poly(const CPoly& p) const {
    CMat acc(r_, c_);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * (*this);
        for (int d = 0; d < r_; ++d) acc.at(d, d) += p.c[i];
    }
    return acc;
}

std::string CMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    }
    os << "]";
    return os.str();
}

// ------------------------------------------------------------- Subspace

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = CMat(0, ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = CMat::identity(ambient);
    for (int i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
}

Subspace Subspace::span(int ambient, const std::vector<std::vector<CycloElement>>& vectors) {
    Subspace s;
    s.ambient_ = ambient;
    if (vectors.empty()) {
        s.basis_ = CMat(0, ambient);
        return s;
    }
    auto [rr, piv] = CMat::from_rows(vectors).rref();
    CMat b(static_cast<int>(piv.size()), ambient);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < ambient; ++j) b.at(i, j) = rr.at(i, j);
    s.basis_ = b;
    s.pivots_ = piv;
    return s;
}

bool Subspace::contains(const std::vector<CycloElement>& v) const {
    std::vector<CycloElement> w = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        CycloElement f = w[pivots_[i]];
        if (f.is_zero()) continue;
        for (int j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& w) const {
    for (int i = 0; i < w.basis_.rows(); ++i)
        if (!contains(w.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& w) const {
    std::vector<std::vector<CycloElement>> rows;
    for (int i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
    for (int i = 0; i < w.basis_.rows(); ++i) rows.push_back(w.basis_.row(i));
    return span(ambient_, rows);
}

Subspace Subspace::annihilator() const {
    CMat k = basis_.rows() == 0 ? CMat::identity(ambient_) : basis_.kernel();
    std::vector<std::vector<CycloElement>> rows;
    for (int i = 0; i < k.rows(); ++i) rows.push_back(k.row(i));
    return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& w) const {
    return annihilator().sum(w.annihilator()).annihilator();
}

Subspace Subspace::image(const CMat& m) const {
    std::vector<std::vector<CycloElement>> rows;
    for (int i = 0; i < basis_.rows(); ++i) rows.push_back(m.apply(basis_.row(i)));
    return span(m.rows(), rows);
}

std::vector<int> Subspace::non_pivot_coords() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<int> np;
    for (int j = 0; j < ambient_; ++j)
        if (!is_pivot[j]) np.push_back(j);
    return np;
}

std::vector<CycloElement> Subspace::coordinates(const std::vector<CycloElement>& v) const {
    std::vector<CycloElement> w = v, coords(basis_.rows(), CycloElement(Rat(0)));
    for (int i = 0; i < basis_.rows(); ++i) {
        CycloElement f = w[pivots_[i]];
        coords[i] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
    for (const auto& x : w)
        if (!x.is_zero()) throw ArithmeticError("vector not in subspace");
    return coords;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

int Subspace::compare(const Subspace& b) const {
    if (dim() != b.dim()) return dim() < b.dim() ? -1 : 1;
    for (int i = 0; i < basis_.rows(); ++i)
        for (int j = 0; j < ambient_; ++j) {
            int c = basis_.at(i, j).compare(b.basis_.at(i, j));
            if (c != 0) return c;
        }
    return 0;
}

std::string Subspace::to_string() const {
    return basis_.to_string();
}

} // namespace fpmcert
