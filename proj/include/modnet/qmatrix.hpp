#pragma once

#include "modnet/rational.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace modnet {

// Dense matrix over Q. Row-major; small dimensions only.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static QMatrix column(const std::vector<Scalar>& v) {
        QMatrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }
    // columns given as vectors
    static QMatrix from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t nrows) {
        QMatrix m(nrows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != nrows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Scalar> col(std::size_t j) const {
        std::vector<Scalar> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<Scalar> row(std::size_t i) const {
        return std::vector<Scalar>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    void set_col(std::size_t j, const std::vector<Scalar>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const Scalar& q) { return sgn(q) == 0; });
    }
    bool square() const { return rows_ == cols_; }

    QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        QMatrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    void set_block(std::size_t r0, std::size_t c0, const QMatrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
    QMatrix select_cols(const std::vector<std::size_t>& idx) const {
        QMatrix m(rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
        return m;
    }
    QMatrix hcat(const QMatrix& b) const {
        if (rows_ != b.rows_ && cols_ > 0 && b.cols_ > 0) throw std::invalid_argument("hcat row mismatch");
        std::size_t r = cols_ ? rows_ : b.rows_;
        QMatrix m(r, cols_ + b.cols_);
        if (cols_) m.set_block(0, 0, *this);
        if (b.cols_) m.set_block(0, cols_, b);
        return m;
    }
    QMatrix vcat(const QMatrix& b) const {
        if (cols_ != b.cols_) throw std::invalid_argument("vcat col mismatch");
        QMatrix m(rows_ + b.rows_, cols_);
        m.set_block(0, 0, *this);
        m.set_block(rows_, 0, b);
        return m;
    }

    Scalar trace() const {
        Scalar t = 0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
        check_same(a, b);
        QMatrix c = a;
        for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
        return c;
    }
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
        check_same(a, b);
        QMatrix c = a;
        for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
        return c;
    }
    friend QMatrix operator-(const QMatrix& a) {
        QMatrix c = a;
        for (auto& q : c.a_) q = -q;
        return c;
    }
    friend QMatrix operator*(const Scalar& s, const QMatrix& a) {
        QMatrix c = a;
        for (auto& q : c.a_) q *= s;
        return c;
    }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matmul shape mismatch");
        QMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend std::vector<Scalar> operator*(const QMatrix& a, const std::vector<Scalar>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matvec shape mismatch");
        std::vector<Scalar> r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) r[i] += a(i, k) * v[k];
        return r;
    }
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << to_string((*this)(i, j));
            os << "]\n";
        }
        return os.str();
    }

private:
    static void check_same(const QMatrix& a, const QMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
    }
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

inline QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

inline std::size_t rank(QMatrix m) { return rref(m).size(); }

// Basis of {x : A x = 0} as columns.
inline QMatrix nullspace(const QMatrix& a) {
    QMatrix m = a;
    auto piv = rref(m);
    std::vector<bool> is_piv(a.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_piv[c]) free.push_back(c);
    QMatrix n(a.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        n(free[k], k) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) n(piv[r], k) = -m(r, free[k]);
    }
    return n;
}

// Independent columns of A spanning its column space (a subset of the columns).
inline QMatrix colspace(const QMatrix& a) {
    QMatrix m = a;
    auto piv = rref(m);
    return a.select_cols(piv);
}

// Solve A X = B; nullopt when inconsistent. Returns one particular solution.
inline std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    QMatrix aug = a.hcat(b);
    auto piv = rref(aug);
    for (auto c : piv)
        if (c >= a.cols()) return std::nullopt;
    QMatrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(piv[r], j) = aug(r, a.cols() + j);
    return x;
}

inline std::optional<std::vector<Scalar>> solve_vec(const QMatrix& a, const std::vector<Scalar>& b) {
    auto x = solve(a, QMatrix::column(b));
    if (!x) return std::nullopt;
    return x->col(0);
}

inline Scalar det(QMatrix m) {
    if (!m.square()) throw std::invalid_argument("det of non-square matrix");
    Scalar d = 1;
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

inline std::optional<QMatrix> inverse(const QMatrix& a) {
    if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
    QMatrix aug = a.hcat(QMatrix::identity(a.rows()));
    auto piv = rref(aug);
    if (piv.size() < a.rows() || piv.back() >= a.cols()) return std::nullopt;
    return aug.block(0, a.cols(), a.rows(), a.cols());
}

// Moore-Penrose pseudoinverse via a full-rank factorisation A = C F.
inline QMatrix pseudo_inverse(const QMatrix& a) {
    QMatrix m = a;
    auto piv = rref(m);
    if (piv.empty()) return QMatrix(a.cols(), a.rows());
    QMatrix c = a.select_cols(piv);
    QMatrix f = m.block(0, 0, piv.size(), a.cols());
    QMatrix ctc = c.transpose() * c;
    QMatrix fft = f * f.transpose();
    return f.transpose() * (*inverse(fft)) * (*inverse(ctc)) * c.transpose();
}

inline std::vector<Scalar> leading_minors(const QMatrix& a) {
    std::vector<Scalar> out;
    for (std::size_t k = 1; k <= a.rows(); ++k) out.push_back(det(a.block(0, 0, k, k)));
    return out;
}

// Exact PSD test for a symmetric matrix: symmetric elimination with diagonal pivots.
inline bool is_psd(QMatrix m) {
    std::size_t n = m.rows();
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (sgn(m(i, i)) < 0) return false;
            if (sgn(m(i, i)) > 0 && p == n) p = i;
        }
        if (p == n) {
            // all remaining diagonal entries vanish: need the remaining block to be zero
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && sgn(m(i, j)) != 0) return false;
            return true;
        }
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || sgn(m(i, p)) == 0) continue;
            Scalar f = m(i, p) / m(p, p);
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j]) m(i, j) -= f * m(p, j);
        }
    }
    return true;
}

inline bool is_pd(const QMatrix& a) {
    for (const auto& d : leading_minors(a))
        if (sgn(d) <= 0) return false;
    return true;
}

// Subspaces are represented by matrices whose columns span them.
inline bool subspace_contains(const QMatrix& big, const QMatrix& small) {
    if (small.cols() == 0) return true;
    if (big.cols() == 0) return small.is_zero();
    return solve(big, small).has_value();
}

inline QMatrix subspace_sum(const QMatrix& a, const QMatrix& b) {
    if (a.cols() == 0) return colspace(b);
    if (b.cols() == 0) return colspace(a);
    return colspace(a.hcat(b));
}

inline QMatrix subspace_intersection(const QMatrix& a, const QMatrix& b) {
    if (a.cols() == 0 || b.cols() == 0) return QMatrix(a.cols() ? a.rows() : b.rows(), 0);
    QMatrix ab = a.hcat(-b);
    QMatrix n = nullspace(ab);
    QMatrix ka = n.block(0, 0, a.cols(), n.cols());
    return colspace(a * ka);
}

inline bool subspace_equal(const QMatrix& a, const QMatrix& b) {
    return rank(a) == rank(b) && subspace_contains(a, b) && subspace_contains(b, a);
}

}  // namespace modnet
