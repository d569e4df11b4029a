#pragma once

#include "modnet/qmatrix.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace modnet {

using Vec = std::vector<Scalar>;

inline Vec vzero(std::size_t n) { return Vec(n); }
inline Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}
inline Vec operator+(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline Vec operator-(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline Vec operator*(const Scalar& s, Vec a) {
    for (auto& q : a) q *= s;
    return a;
}
inline bool is_zero(const Vec& v) {
    for (const auto& q : v)
        if (sgn(q) != 0) return false;
    return true;
}

// Finite-dimensional Lie algebra over Q given by structure constants
// [e_i, e_j] = sum_k c(i,j,k) e_k, stored sparsely per ordered pair.
class LieAlgebra {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    LieAlgebra() = default;
    explicit LieAlgebra(std::vector<std::string> labels)
        : labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {}

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    // sets [e_i,e_j] = v and [e_j,e_i] = -v
    void set_bracket(std::size_t i, std::size_t j, const Vec& v) {
        auto& fwd = table_[i * dim() + j];
        auto& bwd = table_[j * dim() + i];
        fwd.clear();
        bwd.clear();
        for (std::size_t k = 0; k < v.size(); ++k)
            if (sgn(v[k]) != 0) {
                fwd.emplace_back(k, v[k]);
                if (i != j) bwd.emplace_back(k, -v[k]);
            }
    }
    // raw single-entry write, no antisymmetrisation (used for perturbation and parsing)
    void set_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
        auto& e = table_[i * dim() + j];
        for (auto it = e.begin(); it != e.end(); ++it)
            if (it->first == k) {
                if (sgn(c) == 0) e.erase(it);
                else it->second = c;
                return;
            }
        if (sgn(c) != 0) e.emplace_back(k, c);
    }
    Scalar constant(std::size_t i, std::size_t j, std::size_t k) const {
        for (const auto& [kk, c] : table_[i * dim() + j])
            if (kk == k) return c;
        return 0;
    }
    const std::vector<Entry>& entries(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    Vec bracket_basis(std::size_t i, std::size_t j) const {
        Vec r(dim());
        for (const auto& [k, c] : entries(i, j)) r[k] = c;
        return r;
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("dimension mismatch in bracket");
        Vec r(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (sgn(y[j]) == 0) continue;
                const auto& e = entries(i, j);
                if (e.empty()) continue;
                Scalar xy = x[i] * y[j];
                for (const auto& [k, c] : e) r[k] += xy * c;
            }
        }
        return r;
    }

    // matrix of ad(x) in the basis
    QMatrix ad(const Vec& x) const {
        QMatrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, bracket(x, unit(dim(), j)));
        return m;
    }

    bool antisymmetric() const {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i; j < dim(); ++j)
                for (std::size_t k = 0; k < dim(); ++k)
                    if (constant(i, j, k) != -constant(j, i, k)) return false;
        return true;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        if (a.dim() != b.dim()) return false;
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                if (a.bracket_basis(i, j) != b.bracket_basis(i, j)) return false;
        return true;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Entry>> table_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct LieElement {
    AlgebraPtr algebra;
    Vec coeffs;
};

inline LieElement bracket(const LieElement& x, const LieElement& y) {
    if (!x.algebra || x.algebra != y.algebra) {
        if (!x.algebra || !y.algebra || x.algebra->dim() != y.algebra->dim())
            throw std::invalid_argument("dimension mismatch in bracket");
    }
    return {x.algebra, x.algebra->bracket(x.coeffs, y.coeffs)};
}

// A linear map between algebras, as a matrix acting on coefficient columns.
struct LinearMap {
    QMatrix matrix;
    Vec operator()(const Vec& v) const { return matrix * v; }
};

inline bool jacobi_check(const LieAlgebra& a) {
    if (!a.antisymmetric()) return false;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec eij = a.bracket_basis(i, j);
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec s = a.bracket(eij, unit(n, k));
                s = s + a.bracket(a.bracket_basis(j, k), unit(n, i));
                s = s + a.bracket(a.bracket_basis(k, i), unit(n, j));
                if (!is_zero(s)) return false;
            }
        }
    return true;
}

// D is a derivation iff D[e_i,e_j] = [De_i,e_j] + [e_i,De_j] on all basis pairs.
inline bool is_derivation(const LieAlgebra& a, const QMatrix& d) {
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n) return false;
    std::vector<Vec> dcol(n);
    for (std::size_t i = 0; i < n; ++i) dcol[i] = d.col(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec lhs = d * a.bracket_basis(i, j);
            Vec rhs = a.bracket(dcol[i], unit(n, j)) + a.bracket(unit(n, i), dcol[j]);
            if (lhs != rhs) return false;
        }
    return true;
}

// phi[x,y] = [phi x, phi y] on all basis pairs of the domain.
inline bool is_homomorphism(const LieAlgebra& dom, const LieAlgebra& cod, const QMatrix& phi) {
    if (phi.rows() != cod.dim() || phi.cols() != dom.dim()) return false;
    std::vector<Vec> img(dom.dim());
    for (std::size_t i = 0; i < dom.dim(); ++i) img[i] = phi.col(i);
    for (std::size_t i = 0; i < dom.dim(); ++i)
        for (std::size_t j = i + 1; j < dom.dim(); ++j)
            if (phi * dom.bracket_basis(i, j) != cod.bracket(img[i], img[j])) return false;
    return true;
}

inline bool is_isomorphism(const LieAlgebra& dom, const LieAlgebra& cod, const QMatrix& phi) {
    return dom.dim() == cod.dim() && rank(phi) == dom.dim() && is_homomorphism(dom, cod, phi);
}

// Kernel of the joint adjoint action.
inline QMatrix center(const LieAlgebra& a) {
    const std::size_t n = a.dim();
    if (n == 0) return QMatrix(0, 0);
    QMatrix stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i) stacked.set_block(i * n, 0, a.ad(unit(n, i)));
    return nullspace(stacked);
}

// A + R D with [(x,s),(y,t)] = ([x,y] + s D y - t D x, 0); the new basis vector is last.
inline LieAlgebra semidirect_extend(const LieAlgebra& a, const QMatrix& d, const std::string& label = "D") {
    if (!is_derivation(a, d)) throw std::invalid_argument("not a derivation");
    auto labels = a.labels();
    labels.push_back(label);
    LieAlgebra e(labels);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = a.bracket_basis(i, j);
            v.push_back(0);
            e.set_bracket(i, j, v);
        }
    for (std::size_t j = 0; j < n; ++j) {
        Vec v = d.col(j);
        v.push_back(0);
        e.set_bracket(n, j, v);
    }
    return e;
}

struct MatrixAlgebra {
    LieAlgebra algebra;
    std::vector<QMatrix> basis;         // matrices realising each basis vector
    std::vector<Vec> generator_coords;  // coordinates of the input generators
};

inline Vec flatten(const QMatrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

inline QMatrix unflatten(const Vec& v, std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
}

// Coordinates of a matrix in a list of basis matrices; nullopt if outside the span.
inline std::optional<Vec> matrix_coords(const std::vector<QMatrix>& basis, const QMatrix& m) {
    if (basis.empty()) {
        if (m.is_zero()) return Vec{};
        return std::nullopt;
    }
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(flatten(b));
    QMatrix a = QMatrix::from_columns(cols, cols[0].size());
    return solve_vec(a, flatten(m));
}

// Lie algebra spanned by the generators, saturated under commutators.
inline MatrixAlgebra from_matrix_algebra(const std::vector<QMatrix>& gens,
                                         std::vector<std::string> labels = {}) {
    if (gens.empty()) return {LieAlgebra(std::vector<std::string>{}), {}, {}};
    const std::size_t n = gens[0].rows();
    for (const auto& g : gens)
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generators must be square of equal size");

    std::vector<QMatrix> basis;
    QMatrix span(n * n, 0);
    auto try_add = [&](const QMatrix& m) {
        QMatrix c = QMatrix::column(flatten(m));
        if (m.is_zero() || subspace_contains(span, c)) return false;
        span = span.hcat(c);
        basis.push_back(m);
        return true;
    };
    for (const auto& g : gens) try_add(g);
    const std::size_t bound = n * n;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            try_add(commutator(basis[j], basis[i]));
            if (basis.size() > bound) throw std::runtime_error("span fails to close within dimension bound");
        }

    if (labels.size() != basis.size()) {
        labels.clear();
        for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back("b" + std::to_string(i));
    }
    LieAlgebra alg(labels);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto c = solve_vec(span, flatten(commutator(basis[i], basis[j])));
            if (!c) throw std::runtime_error("span fails to close within dimension bound");
            alg.set_bracket(i, j, *c);
        }
    std::vector<Vec> coords;
    for (const auto& g : gens) coords.push_back(*solve_vec(span, flatten(g)));
    return {std::move(alg), std::move(basis), std::move(coords)};
}

// Structure constants of the subalgebra spanned by the columns of b (which must be independent and closed).
inline LieAlgebra restrict_to(const LieAlgebra& a, const QMatrix& b, std::vector<std::string> labels = {}) {
    const std::size_t m = b.cols();
    if (labels.size() != m) {
        labels.clear();
        for (std::size_t i = 0; i < m; ++i) labels.push_back("s" + std::to_string(i));
    }
    LieAlgebra s(labels);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            auto c = solve_vec(b, a.bracket(b.col(i), b.col(j)));
            if (!c) throw std::invalid_argument("span is not a subalgebra");
            s.set_bracket(i, j, *c);
        }
    return s;
}

inline bool is_subalgebra(const LieAlgebra& a, const QMatrix& b) {
    for (std::size_t i = 0; i < b.cols(); ++i)
        for (std::size_t j = i + 1; j < b.cols(); ++j)
            if (!subspace_contains(b, QMatrix::column(a.bracket(b.col(i), b.col(j))))) return false;
    return true;
}

}  // namespace modnet
