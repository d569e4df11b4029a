#pragma once

#include "modnet/lie_algebra.hpp"

#include <string>
#include <vector>

namespace modnet {

// J = [[0,-I],[I,0]] in coordinates (p,q) of V1 + V-1; Omega(v,w) = v^T J w.
inline QMatrix symplectic_form(std::size_t n) {
    QMatrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = -1;
        j(n + i, i) = 1;
    }
    return j;
}

inline Scalar omega(const QMatrix& j, const Vec& v, const Vec& w) {
    Vec jw = j * w;
    Scalar s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * jw[i];
    return s;
}

struct NamedMatrices {
    std::vector<QMatrix> mats;
    std::vector<std::string> labels;
};

// Block basis of sp(2n): s0 = diag(A,-A^T), s1 = [[0,B],[0,0]], s-1 = [[0,0],[C,0]], B,C symmetric.
inline NamedMatrices sp_matrices(std::size_t n) {
    NamedMatrices out;
    const std::size_t m = 2 * n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QMatrix a(m, m);
            a(i, j) = 1;
            a(n + j, n + i) = -1;
            out.mats.push_back(a);
            out.labels.push_back("A" + std::to_string(i) + std::to_string(j));
        }
    for (int sgn_ = 1; sgn_ >= -1; sgn_ -= 2)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                QMatrix b(m, m);
                std::size_t r = sgn_ > 0 ? i : n + i, c = sgn_ > 0 ? n + j : j;
                b(r, c) = 1;
                if (sgn_ > 0) b(j, n + i) = 1;
                else b(n + j, i) = 1;
                out.mats.push_back(b);
                out.labels.push_back((sgn_ > 0 ? "B" : "C") + std::to_string(i) + std::to_string(j));
            }
    return out;
}

inline MatrixAlgebra sp_algebra(std::size_t n) {
    auto nm = sp_matrices(n);
    return from_matrix_algebra(nm.mats, nm.labels);
}

// h_s = 1/2 diag(I,-I)
inline QMatrix h_s_matrix(std::size_t n) {
    QMatrix h(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = make_scalar(1, 2);
        h(n + i, n + i) = make_scalar(-1, 2);
    }
    return h;
}

struct Sl2 {
    QMatrix H, X, Y, U;
};

inline Sl2 sl2_matrices() {
    Sl2 s{QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2)};
    s.H(0, 0) = 1;
    s.H(1, 1) = -1;
    s.X(0, 1) = 1;
    s.Y(1, 0) = 1;
    s.U(0, 1) = 1;
    s.U(1, 0) = -1;
    return s;
}

inline MatrixAlgebra sl2_algebra() {
    auto s = sl2_matrices();
    return from_matrix_algebra({s.H, s.X, s.Y}, {"H", "X", "Y"});
}

// heis(R^{2n}): basis p_1..p_n, q_1..q_n, z with [v,w] = Omega(v,w) z
inline LieAlgebra heis_algebra(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
    labels.push_back("z");
    LieAlgebra a(labels);
    QMatrix j = symplectic_form(n);
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t k = i + 1; k < 2 * n; ++k) {
            Vec v(2 * n + 1);
            v[2 * n] = j(i, k);
            a.set_bracket(i, k, v);
        }
    return a;
}

inline LieAlgebra abelian_algebra(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
    return LieAlgebra(labels);
}


// Coordinates of a matrix of sp(2n) in the block basis of sp_matrices(n).
inline Vec sp_coords(std::size_t n, const QMatrix& m) {
    Vec c;
    c.reserve(n * (2 * n + 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.push_back(m(i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) c.push_back(m(i, n + j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) c.push_back(m(n + i, j));
    return c;
}

inline QMatrix sp_matrix(std::size_t n, const Vec& c) {
    auto nm = sp_matrices(n);
    QMatrix m(2 * n, 2 * n);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) m = m + c[k] * nm.mats[k];
    return m;
}

}  // namespace modnet
