#pragma once

#include "modnet/spindler.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace modnet {

inline QMatrix poly_in(const QMatrix& m, const std::vector<Scalar>& roots) {
    QMatrix p = QMatrix::identity(m.rows());
    for (const auto& r : roots) p = p * (m - r * QMatrix::identity(m.rows()));
    return p;
}

inline bool is_euler(const LieAlgebra& a, const Vec& h, bool strict = true) {
    QMatrix ad = a.ad(h);
    if (strict && ad.is_zero()) return false;
    return poly_in(ad, {-1, 0, 1}).is_zero();
}

struct Grading {
    Vec h;
    std::vector<Scalar> eigenvalues;  // ascending, only those present
    std::vector<QMatrix> projectors;
    std::vector<QMatrix> bases;

    std::optional<std::size_t> index_of(const Scalar& l) const {
        for (std::size_t i = 0; i < eigenvalues.size(); ++i)
            if (eigenvalues[i] == l) return i;
        return std::nullopt;
    }
    std::size_t dim_of(const Scalar& l) const {
        auto i = index_of(l);
        return i ? bases[*i].cols() : 0;
    }
    QMatrix piece(const Scalar& l, std::size_t ambient) const {
        auto i = index_of(l);
        return i ? bases[*i] : QMatrix(ambient, 0);
    }
    QMatrix projector(const Scalar& l, std::size_t ambient) const {
        auto i = index_of(l);
        return i ? projectors[*i] : QMatrix(ambient, ambient);
    }
};

inline std::vector<Scalar> half_integer_set() {
    return {-1, make_scalar(-1, 2), 0, make_scalar(1, 2), 1};
}

// Eigenspace decomposition of ad(h) by Lagrange projectors.
inline Grading grading_of(const QMatrix& ad, const Vec& h, const std::vector<Scalar>& allowed) {
    const std::size_t n = ad.rows();
    if (!poly_in(ad, allowed).is_zero()) throw std::invalid_argument("spectrum outside the allowed set");
    Grading g;
    g.h = h;
    QMatrix id = QMatrix::identity(n);
    for (const auto& l : allowed) {
        QMatrix p = id;
        for (const auto& m : allowed)
            if (m != l) p = (1 / (l - m)) * (p * (ad - m * id));
        if (p.is_zero()) continue;
        g.eigenvalues.push_back(l);
        g.projectors.push_back(p);
        g.bases.push_back(colspace(p));
    }
    return g;
}

inline Grading grading(const LieAlgebra& a, const Vec& h) {
    return grading_of(a.ad(h), h, half_integer_set());
}

inline std::map<std::string, std::size_t> grading_dims(const Grading& g) {
    return {{"-1", g.dim_of(-1)}, {"0", g.dim_of(0)}, {"1", g.dim_of(1)}};
}

// [g_a, g_b] in g_{a+b}, zero when a+b is not an eigenvalue
inline bool graded_bracket_law(const LieAlgebra& a, const Grading& g) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < g.eigenvalues.size(); ++i)
        for (std::size_t j = i; j < g.eigenvalues.size(); ++j) {
            Scalar s = g.eigenvalues[i] + g.eigenvalues[j];
            QMatrix target = g.piece(s, n);
            for (std::size_t p = 0; p < g.bases[i].cols(); ++p)
                for (std::size_t q = 0; q < g.bases[j].cols(); ++q) {
                    Vec b = a.bracket(g.bases[i].col(p), g.bases[j].col(q));
                    if (!subspace_contains(target, QMatrix::column(b))) return false;
                }
        }
    return true;
}

inline bool projector_algebra_ok(const LieAlgebra& a, const Grading& g) {
    const std::size_t n = a.dim();
    QMatrix sum(n, n), ad(n, n);
    for (std::size_t i = 0; i < g.projectors.size(); ++i) {
        for (std::size_t j = 0; j < g.projectors.size(); ++j) {
            QMatrix pp = g.projectors[i] * g.projectors[j];
            if (i == j ? pp != g.projectors[i] : !pp.is_zero()) return false;
        }
        sum = sum + g.projectors[i];
        ad = ad + g.eigenvalues[i] * g.projectors[i];
    }
    return sum == QMatrix::identity(n) && ad == a.ad(g.h);
}

// tau = sum (-1)^k P_k
inline LinearMap tau_involution(const Grading& g) {
    if (g.projectors.empty()) throw std::invalid_argument("empty grading");
    const std::size_t n = g.projectors[0].rows();
    QMatrix t(n, n);
    for (std::size_t i = 0; i < g.eigenvalues.size(); ++i) {
        const Scalar& l = g.eigenvalues[i];
        if (l.get_den() != 1) throw std::invalid_argument("non-integer eigenvalues present");
        t = t + (l.get_num() % 2 == 0 ? Scalar(1) : Scalar(-1)) * g.projectors[i];
    }
    return {t};
}

// D(v,z,x) = (lambda/2 v + h_l.v, lambda z, [h_l,x])
inline LinearMap euler_derivation(const SpindlerData& d, const Vec& h_l, int lambda) {
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("lambda must be +1 or -1");
    if (!poly_in(d.l.ad(h_l), {-1, 0, 1}).is_zero()) throw std::invalid_argument("h_l is not an Euler element of l");
    QMatrix rh = action_of(d, h_l);
    QMatrix twice = Scalar(2) * rh;
    if (twice * twice != QMatrix::identity(d.V_dim))
        throw std::invalid_argument("2 h_l does not act as an involution on V");
    const std::size_t nv = d.V_dim, nz = d.z_dim, nl = d.l.dim();
    QMatrix m(nv + nz + nl, nv + nz + nl);
    m.set_block(0, 0, rh + make_scalar(lambda, 2) * QMatrix::identity(nv));
    for (std::size_t k = 0; k < nz; ++k) m(nv + k, nv + k) = lambda;
    m.set_block(nv + nz, nv + nz, d.l.ad(h_l));
    return {m};
}

// Conjugation by a symplectic w on V (identity on z, w x w^-1 on l via the faithful action),
// extended by D -> -D'. Verified against the two extensions by the caller.
inline std::optional<QMatrix> sign_flip_isomorphism(const SpindlerData& d, const QMatrix& w) {
    auto winv = inverse(w);
    if (!winv) return std::nullopt;
    const std::size_t nv = d.V_dim, nz = d.z_dim, nl = d.l.dim(), n = nv + nz + nl + 1;
    QMatrix phi(n, n);
    phi.set_block(0, 0, w);
    for (std::size_t k = 0; k < nz; ++k) phi(nv + k, nv + k) = 1;
    for (std::size_t a = 0; a < nl; ++a) {
        auto c = matrix_coords(d.action, w * d.action[a] * (*winv));
        if (!c) return std::nullopt;
        for (std::size_t b = 0; b < nl; ++b) phi(nv + nz + b, nv + nz + a) = (*c)[b];
    }
    phi(n - 1, n - 1) = -1;
    return phi;
}

struct LieWedgeSpec {
    QMatrix cone_minus_span;  // g_{-1}; the cone is C- = g_{-1} cap (-C)
    QMatrix cone_plus_span;   // g_1;  C+ = g_1 cap C
    QMatrix zero_part;
    QMatrix p_minus, p_plus;
    std::function<bool(const Vec&)> oracle;  // membership in C

    bool contains(const Vec& x) const {
        Vec xp = p_plus * x, xm = p_minus * x;
        return oracle(xp) && oracle(Scalar(-1) * xm);
    }
};

inline LieWedgeSpec lie_wedge(const Grading& g, std::function<bool(const Vec&)> cone_oracle) {
    const std::size_t n = g.projectors.at(0).rows();
    LieWedgeSpec w;
    w.cone_minus_span = g.piece(-1, n);
    w.cone_plus_span = g.piece(1, n);
    w.zero_part = g.piece(0, n);
    w.p_minus = g.projector(-1, n);
    w.p_plus = g.projector(1, n);
    w.oracle = std::move(cone_oracle);
    return w;
}

// Cone oracle on hsp or hcsp (the trailing D coordinate must vanish).
inline std::function<bool(const Vec&)> hsp_cone_oracle(const SpindlerData& hsp) {
    return [hsp](const Vec& y) {
        const std::size_t base = hsp.V_dim + hsp.z_dim + hsp.l.dim();
        for (std::size_t i = base; i < y.size(); ++i)
            if (sgn(y[i]) != 0) return false;
        Vec core(y.begin(), y.begin() + base);
        auto p = hsp_parts(hsp, core);
        return hsp_plus_contains(hsp.beta[0], p.v, p.z, p.x).contained;
    };
}

}  // namespace modnet
