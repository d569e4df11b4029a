#pragma once

#include "modnet/classical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modnet {

// Input for g(l,V,z,beta). action[a] is rho(e_a) on V; beta[k] is the k-th
// component of beta as an antisymmetric V x V matrix.
struct SpindlerData {
    LieAlgebra l;
    std::size_t V_dim = 0;
    std::size_t z_dim = 0;
    std::vector<QMatrix> action;
    std::vector<QMatrix> beta;
    bool cartan_attested = false;  // compactly embedded Cartan of l: taken on trust
};

inline bool action_is_homomorphism(const SpindlerData& d) {
    const std::size_t m = d.l.dim();
    if (d.action.size() != m) return false;
    for (const auto& a : d.action)
        if (a.rows() != d.V_dim || a.cols() != d.V_dim) return false;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            QMatrix lhs(d.V_dim, d.V_dim);
            for (const auto& [k, c] : d.l.entries(i, j)) lhs = lhs + c * d.action[k];
            if (lhs != commutator(d.action[i], d.action[j])) return false;
        }
    return true;
}

inline bool beta_antisymmetric(const SpindlerData& d) {
    if (d.beta.size() != d.z_dim) return false;
    for (const auto& b : d.beta)
        if (b.rows() != d.V_dim || b.cols() != d.V_dim || b.transpose() != -b) return false;
    return true;
}

// beta(x.v,w) + beta(v,x.w) = 0, i.e. rho^T B + B rho = 0 for every component
inline bool beta_invariance_check(const SpindlerData& d) {
    for (const auto& r : d.action)
        for (const auto& b : d.beta)
            if (!(r.transpose() * b + b * r).is_zero()) return false;
    return true;
}

// z_{z(l)}(V) = {0}: no nonzero central element of l acts trivially on V
inline bool center_acts_faithfully(const SpindlerData& d) {
    QMatrix c = center(d.l);
    for (std::size_t k = 0; k < c.cols(); ++k) {
        QMatrix r(d.V_dim, d.V_dim);
        for (std::size_t a = 0; a < d.l.dim(); ++a) r = r + c(a, k) * d.action[a];
        if (r.is_zero()) return false;
    }
    return true;
}

inline QMatrix action_of(const SpindlerData& d, const Vec& x) {
    QMatrix r(d.V_dim, d.V_dim);
    for (std::size_t a = 0; a < d.l.dim(); ++a)
        if (sgn(x[a]) != 0) r = r + x[a] * d.action[a];
    return r;
}

// Basis order: V, z, l.
inline LieAlgebra spindler_build(const SpindlerData& d) {
    if (!beta_antisymmetric(d)) throw std::invalid_argument("beta not antisymmetric");
    if (!action_is_homomorphism(d)) throw std::invalid_argument("action not a homomorphism");
    if (!beta_invariance_check(d)) throw std::invalid_argument("beta not invariant");
    const std::size_t nv = d.V_dim, nz = d.z_dim, nl = d.l.dim(), n = nv + nz + nl;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < nv; ++i) labels.push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i < nz; ++i) labels.push_back("z" + std::to_string(i));
    for (const auto& s : d.l.labels()) labels.push_back(s);
    LieAlgebra g(labels);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            Vec r(n);
            for (std::size_t k = 0; k < nz; ++k) r[nv + k] = d.beta[k](i, j);
            g.set_bracket(i, j, r);
        }
    for (std::size_t a = 0; a < nl; ++a) {
        for (std::size_t i = 0; i < nv; ++i) {
            Vec r(n);
            for (std::size_t k = 0; k < nv; ++k) r[k] = d.action[a](k, i);
            g.set_bracket(nv + nz + a, i, r);
        }
        for (std::size_t b = a + 1; b < nl; ++b) {
            Vec r(n);
            for (const auto& [k, c] : d.l.entries(a, b)) r[nv + nz + k] = c;
            g.set_bracket(nv + nz + a, nv + nz + b, r);
        }
    }
    return g;
}

// sp(V, omega) as a matrix algebra: the standard block basis when omega = J,
// otherwise a nullspace basis of X^T omega + omega X = 0.
inline NamedMatrices symplectic_matrices(const QMatrix& om) {
    const std::size_t m = om.rows();
    if (m % 2 == 0 && om == symplectic_form(m / 2)) return sp_matrices(m / 2);
    QMatrix sys(m * m, m * m);
    for (std::size_t e = 0; e < m * m; ++e) {
        QMatrix x(m, m);
        x(e / m, e % m) = 1;
        sys.set_col(e, flatten(x.transpose() * om + om * x));
    }
    QMatrix ns = nullspace(sys);
    NamedMatrices out;
    for (std::size_t k = 0; k < ns.cols(); ++k) {
        out.mats.push_back(unflatten(ns.col(k), m));
        out.labels.push_back("s" + std::to_string(k));
    }
    return out;
}

// Jacobi algebra hsp(V,omega) as Spindler data.
inline SpindlerData hsp_data_for(const QMatrix& om) {
    auto nm = symplectic_matrices(om);
    SpindlerData d;
    d.l = from_matrix_algebra(nm.mats, nm.labels).algebra;
    d.V_dim = om.rows();
    d.z_dim = 1;
    d.action = nm.mats;
    d.beta = {om};
    return d;
}

inline SpindlerData hsp_data(std::size_t n) { return hsp_data_for(symplectic_form(n)); }

inline LieAlgebra hsp_algebra(std::size_t n) { return spindler_build(hsp_data(n)); }

// id_V extended to hsp: v -> v, z -> 2z, l -> 0
inline QMatrix dilation_derivation(const SpindlerData& d) {
    const std::size_t n = d.V_dim + d.z_dim + d.l.dim();
    QMatrix m(n, n);
    for (std::size_t i = 0; i < d.V_dim; ++i) m(i, i) = 1;
    for (std::size_t i = 0; i < d.z_dim; ++i) m(d.V_dim + i, d.V_dim + i) = 2;
    return m;
}

inline LieAlgebra hcsp_algebra(std::size_t n) {
    auto d = hsp_data(n);
    return semidirect_extend(spindler_build(d), dilation_derivation(d), "D");
}

// h = h_s + D/2 in hcsp(R^{2n})
inline Vec hcsp_euler_element(std::size_t n) {
    auto d = hsp_data(n);
    const std::size_t off = 2 * n + 1;
    Vec h(off + d.l.dim() + 1);
    for (std::size_t i = 0; i < n; ++i) h[off + i * n + i] = make_scalar(1, 2);
    h.back() = make_scalar(1, 2);
    return h;
}

struct AdmissibilityWitness {
    bool ok = false;
    Vec f;
    Vec x;
    QMatrix gram;
    std::vector<Scalar> minors;
    int violating_minor = -1;  // 1-based order of the first non-positive leading minor
};

inline QMatrix beta_along(const SpindlerData& d, const Vec& f) {
    if (f.size() != d.z_dim) throw std::invalid_argument("covector length mismatch");
    QMatrix om(d.V_dim, d.V_dim);
    for (std::size_t k = 0; k < d.z_dim; ++k) om = om + f[k] * d.beta[k];
    return om;
}

// Gram of v -> (f o beta)(x.v, v), positive definiteness by leading minors.
inline AdmissibilityWitness admissibility_witness(const SpindlerData& d, const Vec& f, const Vec& x) {
    if (is_zero(f)) throw std::invalid_argument("f must be nonzero");
    QMatrix om = beta_along(d, f);
    QMatrix a = action_of(d, x).transpose() * om;
    AdmissibilityWitness w;
    w.f = f;
    w.x = x;
    w.gram = make_scalar(1, 2) * (a + a.transpose());
    w.minors = leading_minors(w.gram);
    w.ok = true;
    for (std::size_t k = 0; k < w.minors.size(); ++k)
        if (sgn(w.minors[k]) <= 0) {
            w.ok = false;
            w.violating_minor = static_cast<int>(k) + 1;
            break;
        }
    return w;
}

struct GammaF {
    SpindlerData target_data;
    LieAlgebra target;
    QMatrix matrix;  // g(l,V,z,beta) -> hsp(V, f o beta)
    QMatrix kernel;
};

// (v,z,x) -> (v, f(z), rho(x))
inline GammaF gamma_f(const SpindlerData& d, const Vec& f) {
    QMatrix om = beta_along(d, f);
    if (sgn(det(om)) == 0) throw std::invalid_argument("f o beta is degenerate");
    GammaF g;
    g.target_data = hsp_data_for(om);
    g.target = spindler_build(g.target_data);
    const std::size_t nv = d.V_dim, nz = d.z_dim, nl = d.l.dim();
    const std::size_t ml = g.target_data.l.dim();
    g.matrix = QMatrix(nv + 1 + ml, nv + nz + nl);
    for (std::size_t i = 0; i < nv; ++i) g.matrix(i, i) = 1;
    for (std::size_t k = 0; k < nz; ++k) g.matrix(nv, nv + k) = f[k];
    for (std::size_t a = 0; a < nl; ++a) {
        auto c = matrix_coords(g.target_data.action, d.action[a]);
        if (!c) throw std::invalid_argument("action leaves sp(V, f o beta)");
        for (std::size_t b = 0; b < ml; ++b) g.matrix(nv + 1 + b, nv + nz + a) = (*c)[b];
    }
    g.kernel = nullspace(g.matrix);
    return g;
}

struct ConeCertificate {
    bool contained = false;
    bool psd = false;
    bool in_range = false;
    Scalar schur;  // z - 1/4 b^T A^+ b
    std::string reason;
};

// q(w) = Omega(x.w,w) + Omega(v,w) + z >= 0 for all w, decided exactly.
inline ConeCertificate hsp_plus_contains(const QMatrix& om, const Vec& v, const Scalar& z, const QMatrix& x) {
    ConeCertificate c;
    QMatrix xa = x.transpose() * om;
    QMatrix a = make_scalar(1, 2) * (xa + xa.transpose());
    Vec b = om.transpose() * v;
    c.psd = is_psd(a);
    if (!c.psd) {
        c.reason = "quadratic part not positive semidefinite";
        return c;
    }
    QMatrix ap = pseudo_inverse(a);
    Vec ab = a * (ap * b);
    c.in_range = ab == b;
    if (!c.in_range) {
        c.reason = "linear part outside range of quadratic part";
        return c;
    }
    Vec apb = ap * b;
    Scalar bab = 0;
    for (std::size_t i = 0; i < b.size(); ++i) bab += b[i] * apb[i];
    c.schur = z - bab / 4;
    c.contained = sgn(c.schur) >= 0;
    if (!c.contained) c.reason = "minimum value negative";
    return c;
}

inline ConeCertificate hsp_plus_contains(const Vec& v, const Scalar& z, const QMatrix& x) {
    return hsp_plus_contains(symplectic_form(v.size() / 2), v, z, x);
}

// doubles are converted exactly to rationals
inline ConeCertificate hsp_plus_contains(const std::vector<double>& v, double z, const std::vector<double>& xrow) {
    const std::size_t m = v.size();
    Vec vq;
    for (double t : v) vq.emplace_back(t);
    QMatrix x(m, m);
    for (std::size_t i = 0; i < m * m; ++i) x(i / m, i % m) = Scalar(xrow[i]);
    return hsp_plus_contains(vq, Scalar(z), x);
}

// Interior: A positive definite and the minimum strictly positive.
inline bool hsp_plus_interior(const QMatrix& om, const Vec& v, const Scalar& z, const QMatrix& x) {
    QMatrix xa = x.transpose() * om;
    QMatrix a = make_scalar(1, 2) * (xa + xa.transpose());
    if (!is_pd(a)) return false;
    auto c = hsp_plus_contains(om, v, z, x);
    return c.contained && sgn(c.schur) > 0;
}

// Split an element of hsp(V,omega) (basis V, z, sp) into (v, z, matrix of x).
struct HspParts {
    Vec v;
    Scalar z;
    QMatrix x;
};

inline HspParts hsp_parts(const SpindlerData& hsp, const Vec& y) {
    HspParts p;
    p.v.assign(y.begin(), y.begin() + hsp.V_dim);
    p.z = y[hsp.V_dim];
    Vec lx(y.begin() + hsp.V_dim + 1, y.begin() + hsp.V_dim + 1 + hsp.l.dim());
    p.x = action_of(hsp, lx);
    return p;
}

// W_f membership through gamma_f
inline ConeCertificate in_W_f(const GammaF& g, const Vec& y) {
    auto p = hsp_parts(g.target_data, g.matrix * y);
    return hsp_plus_contains(g.target_data.beta[0], p.v, p.z, p.x);
}

}  // namespace modnet
