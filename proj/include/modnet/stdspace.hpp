#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>

namespace modnet {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

constexpr double tau_fd = 1e-9;

// J v = U conj(v); A hermitian with J A J = -A.
struct ModularPair {
    CMat A;
    CMat U;
    Eigen::Index k() const { return A.rows(); }
};

// f(A) for hermitian A through its eigendecomposition: exp(c A)
inline CMat herm_exp(const CMat& a, cd c) {
    Eigen::SelfAdjointEigenSolver<CMat> es(a);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigen-solve failure");
    Eigen::VectorXcd d = (c * es.eigenvalues().cast<cd>()).array().exp();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

struct PairResiduals {
    double hermitian, involution, anticommute;
    double max() const { return std::max({hermitian, involution, anticommute}); }
};

inline PairResiduals pair_residuals(const ModularPair& p) {
    PairResiduals r;
    r.hermitian = (p.A - p.A.adjoint()).norm();
    r.involution = (p.U * p.U.conjugate() - CMat::Identity(p.k(), p.k())).norm();
    r.anticommute = (p.U * p.A.conjugate() * p.U.conjugate() + p.A).norm();
    return r;
}

// realification v = a + i b  ->  [a; b]
inline RMat realify(const CMat& v) {
    RMat r(2 * v.rows(), v.cols());
    r.topRows(v.rows()) = v.real();
    r.bottomRows(v.rows()) = v.imag();
    return r;
}

inline CMat complexify(const RMat& r) {
    const Eigen::Index k = r.rows() / 2;
    return r.topRows(k).cast<cd>() + cd(0, 1) * r.bottomRows(k).cast<cd>();
}

// real matrix of an antilinear map v -> M conj(v)
inline RMat antilinear_real(const CMat& m) {
    const Eigen::Index k = m.rows();
    RMat r(2 * k, 2 * k);
    r.topLeftCorner(k, k) = m.real();
    r.topRightCorner(k, k) = m.imag();
    r.bottomLeftCorner(k, k) = m.imag();
    r.bottomRightCorner(k, k) = -m.real();
    return r;
}

// multiplication by i
inline RMat times_i(Eigen::Index k) {
    RMat r = RMat::Zero(2 * k, 2 * k);
    r.topRightCorner(k, k) = -RMat::Identity(k, k);
    r.bottomLeftCorner(k, k) = RMat::Identity(k, k);
    return r;
}

// Real subspace of C^k, orthonormal real basis in realified coordinates.
struct RealSubspace {
    Eigen::Index k = 0;
    RMat basis;
    Eigen::Index dim() const { return basis.cols(); }
};

inline RMat orthonormal_range(const RMat& m, double tol = tau_fd) {
    if (m.cols() == 0) return RMat(m.rows(), 0);
    Eigen::JacobiSVD<RMat> svd(m, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    double scale = std::max(1.0, s.size() ? s(0) : 0.0);
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > tol * scale) ++r;
    return svd.matrixU().leftCols(r);
}

inline RMat null_basis(const RMat& m, double tol = tau_fd) {
    Eigen::JacobiSVD<RMat> svd(m, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    double scale = std::max(1.0, s.size() ? s(0) : 0.0);
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > tol * scale) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

inline Eigen::Index real_rank(const RMat& m, double tol = tau_fd) { return orthonormal_range(m, tol).cols(); }

// max over both inclusions of ||Q2 - Q1 Q1^T Q2||; infinity on dimension mismatch
inline double subspace_distance(const RealSubspace& a, const RealSubspace& b) {
    if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
    if (a.dim() == 0) return 0.0;
    double d1 = (b.basis - a.basis * (a.basis.transpose() * b.basis)).norm();
    double d2 = (a.basis - b.basis * (b.basis.transpose() * a.basis)).norm();
    return std::max(d1, d2);
}

inline bool is_standard(const RealSubspace& v, double tol = 1e-8) {
    RMat both(2 * v.k, 2 * v.dim());
    both << v.basis, times_i(v.k) * v.basis;
    return v.dim() == v.k && real_rank(both, tol) == 2 * v.k;
}

inline double fixed_point_residual(const ModularPair& p, const RealSubspace& v, double sign = 1.0) {
    RMat s = antilinear_real(p.U * herm_exp(p.A, sign * 0.5).conjugate());
    return v.dim() ? (s * v.basis - v.basis).norm() : 0.0;
}

// Fix(J e^{A/2})
inline RealSubspace standard_subspace(const ModularPair& p, double sign = 1.0) {
    if (pair_residuals(p).max() > 1e-8) throw std::invalid_argument("modular pair invariants violated");
    const Eigen::Index k = p.k();
    RMat s = antilinear_real(p.U * herm_exp(p.A, sign * 0.5).conjugate());
    RealSubspace v{k, null_basis(s - RMat::Identity(2 * k, 2 * k), 1e-10)};
    if (v.dim() != k) throw std::runtime_error("fixed space has wrong dimension");
    return v;
}

// V' = (iV)^perp in the real inner product Re<.,.>
inline RealSubspace symplectic_complement(const RealSubspace& v) {
    if (v.dim() == 0) return {v.k, RMat::Identity(2 * v.k, 2 * v.k)};
    RMat iv = times_i(v.k) * v.basis;
    return {v.k, null_basis(iv.transpose())};
}

inline ModularPair tensor_pair(const ModularPair& a, const ModularPair& b) {
    const Eigen::Index k1 = a.k(), k2 = b.k();
    if (k1 * k2 > 256) throw std::invalid_argument("tensor dimension exceeds 256");
    auto kron = [](const CMat& x, const CMat& y) {
        CMat r(x.rows() * y.rows(), x.cols() * y.cols());
        for (Eigen::Index i = 0; i < x.rows(); ++i)
            for (Eigen::Index j = 0; j < x.cols(); ++j) r.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        return r;
    };
    return {kron(a.A, CMat::Identity(k2, k2)) + kron(CMat::Identity(k1, k1), b.A), kron(a.U, b.U)};
}

struct TensorResult {
    ModularPair pair;
    RealSubspace from_pair;      // Fix of the tensor pair
    RealSubspace product_span;   // real span of v1 (x) v2
    double span_distance;
};

inline TensorResult tensor_product(const RealSubspace& v1, const RealSubspace& v2, const ModularPair& p1,
                                   const ModularPair& p2) {
    TensorResult t;
    t.pair = tensor_pair(p1, p2);
    t.from_pair = standard_subspace(t.pair);
    CMat c1 = complexify(v1.basis), c2 = complexify(v2.basis);
    const Eigen::Index k = v1.k * v2.k;
    RMat prods(2 * k, c1.cols() * c2.cols());
    for (Eigen::Index a = 0; a < c1.cols(); ++a)
        for (Eigen::Index b = 0; b < c2.cols(); ++b) {
            CMat w(k, 1);
            for (Eigen::Index i = 0; i < v1.k; ++i) w.block(i * v2.k, 0, v2.k, 1) = c1(i, a) * c2.col(b);
            prods.col(a * c2.cols() + b) = realify(w);
        }
    t.product_span = {k, orthonormal_range(prods, 1e-10)};
    t.span_distance = subspace_distance(t.from_pair, t.product_span);
    return t;
}

// e^{itA} V = V
inline double modular_invariance_residual(const ModularPair& p, const RealSubspace& v, double t) {
    CMat u = herm_exp(p.A, cd(0, t));
    RMat ur = realify(u * complexify(v.basis));
    RealSubspace w{v.k, orthonormal_range(ur)};
    return subspace_distance(v, w);
}

// Haar unitary by QR of a complex Ginibre matrix with phase correction
inline CMat haar_unitary(Eigen::Index k, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CMat z(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) z(i, j) = cd(g(rng), g(rng));
    Eigen::HouseholderQR<CMat> qr(z);
    CMat q = qr.householderQ() * CMat::Identity(k, k);
    CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < k; ++i) q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
    return q;
}

// A = W (iS) W*, U = W W^T with S real antisymmetric
inline ModularPair random_modular_pair(Eigen::Index k, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    RMat s = RMat::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = i + 1; j < k; ++j) {
            s(i, j) = u(rng);
            s(j, i) = -s(i, j);
        }
    CMat w = haar_unitary(k, rng);
    CMat a0 = cd(0, 1) * s.cast<cd>();
    return {w * a0 * w.adjoint(), w * w.transpose()};
}

}  // namespace modnet
