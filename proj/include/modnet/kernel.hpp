#pragma once

#include "modnet/rep.hpp"

namespace modnet {

using CVec = Eigen::VectorXcd;
using CMatX = Eigen::MatrixXcd;

// S lam^a exp(i lam^2 zeta + i lam <kappa, x> + i <Gamma x, x>), Gamma complex symmetric.
// Closed under every letter; plain exponentials need not be square integrable.
struct KernelTerm {
    int n = 1;
    cd S = 1, a = 0, zeta = 0;
    CVec kappa;
    CMatX Gamma;

    static KernelTerm power(int n, cd a) {
        KernelTerm k;
        k.n = n;
        k.a = a;
        k.kappa = CVec::Zero(n);
        k.Gamma = CMatX::Zero(n, n);
        return k;
    }

    cd eval(double lam, const Eigen::Vector2d& x) const {
        CVec xv(n);
        for (int i = 0; i < n; ++i) xv[i] = x[i];
        cd e = cd(0, 1) * (lam * lam * zeta + lam * (kappa.transpose() * xv)(0) + (xv.transpose() * Gamma * xv)(0));
        return S * std::exp(a * std::log(lam) + e);
    }

    GridFunction on(const GridSpec& s) const {
        if (s.n != n) throw std::invalid_argument("kernel dimension differs from grid");
        return GridFunction::sample(s, [&](double l, const Eigen::Vector2d& x) { return eval(l, x); });
    }
};

inline cd principal_inv_sqrt(cd d) { return 1.0 / std::sqrt(d); }

// nu(letter) acting on the family
inline KernelTerm act(const Letter& l, const KernelTerm& k) {
    detail::check_letter(l, k.n);
    KernelTerm o = k;
    const int n = k.n;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Heis>) {
                CVec p = x.p.template cast<cd>(), q = x.q.template cast<cd>();
                o.zeta = k.zeta - (k.kappa.transpose() * p)(0) + (p.transpose() * k.Gamma * p)(0) + x.z -
                         0.5 * x.q.dot(x.p);
                o.kappa = k.kappa - 2.0 * k.Gamma * p + q;
            } else if constexpr (std::is_same_v<T, Dil>) {
                o.S = k.S * std::exp(k.a * std::log(x.r));
                o.zeta = k.zeta * x.r * x.r;
                o.kappa = k.kappa * x.r;
            } else if constexpr (std::is_same_v<T, GL>) {
                CMatX mit = x.M.inverse().transpose().template cast<cd>();
                o.S = k.S / std::sqrt(std::abs(x.M.determinant()));
                o.kappa = mit * k.kappa;
                o.Gamma = mit * k.Gamma * mit.transpose();
            } else if constexpr (std::is_same_v<T, Lower>) {
                o.Gamma = k.Gamma + x.C.template cast<cd>();
            } else if constexpr (std::is_same_v<T, Upper>) {
                CMatX B = x.B.template cast<cd>();
                CMatX D = CMatX::Identity(n, n) + 4.0 * B * k.Gamma;
                CMatX Dinv = D.inverse();
                o.S = k.S * principal_inv_sqrt(D.determinant());
                o.Gamma = k.Gamma * Dinv;
                o.Gamma = 0.5 * (o.Gamma + o.Gamma.transpose()).eval();
                o.kappa = Dinv.transpose() * k.kappa;
                o.zeta = k.zeta - (k.kappa.transpose() * Dinv * B * k.kappa)(0);
            } else {
                // F^-1 of a Gaussian; needs Im Gamma positive definite
                Eigen::SelfAdjointEigenSolver<RMat> es(k.Gamma.imag());
                if (es.eigenvalues().minCoeff() <= 0)
                    throw std::domain_error("Fourier letter leaves the kernel family (Im Gamma not positive)");
                CMatX gi = k.Gamma.inverse();
                o.S = k.S * principal_inv_sqrt((cd(0, -2) * k.Gamma).determinant());
                o.Gamma = -0.25 * gi;
                o.kappa = -0.5 * gi * k.kappa;
                o.zeta = k.zeta - 0.25 * (k.kappa.transpose() * gi * k.kappa)(0);
            }
        },
        l);
    return o;
}

inline KernelTerm act(const Word& w, const KernelTerm& k) {
    KernelTerm o = k;
    for (auto it = w.rbegin(); it != w.rend(); ++it) o = act(*it, o);
    return o;
}

// e^{-tn/4} f(e^{t/2} lam, e^{-t/2} x) for complex t
inline KernelTerm flow(cd t, const KernelTerm& k) {
    KernelTerm o = k;
    o.S = k.S * std::exp(-t * double(k.n) / 4.0 + k.a * t / 2.0);
    o.zeta = k.zeta * std::exp(t);
    o.Gamma = k.Gamma * std::exp(-t);
    return o;
}

inline KernelTerm j_nu(const KernelTerm& k) {
    KernelTerm o = k;
    o.S = std::conj(k.S);
    o.a = std::conj(k.a);
    o.zeta = -std::conj(k.zeta);
    o.kappa = k.kappa.conjugate();
    o.Gamma = -k.Gamma.conjugate();
    return o;
}

}  // namespace modnet
