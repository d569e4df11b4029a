#pragma once

#include "modnet/rep.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace modnet {

// Literal: exp(i pi/2 (1 - s/2 + n/4)); Kms: exp(-i pi (s - n/2)/4), the phase fixed by
// sigma(i pi) eta~ = J eta~; None: 1.
enum class Phase { Literal, Kms, None };

inline const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Literal: return "literal";
        case Phase::Kms: return "kms";
        default: return "none";
    }
}

struct DistributionVector {
    cd s;
    int n = 1;
    Phase phase = Phase::Literal;
    bool reflected = false;  // J eta~ = conj(c) eta_{conj s}

    DistributionVector J() const { return {std::conj(s), n, phase, !reflected}; }

    void validate() const {
        if (!(s.real() > n / 2.0)) throw std::invalid_argument("need Re(s) > n/2");
    }
    cd phase_factor() const {
        const double pi = std::numbers::pi;
        const cd s0 = reflected ? std::conj(s) : s;
        cd c = 1;
        if (phase == Phase::Literal) c = std::exp(cd(0, pi / 2) * (1.0 - s0 / 2.0 + n / 4.0));
        if (phase == Phase::Kms) c = std::exp(cd(0, -pi / 4) * (s0 - n / 2.0));
        return reflected ? std::conj(c) : c;
    }
};

// eta_s(f) = int int conj(f) lam^s dx dlam/lam; the integrand must vanish at the grid boundary
inline cd eta_pair(cd s, const GridFunction& f, double decay = 1e-7) {
    const auto& g = f.spec;
    if (!(s.real() > g.n / 2.0)) throw std::invalid_argument("need Re(s) > n/2");
    std::vector<cd> rows(g.n_lam);
    double peak = 0, edge = 0;
    const double lim = g.X - 1.5 * g.dx();
    for (int i = 0; i < g.n_lam; ++i) {
        cd ls = std::exp(s * std::log(g.lam(i)));
        std::vector<cd> t(g.row_size());
        for (std::size_t j = 0; j < g.row_size(); ++j) {
            t[j] = std::conj(f.at(i, j)) * ls;
            double a = std::abs(t[j]);
            peak = std::max(peak, a);
            auto x = g.point(j);
            bool bd = i == 0 || i == g.n_lam - 1 || std::abs(x[0]) > lim || (g.n == 2 && std::abs(x[1]) > lim);
            if (bd) edge = std::max(edge, a);
        }
        rows[i] = pairwise_sum(t);
    }
    if (edge > decay * peak) throw SupportError("pairing integrand does not decay at the grid boundary");
    return pairwise_sum(rows) * g.weight();
}

// eta~(f) = c eta_s(f)
inline cd pair(const DistributionVector& d, const GridFunction& f) {
    d.validate();
    return d.phase_factor() * eta_pair(d.s, f);
}

// n = 1, f = e^{-lam^2} e^{-x^2/2}
inline double gaussian_pairing_closed_form(double s) {
    return 0.5 * boost::math::tgamma(s / 2) * std::sqrt(2 * std::numbers::pi);
}

// wide lambda range so the lam^s tail below lam_min is negligible
inline GridSpec pairing_grid() {
    GridSpec g;
    g.lam_min = 1e-12;
    g.lam_max = 12;
    g.n_lam = 512;
    g.n_x = 256;
    return g;
}

enum class Law { GL, Dilation, V1Sp1, Tau };

inline const char* law_name(Law l) {
    switch (l) {
        case Law::GL: return "a";
        case Law::Dilation: return "b";
        case Law::V1Sp1: return "c";
        default: return "d";
    }
}

struct LawParams {
    double a = 0.3;       // GL log-scale
    double t = 0.4;       // modular time
    double p = 0.35;      // V1 translation
    double B = 0.2;       // Sp(V)_1 letter
    double tau_sign = -1; // stated law: nu(tau) eta_s = -eta_{conj s}
};

// |eta_s(nu(g^-1) f) - scalar(g) eta_s(f)| / |eta_s(f)|
inline double verify_covariance(cd s, Law law, const GridFunction& f, const LawParams& prm = {},
                                const ApplyOptions& o = {}) {
    const int n = f.spec.n;
    const cd base = eta_pair(s, f);
    const double scale = std::abs(base);
    if (scale == 0) throw std::invalid_argument("template pairs to zero");
    switch (law) {
        case Law::GL: {
            RMat a = RMat::Identity(n, n) * prm.a;
            cd lhs = eta_pair(s, apply_word({GL::from_log(-a)}, f, o));
            double pred = std::exp(-n * prm.a / 2);
            return std::abs(lhs - pred * base) / scale;
        }
        case Law::Dilation: {
            cd lhs = eta_pair(s, modular_flow(-prm.t, f, o));
            cd pred = std::exp(prm.t / 2 * (s - n / 2.0));
            return std::abs(lhs - pred * base) / scale;
        }
        case Law::V1Sp1: {
            Heis h{RVec::Constant(n, -prm.p), RVec::Zero(n), 0};
            cd l1 = eta_pair(s, apply_word({h}, f, o));
            cd l2 = eta_pair(s, apply_word({Upper{RMat::Identity(n, n) * -prm.B}}, f, o));
            return std::max(std::abs(l1 - base), std::abs(l2 - base)) / scale;
        }
        default: {
            // (J eta)(f) = conj(eta(J f))
            cd lhs = std::conj(eta_pair(s, j_nu(f)));
            cd rhs = prm.tau_sign * eta_pair(std::conj(s), f);
            return std::abs(lhs - rhs) / scale;
        }
    }
}

// sigma(i pi)(f) = e^{(i pi/2)(s - n/2)} c eta_s(f) against (J eta~)(f) = conj(c eta_s(J f))
inline double ext_J_membership_check(const DistributionVector& d, const std::vector<GridFunction>& battery) {
    d.validate();
    const cd c = d.phase_factor();
    const cd orbit = std::exp(cd(0, std::numbers::pi / 2) * (d.s - d.n / 2.0));
    double worst = 0;
    for (const auto& f : battery) {
        cd e = eta_pair(d.s, f);
        cd lhs = orbit * c * e;
        cd rhs = std::conj(c * eta_pair(d.s, j_nu(f)));
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(e));
    }
    return worst;
}

// |eta_s(f)| <= C(s,m) ||(1 + lam^2 + lam^2 |x|^2)^m f|| by Cauchy-Schwarz
inline int continuity_order(cd s) { return int(std::ceil(s.real() / 2 + 1)); }

inline double continuity_constant(cd s, int n, int m) {
    const double sr = s.real(), h = n / 2.0, pi = std::numbers::pi;
    if (!(2 * m > sr)) throw std::invalid_argument("m too small");
    double xpart = std::pow(pi, h) * boost::math::tgamma(2 * m - h) / boost::math::tgamma(double(2 * m));
    double lpart = 0.5 * boost::math::beta(sr - h, 2 * m - sr);
    return std::sqrt(xpart * lpart);
}

inline double continuity_ratio(cd s, const GridFunction& f) {
    const int m = continuity_order(s);
    GridFunction pf = f;
    const auto& g = f.spec;
    for (int i = 0; i < g.n_lam; ++i) {
        double l2 = g.lam(i) * g.lam(i);
        for (std::size_t j = 0; j < g.row_size(); ++j) {
            auto x = g.point(j);
            double r2 = x[0] * x[0] + (g.n == 2 ? x[1] * x[1] : 0.0);
            pf.at(i, j) *= std::pow(1 + l2 + l2 * r2, m);
        }
    }
    return std::abs(eta_pair(s, f)) / (continuity_constant(s, g.n, m) * norm(pf));
}

}  // namespace modnet
