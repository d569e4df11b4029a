#pragma once

#include "modnet/interp.hpp"
#include "modnet/rational.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <optional>
#include <random>
#include <variant>

namespace modnet {

using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// nu(Heis) f = e^{i lam^2 (z - q.p/2)} e^{i lam q.x} f(lam, x - lam p)
struct Heis {
    RVec p, q;
    double z = 0;
};
// f(r lam, x)
struct Dil {
    double r = 1;
};
// |det M|^{-1/2} f(lam, M^{-1} x); M = exp(A) for the Lie-algebra letter
struct GL {
    RMat M;
    static GL from_log(const RMat& a) { return {a.exp()}; }
};
// e^{i <Cx,x>} f
struct Lower {
    RMat C;
};
// F^{-1} e^{-i <B xi, xi>} F
struct Upper {
    RMat B;
};
// F^{-1}
struct Fourier {};

using Letter = std::variant<Heis, Dil, GL, Lower, Upper, Fourier>;
// product w[0] w[1] ... w[k-1]; acts on functions right to left
using Word = std::vector<Letter>;

inline Heis heis(double p, double q, double z) { return {RVec::Constant(1, p), RVec::Constant(1, q), z}; }
inline GL gl(double a) { return GL::from_log(RMat::Constant(1, 1, a)); }
inline Lower lower(double c) { return {RMat::Constant(1, 1, c)}; }
inline Upper upper(double b) { return {RMat::Constant(1, 1, b)}; }

struct ApplyOptions {
    int lambda_order = 8;   // Lagrange order for lambda rescaling
    double decay = 1e-9;    // relative size allowed where data leaves the grid
};

namespace detail {

inline void check_sym(const RMat& m, int n, const char* what) {
    if (m.rows() != n || m.cols() != n || (m - m.transpose()).norm() > 1e-12 * (1 + m.norm()))
        throw std::invalid_argument(std::string(what) + " must be a symmetric n x n matrix");
}

inline void check_letter(const Letter& l, int n) {
    std::visit(
        [n](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Heis>) {
                if (x.p.size() != n || x.q.size() != n) throw std::invalid_argument("Heis letter has wrong size");
            } else if constexpr (std::is_same_v<T, Dil>) {
                if (!(x.r > 0)) throw std::invalid_argument("Dil needs r > 0");
            } else if constexpr (std::is_same_v<T, GL>) {
                if (x.M.rows() != n || x.M.cols() != n || std::abs(x.M.determinant()) < 1e-14)
                    throw std::invalid_argument("GL letter must be invertible n x n");
            } else if constexpr (std::is_same_v<T, Lower>) {
                check_sym(x.C, n, "C");
            } else if constexpr (std::is_same_v<T, Upper>) {
                check_sym(x.B, n, "B");
            }
        },
        l);
}

// max over cells where pred(x) holds of |f|, significant rows only
template <class Pred>
double max_where(const GridFunction& f, const std::vector<char>& sig, Pred&& pred) {
    double m = 0;
    for (int i = 0; i < f.spec.n_lam; ++i) {
        if (!sig[i]) continue;
        for (std::size_t j = 0; j < f.spec.row_size(); ++j)
            if (pred(i, f.spec.point(j))) m = std::max(m, std::abs(f.at(i, j)));
    }
    return m;
}

// phase increments of <Cx,x> per cell along each axis, worst corner
inline void quadratic_nyquist(const RMat& c, const GridSpec& s, const char* what) {
    for (int k = 0; k < c.rows(); ++k) {
        double g = 2 * c.row(k).cwiseAbs().sum() * s.X;
        if (g * s.dx() >= std::numbers::pi) throw NyquistError(std::string(what) + ": quadratic phase undersampled");
    }
}

inline void boundary_decay(const GridFunction& f, double tol, const char* what) {
    const auto& s = f.spec;
    double m = f.max_abs(), edge = 0;
    const double lim = s.X - 1.5 * s.dx();
    for (int i = 0; i < s.n_lam; ++i)
        for (std::size_t j = 0; j < s.row_size(); ++j) {
            auto p = s.point(j);
            bool out = std::abs(p[0]) > lim || (s.n == 2 && std::abs(p[1]) > lim);
            if (out) edge = std::max(edge, std::abs(f.at(i, j)));
        }
    if (edge > tol * std::max(m, 1e-300)) throw SupportError(std::string(what) + ": data reaches the x-box edge");
}

inline GridFunction apply_heis(const Heis& l, const GridFunction& f, const ApplyOptions& o) {
    const auto& s = f.spec;
    auto sig = significant_rows(f);
    auto loud = significant_rows(f, 1e-8);  // rows whose aliasing could show in a residual
    const double fm = f.max_abs();
    const double qn = l.q.cwiseAbs().maxCoeff();
    const double ph = l.z - 0.5 * l.q.dot(l.p);
    for (int i = 0; i < s.n_lam; ++i) {
        if (!loud[i]) continue;
        if (s.lam(i) * qn * s.dx() >= std::numbers::pi) throw NyquistError("Heis: lam*q phase undersampled in x");
        if (i + 1 < s.n_lam && loud[i + 1] &&
            std::abs(ph) * (s.lam(i + 1) * s.lam(i + 1) - s.lam(i) * s.lam(i)) >= std::numbers::pi)
            throw NyquistError("Heis: central phase undersampled in lambda");
    }
    for (int k = 0; k < s.n; ++k) {
        if (l.p[k] == 0) continue;
        double lost = max_where(f, sig, [&](int i, const Eigen::Vector2d& x) {
            double a = s.lam(i) * l.p[k];
            return x[k] + a > s.X || x[k] + a < -s.X;
        });
        if (lost > o.decay * fm) throw SupportError("Heis: shift pushes data off the grid");
    }
    GridFunction g = f;
    const int N = s.n_x;
    parallel_for(s.n_lam, [&](std::size_t ii) {
        int i = int(ii);
        double lam = s.lam(i);
        cd* r = g.row(i);
        std::vector<cd> line(N);
        for (int k = 0; k < s.n; ++k) {
            double a = lam * l.p[k];
            if (a == 0) continue;
            if (s.n == 1) {
                std::copy(r, r + N, line.begin());
                spectral_shift(line, a, s.dx());
                std::copy(line.begin(), line.end(), r);
            } else {
                for (int other = 0; other < N; ++other) {
                    for (int t = 0; t < N; ++t) line[t] = k == 0 ? r[t * N + other] : r[other * N + t];
                    spectral_shift(line, a, s.dx());
                    for (int t = 0; t < N; ++t) (k == 0 ? r[t * N + other] : r[other * N + t]) = line[t];
                }
            }
        }
        for (std::size_t j = 0; j < s.row_size(); ++j) {
            auto x = s.point(j);
            double qx = l.q[0] * x[0] + (s.n == 2 ? l.q[1] * x[1] : 0.0);
            r[j] *= std::polar(1.0, lam * lam * ph + lam * qx);
        }
    });
    return g;
}

inline GridFunction apply_dil(const Dil& l, const GridFunction& f, const ApplyOptions& o) {
    const auto& s = f.spec;
    const double d = std::log(l.r) / s.h();
    auto sig = significant_rows(f, o.decay);
    for (int k = 0; k < s.n_lam; ++k) {
        double t = k - d;
        if (sig[k] && (t < 0 || t > s.n_lam - 1)) throw SupportError("Dil: rescaling pushes data off the lambda grid");
    }
    GridFunction g(s);
    parallel_for(s.n_lam, [&](std::size_t i) {
        double pos = double(i) + d;
        double rp = std::round(pos);
        cd* out = g.row(int(i));
        if (std::abs(pos - rp) < 1e-12) {
            int k = int(rp);
            if (k >= 0 && k < s.n_lam) std::copy(f.row(k), f.row(k) + s.row_size(), out);
            return;
        }
        int start = int(std::floor(pos)) - o.lambda_order / 2 + 1;
        auto w = lagrange_weights(pos, start, o.lambda_order);
        for (int a = 0; a < o.lambda_order; ++a) {
            int k = start + a;
            if (k < 0 || k >= s.n_lam) continue;
            const cd* src = f.row(k);
            for (std::size_t j = 0; j < s.row_size(); ++j) out[j] += w[a] * src[j];
        }
    });
    return g;
}

inline GridFunction apply_gl(const GL& l, const GridFunction& f, const ApplyOptions& o) {
    const auto& s = f.spec;
    const int N = s.n_x;
    const double dx = s.dx();
    const double amp = 1.0 / std::sqrt(std::abs(l.M.determinant()));
    auto sig = significant_rows(f);
    double lost = max_where(f, sig, [&](int, const Eigen::Vector2d& x) {
        RVec xs = x.head(s.n);
        RVec y = l.M * xs;
        return y.cwiseAbs().maxCoeff() > s.X;
    });
    if (lost > o.decay * f.max_abs()) throw SupportError("GL: image leaves the x-box");
    GridFunction g(s);
    if (s.n == 1) {
        const double m = l.M(0, 0);
        Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(N, N);
        for (int j = 0; j < N; ++j) {
            double y = s.x(j) / m;
            if (std::abs(y) >= s.X) continue;
            for (int k = 0; k < N; ++k) K(j, k) = amp * dirichlet(y - s.x(k), N, dx);
        }
        g = f;
        apply_along_axes(g, K);
        return g;
    }
    const RMat minv = l.M.inverse();
    parallel_for(s.n_lam, [&](std::size_t i) {
        Eigen::Map<const Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> b(f.row(int(i)), N, N);
        if (b.cwiseAbs().maxCoeff() == 0) return;
        Eigen::VectorXcd d0(N), d1(N);
        for (std::size_t j = 0; j < s.row_size(); ++j) {
            Eigen::Vector2d y = minv * s.point(j);
            if (std::abs(y[0]) >= s.X || std::abs(y[1]) >= s.X) continue;
            for (int k = 0; k < N; ++k) {
                d0[k] = dirichlet(y[0] - s.x(k), N, dx);
                d1[k] = dirichlet(y[1] - s.x(k), N, dx);
            }
            g.at(int(i), j) = amp * d0.transpose() * b * d1;
        }
    });
    return g;
}

inline void multiply_quadratic(GridFunction& g, const RMat& c, double sign) {
    const auto& s = g.spec;
    std::vector<cd> ph(s.row_size());
    for (std::size_t j = 0; j < s.row_size(); ++j) {
        RVec x = s.point(j).head(s.n);
        ph[j] = std::polar(1.0, sign * x.dot(c * x));
    }
    parallel_for(s.n_lam, [&](std::size_t i) {
        cd* r = g.row(int(i));
        for (std::size_t j = 0; j < s.row_size(); ++j) r[j] *= ph[j];
    });
}

inline GridFunction apply_fourier(const GridFunction& f, int sign, const ApplyOptions& o) {
    GridFunction g = f;
    apply_along_axes(g, dft_matrix(f.spec, sign));
    boundary_decay(g, std::sqrt(o.decay), "Fourier");
    return g;
}

}  // namespace detail

inline GridFunction apply_letter(const Letter& l, const GridFunction& f, const ApplyOptions& o = {}) {
    detail::check_letter(l, f.spec.n);
    return std::visit(
        [&](const auto& x) -> GridFunction {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Heis>) return detail::apply_heis(x, f, o);
            else if constexpr (std::is_same_v<T, Dil>) return detail::apply_dil(x, f, o);
            else if constexpr (std::is_same_v<T, GL>) return detail::apply_gl(x, f, o);
            else if constexpr (std::is_same_v<T, Lower>) {
                detail::quadratic_nyquist(x.C, f.spec, "Lower");
                GridFunction g = f;
                detail::multiply_quadratic(g, x.C, 1.0);
                return g;
            } else if constexpr (std::is_same_v<T, Upper>) {
                detail::quadratic_nyquist(x.B, f.spec, "Upper");
                GridFunction g = detail::apply_fourier(f, -1, o);
                detail::multiply_quadratic(g, x.B, -1.0);
                return detail::apply_fourier(g, +1, o);
            } else {
                return detail::apply_fourier(f, +1, o);
            }
        },
        l);
}

inline GridFunction apply_word(const Word& w, const GridFunction& f, const ApplyOptions& o = {}) {
    GridFunction g = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) g = apply_letter(*it, g, o);
    return g;
}

inline bool has_fourier(const Word& w) {
    for (const auto& l : w)
        if (std::holds_alternative<Fourier>(l)) return true;
    return false;
}

// (Heisenberg part, dilation, symplectic part): nu = Heis(v,z) Dil(r) Meta(g)
struct GroupElement {
    int n = 1;
    RVec v;
    double z = 0;
    double r = 1;
    RMat g;

    static GroupElement identity(int n) { return {n, RVec::Zero(2 * n), 0.0, 1.0, RMat::Identity(2 * n, 2 * n)}; }
};

inline RMat sympl_j(int n) {
    RMat j = RMat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -RMat::Identity(n, n);
    j.bottomLeftCorner(n, n) = RMat::Identity(n, n);
    return j;
}

inline double omega(const RVec& v, const RVec& w) { return v.dot(sympl_j(int(v.size() / 2)) * w); }

inline GroupElement element_of(const Letter& l, int n) {
    detail::check_letter(l, n);
    GroupElement e = GroupElement::identity(n);
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Heis>) {
                e.v << x.p, x.q;
                e.z = x.z;
            } else if constexpr (std::is_same_v<T, Dil>) {
                e.r = x.r;
            } else if constexpr (std::is_same_v<T, GL>) {
                e.g.topLeftCorner(n, n) = x.M;
                e.g.bottomRightCorner(n, n) = x.M.inverse().transpose();
            } else if constexpr (std::is_same_v<T, Lower>) {
                e.g.bottomLeftCorner(n, n) = 2 * x.C;
            } else if constexpr (std::is_same_v<T, Upper>) {
                e.g.topRightCorner(n, n) = 2 * x.B;
            } else {
                e.g = sympl_j(n);
            }
        },
        l);
    return e;
}

// Heis(v1) Dil(r1) g1 Heis(v2) Dil(r2) g2 = Heis(v1 * alpha_r1(g1 v2)) Dil(r1 r2) g1 g2
inline GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    GroupElement c = GroupElement::identity(a.n);
    RVec v2 = a.r * (a.g * b.v);
    double z2 = a.r * a.r * b.z;
    c.v = a.v + v2;
    c.z = a.z + z2 + 0.5 * omega(a.v, v2);
    c.r = a.r * b.r;
    c.g = a.g * b.g;
    return c;
}

inline GroupElement element_of(const Word& w, int n) {
    GroupElement e = GroupElement::identity(n);
    for (const auto& l : w) e = e * element_of(l, n);
    return e;
}

struct NormalWord {
    Word word;
    bool projective = false;  // equality only up to a phase
};

// Heis Dil Fourier^k Lower GL Upper with g = I^k [[a,b],[c,d]]
inline NormalWord to_word(const GroupElement& e) {
    const int n = e.n;
    NormalWord out;
    if (e.v.norm() != 0 || e.z != 0) out.word.push_back(Heis{e.v.head(n), e.v.tail(n), e.z});
    if (e.r != 1) out.word.push_back(Dil{e.r});
    RMat jinv = sympl_j(n).transpose();
    // Fourier power whose Gauss factors are smallest; k = 0 wins ties since it compares exactly
    auto factor_size = [n](const RMat& m) {
        RMat a = m.topLeftCorner(n, n);
        if (std::abs(a.determinant()) < 1e-9) return std::numeric_limits<double>::infinity();
        RMat ainv = a.inverse();
        return std::max({(m.bottomLeftCorner(n, n) * ainv).norm(), (ainv * m.topRightCorner(n, n)).norm(),
                         a.norm() + ainv.norm()});
    };
    RMat gk = e.g, cand = e.g;
    int best = -1;
    double best_size = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4; ++k) {
        double sz = factor_size(cand) * (k == 0 ? 0.5 : 1.0);
        if (sz < best_size) {
            best_size = sz;
            best = k;
            gk = cand;
        }
        cand = jinv * cand;
    }
    for (int k = 0; k < best; ++k) out.word.push_back(Fourier{});
    RMat a = gk.topLeftCorner(n, n), b = gk.topRightCorner(n, n), c = gk.bottomLeftCorner(n, n);
    RMat ainv = a.inverse();
    RMat C = 0.5 * c * ainv, B = 0.5 * ainv * b;
    C = 0.5 * (C + C.transpose());
    B = 0.5 * (B + B.transpose());
    if (C.norm() > 1e-15) out.word.push_back(Lower{C});
    if ((a - RMat::Identity(n, n)).norm() > 1e-15) out.word.push_back(GL{a});
    if (B.norm() > 1e-15) out.word.push_back(Upper{B});
    out.projective = best != 0 || a.determinant() < 0;
    return out;
}

struct LawResidual {
    double residual = 0;
    bool projective = false;
};

inline LawResidual group_law_check(const Word& w1, const Word& w2, const GridFunction& f,
                                   const ApplyOptions& o = {}) {
    const int n = f.spec.n;
    GridFunction lhs = apply_word(w1, apply_word(w2, f, o), o);
    NormalWord nw = to_word(element_of(w1, n) * element_of(w2, n));
    GridFunction rhs = apply_word(nw.word, f, o);
    LawResidual r;
    r.projective = nw.projective || has_fourier(w1) || has_fourier(w2);
    for (const Word* w : {&w1, &w2})
        for (const auto& l : *w)
            if (auto* g = std::get_if<GL>(&l); g && g->M.determinant() < 0) r.projective = true;
    double s = norm(f);
    r.residual = r.projective ? projective_distance(lhs, rhs, s) : rel_distance(lhs, rhs, s);
    return r;
}

inline double unitarity_residual(const Word& w, const GridFunction& f, const ApplyOptions& o = {}) {
    return std::abs(norm(apply_word(w, f, o)) / norm(f) - 1.0);
}

// (J f)(lam, x) = conj f(lam, -x)
inline GridFunction j_nu(const GridFunction& f) {
    const auto& s = f.spec;
    GridFunction g(s);
    const std::size_t m = s.row_size();
    for (int i = 0; i < s.n_lam; ++i)
        for (std::size_t j = 0; j < m; ++j) g.at(i, m - 1 - j) = std::conj(f.at(i, j));
    return g;
}

// letter-wise image under tau: odd-degree parts flip
inline Letter tau_letter(const Letter& l) {
    return std::visit(
        [](const auto& x) -> Letter {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Heis>) return Heis{-x.p, x.q, -x.z};
            else if constexpr (std::is_same_v<T, Lower>) return Lower{-x.C};
            else if constexpr (std::is_same_v<T, Upper>) return Upper{-x.B};
            else return x;
        },
        l);
}

inline Word tau_word(const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (std::holds_alternative<Fourier>(l)) {
            out.insert(out.end(), 3, Fourier{});
        } else {
            out.push_back(tau_letter(l));
        }
    }
    return out;
}

inline double jnu_covariance_residual(const Word& w, const GridFunction& f, const ApplyOptions& o = {}) {
    GridFunction lhs = j_nu(apply_word(w, j_nu(f), o));
    GridFunction rhs = apply_word(tau_word(w), f, o);
    return rel_distance(lhs, rhs, norm(f));
}

// nu(exp(t h)) f = e^{-tn/4} f(e^{t/2} lam, e^{-t/2} x)
inline Word flow_word(double t, int n) {
    return {GL::from_log(RMat::Identity(n, n) * (t / 2)), Dil{std::exp(t / 2)}};
}

inline GridFunction modular_flow(double t, const GridFunction& f, const ApplyOptions& o = {}) {
    return apply_word(flow_word(t, f.spec.n), f, o);
}

// Ad(exp(t h)) letter-wise: weights e^t on degree one, e^-t on degree minus one
inline Word flow_conjugate(const Word& w, double t, int n) {
    Word out;
    const double e = std::exp(t);
    for (const auto& l : w) {
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Heis>) out.push_back(Heis{e * x.p, x.q, e * x.z});
                else if constexpr (std::is_same_v<T, Lower>) out.push_back(Lower{x.C / e});
                else if constexpr (std::is_same_v<T, Upper>) out.push_back(Upper{e * x.B});
                else if constexpr (std::is_same_v<T, Fourier>) {
                    out.push_back(GL{RMat::Identity(n, n) * e});
                    out.push_back(Fourier{});
                } else out.push_back(x);
            },
            l);
    }
    return out;
}

// <-i d nu(sign z) f, f> / <f, f> = sign * int lam^2 |f|^2 / ||f||^2
inline double positive_energy_check(const GridFunction& f, double sign = 1.0) {
    const auto& s = f.spec;
    std::vector<double> num(s.n_lam), den(s.n_lam);
    for (int i = 0; i < s.n_lam; ++i) {
        double a = 0;
        for (std::size_t j = 0; j < s.row_size(); ++j) a += std::norm(f.at(i, j));
        den[i] = a;
        num[i] = s.lam(i) * s.lam(i) * a;
    }
    double d = pairwise_sum(den);
    if (d == 0) throw std::invalid_argument("zero vector");
    return sign * pairwise_sum(num) / d;
}

// exp(-(log lam - mu)^2 / 2 sigma^2) exp(-|x - x0|^2 / 2 w^2) e^{i k x_0}
struct Template {
    double mu = 0, sigma = 0.3, x0 = 0, width = 1, k = 0;
};

inline GridFunction sample_template(const GridSpec& s, const Template& t) {
    return GridFunction::sample(s, [&](double lam, const Eigen::Vector2d& x) {
        double u = std::log(lam) - t.mu;
        double r2 = (x[0] - t.x0) * (x[0] - t.x0) + (s.n == 2 ? x[1] * x[1] : 0.0);
        return std::exp(-u * u / (2 * t.sigma * t.sigma) - r2 / (2 * t.width * t.width)) * std::polar(1.0, t.k * x[0]);
    });
}

// narrow bump in log lam whose continuum energy is exactly lam0^2
inline GridFunction energy_template(const GridSpec& s, double lam0 = 2.0, double sigma = 0.1) {
    return sample_template(s, {std::log(lam0) - sigma * sigma / 2, sigma, 0, 1, 0});
}

// random letters small enough to stay resolved on the default grid
inline Letter random_letter(std::mt19937_64& rng, int n, bool allow_fourier) {
    std::uniform_real_distribution<double> u(-1, 1);
    int kinds = allow_fourier ? 6 : 5;
    int k = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
    auto sym = [&](double s) {
        RMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m(i, j) = m(j, i) = s * u(rng);
        return m;
    };
    switch (k) {
        case 0: {
            RVec p(n), q(n);
            for (int i = 0; i < n; ++i) {
                p[i] = 0.5 * u(rng);
                q[i] = u(rng);
            }
            return Heis{p, q, u(rng)};
        }
        case 1: return Dil{std::exp(0.3 * u(rng))};
        case 2: return GL::from_log(sym(0.25));
        case 3: return Lower{sym(0.25)};
        case 4: return Upper{sym(0.25)};
        default: return Fourier{};
    }
}

inline Word random_word(std::mt19937_64& rng, int n, bool allow_fourier) {
    int len = std::uniform_int_distribution<int>(1, 3)(rng);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(random_letter(rng, n, allow_fourier));
    return w;
}

// Character chi_(p,z) of the normal subgroup; exact labels
struct Character {
    std::vector<Scalar> p;
    Scalar z;
    bool operator==(const Character& o) const { return p == o.p && z == o.z; }
};

enum class Orbit { Plus, Minus, Ray, Origin };

inline const char* orbit_name(Orbit o) {
    switch (o) {
        case Orbit::Plus: return "O+";
        case Orbit::Minus: return "O-";
        case Orbit::Ray: return "ray";
        default: return "origin";
    }
}

inline Orbit classify(const Character& c) {
    if (sgn(c.z) > 0) return Orbit::Plus;
    if (sgn(c.z) < 0) return Orbit::Minus;
    for (const auto& x : c.p)
        if (sgn(x) != 0) return Orbit::Ray;
    return Orbit::Origin;
}

// (p, z) -> ((p + (z/r) p') / r, z / r^2)
inline Character mackey_orbit_step(const Character& c, const std::vector<Scalar>& pp, const Scalar& r) {
    if (sgn(r) <= 0) throw std::invalid_argument("r must be positive");
    if (pp.size() != c.p.size()) throw std::invalid_argument("dimension mismatch");
    Character o;
    o.z = c.z / (r * r);
    for (std::size_t k = 0; k < c.p.size(); ++k) o.p.push_back((c.p[k] + c.z / r * pp[k]) / r);
    return o;
}

struct AffineMove {
    std::vector<Scalar> p;
    Scalar r;
};

// one step by a then by b equals one step by (r_b p_a + p_b, r_a r_b)
inline AffineMove compose_moves(const AffineMove& a, const AffineMove& b) {
    AffineMove c;
    c.r = a.r * b.r;
    for (std::size_t k = 0; k < a.p.size(); ++k) c.p.push_back(b.r * a.p[k] + b.p[k]);
    return c;
}

}  // namespace modnet
