#pragma once

#include "modnet/dist.hpp"
#include "modnet/kernel.hpp"
#include "modnet/spindler.hpp"

#include <optional>

namespace modnet {

// Cardinal B-spline of order m on [0, m], unit integral.
inline double cardinal_bspline(int m, double y) {
    if (y <= 0 || y >= m) return 0.0;
    if (m == 1) return 1.0;
    return (y * cardinal_bspline(m - 1, y) + (m - y) * cardinal_bspline(m - 1, y - 1)) / (m - 1);
}

// (e^{iu} - 1) / (iu)
inline cd spline_factor(cd u) {
    if (std::abs(u) < 1e-4) return 1.0 + cd(0, 0.5) * u - u * u / 6.0 - cd(0, 1) * u * u * u / 24.0;
    return (std::exp(cd(0, 1) * u) - 1.0) / (cd(0, 1) * u);
}

// amp * N_m((y - a)/h) / h: support [a, a + m h], integral amp
struct Bump {
    double a = 0, h = 0.1;
    int order = 8;
    double amp = 1;

    double lo() const { return a; }
    double hi() const { return a + order * h; }
    double value(double y) const { return amp / h * cardinal_bspline(order, (y - a) / h); }
    // int phi(y) e^{i w y} dy
    cd ft(cd w) const {
        cd f = spline_factor(w * h), p = 1;
        for (int k = 0; k < order; ++k) p *= f;
        return amp * std::exp(cd(0, 1) * w * a) * p;
    }
};

inline Bump bump_on(double lo, double hi, int order = 8) { return {lo, (hi - lo) / order, order, 1.0}; }

// two-scale relation: N(y) = sum_k binom(m,k) 2^{1-m} N(2y - k)
inline std::vector<Bump> refine(const Bump& b) {
    std::vector<Bump> out;
    double c = 1;
    for (int k = 0; k <= b.order; ++k) {
        out.push_back({b.a + k * b.h / 2, b.h / 2, b.order, b.amp * c / std::pow(2.0, b.order)});
        c = c * (b.order - k) / (k + 1);
    }
    return out;
}

// Gauss-Legendre on [-1, 1] by Golub-Welsch
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int k) {
    RMat t = RMat::Zero(k, k);
    for (int i = 1; i < k; ++i) t(i, i - 1) = t(i - 1, i) = i / std::sqrt(4.0 * i * i - 1);
    Eigen::SelfAdjointEigenSolver<RMat> es(t);
    std::vector<double> x(k), w(k);
    for (int i = 0; i < k; ++i) {
        x[i] = es.eigenvalues()[i];
        w[i] = 2 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    }
    return {x, w};
}

// one chart coordinate: pinned value or a bump density
struct Coord {
    bool pinned = true;
    double value = 0;
    Bump bump;

    static Coord pin(double v) { return {true, v, {}}; }
    static Coord smear(const Bump& b) { return {false, 0, b}; }
    double lo() const { return pinned ? value : bump.lo(); }
    double hi() const { return pinned ? value : bump.hi(); }
    double mass() const { return pinned ? 1.0 : bump.amp; }
    cd ft(cd w) const { return pinned ? std::exp(cd(0, 1) * w * value) : bump.ft(w); }
    // (node, weight) pairs integrating against the density
    std::vector<std::pair<double, double>> nodes(int per_interval = 8) const {
        if (pinned) return {{value, 1.0}};
        auto [x, w] = gauss_legendre(per_interval);
        std::vector<std::pair<double, double>> out;
        for (int k = 0; k < bump.order; ++k) {
            double lo = bump.a + k * bump.h, half = bump.h / 2;
            for (int i = 0; i < per_interval; ++i) {
                double y = lo + half * (x[i] + 1);
                out.push_back({y, w[i] * half * bump.value(y)});
            }
        }
        return out;
    }
};

// Second-kind coordinates of the wedge chart (n = 1):
// S:    Lower(C) Heis(0,q,0) GL(A) Dil(e^t) Heis(p,0,z) Upper(B)
// S^-1: Upper(-B) Heis(-p,0,-z) Dil(e^-t) GL(-A) Heis(0,-q,0) Lower(-C)
struct WedgeChartPoint {
    double C = -0.2, q = 0, A = 0, t = 0, p = 0, z = 0.5, B = -0.05;
};

enum class Chart { S, SInv };

inline Word chart_word(const WedgeChartPoint& x, Chart c) {
    if (c == Chart::S)
        return {lower(x.C), heis(0, x.q, 0), gl(x.A), Dil{std::exp(x.t)}, heis(x.p, 0, x.z), upper(x.B)};
    return {upper(-x.B), heis(-x.p, 0, -x.z), Dil{std::exp(-x.t)}, gl(-x.A), heis(0, -x.q, 0), lower(-x.C)};
}

// Open cones, decided by the exact hsp oracle:
// C- : -Lower(C) in C;  C+ : (p, z, Upper(B)) in the relative interior of g_1 cap C.
inline bool chart_point_in_cone(const WedgeChartPoint& x) {
    QMatrix lo(2, 2), up(2, 2);
    lo(1, 0) = Scalar(-2 * x.C);
    up(0, 1) = Scalar(2 * x.B);
    auto cm = hsp_plus_contains(Vec{Scalar(0), Scalar(0)}, Scalar(0), lo);
    if (!cm.contained || x.C == 0) return false;
    auto cp = hsp_plus_contains(Vec{Scalar(x.p), Scalar(0)}, Scalar(x.z), up);
    return cp.contained && sgn(cp.schur) > 0 && x.B < 0;
}

struct ChartTest {
    Coord C = Coord::smear(bump_on(-0.45, -0.05));
    Coord q = Coord::smear(bump_on(-0.6, 0.6));
    Coord A = Coord::pin(0);
    Coord t = Coord::pin(0);
    Coord p = Coord::pin(0);
    Coord z = Coord::smear(bump_on(0.1, 0.9));
    // small |B|: Upper(-B) on the S^-1 chart then keeps the x-tails inside the box
    Coord B = Coord::pin(-0.05);
};

// every corner of the (C, p, z, B) support box lies in the open cones; convexity covers the rest
inline void check_chart_support(const ChartTest& f) {
    for (double c : {f.C.lo(), f.C.hi()})
        for (double p : {f.p.lo(), f.p.hi()})
            for (double z : {f.z.lo(), f.z.hi()})
                for (double b : {f.B.lo(), f.B.hi()}) {
                    WedgeChartPoint x;
                    x.C = c;
                    x.p = p;
                    x.z = z;
                    x.B = b;
                    if (!chart_point_in_cone(x)) throw std::invalid_argument("test function leaves the wedge chart");
                }
}

// nu(g(pt)) eta~ as a closed-form kernel
inline KernelTerm wedge_kernel(const WedgeChartPoint& x, const DistributionVector& d, Chart c = Chart::S) {
    d.validate();
    if (d.n != 1) throw std::invalid_argument("wedge chart implemented for n = 1");
    KernelTerm k = KernelTerm::power(1, d.s);
    k.S = d.phase_factor();
    return act(chart_word(x, c), k);
}

namespace detail {

// F^-1 e^{-i B xi^2} F with complex B
inline GridFunction upper_multiplier(const GridFunction& f, cd b) {
    GridFunction g = f;
    apply_along_axes(g, dft_matrix(f.spec, -1));
    const auto& s = f.spec;
    for (int i = 0; i < s.n_lam; ++i)
        for (std::size_t j = 0; j < s.row_size(); ++j) {
            double x = s.x(int(j));
            g.at(i, j) *= std::exp(cd(0, -1) * b * x * x);
        }
    apply_along_axes(g, dft_matrix(f.spec, +1));
    return g;
}

}  // namespace detail

// Everything but the pinned S^-1 letters Heis(-p,0,0), Upper(-B), continued by Delta^{theta/2pi}.
// Linear-phase coordinates (z, q, C) are integrated in closed form, (A, t) by Gauss-Legendre.
inline GridFunction smear_core(const DistributionVector& d, const ChartTest& phi, Chart chart, const GridSpec& g,
                               double theta = 0) {
    d.validate();
    if (g.n != 1 || d.n != 1) throw std::invalid_argument("smears implemented for n = 1");
    check_chart_support(phi);
    if (chart == Chart::SInv && (!phi.p.pinned || !phi.B.pinned))
        throw std::invalid_argument("S^-1 chart needs pinned p and B");
    const cd c = d.phase_factor();
    const cd rot = std::exp(cd(0, theta));
    const cd pre_theta = std::exp(cd(0, -theta / 4)) * c;
    const double mass = chart == Chart::S ? phi.p.mass() * phi.B.mass() : 1.0;

    GridFunction v(g);
    std::vector<cd> ls(g.n_lam);
    for (int i = 0; i < g.n_lam; ++i) ls[i] = std::exp(d.s * (std::log(g.lam(i)) + cd(0, theta / 2)));
    for (auto [A, wa] : phi.A.nodes(16))
        for (auto [t, wt] : phi.t.nodes(16)) {
            double w = wa * wt * mass;
            cd S;
            double alpha, beta, gamma;
            if (chart == Chart::S) {
                S = std::exp(t * d.s - A / 2);
                alpha = std::exp(2 * t);
                beta = 1;
                gamma = 1;
            } else {
                S = std::exp(-t * d.s + A / 2);
                alpha = -1;
                beta = -std::exp(A - t);
                gamma = -std::exp(2 * A);
            }
            std::vector<cd> cx(g.n_x);
            for (int j = 0; j < g.n_x; ++j) cx[j] = phi.C.ft(gamma / rot * g.x(j) * g.x(j));
            parallel_for(g.n_lam, [&](std::size_t ii) {
                int i = int(ii);
                double l = g.lam(i);
                cd row = pre_theta * w * S * ls[i] * phi.z.ft(alpha * rot * l * l);
                if (row == cd(0)) return;
                cd* r = v.row(i);
                for (int j = 0; j < g.n_x; ++j) r[j] += row * phi.q.ft(beta * l * g.x(j)) * cx[j];
            });
        }
    return v;
}

// Delta^{theta/2pi} of the smear int phi(pt) nu(g(pt)) eta~ dpt; theta = 0 is the smear itself
inline GridFunction smear_eval(const DistributionVector& d, const ChartTest& phi, Chart chart, const GridSpec& g,
                               double theta = 0) {
    GridFunction v = smear_core(d, phi, chart, g, theta);
    const cd rot = std::exp(cd(0, theta));
    if (chart == Chart::SInv) {
        if (phi.p.value != 0) {
            if (theta != 0) throw std::domain_error("continuation leaves the kernel family (p pinned off zero)");
            v = apply_letter(heis(-phi.p.value, 0, 0), v);
        }
        if (phi.B.value != 0) {
            v = detail::upper_multiplier(v, -rot * phi.B.value);
            if (theta == 0) detail::boundary_decay(v, 1e-6, "S^-1 smear");
        }
    }
    for (const auto& x : v.v)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw std::overflow_error("continuation overflows");
    return v;
}

struct SmearedVector {
    GridFunction v;
    DistributionVector eta;
    Chart chart;
    ChartTest phi;
};

inline SmearedVector smear(const DistributionVector& d, const ChartTest& phi, Chart chart, const GridSpec& g) {
    SmearedVector s{smear_eval(d, phi, chart, g), d, chart, phi};
    double nv = norm(s.v);
    if (!std::isfinite(nv) || nv == 0) throw std::runtime_error("smeared vector has no finite nonzero norm");
    return s;
}

// lam^s is the only decay near lam = 0, so the grid reaches far down (log-uniform rows are cheap)
inline GridSpec net_grid() {
    GridSpec g;
    g.lam_min = 1e-7;
    g.lam_max = 30;
    g.n_lam = 960;
    return g;
}

struct KmsReport {
    double boundary = 0;      // ||Delta^{1/2} v - J v|| / ||v||
    double strip_excess = 0;  // max over the strip of ||Delta^{theta/2pi} v|| / ||v|| - 1
    double residual() const { return std::max(boundary, strip_excess); }
};

inline KmsReport standardness_kms_check(const SmearedVector& s, const GridSpec& g, int n_theta = 6,
                                        double cap = 1e30) {
    KmsReport r;
    const double nv = norm(s.v);
    for (int k = 1; k <= n_theta; ++k) {
        double th = std::numbers::pi * k / n_theta;
        double nt;
        std::optional<GridFunction> vt;
        try {
            vt = smear_eval(s.eta, s.phi, s.chart, g, th);
            nt = norm(*vt);
        } catch (const std::overflow_error&) {
            nt = std::numeric_limits<double>::infinity();
        }
        if (!std::isfinite(nt)) {
            r.strip_excess = cap;
            if (k == n_theta) r.boundary = cap;
            continue;
        }
        r.strip_excess = std::min(cap, std::max(r.strip_excess, nt / nv - 1));
        if (k == n_theta) r.boundary = std::min(cap, rel_distance(*vt, j_nu(s.v), nv));
    }
    return r;
}

// |Im <v-, v+>| / (||v-|| ||v+||)
inline double locality_residual(const GridFunction& vm, const GridFunction& vp) {
    return std::abs(inner_product(vm, vp).imag()) / (norm(vm) * norm(vp));
}

// Left translation of the S-chart test function by a chart-preserving letter (pushforward).
inline ChartTest translate(const ChartTest& f, const Letter& l) {
    ChartTest o = f;
    auto shift = [](Coord& c, double d) {
        if (c.pinned) c.value += d;
        else c.bump.a += d;
    };
    auto scale = [](Coord& c, double r) {
        if (c.pinned) c.value *= r;
        else {
            c.bump.a *= r;
            c.bump.h *= r;
            if (r < 0) {
                c.bump.a += c.bump.order * c.bump.h;
                c.bump.h = -c.bump.h;
            }
        }
    };
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Heis>) {
                if (x.p.size() != 1 || x.p[0] != 0) throw std::invalid_argument("translation must have p = 0");
                if (x.z != 0 && !f.t.pinned) throw std::invalid_argument("central translation needs pinned t");
                shift(o.q, x.q[0]);
                if (x.z != 0) shift(o.z, x.z * std::exp(-2 * f.t.value));
            } else if constexpr (std::is_same_v<T, Lower>) {
                shift(o.C, x.C(0, 0));
            } else if constexpr (std::is_same_v<T, Dil>) {
                scale(o.q, x.r);
                shift(o.t, std::log(x.r));
            } else if constexpr (std::is_same_v<T, GL>) {
                double a = std::log(x.M(0, 0));
                scale(o.C, std::exp(-2 * a));
                scale(o.q, std::exp(-a));
                shift(o.A, a);
            } else {
                throw std::invalid_argument("letter does not preserve the chart");
            }
        },
        l);
    return o;
}

// ||smear(phi o g^-1) - nu(g) smear(phi)|| / ||smear(phi)||
inline double net_covariance_residual(const DistributionVector& d, const ChartTest& phi, const Letter& g,
                                      const GridSpec& grid) {
    auto v = smear_eval(d, phi, Chart::S, grid);
    auto moved = smear_eval(d, translate(phi, g), Chart::S, grid);
    return rel_distance(moved, apply_word({g}, v), norm(v));
}

// distance of target to the span of the family, relative to ||target||
inline double span_residual(const GridFunction& target, const std::vector<GridFunction>& family) {
    const std::size_t m = target.v.size();
    Eigen::MatrixXcd a(m, family.size());
    for (std::size_t k = 0; k < family.size(); ++k) a.col(k) = Eigen::Map<const Eigen::VectorXcd>(family[k].v.data(), m);
    Eigen::Map<const Eigen::VectorXcd> b(target.v.data(), m);
    Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
    return (a * x - b).norm() / b.norm();
}

// isotony proxy: the small-support smear lies in the span of smears over a larger z-window,
// built from half-scale bumps (the two-scale relation makes the span contain it)
struct IsotonyReport {
    double residual;
    std::size_t family_size;
};

inline IsotonyReport isotony_check(const DistributionVector& d, const ChartTest& small, double z_lo, double z_hi,
                                   const GridSpec& g) {
    if (small.z.pinned) throw std::invalid_argument("isotony needs a z-bump");
    if (small.z.lo() < z_lo || small.z.hi() > z_hi) throw std::invalid_argument("small region not inside large one");
    const Bump& b = small.z.bump;
    std::vector<GridFunction> fam;
    double step = b.h / 2;
    double start = b.a - step * std::floor((b.a - z_lo) / step);
    for (double a = start; a + b.order * step <= z_hi + 1e-12; a += step) {
        ChartTest f = small;
        f.z = Coord::smear({a, step, b.order, 1.0});
        fam.push_back(smear_eval(d, f, Chart::S, g));
    }
    return {span_residual(smear_eval(d, small, Chart::S, g), fam), fam.size()};
}

// numerical rank of the Gram matrix of the vectors
inline std::size_t gram_rank(const std::vector<GridFunction>& vs, double rel_tol = 1e-10) {
    const std::size_t k = vs.size();
    Eigen::MatrixXcd gm(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gm(i, j) = inner_product(vs[i], vs[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gm);
    double top = es.eigenvalues().maxCoeff();
    std::size_t r = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) r += es.eigenvalues()[i] > rel_tol * top;
    return r;
}

}  // namespace modnet
