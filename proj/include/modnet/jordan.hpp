#pragma once

#include "modnet/parabolic.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace modnet {

class JordanAlgebra {
public:
    JordanAlgebra() = default;
    JordanAlgebra(std::vector<std::string> labels, Vec unit)
        : labels_(std::move(labels)), unit_(std::move(unit)), table_(labels_.size() * labels_.size()) {
        for (auto& v : table_) v = Vec(labels_.size());
    }

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit_element() const { return unit_; }

    void set_product(std::size_t i, std::size_t j, const Vec& v) {
        table_[i * dim() + j] = v;
        table_[j * dim() + i] = v;
    }
    const Vec& product_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec r(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (sgn(x[i]) == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (sgn(y[j]) == 0) continue;
                Scalar xy = x[i] * y[j];
                const Vec& p = product_basis(i, j);
                for (std::size_t k = 0; k < dim(); ++k)
                    if (sgn(p[k]) != 0) r[k] += xy * p[k];
            }
        }
        return r;
    }

    QMatrix L(const Vec& x) const {
        QMatrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(x, modnet::unit(dim(), j)));
        return m;
    }

    Vec power(const Vec& x, std::size_t k) const {
        Vec p = unit_;
        for (std::size_t i = 0; i < k; ++i) p = mul(x, p);
        return p;
    }

private:
    std::vector<std::string> labels_;
    Vec unit_;
    std::vector<Vec> table_;
};

inline bool is_commutative(const JordanAlgebra& j) {
    for (std::size_t a = 0; a < j.dim(); ++a)
        for (std::size_t b = 0; b < j.dim(); ++b)
            if (j.product_basis(a, b) != j.product_basis(b, a)) return false;
    return true;
}

// Fully linearised Jordan identity: [L(ab),L(c)] + [L(bc),L(a)] + [L(ca),L(b)] = 0.
inline bool jordan_identity_holds(const JordanAlgebra& j) {
    const std::size_t n = j.dim();
    std::vector<QMatrix> Lb(n);
    for (std::size_t a = 0; a < n; ++a) Lb[a] = j.L(unit(n, a));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c) {
                QMatrix s = commutator(j.L(j.product_basis(a, b)), Lb[c]) + commutator(j.L(j.product_basis(b, c)), Lb[a]) +
                            commutator(j.L(j.product_basis(c, a)), Lb[b]);
                if (!s.is_zero()) return false;
            }
    return true;
}

inline bool unit_acts_as_identity(const JordanAlgebra& j) { return j.L(j.unit_element()) == QMatrix::identity(j.dim()); }

struct KKTJordan {
    JordanAlgebra algebra;
    QMatrix embedding;  // columns: ambient coordinates of the basis of g_1(h)
};

// a . b = 1/2 [[a,y],b] on g_1(h) for an sl2-triple (2h, x, y)
inline KKTJordan kkt_jordan(const LieAlgebra& g, const Vec& h, const Vec& x, const Vec& y) {
    Vec h2 = Scalar(2) * h;
    if (g.bracket(h2, x) != Scalar(2) * x || g.bracket(h2, y) != Scalar(-2) * y || g.bracket(x, y) != h2)
        throw std::invalid_argument("sl2 triple relations fail");
    if (!is_euler(g, h)) throw std::invalid_argument("h is not an Euler element");
    Grading gr = grading(g, h);
    KKTJordan k;
    k.embedding = gr.piece(1, g.dim());
    const std::size_t n = k.embedding.cols();
    auto ux = solve_vec(k.embedding, x);
    if (!ux) throw std::invalid_argument("x not in g_1(h)");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    k.algebra = JordanAlgebra(labels, *ux);
    for (std::size_t a = 0; a < n; ++a) {
        Vec ay = g.bracket(k.embedding.col(a), y);
        for (std::size_t b = a; b < n; ++b) {
            Vec p = make_scalar(1, 2) * g.bracket(ay, k.embedding.col(b));
            auto c = solve_vec(k.embedding, p);
            if (!c) throw std::runtime_error("product leaves g_1(h)");
            k.algebra.set_product(a, b, *c);
        }
    }
    if (!is_commutative(k.algebra) || !jordan_identity_holds(k.algebra))
        throw std::runtime_error("Jordan identity fails");
    return k;
}

// Standard triple in sp(2n): h = h_s, x = [[0,I],[0,0]], y = [[0,0],[I,0]].
struct SpTriple {
    MatrixAlgebra sp;
    Vec h, x, y;
};

inline SpTriple sp_standard_triple(std::size_t n) {
    SpTriple t;
    t.sp = sp_algebra(n);
    QMatrix x(2 * n, 2 * n), y(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        x(i, n + i) = 1;
        y(n + i, i) = 1;
    }
    t.h = sp_coords(n, h_s_matrix(n));
    t.x = sp_coords(n, x);
    t.y = sp_coords(n, y);
    return t;
}

inline KKTJordan kkt_sp(std::size_t n) {
    auto t = sp_standard_triple(n);
    return kkt_jordan(t.sp.algebra, t.h, t.x, t.y);
}

struct PeirceData {
    Vec c;
    QMatrix P0, Phalf, P1;
    QMatrix E0, Ehalf, E1;
};

inline bool is_idempotent(const JordanAlgebra& j, const Vec& c) { return j.mul(c, c) == c; }

inline PeirceData peirce(const JordanAlgebra& j, const Vec& c) {
    if (!is_idempotent(j, c)) throw std::invalid_argument("element is not idempotent");
    const std::size_t n = j.dim();
    Grading g = grading_of(j.L(c), c, {0, make_scalar(1, 2), 1});
    PeirceData p;
    p.c = c;
    p.P0 = g.projector(0, n);
    p.Phalf = g.projector(make_scalar(1, 2), n);
    p.P1 = g.projector(1, n);
    p.E0 = g.piece(0, n);
    p.Ehalf = g.piece(make_scalar(1, 2), n);
    p.E1 = g.piece(1, n);
    return p;
}

// Monic minimal polynomial of x relative to the unit u (lowest degree first).
inline std::vector<Scalar> min_poly(const JordanAlgebra& j, const Vec& x, const Vec& u) {
    std::vector<Vec> pw{u};
    for (std::size_t k = 1; k <= j.dim() + 1; ++k) {
        Vec next = j.mul(x, pw.back());
        QMatrix prev = QMatrix::from_columns(pw, j.dim());
        auto c = solve_vec(prev, next);
        if (c) {
            std::vector<Scalar> m;
            for (const auto& q : *c) m.push_back(-q);
            m.push_back(1);
            return m;
        }
        pw.push_back(next);
    }
    throw std::runtime_error("minimal polynomial search failed");
}

inline Scalar poly_eval(const std::vector<Scalar>& p, const Scalar& t) {
    Scalar r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
    return r;
}

// best rational approximation with bounded denominator
inline Scalar rational_approx(double v, long max_den) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int it = 0; it < 40; ++it) {
        double a = std::floor(x);
        long ai = static_cast<long>(a);
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (std::abs(x - a) < 1e-12) break;
        x = 1.0 / (x - a);
    }
    return make_scalar(p1, q1);
}

// distinct rational roots, verified exactly; nullopt unless all roots are rational and simple
inline std::optional<std::vector<Scalar>> rational_roots(const std::vector<Scalar>& p) {
    const std::size_t deg = p.size() - 1;
    if (deg == 0) return std::vector<Scalar>{};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (std::size_t i = 0; i + 1 < deg; ++i) comp(i + 1, i) = 1;
    for (std::size_t i = 0; i < deg; ++i) comp(i, deg - 1) = -to_double(p[i]);
    Eigen::VectorXcd ev = comp.eigenvalues();
    std::vector<Scalar> roots;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (std::abs(ev[i].imag()) > 1e-6) return std::nullopt;
        Scalar r = rational_approx(ev[i].real(), 100000);
        if (sgn(poly_eval(p, r)) != 0) return std::nullopt;
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) return std::nullopt;
        roots.push_back(r);
    }
    return roots;
}

struct JordanFrame {
    std::vector<Vec> idempotents;
    std::size_t rank() const { return idempotents.size(); }
};

namespace detail {

// candidates in E_1(u): basis vectors, then small integer combinations
inline std::optional<std::pair<Vec, std::vector<Scalar>>> split_element(const JordanAlgebra& j, const QMatrix& w,
                                                                       const Vec& u) {
    const std::size_t m = w.cols();
    std::vector<Vec> cands;
    for (std::size_t a = 0; a < m; ++a) cands.push_back(w.col(a));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (int k = 1; k <= 3; ++k) cands.push_back(w.col(a) + Scalar(k) * w.col(b));
    for (const auto& x : cands) {
        auto mp = min_poly(j, x, u);
        if (mp.size() < 3) continue;
        auto roots = rational_roots(mp);
        if (roots) return std::make_pair(x, *roots);
    }
    return std::nullopt;
}

inline QMatrix e1_space(const JordanAlgebra& j, const Vec& c) {
    return nullspace(j.L(c) - QMatrix::identity(j.dim()));
}

inline void peel(const JordanAlgebra& j, const Vec& u, std::vector<Vec>& out, std::size_t& steps) {
    if (++steps > 4 * j.dim() + 4) throw std::runtime_error("frame peeling did not terminate");
    QMatrix w = e1_space(j, u);
    if (w.cols() == 1) {
        out.push_back(u);
        return;
    }
    auto s = split_element(j, w, u);
    if (!s) throw std::runtime_error("no element with rational spectrum found");
    const auto& [x, roots] = *s;
    for (const auto& l : roots) {
        // spectral idempotent prod_{mu != l} (x - mu u)/(l - mu)
        Vec c = u;
        for (const auto& mu : roots)
            if (mu != l) c = (1 / (l - mu)) * (j.mul(x, c) - mu * c);
        peel(j, c, out, steps);
    }
}

}  // namespace detail

inline JordanFrame jordan_frame(const JordanAlgebra& j) {
    JordanFrame f;
    std::size_t steps = 0;
    detail::peel(j, j.unit_element(), f.idempotents, steps);
    return f;
}

inline bool frame_ok(const JordanAlgebra& j, const JordanFrame& f) {
    Vec s(j.dim());
    for (std::size_t a = 0; a < f.rank(); ++a) {
        if (!is_idempotent(j, f.idempotents[a])) return false;
        if (detail::e1_space(j, f.idempotents[a]).cols() != 1) return false;
        for (std::size_t b = a + 1; b < f.rank(); ++b)
            if (!is_zero(j.mul(f.idempotents[a], f.idempotents[b]))) return false;
        s = s + f.idempotents[a];
    }
    return s == j.unit_element();
}

// Invariant forms S(x.y, z) = S(y, x.z): basis of the solution space, each a symmetric matrix.
inline std::vector<QMatrix> invariant_forms(const JordanAlgebra& j) {
    const std::size_t n = j.dim();
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) idx.emplace_back(a, b);
    auto var = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), std::make_pair(a, b)) - idx.begin());
    };
    QMatrix sys(n * n * n, idx.size());
    std::size_t row = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z, ++row) {
                const Vec& xy = j.product_basis(x, y);
                const Vec& xz = j.product_basis(x, z);
                for (std::size_t k = 0; k < n; ++k) {
                    if (sgn(xy[k]) != 0) sys(row, var(k, z)) += xy[k];
                    if (sgn(xz[k]) != 0) sys(row, var(y, k)) -= xz[k];
                }
            }
    QMatrix ns = nullspace(sys);
    std::vector<QMatrix> out;
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        QMatrix s(n, n);
        for (std::size_t v = 0; v < idx.size(); ++v) {
            s(idx[v].first, idx[v].second) = ns(v, c);
            s(idx[v].second, idx[v].first) = ns(v, c);
        }
        out.push_back(s);
    }
    return out;
}

// trace form tr L(x.y)
inline QMatrix trace_form(const JordanAlgebra& j) {
    const std::size_t n = j.dim();
    QMatrix t(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t(a, b) = j.L(j.product_basis(a, b)).trace();
    return t;
}

inline bool form_is_invariant(const JordanAlgebra& j, const QMatrix& s) {
    const std::size_t n = j.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vec sxy = s * j.product_basis(x, y);
                Vec sxz = s * j.product_basis(x, z);
                if (sxy[z] != sxz[y]) return false;
            }
    return true;
}

// euclidean inner product: the trace form when it is invariant and positive definite
inline std::optional<QMatrix> euclidean_form(const JordanAlgebra& j) {
    QMatrix t = trace_form(j);
    auto forms = invariant_forms(j);
    if (forms.empty()) return std::nullopt;
    QMatrix span(j.dim() * j.dim(), 0);
    for (const auto& f : forms) span = span.hcat(QMatrix::column(flatten(f)));
    if (!subspace_contains(span, QMatrix::column(flatten(t)))) return std::nullopt;
    if (!is_pd(t)) return std::nullopt;
    return t;
}

// Subalgebra on the columns of b (closed under the product) with given unit.
inline JordanAlgebra restrict_jordan(const JordanAlgebra& j, const QMatrix& b, const Vec& unit_amb) {
    const std::size_t m = b.cols();
    auto u = solve_vec(b, unit_amb);
    if (!u) throw std::invalid_argument("unit outside subspace");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back("m" + std::to_string(i));
    JordanAlgebra s(labels, *u);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = a; c < m; ++c) {
            auto p = solve_vec(b, j.mul(b.col(a), b.col(c)));
            if (!p) throw std::runtime_error("subspace not closed under the product");
            s.set_product(a, c, *p);
        }
    return s;
}

struct JordanMinor {
    JordanAlgebra algebra;
    QMatrix basis;  // in the parent's coordinates
};

// E^(k) = E_1(c_1 + ... + c_k)
inline JordanMinor minor_subalgebra(const JordanAlgebra& j, const JordanFrame& f, std::size_t k) {
    if (k < 1 || k > f.rank()) throw std::invalid_argument("k out of range");
    Vec c(j.dim());
    for (std::size_t i = 0; i < k; ++i) c = c + f.idempotents[i];
    QMatrix b = detail::e1_space(j, c);
    return {restrict_jordan(j, b, c), b};
}

// det via the minimal polynomial of regular points x + s w, w = sum k c_k, interpolated to s = 0
inline Scalar jordan_det(const JordanAlgebra& j, const JordanFrame& f, const Vec& x) {
    const std::size_t r = f.rank();
    Vec w(j.dim());
    for (std::size_t k = 0; k < r; ++k) w = w + Scalar(static_cast<long>(k + 1)) * f.idempotents[k];
    std::vector<Scalar> ss, vals;
    for (long s = 1; ss.size() < r + 1 && s < 64 * static_cast<long>(r + 1); ++s) {
        Vec y = x + Scalar(s) * w;
        auto mp = min_poly(j, y, j.unit_element());
        if (mp.size() != r + 1) continue;
        Scalar d = mp[0];
        if (r % 2 == 1) d = -d;
        ss.emplace_back(s);
        vals.push_back(d);
    }
    if (ss.size() < r + 1) throw std::runtime_error("not enough regular points");
    Scalar out = 0;
    for (std::size_t a = 0; a <= r; ++a) {
        Scalar li = 1;
        for (std::size_t b = 0; b <= r; ++b)
            if (a != b) li *= (0 - ss[b]) / (ss[a] - ss[b]);
        out += vals[a] * li;
    }
    return out;
}

// {0, d/2, ..., (d/2)(r-1)} union ((d/2)(r-1), inf)
inline bool wallach_contains(const Scalar& alpha, int r, int d) {
    if (r < 1 || d < 1) throw std::invalid_argument("r and d must be positive");
    Scalar top = make_scalar(static_cast<long>(d) * (r - 1), 2);
    if (alpha > top) return true;
    for (int k = 0; k < r; ++k)
        if (alpha == make_scalar(static_cast<long>(d) * k, 2)) return true;
    return false;
}

inline bool wallach_contains(double alpha, int r, int d) { return wallach_contains(Scalar(alpha), r, d); }

// Gamma integral of the Sym(2) cone, int e^{-tr x} det(x)^{alpha - 3/2} dx with respect to
// the trace inner product; closed form sqrt(2 pi) Gamma(alpha) Gamma(alpha - 1/2).
inline double riesz_gamma_sym2_closed(double alpha) {
    return std::sqrt(2 * M_PI) * boost::math::tgamma(alpha) * boost::math::tgamma(alpha - 0.5);
}

inline double riesz_gamma_sym2_quadrature(double alpha) {
    boost::math::quadrature::exp_sinh<double> half_line;
    boost::math::quadrature::tanh_sinh<double> finite;
    const double beta = alpha - 1.5;
    auto inner = [&](double a, double b) {
        double r = std::sqrt(a * b);
        if (!(r > 0) || !std::isfinite(r)) return 0.0;
        return finite.integrate([&](double t) {
            double q = a * b - t * t;
            return q <= 0 ? 0.0 : std::pow(q, beta);
        }, -r, r);
    };
    double v = half_line.integrate([&](double a) {
        return half_line.integrate([&](double b) {
            double e = std::exp(-a - b);
            return e == 0 ? 0.0 : e * inner(a, b);
        });
    });
    return std::sqrt(2.0) * v;  // off-diagonal coordinate has trace-norm sqrt 2
}

}  // namespace modnet
