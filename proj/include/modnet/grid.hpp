#pragma once

#include "modnet/parallel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace modnet {

using cd = std::complex<double>;

struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NyquistError : GridError {
    using GridError::GridError;
};
struct SupportError : GridError {
    using GridError::GridError;
};

// Log-uniform lambda nodes, cell-centred x nodes on [-X, X] per axis.
struct GridSpec {
    int n = 1;
    double lam_min = 0.05, lam_max = 20.0;
    int n_lam = 256;
    double X = 12.0;
    int n_x = 512;

    void validate() const {
        if (n != 1 && n != 2) throw std::invalid_argument("grid dimension must be 1 or 2");
        if (!(lam_min > 0) || !(lam_max > lam_min)) throw std::invalid_argument("bad lambda range");
        if (n_lam < 2 || n_x < 2 || n_x % 2) throw std::invalid_argument("bad node counts");
        if (!(X > 0)) throw std::invalid_argument("bad x extent");
    }
    double h() const { return std::log(lam_max / lam_min) / (n_lam - 1); }
    double u(int i) const { return std::log(lam_min) + i * h(); }
    double lam(int i) const { return std::exp(u(i)); }
    double dx() const { return 2 * X / n_x; }
    double x(int j) const { return -X + (j + 0.5) * dx(); }
    std::size_t row_size() const { return n == 1 ? n_x : std::size_t(n_x) * n_x; }
    std::size_t size() const { return row_size() * n_lam; }
    // dlambda/lambda (x) dx; interior trapezoid weights, data vanishes at the ends
    double weight() const { return h() * std::pow(dx(), n); }
    // x coordinates of flat row index j
    Eigen::Vector2d point(std::size_t j) const {
        if (n == 1) return {x(int(j)), 0.0};
        return {x(int(j / n_x)), x(int(j % n_x))};
    }
    bool operator==(const GridSpec& o) const {
        return n == o.n && lam_min == o.lam_min && lam_max == o.lam_max && n_lam == o.n_lam && X == o.X &&
               n_x == o.n_x;
    }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

struct GridFunction {
    GridSpec spec;
    std::vector<cd> v;

    GridFunction() = default;
    explicit GridFunction(const GridSpec& s) : spec(s), v(s.size()) { s.validate(); }

    cd& at(int i, std::size_t j) { return v[std::size_t(i) * spec.row_size() + j]; }
    const cd& at(int i, std::size_t j) const { return v[std::size_t(i) * spec.row_size() + j]; }
    cd* row(int i) { return v.data() + std::size_t(i) * spec.row_size(); }
    const cd* row(int i) const { return v.data() + std::size_t(i) * spec.row_size(); }

    // fn(lambda, x) with x = (x0, x1); x1 ignored when n = 1
    static GridFunction sample(const GridSpec& s, const std::function<cd(double, const Eigen::Vector2d&)>& fn) {
        GridFunction f(s);
        parallel_for(s.n_lam, [&](std::size_t i) {
            double l = s.lam(int(i));
            for (std::size_t j = 0; j < s.row_size(); ++j) f.at(int(i), j) = fn(l, s.point(j));
        });
        for (const auto& c : f.v)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw GridError("non-finite sample");
        return f;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& c : v) m = std::max(m, std::abs(c));
        return m;
    }
    double row_max(int i) const {
        double m = 0;
        for (std::size_t j = 0; j < spec.row_size(); ++j) m = std::max(m, std::abs(at(i, j)));
        return m;
    }

    GridFunction& operator+=(const GridFunction& o) {
        check_same(o);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += o.v[k];
        return *this;
    }
    GridFunction& operator-=(const GridFunction& o) {
        check_same(o);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= o.v[k];
        return *this;
    }
    GridFunction& operator*=(cd c) {
        for (auto& x : v) x *= c;
        return *this;
    }
    void check_same(const GridFunction& o) const {
        if (spec != o.spec) throw std::invalid_argument("grid spec mismatch");
    }
};

inline GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
inline GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
inline GridFunction operator*(cd c, GridFunction a) { return a *= c; }

// <f, g> = sum conj(f) g with dlambda/lambda (x) dx weights; per-row then pairwise over rows
inline cd inner_product(const GridFunction& f, const GridFunction& g) {
    f.check_same(g);
    std::vector<cd> rows(f.spec.n_lam);
    const std::size_t m = f.spec.row_size();
    for (int i = 0; i < f.spec.n_lam; ++i) {
        std::vector<cd> t(m);
        const cd *a = f.row(i), *b = g.row(i);
        for (std::size_t j = 0; j < m; ++j) t[j] = std::conj(a[j]) * b[j];
        rows[i] = pairwise_sum(t);
    }
    return pairwise_sum(rows) * f.spec.weight();
}

inline double norm(const GridFunction& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

// ||a - b|| / scale
inline double rel_distance(const GridFunction& a, const GridFunction& b, double scale) {
    return norm(a - b) / scale;
}

// min over a global phase of ||a - e^{i phi} b|| / scale
inline double projective_distance(const GridFunction& a, const GridFunction& b, double scale) {
    double na = inner_product(a, a).real(), nb = inner_product(b, b).real();
    double c = std::abs(inner_product(a, b));
    return std::sqrt(std::max(0.0, na + nb - 2 * c)) / scale;
}

// rows carrying more than rel * max|f|
inline std::vector<char> significant_rows(const GridFunction& f, double rel = 1e-12) {
    double m = f.max_abs();
    std::vector<char> s(f.spec.n_lam);
    for (int i = 0; i < f.spec.n_lam; ++i) s[i] = f.row_max(i) > rel * m;
    return s;
}

}  // namespace modnet
