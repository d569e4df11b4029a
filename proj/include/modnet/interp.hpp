#pragma once

#include "modnet/grid.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <vector>

namespace modnet {

// Lagrange weights for fractional position s on integer nodes start..start+order-1.
inline std::vector<double> lagrange_weights(double s, int start, int order) {
    std::vector<double> w(order, 1.0);
    for (int a = 0; a < order; ++a) {
        double xa = start + a;
        for (int b = 0; b < order; ++b)
            if (b != a) w[a] *= (s - (start + b)) / (xa - (start + b));
    }
    return w;
}

// Value at fractional index s of a sequence extended by zero.
template <class Get>
cd lagrange_at(double s, int len, int order, Get&& get) {
    double r = std::round(s);
    if (std::abs(s - r) < 1e-12) {
        int k = int(r);
        return (k >= 0 && k < len) ? get(k) : cd(0);
    }
    int start = int(std::floor(s)) - order / 2 + 1;
    auto w = lagrange_weights(s, start, order);
    cd acc = 0;
    for (int a = 0; a < order; ++a) {
        int k = start + a;
        if (k >= 0 && k < len) acc += w[a] * get(k);
    }
    return acc;
}

// Periodic band-limited interpolation kernel on N cell-centred nodes spacing dx
// (symmetric Nyquist split, even N).
inline double dirichlet(double t, int N, double dx) {
    const double L = N * dx;
    double a = std::numbers::pi * t / L;
    double sa = std::sin(a);
    if (std::abs(sa) < 1e-14) return 1.0;  // |t| < L in all uses
    return std::sin(N * a) / (N * std::tan(a));
}

// Translation of a sampled line by a (in x units): out(x) = in(x - a), zero-padded to 2N.
inline void spectral_shift(std::vector<cd>& line, double a, double dx) {
    const int N = int(line.size()), L = 2 * N;
    if (a == 0) return;
    static thread_local Eigen::FFT<double> fft;
    std::vector<cd> buf(L, cd(0)), spec;
    std::copy(line.begin(), line.end(), buf.begin());
    fft.fwd(spec, buf);
    for (int m = 0; m < L; ++m) {
        int k = m < L / 2 ? m : m - L;
        double w = 2 * std::numbers::pi * k / (L * dx);
        if (m == L / 2) spec[m] *= std::cos(w * a);
        else spec[m] *= std::polar(1.0, -w * a);
    }
    fft.inv(buf, spec);
    std::copy(buf.begin(), buf.begin() + N, line.begin());
}

// Dense quadrature Fourier matrix on the x-grid: sign +1 gives F^-1 (e^{+ixy}), -1 gives F.
inline Eigen::MatrixXcd dft_matrix(const GridSpec& s, int sign) {
    const int N = s.n_x;
    Eigen::MatrixXcd m(N, N);
    const double c = s.dx() / std::sqrt(2 * std::numbers::pi);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) m(j, k) = c * std::polar(1.0, sign * s.x(j) * s.x(k));
    return m;
}

// Apply an N x N matrix along every x-axis of every row.
inline void apply_along_axes(GridFunction& f, const Eigen::MatrixXcd& m) {
    const auto& s = f.spec;
    const int N = s.n_x;
    parallel_for(s.n_lam, [&](std::size_t i) {
        cd* r = f.row(int(i));
        if (s.n == 1) {
            Eigen::Map<Eigen::VectorXcd> v(r, N);
            Eigen::VectorXcd out = m * v;
            v = out;
        } else {
            // row-major N x N block: axis 0 indexes rows
            Eigen::Map<Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> b(r, N, N);
            Eigen::MatrixXcd out = m * b * m.transpose();
            b = out;
        }
    });
}

}  // namespace modnet
