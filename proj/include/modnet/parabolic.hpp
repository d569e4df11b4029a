#pragma once

#include "modnet/euler.hpp"

#include <string>
#include <vector>

namespace modnet {

// sl(2) triple in sp(2N), N = n+1, acting on the last symplectic plane (e_n, f_n).
struct Sl2Triple {
    std::size_t n = 0;  // g_kappa = sp(2n)
    MatrixAlgebra ambient;
    Vec H, X, Y, U;
};

inline std::size_t ambient_rank(const Sl2Triple& t) { return t.n + 1; }

inline std::vector<Scalar> integer_set(int r) {
    std::vector<Scalar> s;
    for (int k = -r; k <= r; ++k) s.emplace_back(k);
    return s;
}

// m = 2n: triple in sp(m+2)
inline Sl2Triple sl2_embed_mult1(std::size_t m) {
    if (m % 2 != 0) throw std::invalid_argument("m must be even");
    Sl2Triple t;
    t.n = m / 2;
    const std::size_t N = t.n + 1;
    t.ambient = sp_algebra(N);
    QMatrix h(2 * N, 2 * N), x(2 * N, 2 * N), y(2 * N, 2 * N);
    h(t.n, t.n) = 1;
    h(N + t.n, N + t.n) = -1;
    x(t.n, N + t.n) = 1;
    y(N + t.n, t.n) = 1;
    t.H = sp_coords(N, h);
    t.X = sp_coords(N, x);
    t.Y = sp_coords(N, y);
    t.U = t.X - t.Y;
    const auto& a = t.ambient.algebra;
    if (a.bracket(t.H, t.X) != Scalar(2) * t.X || a.bracket(t.H, t.Y) != Scalar(-2) * t.Y ||
        a.bracket(t.X, t.Y) != t.H)
        throw std::logic_error("sl2 relations fail");
    return t;
}

// sp(2n) inside sp(2n+2) on the first n planes
inline Vec embed_sp(std::size_t n, const Vec& c) {
    const std::size_t N = n + 1;
    QMatrix small = sp_matrix(n, c), big(2 * N, 2 * N);
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) {
            std::size_t bi = i < n ? i : N + (i - n), bj = j < n ? j : N + (j - n);
            big(bi, bj) = small(i, j);
        }
    return sp_coords(N, big);
}

inline QMatrix embed_sp_basis(std::size_t n) {
    const std::size_t d = n * (2 * n + 1), N = n + 1;
    QMatrix b(N * (2 * N + 1), d);
    for (std::size_t k = 0; k < d; ++k) b.set_col(k, embed_sp(n, unit(d, k)));
    return b;
}

struct ParabolicDecomposition {
    QMatrix b_basis;
    QMatrix g_kappa_basis;
    QMatrix V_kappa_basis;
    QMatrix z_kappa_basis;
    QMatrix j_basis;  // z + V + g_kappa
    Grading h_grading;  // of ad(H_kappa)
    bool z_is_X_line = false;
    bool V_bracket_spans_z = false;
    bool g_kappa_is_sp = false;
    bool is_subalgebra = false;
};

inline ParabolicDecomposition parabolic_subalg(const Sl2Triple& t) {
    const auto& a = t.ambient.algebra;
    const std::size_t D = a.dim();
    ParabolicDecomposition p;
    p.h_grading = grading_of(a.ad(t.H), t.H, integer_set(2));
    if (p.h_grading.dim_of(2) != 1) throw std::invalid_argument("multiplicity is not 1");
    p.z_kappa_basis = p.h_grading.piece(2, D);
    p.V_kappa_basis = p.h_grading.piece(1, D);
    p.b_basis = subspace_sum(subspace_sum(p.h_grading.piece(0, D), p.V_kappa_basis), p.z_kappa_basis);
    QMatrix stacked = a.ad(t.H).vcat(a.ad(t.X)).vcat(a.ad(t.Y));
    p.g_kappa_basis = nullspace(stacked);
    p.j_basis = subspace_sum(subspace_sum(p.z_kappa_basis, p.V_kappa_basis), p.g_kappa_basis);
    p.z_is_X_line = subspace_equal(p.z_kappa_basis, QMatrix::column(t.X));
    QMatrix vv(D, 0);
    for (std::size_t i = 0; i < p.V_kappa_basis.cols(); ++i)
        for (std::size_t j = i + 1; j < p.V_kappa_basis.cols(); ++j)
            vv = vv.hcat(QMatrix::column(a.bracket(p.V_kappa_basis.col(i), p.V_kappa_basis.col(j))));
    p.V_bracket_spans_z = subspace_equal(vv, p.z_kappa_basis);
    p.is_subalgebra = is_subalgebra(a, p.b_basis);
    QMatrix emb = embed_sp_basis(t.n);
    if (t.n == 0) {
        p.g_kappa_is_sp = p.g_kappa_basis.cols() == 0;
    } else if (subspace_equal(emb, p.g_kappa_basis)) {
        auto small = sp_algebra(t.n).algebra;
        // the embedding is a homomorphism into the ambient; injective by construction
        p.g_kappa_is_sp = is_homomorphism(small, a, emb) && rank(emb) == small.dim();
    }
    return p;
}

struct JacobiIso {
    QMatrix map;  // hcsp(R^{2n}) -> ambient, image b_kappa
    QMatrix T;    // R^{2n} -> V_kappa in ambient coordinates
    Scalar c;     // [Tu,Tw] = c Omega(u,w) X_kappa
    bool homomorphism = false;
    bool injective = false;
    bool image_is_b = false;
    bool restricts_to_j = false;
    bool center_match = false;
    bool ok() const { return homomorphism && injective && image_is_b && restricts_to_j && center_match; }
};

// Basis matching: z -> c X_kappa, V -> T(V), sp -> g_kappa, D -> H_kappa.
inline JacobiIso jacobi_parabolic_iso(const Sl2Triple& t, const ParabolicDecomposition& p, const LieAlgebra& hcsp) {
    const auto& a = t.ambient.algebra;
    const std::size_t n = t.n, D = a.dim(), nv = 2 * n, dl = n * (2 * n + 1);
    if (hcsp.dim() != p.b_basis.cols()) throw std::invalid_argument("dimension mismatch");
    QMatrix emb = embed_sp_basis(n);
    auto spm = sp_matrices(n);
    const QMatrix& vb = p.V_kappa_basis;
    const std::size_t k = vb.cols();
    // unknown T: k x nv coefficient matrix, T e_u = vb * tcol_u
    // equations: [emb x, T e_u] = T(x e_u) for all x, u
    QMatrix sys(0, k * nv);
    for (std::size_t xi = 0; xi < dl; ++xi) {
        QMatrix adx = a.ad(emb.col(xi));
        for (std::size_t u = 0; u < nv; ++u) {
            QMatrix rows(D, k * nv);
            rows.set_block(0, u * k, adx * vb);
            for (std::size_t w = 0; w < nv; ++w)
                if (sgn(spm.mats[xi](w, u)) != 0) rows.set_block(0, w * k, rows.block(0, w * k, D, k) - spm.mats[xi](w, u) * vb);
            sys = sys.vcat(rows);
        }
    }
    QMatrix sol = nullspace(sys);
    if (sol.cols() == 0) throw std::runtime_error("no module map V -> V_kappa");
    Vec tv = sol.col(0);
    JacobiIso r;
    r.T = QMatrix(D, nv);
    for (std::size_t u = 0; u < nv; ++u) {
        Vec coef(tv.begin() + u * k, tv.begin() + (u + 1) * k);
        r.T.set_col(u, vb * coef);
    }
    QMatrix j = symplectic_form(n);
    Vec br = a.bracket(r.T.col(0), r.T.col(n));
    auto cc = solve_vec(QMatrix::column(t.X), br);
    if (!cc) throw std::runtime_error("[V_kappa, V_kappa] not on X_kappa");
    r.c = (*cc)[0] / j(0, n);
    r.map = QMatrix(D, hcsp.dim());
    r.map.set_block(0, 0, r.T);
    r.map.set_col(nv, r.c * t.X);
    r.map.set_block(0, nv + 1, emb);
    r.map.set_col(nv + 1 + dl, t.H);
    r.homomorphism = is_homomorphism(hcsp, a, r.map);
    r.injective = rank(r.map) == hcsp.dim();
    r.image_is_b = subspace_equal(r.map, p.b_basis);
    r.restricts_to_j = subspace_equal(r.map.block(0, 0, D, nv + 1 + dl), p.j_basis);
    r.center_match = subspace_equal(QMatrix::column(r.map.col(nv)), p.z_kappa_basis);
    return r;
}

struct ParabolicEulerReport {
    bool h_kappa_euler_in_g_kappa = false;
    bool h_commutes = false;
    bool is_euler = false;
    bool g1_in_b = false;
    bool g1_matches_b = false;
    bool eigenspace_formula = false;
    std::size_t dim_g1 = 0;
    bool all() const { return is_euler && g1_in_b && g1_matches_b && eigenspace_formula; }
};

// h = 1/2 H_kappa + h_kappa; h_kappa given in sp(2n) block coordinates.
inline ParabolicEulerReport verify_theorem_h1(const Sl2Triple& t, const ParabolicDecomposition& p, const Vec& h_kappa_small) {
    const auto& a = t.ambient.algebra;
    const std::size_t D = a.dim();
    ParabolicEulerReport r;
    if (t.n > 0) {
        auto small = sp_algebra(t.n).algebra;
        r.h_kappa_euler_in_g_kappa = is_euler(small, h_kappa_small, false);
    } else {
        r.h_kappa_euler_in_g_kappa = true;
    }
    if (!r.h_kappa_euler_in_g_kappa) throw std::invalid_argument("h_kappa is not Euler in g_kappa");
    Vec hk = t.n > 0 ? embed_sp(t.n, h_kappa_small) : Vec(D);
    Vec h = make_scalar(1, 2) * t.H + hk;
    r.h_commutes = is_zero(a.bracket(t.H, hk));
    r.is_euler = is_euler(a, h);
    if (!r.is_euler) return r;
    Grading g = grading(a, h);
    QMatrix g1 = g.piece(1, D);
    r.dim_g1 = g1.cols();
    r.g1_in_b = subspace_contains(p.b_basis, g1);
    // grading computed inside b_kappa
    LieAlgebra b = restrict_to(a, p.b_basis);
    Vec hb = *solve_vec(p.b_basis, h);
    Grading gb = grading(b, hb);
    QMatrix g1b = p.b_basis * gb.piece(1, b.dim());
    r.g1_matches_b = subspace_equal(g1, g1b);
    // R X_kappa + g_1(h_kappa) + (g_1/2(h_kappa) cap g_1/2(1/2 H_kappa))
    Grading ghk = grading(a, hk);
    Grading ghalf = grading(a, make_scalar(1, 2) * t.H);
    QMatrix half = subspace_intersection(ghk.piece(make_scalar(1, 2), D), ghalf.piece(make_scalar(1, 2), D));
    QMatrix rhs = subspace_sum(subspace_sum(QMatrix::column(t.X), ghk.piece(1, D)), half);
    r.eigenspace_formula = subspace_equal(g1, rhs);
    return r;
}

}  // namespace modnet
