#include "gen.hpp"
#include "modnet/euler.hpp"

#include <gtest/gtest.h>

using namespace modnet;

namespace {

Vec half_H() { return Vec{make_scalar(1, 2), 0, 0}; }

// h_s in sp(2n) block coordinates
Vec sp_hs(std::size_t n) {
    Vec h(n * (2 * n + 1));
    for (std::size_t i = 0; i < n; ++i) h[i * n + i] = make_scalar(1, 2);
    return h;
}

}  // namespace

TEST(IsEuler, Sl2) {
    auto a = sl2_algebra().algebra;
    EXPECT_TRUE(is_euler(a, half_H()));
    EXPECT_FALSE(is_euler(a, Vec{1, 0, 0}));
    EXPECT_FALSE(is_euler(a, Vec(3)));
}

TEST(IsEuler, Hcsp) {
    for (std::size_t n = 1; n <= 2; ++n) EXPECT_TRUE(is_euler(hcsp_algebra(n), hcsp_euler_element(n)));
}

TEST(Grading, Sp4Dims) {
    auto a = sp_algebra(2).algebra;
    auto g = grading(a, sp_hs(2));
    EXPECT_EQ(g.dim_of(-1), 3u);
    EXPECT_EQ(g.dim_of(0), 4u);
    EXPECT_EQ(g.dim_of(1), 3u);
    EXPECT_TRUE(projector_algebra_ok(a, g));
    EXPECT_TRUE(graded_bracket_law(a, g));
}

TEST(Grading, HcspPieces) {
    auto a = hcsp_algebra(1);
    auto g = grading(a, hcsp_euler_element(1));
    // basis: p, q, z, A, B, C, D
    EXPECT_EQ(g.dim_of(1), 3u);
    EXPECT_EQ(g.dim_of(0), 3u);
    EXPECT_EQ(g.dim_of(-1), 1u);
    QMatrix expect1(7, 3);
    expect1(2, 0) = 1;  // z
    expect1(0, 1) = 1;  // V1
    expect1(4, 2) = 1;  // s1
    EXPECT_TRUE(subspace_equal(g.piece(1, 7), expect1));
    QMatrix expect0(7, 3);
    expect0(1, 0) = 1;
    expect0(3, 1) = 1;
    expect0(6, 2) = 1;
    EXPECT_TRUE(subspace_equal(g.piece(0, 7), expect0));
    EXPECT_TRUE(graded_bracket_law(a, g));
    EXPECT_TRUE(projector_algebra_ok(a, g));
}

TEST(Grading, ZeroElement) {
    auto a = sp_algebra(2).algebra;
    auto g = grading(a, Vec(10));
    ASSERT_EQ(g.eigenvalues.size(), 1u);
    EXPECT_EQ(g.dim_of(0), 10u);
}

TEST(Grading, RejectsSpectrumOutside) {
    auto a = sl2_algebra().algebra;
    EXPECT_THROW(grading(a, Vec{1, 0, 0}), std::invalid_argument);
}

TEST(Grading, FiveGrading) {
    auto a = sl2_algebra().algebra;
    auto g = grading(a, Vec{make_scalar(1, 4), 0, 0});
    EXPECT_EQ(g.dim_of(make_scalar(1, 2)), 1u);
    EXPECT_EQ(g.dim_of(make_scalar(-1, 2)), 1u);
}

TEST(Tau, Sl2) {
    auto a = sl2_algebra().algebra;
    auto t = tau_involution(grading(a, half_H()));
    EXPECT_EQ(t(unit(3, 0)), unit(3, 0));
    EXPECT_EQ(t(unit(3, 1)), Scalar(-1) * unit(3, 1));
    EXPECT_EQ(t(unit(3, 2)), Scalar(-1) * unit(3, 2));
}

TEST(Tau, HcspFixedSpace) {
    auto a = hcsp_algebra(1);
    auto g = grading(a, hcsp_euler_element(1));
    auto t = tau_involution(g);
    EXPECT_EQ(t.matrix * t.matrix, QMatrix::identity(7));
    EXPECT_TRUE(is_homomorphism(a, a, t.matrix));
    QMatrix fix = nullspace(t.matrix - QMatrix::identity(7));
    EXPECT_TRUE(subspace_equal(fix, g.piece(0, 7)));
    EXPECT_EQ(t.matrix.trace(), Scalar(3 - 4));
}

TEST(Tau, RejectsHalfIntegers) {
    auto a = sl2_algebra().algebra;
    EXPECT_THROW(tau_involution(grading(a, Vec{make_scalar(1, 4), 0, 0})), std::invalid_argument);
}

TEST(Tau, InvolutionOnRandomElements) {
    std::mt19937_64 rng(9);
    auto a = hcsp_algebra(1);
    auto t = tau_involution(grading(a, hcsp_euler_element(1)));
    for (int k = 0; k < 10; ++k) {
        Vec x = gen::vec(rng, 7), y = gen::vec(rng, 7);
        EXPECT_EQ(t(t(x)), x);
        EXPECT_EQ(t(a.bracket(x, y)), a.bracket(t(x), t(y)));
    }
}

TEST(EulerDerivation, ZLineEigenvalueOne) {
    auto d = hsp_data(1);
    auto D = euler_derivation(d, sp_hs(1), 1);
    auto g = spindler_build(d);
    EXPECT_TRUE(is_derivation(g, D.matrix));
    EXPECT_EQ(D(unit(6, 2)), unit(6, 2));
    auto e = semidirect_extend(g, D.matrix);
    EXPECT_TRUE(is_euler(e, unit(7, 6)));
}

TEST(EulerDerivation, GradedPieces) {
    auto d = hsp_data(2);
    auto D = euler_derivation(d, sp_hs(2), 1);
    auto g = spindler_build(d);
    auto e = semidirect_extend(g, D.matrix);
    auto gr = grading(e, unit(e.dim(), e.dim() - 1));
    // g_1 = V1 + z + l_1 ; g_-1 = l_-1
    const std::size_t n = 2, nv = 4, off = nv + 1, N = e.dim();
    QMatrix g1(N, 0);
    for (std::size_t i = 0; i < n; ++i) g1 = g1.hcat(QMatrix::column(unit(N, i)));
    g1 = g1.hcat(QMatrix::column(unit(N, nv)));
    for (std::size_t k = n * n; k < n * n + 3; ++k) g1 = g1.hcat(QMatrix::column(unit(N, off + k)));
    EXPECT_TRUE(subspace_equal(gr.piece(1, N), g1));
    QMatrix gm(N, 0);
    for (std::size_t k = n * n + 3; k < n * n + 6; ++k) gm = gm.hcat(QMatrix::column(unit(N, off + k)));
    EXPECT_TRUE(subspace_equal(gr.piece(-1, N), gm));
}

TEST(EulerDerivation, SignFlipIsomorphic) {
    auto d = hsp_data(1);
    auto g = spindler_build(d);
    auto ep = semidirect_extend(g, euler_derivation(d, sp_hs(1), 1).matrix);
    auto em = semidirect_extend(g, euler_derivation(d, sp_hs(1), -1).matrix);
    auto phi = sign_flip_isomorphism(d, symplectic_form(1));
    ASSERT_TRUE(phi.has_value());
    EXPECT_TRUE(is_isomorphism(ep, em, *phi));
    EXPECT_FALSE(is_isomorphism(ep, em, QMatrix::identity(7)));
}

TEST(EulerDerivation, ZeroHlFails) {
    auto d = hsp_data(1);
    EXPECT_THROW(euler_derivation(d, Vec(3), 1), std::invalid_argument);
}

TEST(LieWedge, Membership) {
    auto d = hsp_data(1);
    auto a = hcsp_algebra(1);
    auto w = lie_wedge(grading(a, hcsp_euler_element(1)), hsp_cone_oracle(d));
    std::mt19937_64 rng(4);
    auto g = grading(a, hcsp_euler_element(1));
    for (int k = 0; k < 5; ++k) EXPECT_TRUE(w.contains(g.projector(0, 7) * gen::vec(rng, 7)));
    EXPECT_TRUE(w.contains(unit(7, 2)));
    EXPECT_FALSE(w.contains(Scalar(-1) * unit(7, 2)));
}

TEST(LieWedge, ConvexOnSampledMembers) {
    auto d = hsp_data(1);
    auto a = hcsp_algebra(1);
    auto g = grading(a, hcsp_euler_element(1));
    auto w = lie_wedge(g, hsp_cone_oracle(d));
    std::mt19937_64 rng(8);
    std::vector<Vec> mem;
    for (int k = 0; k < 400 && mem.size() < 10; ++k) {
        Vec x = gen::vec(rng, 7);
        if (w.contains(x)) mem.push_back(x);
    }
    ASSERT_GE(mem.size(), 4u);
    for (std::size_t i = 0; i + 1 < mem.size(); ++i) {
        EXPECT_TRUE(w.contains(mem[i] + mem[i + 1]));
        EXPECT_TRUE(w.contains(make_scalar(5, 2) * mem[i]));
    }
}
