#include "modnet/parabolic.hpp"

#include <gtest/gtest.h>

using namespace modnet;

namespace {

Vec hs_small(std::size_t n) {
    Vec h(n * (2 * n + 1));
    for (std::size_t i = 0; i < n; ++i) h[i * n + i] = make_scalar(1, 2);
    return h;
}

}  // namespace

TEST(Sl2Embed, Sp4Dims) {
    auto t = sl2_embed_mult1(2);
    auto p = parabolic_subalg(t);
    EXPECT_EQ(p.z_kappa_basis.cols(), 1u);
    EXPECT_EQ(p.V_kappa_basis.cols(), 2u);
    const auto& a = t.ambient.algebra;
    EXPECT_EQ(a.bracket(t.X, t.Y), t.H);
}

TEST(Sl2Embed, FiveGrading) {
    for (std::size_t m : {0u, 2u, 4u}) {
        auto t = sl2_embed_mult1(m);
        EXPECT_NO_THROW(grading_of(t.ambient.algebra.ad(t.H), t.H, integer_set(2)));
    }
}

TEST(Sl2Embed, IdentityForSl2) {
    auto t = sl2_embed_mult1(0);
    EXPECT_EQ(t.ambient.algebra.dim(), 3u);
    EXPECT_EQ(t.H, (Vec{1, 0, 0}));
    EXPECT_EQ(t.X, (Vec{0, 1, 0}));
    EXPECT_EQ(t.Y, (Vec{0, 0, 1}));
}

TEST(Sl2Embed, RejectsOdd) { EXPECT_THROW(sl2_embed_mult1(3), std::invalid_argument); }

TEST(Parabolic, Sp4BDimMatchesHcsp) {
    auto t = sl2_embed_mult1(2);
    auto p = parabolic_subalg(t);
    EXPECT_EQ(p.b_basis.cols(), 7u);
    EXPECT_EQ(p.b_basis.cols(), hcsp_algebra(1).dim());
    EXPECT_TRUE(p.is_subalgebra);
    EXPECT_TRUE(p.z_is_X_line);
    EXPECT_TRUE(p.V_bracket_spans_z);
    EXPECT_TRUE(p.g_kappa_is_sp);
}

TEST(Parabolic, Sp6CentralizerIsSp4) {
    auto t = sl2_embed_mult1(4);
    auto p = parabolic_subalg(t);
    EXPECT_EQ(p.g_kappa_basis.cols(), 10u);
    EXPECT_TRUE(p.g_kappa_is_sp);
    EXPECT_TRUE(p.V_bracket_spans_z);
    EXPECT_TRUE(p.is_subalgebra);
}

TEST(Parabolic, HCommutesWithCentralizer) {
    auto t = sl2_embed_mult1(4);
    auto p = parabolic_subalg(t);
    for (std::size_t k = 0; k < p.g_kappa_basis.cols(); ++k)
        EXPECT_TRUE(is_zero(t.ambient.algebra.bracket(t.H, p.g_kappa_basis.col(k))));
}

TEST(JacobiIso, N1AndN2) {
    for (std::size_t n = 1; n <= 2; ++n) {
        auto t = sl2_embed_mult1(2 * n);
        auto p = parabolic_subalg(t);
        auto iso = jacobi_parabolic_iso(t, p, hcsp_algebra(n));
        EXPECT_TRUE(iso.homomorphism);
        EXPECT_TRUE(iso.injective);
        EXPECT_TRUE(iso.image_is_b);
        EXPECT_TRUE(iso.restricts_to_j);
        EXPECT_TRUE(iso.center_match);
        EXPECT_NE(sgn(iso.c), 0);
    }
}

TEST(ParabolicEuler, Sp4) {
    auto t = sl2_embed_mult1(2);
    auto p = parabolic_subalg(t);
    auto r = verify_theorem_h1(t, p, hs_small(1));
    EXPECT_TRUE(r.is_euler);
    EXPECT_TRUE(r.g1_in_b);
    EXPECT_TRUE(r.g1_matches_b);
    EXPECT_TRUE(r.eigenspace_formula);
    EXPECT_TRUE(r.h_commutes);
    EXPECT_EQ(r.dim_g1, 3u);
}

TEST(ParabolicEuler, ZeroHKappaNotEuler) {
    auto t = sl2_embed_mult1(2);
    auto p = parabolic_subalg(t);
    auto r = verify_theorem_h1(t, p, Vec(3));
    EXPECT_FALSE(r.is_euler);
}

TEST(ParabolicEuler, Sp6) {
    auto t = sl2_embed_mult1(4);
    auto p = parabolic_subalg(t);
    auto r = verify_theorem_h1(t, p, hs_small(2));
    EXPECT_TRUE(r.all());
    EXPECT_EQ(r.dim_g1, 6u);
}

TEST(ParabolicEuler, RejectsNonEulerHKappa) {
    auto t = sl2_embed_mult1(2);
    auto p = parabolic_subalg(t);
    EXPECT_THROW(verify_theorem_h1(t, p, Vec{1, 0, 0}), std::invalid_argument);
}
