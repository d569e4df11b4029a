#include "gen.hpp"
#include "modnet/spindler.hpp"

#include <gtest/gtest.h>

using namespace modnet;

namespace {

QMatrix neg_half_U() {
    auto s = sl2_matrices();
    return make_scalar(-1, 2) * s.U;
}

Vec sp1_coords(const QMatrix& x) { return *matrix_coords(sp_matrices(1).mats, x); }

}  // namespace

TEST(Build, HspDimension) {
    for (std::size_t n = 1; n <= 3; ++n) {
        auto g = hsp_algebra(n);
        EXPECT_EQ(g.dim(), 2 * n + 1 + n * (2 * n + 1));
        EXPECT_TRUE(jacobi_check(g));
    }
}

TEST(Build, TrivialLieIsHeisenberg) {
    SpindlerData d;
    d.l = abelian_algebra(0);
    d.V_dim = 4;
    d.z_dim = 1;
    d.beta = {symplectic_form(2)};
    auto g = spindler_build(d);
    EXPECT_EQ(g, heis_algebra(2));
}

TEST(Build, TrivialActionZeroBetaIsAbelian) {
    SpindlerData d;
    d.l = abelian_algebra(2);
    d.V_dim = 2;
    d.z_dim = 1;
    d.action = {QMatrix(2, 2), QMatrix(2, 2)};
    d.beta = {QMatrix(2, 2)};
    auto g = spindler_build(d);
    EXPECT_EQ(center(g).cols(), g.dim());
}

TEST(Build, RejectsNonInvariantBeta) {
    SpindlerData d = hsp_data(1);
    d.l = abelian_algebra(1);
    d.action = {QMatrix::identity(2)};
    EXPECT_FALSE(beta_invariance_check(d));
    EXPECT_THROW(spindler_build(d), std::invalid_argument);
}

TEST(BetaInvariance, Examples) {
    EXPECT_TRUE(beta_invariance_check(hsp_data(2)));
    SpindlerData gl;
    std::vector<QMatrix> mats;
    for (std::size_t e = 0; e < 4; ++e) {
        QMatrix m(2, 2);
        m(e / 2, e % 2) = 1;
        mats.push_back(m);
    }
    auto a = from_matrix_algebra(mats);
    gl.l = a.algebra;
    gl.V_dim = 2;
    gl.z_dim = 1;
    gl.action = a.basis;
    gl.beta = {symplectic_form(1)};
    EXPECT_FALSE(beta_invariance_check(gl));
    SpindlerData triv;
    triv.l = abelian_algebra(1);
    triv.V_dim = 2;
    triv.z_dim = 1;
    triv.action = {QMatrix(2, 2)};
    triv.beta = {symplectic_form(1)};
    EXPECT_TRUE(beta_invariance_check(triv));
}

TEST(Admissibility, NegHalfU) {
    auto d = hsp_data(1);
    auto w = admissibility_witness(d, {1}, sp1_coords(neg_half_U()));
    EXPECT_TRUE(w.ok);
    EXPECT_EQ(w.gram, make_scalar(1, 2) * QMatrix::identity(2));
}

TEST(Admissibility, PosHalfUFails) {
    auto d = hsp_data(1);
    auto w = admissibility_witness(d, {1}, sp1_coords(Scalar(-1) * neg_half_U()));
    EXPECT_FALSE(w.ok);
    EXPECT_EQ(w.violating_minor, 1);
    EXPECT_EQ(w.gram, make_scalar(-1, 2) * QMatrix::identity(2));
}

TEST(Admissibility, ZeroFails) {
    auto d = hsp_data(1);
    EXPECT_FALSE(admissibility_witness(d, {1}, Vec(3)).ok);
    EXPECT_THROW(admissibility_witness(d, {0}, Vec(3)), std::invalid_argument);
}

TEST(GammaF, IdentityData) {
    auto d = hsp_data(1);
    auto g = gamma_f(d, {1});
    EXPECT_EQ(g.matrix, QMatrix::identity(6));
    EXPECT_TRUE(is_homomorphism(spindler_build(d), g.target, g.matrix));
}

TEST(GammaF, KernelIsTrivialActionLine) {
    auto base = sp_matrices(1);
    std::vector<QMatrix> blocks;
    for (const auto& m : base.mats) {
        QMatrix b(3, 3);
        b.set_block(0, 0, m);
        blocks.push_back(b);
    }
    QMatrix c(3, 3);
    c(2, 2) = 1;
    blocks.push_back(c);
    auto l = from_matrix_algebra(blocks);
    SpindlerData d;
    d.l = l.algebra;
    d.V_dim = 2;
    d.z_dim = 1;
    for (const auto& m : l.basis) d.action.push_back(m.block(0, 0, 2, 2));
    d.beta = {symplectic_form(1)};
    auto g = gamma_f(d, {1});
    auto src = spindler_build(d);
    EXPECT_TRUE(is_homomorphism(src, g.target, g.matrix));
    ASSERT_EQ(g.kernel.cols(), 1u);
    Vec expect(src.dim());
    expect[2 + 1 + 3] = 1;
    EXPECT_TRUE(subspace_equal(g.kernel, QMatrix::column(expect)));
}

TEST(GammaF, ProjectsTwoDimCenter) {
    auto d = hsp_data(1);
    d.z_dim = 2;
    d.beta = {symplectic_form(1), QMatrix(2, 2)};
    auto g = gamma_f(d, {1, 0});
    auto src = spindler_build(d);
    EXPECT_TRUE(is_homomorphism(src, g.target, g.matrix));
    EXPECT_EQ(g.kernel.cols(), 1u);
    EXPECT_EQ(g.matrix(2, 2), Scalar(1));
    EXPECT_EQ(g.matrix(2, 3), Scalar(0));
}

TEST(GammaF, RejectsDegenerate) {
    auto d = hsp_data(1);
    d.z_dim = 2;
    d.beta = {symplectic_form(1), QMatrix(2, 2)};
    EXPECT_THROW(gamma_f(d, {0, 1}), std::invalid_argument);
}

TEST(GammaF, HomomorphismOnRandomFormScale) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
        auto d = hsp_data(1);
        Scalar f = gen::rational(rng);
        if (sgn(f) == 0) f = 1;
        auto g = gamma_f(d, {f});
        EXPECT_TRUE(is_homomorphism(spindler_build(d), g.target, g.matrix));
    }
}

TEST(HspPlus, CentralElement) {
    QMatrix zero(2, 2);
    EXPECT_TRUE(hsp_plus_contains(Vec{0, 0}, 1, zero).contained);
    EXPECT_TRUE(hsp_plus_contains(Vec{0, 0}, 0, zero).contained);
    EXPECT_FALSE(hsp_plus_contains(Vec{0, 0}, -1, zero).contained);
}

TEST(HspPlus, LinearPartAlone) {
    auto c = hsp_plus_contains(Vec{1, 0}, 0, QMatrix(2, 2));
    EXPECT_FALSE(c.contained);
    EXPECT_FALSE(c.in_range);
}

namespace {

// brute force minimum of q(w) over a grid on [-10,10]^2
double grid_min(const QMatrix& x, const Vec& v, double z) {
    QMatrix j = symplectic_form(1);
    double best = 1e300;
    for (int a = -100; a <= 100; ++a)
        for (int b = -100; b <= 100; ++b) {
            Vec w{make_scalar(a, 10), make_scalar(b, 10)};
            double q = to_double(omega(j, x * w, w) + omega(j, v, w)) + z;
            best = std::min(best, q);
        }
    return best;
}

}  // namespace

TEST(HspPlus, GridOracle) {
    QMatrix x = Scalar(-1) * sl2_matrices().U;  // Omega(xw,w) = w1^2 + w2^2
    EXPECT_NEAR(grid_min(x, Vec{0, 0}, 0), 0.0, 1e-12);
    EXPECT_FALSE(hsp_plus_contains(Vec{0, 0}, make_scalar(-1, 2), x).contained);
    EXPECT_LT(grid_min(x, Vec{0, 0}, -0.5), 0);
    EXPECT_TRUE(hsp_plus_contains(Vec{0, 0}, 0, x).contained);
}

TEST(HspPlus, AffineCaseMatchesGrid) {
    QMatrix x = Scalar(-1) * sl2_matrices().U;
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        Vec v{make_scalar(static_cast<long>(rng() % 7) - 3, 2), make_scalar(static_cast<long>(rng() % 7) - 3, 2)};
        Scalar z = make_scalar(static_cast<long>(rng() % 9) - 4, 2);
        auto c = hsp_plus_contains(v, z, x);
        double m = grid_min(x, v, to_double(z));
        EXPECT_EQ(c.contained, m >= -1e-12) << to_string(z);
    }
}

TEST(HspPlus, ConvexConeProperty) {
    std::mt19937_64 rng(7);
    auto d = hsp_data(1);
    std::vector<std::tuple<Vec, Scalar, QMatrix>> members;
    while (members.size() < 12) {
        Vec v = gen::vec(rng, 2);
        Scalar z = gen::rational(rng);
        QMatrix x = action_of(d, gen::vec(rng, 3));
        if (hsp_plus_contains(v, z, x).contained) members.emplace_back(v, z, x);
    }
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        auto& [v1, z1, x1] = members[i];
        auto& [v2, z2, x2] = members[i + 1];
        EXPECT_TRUE(hsp_plus_contains(v1 + v2, z1 + z2, x1 + x2).contained);
        Scalar s = make_scalar(7, 3);
        EXPECT_TRUE(hsp_plus_contains(s * v1, s * z1, s * x1).contained);
    }
}

TEST(HspPlus, WfMembershipThroughGamma) {
    auto d = hsp_data(1);
    auto g = gamma_f(d, {1});
    Vec y(6);
    y[2] = 1;
    EXPECT_TRUE(in_W_f(g, y).contained);
    y[2] = -1;
    EXPECT_FALSE(in_W_f(g, y).contained);
}

TEST(HspPlus, FloatInputs) {
    EXPECT_TRUE(hsp_plus_contains(std::vector<double>{0, 0}, 0.25, std::vector<double>{0, -1, 1, 0}).contained);
}
