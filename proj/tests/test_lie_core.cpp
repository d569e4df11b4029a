#include "gen.hpp"
#include "modnet/classical.hpp"
#include "modnet/spindler.hpp"

#include <gtest/gtest.h>

using namespace modnet;

TEST(Bracket, Sl2HXIsTwoX) {
    auto s = sl2_matrices();
    auto a = sl2_algebra();
    // direct matrix commutator
    QMatrix hx = commutator(s.H, s.X);
    EXPECT_EQ(hx, Scalar(2) * s.X);
    Vec r = a.algebra.bracket(unit(3, 0), unit(3, 1));
    EXPECT_EQ(r, (Vec{0, 2, 0}));
}

TEST(Bracket, SelfBracketVanishes) {
    std::mt19937_64 rng(1);
    auto g = hcsp_algebra(1);
    for (int t = 0; t < 20; ++t) {
        Vec x = gen::vec(rng, g.dim());
        EXPECT_TRUE(is_zero(g.bracket(x, x)));
    }
}

TEST(Bracket, DimensionMismatchThrows) {
    auto a = std::make_shared<LieAlgebra>(heis_algebra(1));
    auto b = std::make_shared<LieAlgebra>(heis_algebra(2));
    EXPECT_THROW(bracket(LieElement{a, Vec(3)}, LieElement{b, Vec(5)}), std::invalid_argument);
}

// Heisenberg group law (v,z)(v',z') = (v+v', z+z'+1/2 Omega(v,v')); the group commutator of
// (p,0) and (q,0) is (0, Omega(p,q)).
TEST(Bracket, HeisMatchesGroupCommutator) {
    QMatrix j = symplectic_form(1);
    auto mul = [&](const Vec& a, const Vec& b) {
        Vec v{a[0] + b[0], a[1] + b[1]};
        Scalar z = a[2] + b[2] + omega(j, Vec{a[0], a[1]}, Vec{b[0], b[1]}) / 2;
        return Vec{v[0], v[1], z};
    };
    auto inv = [](const Vec& a) { return Vec{-a[0], -a[1], -a[2]}; };
    std::mt19937_64 rng(2);
    auto h = heis_algebra(1);
    for (int t = 0; t < 10; ++t) {
        Scalar p = gen::rational(rng), q = gen::rational(rng);
        Vec g1{p, 0, 0}, g2{0, q, 0};
        Vec c = mul(mul(g1, g2), mul(inv(g1), inv(g2)));
        EXPECT_EQ(h.bracket(g1, g2), c);
    }
}

TEST(Jacobi, ConstructedAlgebras) {
    EXPECT_TRUE(jacobi_check(hsp_algebra(1)));
    EXPECT_TRUE(jacobi_check(hcsp_algebra(1)));
    EXPECT_TRUE(jacobi_check(sp_algebra(2).algebra));
    EXPECT_TRUE(jacobi_check(sp_algebra(3).algebra));
    EXPECT_TRUE(jacobi_check(heis_algebra(2)));
}

TEST(Jacobi, PerturbedConstantFails) {
    auto g = hsp_algebra(1);
    // [A00, v0] = v0; bump the v1 component of both orders
    Scalar c = g.constant(3, 0, 1) + 1;
    g.set_constant(3, 0, 1, c);
    g.set_constant(0, 3, 1, -c);
    EXPECT_TRUE(g.antisymmetric());
    EXPECT_FALSE(jacobi_check(g));
}

TEST(Jacobi, BrokenAntisymmetryFails) {
    auto g = hsp_algebra(1);
    g.set_constant(0, 1, 2, 5);
    EXPECT_FALSE(jacobi_check(g));
}

TEST(FromMatrix, Sl2Dim3) {
    auto a = sl2_algebra();
    EXPECT_EQ(a.algebra.dim(), 3u);
}

TEST(FromMatrix, Sp4Dim10) {
    // sp(4) = J Sym(4): as many elements as symmetric 4x4 matrices
    EXPECT_EQ(sp_algebra(2).algebra.dim(), 4u * 5u / 2u);
}

TEST(FromMatrix, SingleNilpotentIsAbelian) {
    auto a = from_matrix_algebra({sl2_matrices().X});
    EXPECT_EQ(a.algebra.dim(), 1u);
    EXPECT_TRUE(is_zero(a.algebra.bracket_basis(0, 0)));
}

TEST(FromMatrix, SaturatesSpan) {
    auto s = sl2_matrices();
    auto a = from_matrix_algebra({s.X, s.Y});
    EXPECT_EQ(a.algebra.dim(), 3u);
}

TEST(FromMatrix, AgreesWithCommutators) {
    auto a = sp_algebra(2);
    for (std::size_t i = 0; i < a.basis.size(); ++i)
        for (std::size_t j = 0; j < a.basis.size(); ++j) {
            Vec c = a.algebra.bracket_basis(i, j);
            QMatrix m(4, 4);
            for (std::size_t k = 0; k < c.size(); ++k) m = m + c[k] * a.basis[k];
            EXPECT_EQ(m, commutator(a.basis[i], a.basis[j]));
        }
}

TEST(Center, Examples) {
    EXPECT_EQ(center(heis_algebra(2)).cols(), 1u);
    EXPECT_EQ(center(sp_algebra(2).algebra).cols(), 0u);
    EXPECT_EQ(center(abelian_algebra(2)).cols(), 2u);
}

TEST(Center, IsAnIdeal) {
    for (const auto& g : {hsp_algebra(1), heis_algebra(2), hcsp_algebra(1)}) {
        QMatrix c = center(g);
        for (std::size_t k = 0; k < c.cols(); ++k)
            for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_TRUE(is_zero(g.bracket(unit(g.dim(), i), c.col(k))));
    }
}

TEST(Semidirect, HcspDim) {
    EXPECT_EQ(hcsp_algebra(1).dim(), hsp_algebra(1).dim() + 1);
    EXPECT_EQ(hcsp_algebra(2).dim(), hsp_algebra(2).dim() + 1);
}

TEST(Semidirect, ZeroDerivationIsDirectSum) {
    auto s = sl2_algebra().algebra;
    auto e = semidirect_extend(s, QMatrix(3, 3));
    EXPECT_EQ(e.dim(), 4u);
    EXPECT_EQ(center(e).cols(), 1u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(is_zero(e.bracket_basis(3, i)));
}

TEST(Semidirect, HeisDilation) {
    auto h = heis_algebra(1);
    QMatrix d(3, 3);
    d(0, 0) = 1;
    d(1, 1) = 1;
    d(2, 2) = 2;
    auto e = semidirect_extend(h, d);
    EXPECT_EQ(e.dim(), 4u);
    EXPECT_EQ(e.bracket_basis(3, 2), (Vec{0, 0, 2, 0}));
    EXPECT_TRUE(jacobi_check(e));
}

TEST(Semidirect, RejectsNonDerivation) {
    auto h = heis_algebra(1);
    QMatrix d = QMatrix::identity(3);  // z must scale by 2
    EXPECT_THROW(semidirect_extend(h, d), std::invalid_argument);
}

TEST(Property, BilinearAntisymmetric) {
    std::mt19937_64 rng(3);
    auto g = hcsp_algebra(1);
    const std::size_t n = g.dim();
    for (int t = 0; t < 30; ++t) {
        Vec x = gen::vec(rng, n), y = gen::vec(rng, n), w = gen::vec(rng, n);
        Scalar a = gen::rational(rng);
        EXPECT_EQ(g.bracket(x, y), Scalar(-1) * g.bracket(y, x));
        EXPECT_EQ(g.bracket(a * x + w, y), a * g.bracket(x, y) + g.bracket(w, y));
    }
}
