#include "modnet/algebra_json.hpp"

#include <gtest/gtest.h>

using namespace modnet;

TEST(AlgebraJson, RoundTripsNamedAlgebras) {
    for (auto [name, n] : {std::pair{"hsp", 1}, {"hcsp", 1}, {"sp", 2}, {"heis", 2}, {"sl2", 0}}) {
        auto a = named_algebra(name, n);
        auto b = algebra_from_json(algebra_to_json(a).dump());
        ASSERT_EQ(a.dim(), b.dim()) << name;
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                for (std::size_t k = 0; k < a.dim(); ++k) EXPECT_EQ(a.constant(i, j, k), b.constant(i, j, k)) << name;
    }
}

TEST(AlgebraJson, FillsAntisymmetricPartner) {
    auto a = algebra_from_json(R"({"labels": ["p", "q", "z"], "brackets": [[0, 1, 2, "3/2"]]})");
    EXPECT_EQ(a.constant(0, 1, 2), make_scalar(3, 2));
    EXPECT_EQ(a.constant(1, 0, 2), make_scalar(-3, 2));
    EXPECT_TRUE(jacobi_check(a));
}

TEST(AlgebraJson, SyntaxErrorCarriesLineAndColumn) {
    try {
        algebra_from_json("{\n  \"labels\": [\"a\"],\n  \"brackets\": [[0, 1 2]]\n}");
        FAIL() << "accepted malformed input";
    } catch (const AlgebraParseError& e) {
        EXPECT_EQ(e.line, 3u);
        EXPECT_EQ(e.column, 22u);  // the stray 2
        EXPECT_EQ(e.to_json()["line"], 3);
    }
}

TEST(AlgebraJson, StructuralErrorsCarryPointer) {
    auto pointer_of = [](const std::string& text) {
        try {
            algebra_from_json(text);
        } catch (const AlgebraParseError& e) {
            EXPECT_EQ(e.line, 0u);
            return e.pointer;
        }
        return std::string("accepted");
    };
    EXPECT_EQ(pointer_of(R"({"brackets": []})"), "/labels");
    EXPECT_EQ(pointer_of(R"({"labels": ["a", 1], "brackets": []})"), "/labels/1");
    EXPECT_EQ(pointer_of(R"({"labels": ["a", "b"], "brackets": [[0, 5, 0, "1"]]})"), "/brackets/0/1");
    EXPECT_EQ(pointer_of(R"({"labels": ["a", "b"], "brackets": [[1, 0, 0, "1"]]})"), "/brackets/0");
    EXPECT_EQ(pointer_of(R"({"labels": ["a", "b"], "brackets": [[0, 1, 0, "1"], [0, 1, 0, "2"]]})"), "/brackets/1");
    EXPECT_EQ(pointer_of(R"({"labels": ["a", "b"], "brackets": [[0, 1, 0, "x/y"]]})"), "/brackets/0/3");
    EXPECT_EQ(pointer_of(R"({"labels": ["a", "b"], "brackets": [[0, 1, 0, 0.5]]})"), "/brackets/0/3");
}
