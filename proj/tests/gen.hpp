#pragma once

#include "modnet/lie_algebra.hpp"

#include <random>

namespace gen {

using modnet::Scalar;
using modnet::Vec;

// small rationals p/q with |p| <= 9, 1 <= q <= 4
inline Scalar rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return modnet::make_scalar(num(rng), den(rng));
}

inline Vec vec(std::mt19937_64& rng, std::size_t n) {
    Vec v(n);
    for (auto& q : v) q = rational(rng);
    return v;
}

inline modnet::QMatrix matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    modnet::QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(rng);
    return m;
}

}  // namespace gen
