#pragma once

#include "braidkit/scalars.hpp"

#include <random>
#include <vector>

namespace gen {

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(0x5eedULL);
    return r;
}

inline int small_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline braidkit::Poly poly(int max_deg, int coeff) {
    std::vector<mpz_class> c(static_cast<std::size_t>(small_int(0, max_deg)) + 1);
    for (auto& x : c) x = small_int(-coeff, coeff);
    return braidkit::Poly(std::move(c));
}

// random element of Q(q), never the zero denominator
inline braidkit::QScalar scalar(int max_deg = 3, int coeff = 4) {
    braidkit::Poly den;
    do den = poly(max_deg, coeff);
    while (den.is_zero());
    return braidkit::QScalar::from_parts(poly(max_deg, coeff), den, small_int(-3, 3));
}

inline braidkit::QScalar nonzero_scalar(int max_deg = 3, int coeff = 4) {
    braidkit::QScalar s;
    do s = scalar(max_deg, coeff);
    while (s.is_zero());
    return s;
}

}  // namespace gen

#include "braidkit/linalg.hpp"

namespace gen {

inline braidkit::Matrix matrix(std::size_t r, std::size_t c, int max_deg = 2, int coeff = 3) {
    braidkit::Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (small_int(0, 2) != 0) m(i, j) = scalar(max_deg, coeff);
    return m;
}

// Laurent polynomial entries keep products cheap
inline braidkit::Matrix laurent_matrix(std::size_t r, std::size_t c) {
    braidkit::Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = braidkit::QScalar::from_parts(poly(2, 3), braidkit::Poly::constant(1), small_int(-2, 2));
    return m;
}

}  // namespace gen
