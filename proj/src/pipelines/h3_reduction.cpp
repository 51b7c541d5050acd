#include "hankel/pipelines/h3_reduction.hpp"

#include <array>
#include <stdexcept>

namespace hankel::pipelines {

using bernstein::BiPoly;

namespace {

// Rows indexed by the power of x; entries are coefficients of p^6 .. p^0.
constexpr std::array<std::array<long, 7>, 5> kExpandedF{{
    {-61, 464, -1024, -464, 2048, 0, 0},
    {244, 640, 620, 448, -864, -1088, 0},
    {-248, -720, 1856, 976, -2504, -256, 896},
    {64, -640, -416, -448, 640, 1088, -288},
    {-128, 256, 384, -512, -384, 256, 128},
}};

// Rows indexed by the power of p from 6 down to 0; entries are coefficients
// of x^4 .. x^0.
constexpr std::array<std::array<long, 5>, 7> kExpandedG2{{
    {128, -64, 248, -244, 61},
    {-256, 640, 720, -640, -464},
    {-256, -1600, -96, 1396, -864},
    {512, 448, -976, -448, 464},
    {128, 2528, -152, -2304, 864},
    {-256, -1088, 256, 1088, 0},
    {0, -864, 0, 1152, 0},
}};

void require_equal(const BiPoly& built, const BiPoly& expected, const char* what) {
    for (std::size_t i = 0; i <= 6; ++i) {
        for (std::size_t j = 0; j <= 4; ++j) {
            if (built.coeff(i, j) != expected.coeff(i, j)) {
                throw std::logic_error(std::string("build_h3_reduction: ") + what + " differs at p^" +
                                       std::to_string(i) + " x^" + std::to_string(j) + ": built " +
                                       built.coeff(i, j).to_string() + ", expected " +
                                       expected.coeff(i, j).to_string());
            }
        }
    }
    if (built.trimmed().deg_p() > 6 || built.trimmed().deg_x() > 4) {
        throw std::logic_error(std::string("build_h3_reduction: ") + what + " exceeds bidegree (6,4)");
    }
}

}  // namespace

BiPoly hand_expanded_F() {
    BiPoly f(6, 4);
    for (std::size_t j = 0; j < kExpandedF.size(); ++j) {
        for (std::size_t k = 0; k < 7; ++k) f.set(6 - k, j, Rational(kExpandedF[j][k]));
    }
    return f;
}

BiPoly hand_expanded_G2() {
    BiPoly f(6, 4);
    for (std::size_t r = 0; r < kExpandedG2.size(); ++r) {
        for (std::size_t k = 0; k < 5; ++k) f.set(6 - r, 4 - k, Rational(kExpandedG2[r][k]));
    }
    return f;
}

HandCornerSplit hand_corner_split() {
    HandCornerSplit s{Rational(2048), Rational(-1088), Rational(896), hand_expanded_F()};
    s.R.set(2, 0, Rational(0));
    s.R.set(1, 1, Rational(0));
    s.R.set(0, 2, Rational(0));
    return s;
}

H3Reduction build_h3_reduction() {
    const BiPoly p = BiPoly::var_p();
    const BiPoly x = BiPoly::var_x();
    const auto g = majorant_groups(p, x);

    H3Reduction red;
    red.G1 = (g.base + g.linear + g.quadratic).trimmed().with_bidegree(6, 4);
    red.G2 = (g.base + g.linear + g.remainder).trimmed().with_bidegree(6, 4);
    red.F = BiPoly::constant(Rational(1024)) - red.G1;
    red.F = red.F.with_bidegree(6, 4);

    require_equal(red.F, hand_expanded_F(), "F = 1024 - G1");
    require_equal(red.G2, hand_expanded_G2(), "G2");
    return red;
}

}  // namespace hankel::pipelines
