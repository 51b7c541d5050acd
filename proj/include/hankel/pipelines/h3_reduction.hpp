#pragma once

#include "hankel/bernstein/bipoly.hpp"

namespace hankel::pipelines {

namespace detail {

template <class T>
T lift(long v) {
    if constexpr (std::is_same_v<T, bernstein::BiPoly>) {
        return bernstein::BiPoly::constant(Rational(v));
    } else {
        return T(v);
    }
}

}  // namespace detail

/// The four groups of the majorant
///   H(p, x, y) = base + linear*y + quadratic*y^2 + remainder*(1 - y^2)
/// for 9216 |H3(1)| with p = c1, x = |gamma|, y = |eta|.
template <class T>
struct MajorantGroups {
    T base;
    T linear;
    T quadratic;
    T remainder;
};

template <class T>
MajorantGroups<T> majorant_groups(const T& p, const T& x) {
    using detail::lift;
    const T one = lift<T>(1);
    const T p2 = p * p;
    const T p4 = p2 * p2;
    const T p6 = p4 * p2;
    const T x2 = x * x;
    const T one_p2 = one - p2;
    const T one_x2 = one - x2;
    const T inner = lift<T>(3) * p2 + lift<T>(4) * x * one_p2;

    MajorantGroups<T> g{
        lift<T>(61) * p6 + lift<T>(244) * p4 * one_p2 * x +
            lift<T>(8) * p2 * (lift<T>(89) - lift<T>(120) * p2 + lift<T>(31) * p4) * x2 -
            lift<T>(32) * (lift<T>(-9) - lift<T>(7) * p2 + lift<T>(14) * p4 + lift<T>(2) * p6) * x2 * x +
            lift<T>(128) * p2 * one_p2 * one_p2 * x2 * x2,
        lift<T>(16) * one_x2 * p * one_p2 *
            (lift<T>(29) * p2 + lift<T>(16) * x2 * one_p2 + x * (lift<T>(68) + lift<T>(40) * p2)),
        lift<T>(32) * one_x2 * one_p2 * (lift<T>(32) * one_x2 * one_p2 + lift<T>(9) * inner * x),
        lift<T>(288) * one_x2 * one_p2 * inner,
    };
    return g;
}

/// H(p, x, y).
template <class T>
T majorant(const T& p, const T& x, const T& y) {
    const auto g = majorant_groups(p, x);
    const T y2 = y * y;
    return g.base + g.linear * y + g.quadratic * y2 + g.remainder * (detail::lift<T>(1) - y2);
}

/// H1(p, x, y): H with y replaced by 1 in the linear group only. It is
/// affine in y^2, so its maximum over y in [0,1] is at y = 0 or y = 1.
template <class T>
T majorant_linear_y_one(const T& p, const T& x, const T& y) {
    const auto g = majorant_groups(p, x);
    const T y2 = y * y;
    return g.base + g.linear + g.quadratic * y2 + g.remainder * (detail::lift<T>(1) - y2);
}

/// G1 = H1(.,.,1), G2 = H1(.,.,0) and F = 1024 - G1, all of bidegree (6, 4).
struct H3Reduction {
    bernstein::BiPoly G1;
    bernstein::BiPoly G2;
    bernstein::BiPoly F;
};

/// Builds G1, G2 and F from the group formulas with BiPoly arithmetic and
/// checks them monomial by monomial against the hand-expanded tables.
/// Throws std::logic_error on any mismatch.
H3Reduction build_h3_reduction();

/// Hand-expanded F = 1024 - G1, transcribed coefficient by coefficient.
bernstein::BiPoly hand_expanded_F();
/// Hand-expanded G2.
bernstein::BiPoly hand_expanded_G2();
/// Quadratic part of F at the origin and its higher-order remainder R.
struct HandCornerSplit {
    Rational alpha, beta, delta;
    bernstein::BiPoly R;
};
HandCornerSplit hand_corner_split();

}  // namespace hankel::pipelines
