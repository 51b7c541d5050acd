#pragma once

#include <string>
#include <vector>

#include "hankel/bernstein/patch.hpp"

namespace hankel::bernstein {

/// A point where the polynomial is expected to vanish on the boundary of the
/// region (the designated zero of the corner rule).
struct CornerPoint {
    Rational p;
    Rational x;
    friend bool operator==(const CornerPoint&, const CornerPoint&) = default;
};

struct Monomial {
    std::size_t i = 0;
    std::size_t j = 0;
    Rational coeff;
};

/// F written in local coordinates (s, t) >= 0 centred at a box corner, split
/// as F = Q + R + L with Q = quad_pp s^2 + quad_px s t + quad_xx t^2, R the
/// monomials of total degree >= 3 and L the constant and linear part.
struct CornerSplit {
    Rational quad_pp;
    Rational quad_px;
    Rational quad_xx;
    std::vector<Monomial> tail;
    std::vector<Monomial> low_order;  // nonzero terms of degree 0 or 1
    Rational half_width;              // h: the box sits inside [0,h]^2 locally
};

struct CornerEstimate {
    bool success = false;
    Rational lambda;    // min(alpha - |beta|/2, delta - |beta|/2)
    Rational tail_sum;  // sum |c_ij| h^{i+j-2}
    Rational margin;    // lambda - tail_sum
    std::string reason;
};

/// Reflects the box so that `corner` maps to the origin and the box to
/// [0, w_p] x [0, w_x], then splits F. Throws if `corner` is not a vertex of
/// the box.
CornerSplit make_corner_split(const BiPoly& f, const Box& box, const CornerPoint& corner);

/// Split built directly from local coefficients (the box is [0,h]^2).
CornerSplit make_corner_split(const BiPoly& local, const Rational& half_width);

/// On success F >= margin (s^2 + t^2) on the box, so F > 0 away from the corner.
CornerEstimate corner_estimate(const CornerSplit& split);

}  // namespace hankel::bernstein
