#include "hankel/bernstein/corner.hpp"

#include <stdexcept>

namespace hankel::bernstein {

CornerSplit make_corner_split(const BiPoly& local, const Rational& half_width) {
    if (half_width <= Rational(0)) {
        throw std::invalid_argument("make_corner_split: half width must be positive");
    }
    CornerSplit split;
    split.half_width = half_width;
    for (std::size_t i = 0; i <= local.deg_p(); ++i) {
        for (std::size_t j = 0; j <= local.deg_x(); ++j) {
            const Rational c = local.coeff(i, j);
            if (c.is_zero()) continue;
            const std::size_t total = i + j;
            if (total >= 3) {
                split.tail.push_back({i, j, c});
            } else if (total == 2) {
                if (i == 2) split.quad_pp = c;
                if (i == 1) split.quad_px = c;
                if (i == 0) split.quad_xx = c;
            } else {
                split.low_order.push_back({i, j, c});
            }
        }
    }
    return split;
}

CornerSplit make_corner_split(const BiPoly& f, const Box& box, const CornerPoint& corner) {
    if (!box.has_vertex(corner.p, corner.x)) {
        throw std::invalid_argument("make_corner_split: (" + corner.p.to_string() + ", " + corner.x.to_string() +
                                    ") is not a vertex of " + box.to_string());
    }
    // p = corner.p + sp * s with sp = +1 at the low edge and -1 at the high edge.
    const Rational sp = corner.p == box.p_lo ? Rational(1) : Rational(-1);
    const Rational sx = corner.x == box.x_lo ? Rational(1) : Rational(-1);
    const BiPoly local = f.substitute_affine(corner.p, sp, corner.x, sx);
    return make_corner_split(local, max(box.p_width(), box.x_width()));
}

CornerEstimate corner_estimate(const CornerSplit& split) {
    CornerEstimate est;
    // 2|st| <= s^2 + t^2 gives Q >= (alpha - |beta|/2) s^2 + (delta - |beta|/2) t^2.
    const Rational half_beta = abs(split.quad_px) / Rational(2);
    est.lambda = min(split.quad_pp - half_beta, split.quad_xx - half_beta);
    // s^i t^j <= h^{i+j-2} (s^2 + t^2) for i + j >= 3 and 0 <= s, t <= h.
    for (const auto& m : split.tail) {
        est.tail_sum += abs(m.coeff) * pow(split.half_width, static_cast<unsigned>(m.i + m.j - 2));
    }
    est.margin = est.lambda - est.tail_sum;

    if (!split.low_order.empty()) {
        est.reason = "constant or linear terms at the corner";
    } else if (est.lambda <= Rational(0)) {
        est.reason = "quadratic part not positive definite under the equal split";
    } else if (est.margin <= Rational(0)) {
        est.reason = "tail sum " + est.tail_sum.to_string() + " >= lambda " + est.lambda.to_string();
    } else {
        est.success = true;
    }
    return est;
}

}  // namespace hankel::bernstein
