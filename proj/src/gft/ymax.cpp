#include "hankel/gft/ymax.hpp"

#include <algorithm>
#include <cmath>

namespace hankel::gft {

namespace {

constexpr double kBoundaryRel = 1e-12;

bool close(double lhs, double rhs) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) <= kBoundaryRel * scale;
}

}  // namespace

std::string_view to_string(YBranch b) {
    switch (b) {
        case YBranch::nonneg_large_b: return "AC>=0, |B|>=2(1-|C|)";
        case YBranch::nonneg_small_b: return "AC>=0, |B|<2(1-|C|)";
        case YBranch::neg_first: return "AC<0, 1-|A|+B^2/(4(1-|C|))";
        case YBranch::neg_second: return "AC<0, 1+|A|+B^2/(4(1+|C|))";
        case YBranch::neg_r_sum: return "AC<0, R=|A|+|B|-|C|";
        case YBranch::neg_r_minus_a: return "AC<0, R=-|A|+|B|+|C|";
        case YBranch::neg_r_sqrt: return "AC<0, R=(|A|+|C|)sqrt(1-B^2/(4AC))";
    }
    return "?";
}

YResult y_max(double A, double B, double C) {
    const double a = std::abs(A);
    const double b = std::abs(B);
    const double c = std::abs(C);
    const double b2 = B * B;
    YResult out;

    if (A * C >= 0.0) {
        out.near_boundary = close(A * C, 0.0) && (A != 0.0 || C != 0.0);
        out.near_boundary = out.near_boundary || close(b, 2.0 * (1.0 - c));
        if (b >= 2.0 * (1.0 - c)) {
            out.value = a + b + c;
            out.branch = YBranch::nonneg_large_b;
        } else {
            out.value = 1.0 + a + b2 / (4.0 * (1.0 - c));
            out.branch = YBranch::nonneg_small_b;
        }
        return out;
    }

    // AC < 0 forces C != 0, so 1/C^2 is finite.
    const double threshold = -4.0 * A * C * (1.0 / (C * C) - 1.0);
    out.near_boundary = close(threshold, b2) || close(b, 2.0 * (1.0 - c)) ||
                        close(b2, 4.0 * (1.0 + c) * (1.0 + c));
    if (threshold <= b2 && b < 2.0 * (1.0 - c)) {
        out.value = 1.0 - a + b2 / (4.0 * (1.0 - c));
        out.branch = YBranch::neg_first;
        return out;
    }
    if (b2 < std::min(4.0 * (1.0 + c) * (1.0 + c), threshold)) {
        out.value = 1.0 + a + b2 / (4.0 * (1.0 + c));
        out.branch = YBranch::neg_second;
        return out;
    }
    out.near_boundary = out.near_boundary || close(c * (b + 4.0 * a), a * b) || close(a * b, c * (b - 4.0 * a));
    if (c * (b + 4.0 * a) <= a * b) {
        out.value = a + b - c;
        out.branch = YBranch::neg_r_sum;
    } else if (a * b <= c * (b - 4.0 * a)) {
        out.value = -a + b + c;
        out.branch = YBranch::neg_r_minus_a;
    } else {
        out.value = (a + c) * std::sqrt(1.0 - b2 / (4.0 * A * C));
        out.branch = YBranch::neg_r_sqrt;
    }
    return out;
}

}  // namespace hankel::gft
