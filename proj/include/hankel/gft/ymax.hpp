#pragma once

#include <string_view>

namespace hankel::gft {

/// Which row of the case table produced the value.
enum class YBranch {
    nonneg_large_b,    // AC >= 0, |B| >= 2(1-|C|)
    nonneg_small_b,    // AC >= 0, |B| <  2(1-|C|)
    neg_first,         // AC < 0, 1 - |A| + B^2/(4(1-|C|))
    neg_second,        // AC < 0, 1 + |A| + B^2/(4(1+|C|))
    neg_r_sum,         // R: |A| + |B| - |C|
    neg_r_minus_a,     // R: -|A| + |B| + |C|
    neg_r_sqrt,        // R: (|A|+|C|) sqrt(1 - B^2/(4AC))
};

std::string_view to_string(YBranch b);

struct YResult {
    double value = 0.0;
    YBranch branch = YBranch::nonneg_large_b;
    /// Some branch condition was within a relative 1e-12 of equality, so a
    /// different row could apply under perturbation.
    bool near_boundary = false;
};

/// max over the closed unit disk of |A + Bz + Cz^2| + 1 - |z|^2, from the
/// closed-form case table. Rows are tried in order; the first match wins.
YResult y_max(double A, double B, double C);

}  // namespace hankel::gft
