#pragma once

#include "hankel/rational.hpp"

namespace hankel::gft {

/// Parameters of p(z) = (1 + Az)/(1 + Bz), with -1 < B < A <= 1.
struct JanowskiParams {
    Rational A;
    Rational B;
};

struct DiskReport {
    Rational center;            // (1 - AB)/(1 - B^2)
    Rational radius;            // (A - B)/(1 - B^2)
    Rational lower;             // a - r = (1 - A)/(1 - B)
    Rational upper;             // a + r = (1 + A)/(1 + B)
    Rational disk_lhs;          // |a - 5/4| + r
    bool endpoint_test = false; // lower >= 1/4 and upper <= 9/4
    bool disk_test = false;     // disk_lhs <= 1
    bool agree() const { return endpoint_test == disk_test; }
};

/// Decides whether the image disk of p lies in B(5/4, 1), which sits inside
/// phi(D). Both the endpoint form and the disk-containment form are
/// evaluated exactly; throws std::logic_error if they ever disagree.
DiskReport janowski_check(const JanowskiParams& j);

}  // namespace hankel::gft
