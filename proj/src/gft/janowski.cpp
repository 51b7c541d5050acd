#include "hankel/gft/janowski.hpp"

#include <stdexcept>

namespace hankel::gft {

DiskReport janowski_check(const JanowskiParams& j) {
    const Rational one(1);
    if (!(Rational(-1) < j.B && j.B < j.A && j.A <= one)) {
        throw std::invalid_argument("janowski_check: requires -1 < B < A <= 1");
    }
    DiskReport r;
    const Rational denom = one - j.B * j.B;
    r.center = (one - j.A * j.B) / denom;
    r.radius = (j.A - j.B) / denom;
    r.lower = r.center - r.radius;
    r.upper = r.center + r.radius;
    if (r.lower != (one - j.A) / (one - j.B) || r.upper != (one + j.A) / (one + j.B)) {
        throw std::logic_error("janowski_check: endpoint identities failed");
    }
    r.disk_lhs = abs(r.center - Rational(5, 4)) + r.radius;
    r.endpoint_test = r.lower >= Rational(1, 4) && r.upper <= Rational(9, 4);
    r.disk_test = r.disk_lhs <= one;
    if (!r.agree()) {
        throw std::logic_error("janowski_check: endpoint and disk tests disagree");
    }
    return r;
}

}  // namespace hankel::gft
