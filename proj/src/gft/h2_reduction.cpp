#include "hankel/gft/h2_reduction.hpp"

#include <stdexcept>

namespace hankel::gft {

namespace {

void require_open(const Rational& p1) {
    if (!(p1 > Rational(0) && p1 < Rational(2))) {
        throw std::invalid_argument("h2_reduction: p1 must lie in (0, 2)");
    }
}

}  // namespace

H2Reduction h2_reduction(const Rational& p1) {
    require_open(p1);
    const Rational p2 = p1 * p1;
    const Rational p4 = p2 * p2;
    H2Reduction r;
    r.A = Rational(-19) * p4 / Rational(3072);
    r.B = p2 * (Rational(4) - p2) / Rational(384);
    r.C = (p4 + Rational(8) * p2 - Rational(48)) / Rational(192);
    r.D_mag = p1 * (Rational(4) - p2) / Rational(24);
    r.A1 = r.A / r.D_mag;
    r.B1 = r.B / r.D_mag;
    r.C1 = r.C / r.D_mag;
    return r;
}

H2Normalized h2_normalized_closed_form(const Rational& p1) {
    require_open(p1);
    const Rational p2 = p1 * p1;
    return {Rational(-19) * p2 * p1 / (Rational(128) * (Rational(4) - p2)), p1 / Rational(16),
            -(Rational(12) + p2) / (Rational(8) * p1)};
}

Rational h2_g1(const Rational& p1) {
    const Rational p2 = p1 * p1;
    return (Rational(768) - Rational(96) * p2 - Rational(5) * p2 * p2) / Rational(3072);
}

Rational h2_g1_prime(const Rational& p1) {
    return (Rational(-192) * p1 - Rational(20) * p1 * p1 * p1) / Rational(3072);
}

Rational h2_envelope(const Rational& p1) {
    if (p1 < Rational(0) || p1 > Rational(2)) {
        throw std::invalid_argument("h2_envelope: p1 must lie in [0, 2]");
    }
    if (p1.is_zero()) {
        // |-768 gamma^2|/3072 = |gamma|^2/4, largest at |gamma| = 1.
        return Rational(768, 3072);
    }
    if (p1 == Rational(2)) {
        return Rational(304, 3072);
    }
    return h2_g1(p1);
}

}  // namespace hankel::gft
