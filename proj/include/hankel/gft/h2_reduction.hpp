#pragma once

#include "hankel/rational.hpp"

namespace hankel::gft {

/// Real coefficient functions of the H2(2) bound at a fixed p1 in (0, 2),
/// with |eta| = 1. A1, B1, C1 are obtained by dividing A, B, C by |D|.
struct H2Reduction {
    Rational A, B, C, D_mag;
    Rational A1, B1, C1;
};

/// Throws unless 0 < p1 < 2 (|D| vanishes at the endpoints).
H2Reduction h2_reduction(const Rational& p1);

/// Closed forms of A1, B1, C1 as simplified by hand, kept separate from
/// `h2_reduction` so the two routes can be compared.
struct H2Normalized {
    Rational A1, B1, C1;
};
H2Normalized h2_normalized_closed_form(const Rational& p1);

/// g1(p1) = (768 - 96 p1^2 - 5 p1^4)/3072.
Rational h2_g1(const Rational& p1);
/// g1'(p1) = (-192 p1 - 20 p1^3)/3072.
Rational h2_g1_prime(const Rational& p1);

/// The envelope of |H2(2)| over gamma, eta at fixed p1 in [0, 2]. The
/// endpoints are evaluated from their own reductions (|gamma|^2/4 at its
/// maximum |gamma| = 1, and the constant 304/3072), not as limits of g1.
Rational h2_envelope(const Rational& p1);

}  // namespace hankel::gft
