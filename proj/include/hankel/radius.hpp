#pragma once

#include "hankel/rational.hpp"

namespace hankel::radius {

/// Convexity order gamma in [0, 1) and the target accuracy of the root.
struct RadiusProblem {
    Rational order_gamma;
    Rational tolerance = Rational(1, 1000000000000L);
};

/// g(r) = (1 - r - r^2/4) - r(1 + r/2) / ((1 - r/2)^2 (1 - r^2)), exact.
/// Throws for r outside [0, 1).
Rational radius_g(const Rational& r);
double radius_g(double r);

/// h(r) = r(1 + r/2) / ((1 - r/2)^2 (1 - r^2)).
Rational radius_h(const Rational& r);

/// Numerator -r^4 - 3r^3 + 2r^2 + 3r + 2 of h'(r) (up to the factor 4).
Rational h_prime_numerator(const Rational& r);
/// (1 - r^2)(r^2 + 3r + 2) + 3r^2, the same polynomial regrouped.
Rational h_prime_numerator_regrouped(const Rational& r);
/// h'(r) = 4 N(r) / ((2-r)^3 (1-r)^2 (1+r)^2).
Rational h_prime(const Rational& r);

/// Exact sign test of h'(r) for rational r in (0, 1).
bool h_prime_positive(const Rational& r);

struct RadiusSolution {
    Rational lo;       // g(lo) > gamma
    Rational hi;       // g(hi) < gamma
    Rational mid;
    double root = 0.0; // mid as a double
    Rational residual; // g(mid) - gamma
    int iterations = 0;
};

/// Least positive root of g(r) = gamma by bisection with exact rational
/// sign evaluation. Stops once hi - lo <= tol and |g(mid) - gamma| <= tol.
RadiusSolution solve_radius(const RadiusProblem& prob);

}  // namespace hankel::radius
