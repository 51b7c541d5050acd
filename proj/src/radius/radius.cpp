#include "hankel/radius.hpp"

#include <stdexcept>

namespace hankel::radius {

namespace {

void require_domain(const Rational& r) {
    if (r < Rational(0) || r >= Rational(1)) {
        throw std::domain_error("radius: r must lie in [0, 1), got " + r.to_string());
    }
}

}  // namespace

Rational radius_h(const Rational& r) {
    require_domain(r);
    const Rational one(1);
    const Rational half_r = r / Rational(2);
    return r * (one + half_r) / ((one - half_r) * (one - half_r) * (one - r * r));
}

Rational radius_g(const Rational& r) {
    require_domain(r);
    return Rational(1) - r - r * r / Rational(4) - radius_h(r);
}

double radius_g(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("radius: r must lie in [0, 1)");
    }
    const double half = 1.0 - r / 2.0;
    return (1.0 - r - r * r / 4.0) - r * (1.0 + r / 2.0) / (half * half * (1.0 - r * r));
}

Rational h_prime_numerator(const Rational& r) {
    const Rational r2 = r * r;
    return -r2 * r2 - Rational(3) * r2 * r + Rational(2) * r2 + Rational(3) * r + Rational(2);
}

Rational h_prime_numerator_regrouped(const Rational& r) {
    const Rational r2 = r * r;
    return (Rational(1) - r2) * (r2 + Rational(3) * r + Rational(2)) + Rational(3) * r2;
}

Rational h_prime(const Rational& r) {
    require_domain(r);
    const Rational a = Rational(2) - r;
    const Rational b = Rational(1) - r;
    const Rational c = Rational(1) + r;
    return Rational(4) * h_prime_numerator(r) / (a * a * a * b * b * c * c);
}

bool h_prime_positive(const Rational& r) {
    if (!(r > Rational(0) && r < Rational(1))) {
        throw std::domain_error("h_prime_positive: r must lie in (0, 1)");
    }
    const Rational a = Rational(2) - r;
    const Rational b = Rational(1) - r;
    const Rational c = Rational(1) + r;
    const Rational denom = a * a * a * b * b * c * c;
    return h_prime_numerator(r).sign() > 0 && denom.sign() > 0;
}

RadiusSolution solve_radius(const RadiusProblem& prob) {
    const Rational& gamma = prob.order_gamma;
    if (gamma < Rational(0) || gamma >= Rational(1)) {
        throw std::invalid_argument("solve_radius: order gamma must lie in [0, 1)");
    }
    if (prob.tolerance <= Rational(0)) {
        throw std::invalid_argument("solve_radius: tolerance must be positive");
    }

    Rational lo(0);
    if (!(radius_g(lo) > gamma)) {
        throw std::runtime_error("solve_radius: g(0) does not exceed gamma");
    }
    // Upper bracket 1 - 2^-20, pushed toward 1 if g there is still >= gamma.
    Rational gap = pow(Rational(1, 2), 20);
    Rational hi = Rational(1) - gap;
    int pushes = 0;
    while (!(radius_g(hi) < gamma)) {
        if (++pushes > 200) {
            throw std::runtime_error("solve_radius: no bracket found");
        }
        gap /= Rational(2);
        hi = Rational(1) - gap;
    }

    RadiusSolution sol;
    for (;;) {
        const Rational mid = (lo + hi) / Rational(2);
        const Rational resid = radius_g(mid) - gamma;
        if (hi - lo <= prob.tolerance && abs(resid) <= prob.tolerance) {
            sol.lo = lo;
            sol.hi = hi;
            sol.mid = mid;
            sol.residual = resid;
            sol.root = mid.to_double();
            return sol;
        }
        ++sol.iterations;
        if (resid.is_zero()) {
            lo = mid;
            hi = mid;
            continue;
        }
        if (resid.sign() > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

}  // namespace hankel::radius
