#include <algorithm>
#include <array>
#include <cmath>

#include "hankel/gft/coeffs.hpp"
#include "hankel/pipelines/verify.hpp"

namespace hankel::pipelines {

double a4_modulus(double c1, const ComplexD& lz_gamma, const ComplexD& eta) {
    const auto c = gft::schwarz_parametrize(c1, gft::ParamTriple<double>{lz_gamma, eta, ComplexD(0.0)});
    return abs(gft::schwarz_to_coeffs(c).a4);
}

double a4_family(double t) { return t * (1.0 - t * t) - 7.0 * t * t * t / 24.0; }

namespace {

// Search coordinates: c1, |gamma|, arg gamma, arg eta. |a4| is affine in eta,
// so its maximum over the closed disk is taken on the circle.
using Point = std::array<double, 4>;

double objective(const Point& x) {
    return a4_modulus(x[0], polar(x[1], x[2]), polar(1.0, x[3]));
}

Point clamp(Point x) {
    x[0] = std::clamp(x[0], 0.0, 1.0);
    x[1] = std::clamp(x[1], 0.0, 1.0);
    return x;
}

double golden_max(double (*f)(double), double lo, double hi, int iterations) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = f(a), fb = f(b);
    for (int k = 0; k < iterations; ++k) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        }
    }
    return (lo + hi) / 2.0;
}

}  // namespace

A4Result max_a4(int grid, int refine_steps, int phases) {
    if (grid < 64) throw std::invalid_argument("max_a4: grid must be at least 64");
    if (refine_steps < 0 || phases < 4) throw std::invalid_argument("max_a4: bad refinement or phase count");

    A4Result res;
    Point best{0.0, 0.0, 0.0, 0.0};
    double best_value = -1.0;
    const int radii = grid / 4;
    const double dphi = 2.0 * M_PI / phases;
    for (int i = 0; i <= grid; ++i) {
        for (int r = 0; r <= radii; ++r) {
            for (int kg = 0; kg < (r == 0 ? 1 : phases); ++kg) {
                for (int ke = 0; ke < phases; ++ke) {
                    const Point x{static_cast<double>(i) / grid, static_cast<double>(r) / radii, kg * dphi, ke * dphi};
                    const double v = objective(x);
                    ++res.evaluations;
                    if (v > best_value) {
                        best_value = v;
                        best = x;
                    }
                }
            }
        }
    }

    Point step{1.0 / grid, 1.0 / radii, dphi, dphi};
    for (int round = 0; round < refine_steps; ++round) {
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t d = 0; d < 4; ++d) {
                for (double sign : {1.0, -1.0}) {
                    Point x = best;
                    x[d] += sign * step[d];
                    x = clamp(x);
                    const double v = objective(x);
                    ++res.evaluations;
                    if (v > best_value) {
                        best_value = v;
                        best = x;
                        moved = true;
                    }
                }
            }
        }
        for (auto& s : step) s /= 2.0;
    }

    res.value = best_value;
    res.c1 = best[0];
    res.lz_gamma = polar(best[1], best[2]);
    res.eta = polar(1.0, best[3]);
    res.family_t = golden_max(a4_family, 0.0, 1.0, 200);
    res.family_value = a4_family(res.family_t);
    return res;
}

}  // namespace hankel::pipelines
