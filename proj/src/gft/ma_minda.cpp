#include "hankel/gft/ma_minda.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hankel::gft {

namespace {

using cd = std::complex<double>;

cd phi(cd z) {
    const cd w = 1.0 + z / 2.0;
    return w * w;
}

double boundary_gap(double t) {
    return std::norm(phi(std::polar(1.0, t)) - 1.25);
}

}  // namespace

PropertyReport ma_minda_scan(int grid_density, int boundary_points) {
    if (grid_density < 8) {
        throw std::invalid_argument("ma_minda_scan: grid_density must be at least 8");
    }
    if (boundary_points < 2 || boundary_points % 2 != 0) {
        throw std::invalid_argument("ma_minda_scan: boundary_points must be even and positive");
    }
    PropertyReport rep;
    rep.radii = grid_density;
    rep.angles = 4 * grid_density;
    rep.boundary_points = boundary_points;
    rep.min_abs_phi = std::numeric_limits<double>::infinity();
    rep.max_abs_phi = 0.0;
    rep.min_re_phi = std::numeric_limits<double>::infinity();
    rep.max_starlike_ratio = 0.0;

    for (int i = 0; i <= rep.radii; ++i) {
        const double r = kMaxScanRadius * static_cast<double>(i) / rep.radii;
        for (int j = 0; j < rep.angles; ++j) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / rep.angles;
            const cd z = std::polar(r, t);
            const cd v = phi(z);
            const double m = std::abs(v);
            rep.min_abs_phi = std::min(rep.min_abs_phi, m);
            rep.max_abs_phi = std::max(rep.max_abs_phi, m);
            rep.min_re_phi = std::min(rep.min_re_phi, v.real());
            rep.max_starlike_ratio = std::max(rep.max_starlike_ratio, std::abs(z / (8.0 + 3.0 * z)));
        }
    }

    rep.boundary_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < boundary_points; ++j) {
        const double t = std::numbers::pi * (2.0 * j / boundary_points);
        const double g = boundary_gap(t);
        rep.boundary_formula_error =
            std::max(rep.boundary_formula_error, std::abs(g - (9.0 / 8.0 - std::cos(2.0 * t) / 8.0)));
        if (g < rep.boundary_min) {
            rep.boundary_min = g;
            rep.boundary_argmin = t;
        }
    }
    rep.boundary_at_zero = boundary_gap(0.0);
    rep.boundary_at_pi = boundary_gap(std::numbers::pi);

    rep.modulus_ok = rep.min_abs_phi > 0.25 && rep.max_abs_phi < 2.25;
    rep.real_part_ok = rep.min_re_phi > 0.0;
    rep.starlike_ok = rep.max_starlike_ratio < 0.2;
    rep.boundary_ok = rep.boundary_min >= 1.0 - kBoundaryTolerance &&
                      std::abs(rep.boundary_at_zero - 1.0) <= kBoundaryTolerance &&
                      std::abs(rep.boundary_at_pi - 1.0) <= kBoundaryTolerance;
    return rep;
}

}  // namespace hankel::gft
