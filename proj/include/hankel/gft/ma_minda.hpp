#pragma once

namespace hankel::gft {

/// Numeric checks of the target function phi(z) = (1 + z/2)^2 on a polar
/// grid of the open disk (radius at most 1 - 1e-6) and on the unit circle.
struct PropertyReport {
    int radii = 0;
    int angles = 0;
    int boundary_points = 0;

    double min_abs_phi = 0.0;        // expect > 1/4
    double max_abs_phi = 0.0;        // expect < 9/4
    double min_re_phi = 0.0;         // expect > 0
    double max_starlike_ratio = 0.0; // max |z/(8+3z)|, expect < 1/5

    double boundary_min = 0.0;       // min_t |phi(e^{it}) - 5/4|^2, expect 1
    double boundary_argmin = 0.0;
    double boundary_at_zero = 0.0;
    double boundary_at_pi = 0.0;
    /// max |direct - (9/8 - cos(2t)/8)| over the circle grid.
    double boundary_formula_error = 0.0;

    bool modulus_ok = false;
    bool real_part_ok = false;
    bool starlike_ok = false;
    bool boundary_ok = false;
    bool all_ok() const { return modulus_ok && real_part_ok && starlike_ok && boundary_ok; }
};

inline constexpr double kMaxScanRadius = 1.0 - 1e-6;
inline constexpr double kBoundaryTolerance = 1e-10;

/// `grid_density` radii by 4*grid_density angles; `boundary_points` must be
/// even so that t = 0 and t = pi are grid points.
PropertyReport ma_minda_scan(int grid_density, int boundary_points = 10000);

}  // namespace hankel::gft
