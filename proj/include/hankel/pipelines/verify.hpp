#pragma once

#include <cstdint>

#include "hankel/bernstein/certificate.hpp"
#include "hankel/complex.hpp"
#include "hankel/pipelines/h3_reduction.hpp"
#include "hankel/pipelines/report.hpp"

namespace hankel::pipelines {

struct H3Options {
    int max_depth = 3;
    /// Random oracle samples, on top of a fixed structured set.
    long oracle_samples = 10000;
    /// Uniform subdivision depth for the upper bound on G2.
    int g2_depth = 0;
    std::uint64_t seed = 20240917;
};

struct H3Verification {
    VerificationReport report;
    H3Reduction reduction;
    bernstein::PositivityCertificate certificate{bernstein::BiPoly(), bernstein::CertNode{bernstein::Box::unit()}, 0,
                                                 std::nullopt};
    bernstein::ValidationResult validation;
    Rational g2_bound;
};

/// Certifies 1024 - G1 >= 0 on [0,1]^2 with the corner rule at the origin,
/// bounds G2 from its Bernstein coefficients, checks the sharpness witness
/// and cross-checks |9216 H3(1)| against a sampling oracle.
H3Verification verify_h3(const H3Options& options = {});

struct H2Options {
    int grid = 32;
    int phases = 24;
};

VerificationReport verify_h2(const H2Options& options = {});

struct A4Result {
    double value = 0.0;
    double c1 = 0.0;
    ComplexD lz_gamma;
    ComplexD eta;
    long evaluations = 0;
    double family_t = 0.0;      // maximizer of t(1-t^2) - 7t^3/24 on [0,1]
    double family_value = 0.0;
};

/// |a4| as a function of the Schwarz parametrization with rho = 0.
double a4_modulus(double c1, const ComplexD& lz_gamma, const ComplexD& eta);

/// t(1 - t^2) - 7t^3/24.
double a4_family(double t);

/// Grid search over c1 in [0,1], gamma on a polar disk grid and eta on the
/// unit circle, followed by `refine_steps` rounds of pattern search around
/// the incumbent with halving step sizes.
A4Result max_a4(int grid = 64, int refine_steps = 40, int phases = 24);

}  // namespace hankel::pipelines
