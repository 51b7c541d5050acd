#include <algorithm>
#include <cmath>
#include <future>
#include <random>

#include "hankel/gft/coeffs.hpp"
#include "hankel/pipelines/verify.hpp"
#include "hankel/series.hpp"

namespace hankel::pipelines {

using bernstein::BiPoly;
using bernstein::Box;
using bernstein::CornerPoint;

namespace {

constexpr double kOracleSlack = 1e-9;

struct H3Sample {
    double value;     // |9216 H3(1)|
    double majorant;  // H(c1, |gamma|, |eta|)
};

H3Sample h3_sample(double c1, ComplexD g, ComplexD e, ComplexD r) {
    const auto c = gft::schwarz_parametrize(c1, gft::ParamTriple<double>{g, e, r});
    return {abs(gft::h3_schwarz_poly(c)), majorant(c1, abs(g), abs(e))};
}

OracleStats run_oracle(long samples, std::uint64_t seed) {
    OracleStats st;
    st.bound = 1024.0;
    auto record = [&](const H3Sample& s) {
        ++st.samples;
        st.observed_max = std::max(st.observed_max, s.value);
        if (s.value > s.majorant + kOracleSlack * std::max(1.0, s.majorant)) ++st.violations;
    };

    const ComplexD marks[] = {ComplexD(0.0), ComplexD(1.0), ComplexD(-1.0), ComplexD{0.0, 1.0}, ComplexD{0.0, -1.0}};
    for (double c1 : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (const auto& g : marks) {
            for (const auto& e : marks) {
                for (const auto& r : marks) record(h3_sample(c1, g, e, r));
            }
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    // A third of the moduli sit on the circle, where the extremes live.
    auto disk_point = [&] {
        const double m = unit(rng) < 1.0 / 3.0 ? 1.0 : std::sqrt(unit(rng));
        return polar(m, angle(rng));
    };
    for (long k = 0; k < samples; ++k) {
        const double c1 = unit(rng);
        const ComplexD g = disk_point();
        const ComplexD e = disk_point();
        const ComplexD r = disk_point();
        record(h3_sample(c1, g, e, r));
    }
    st.gap = st.bound - st.observed_max;
    return st;
}

bool y_coefficient_nonnegative(int n) {
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const auto g = majorant_groups(Rational(i, n), Rational(j, n));
            if (g.linear < Rational(0)) return false;
        }
    }
    return true;
}

}  // namespace

H3Verification verify_h3(const H3Options& options) {
    if (options.max_depth < 3) throw std::invalid_argument("verify_h3: max_depth must be at least 3");

    H3Verification out;
    VerificationReport& rep = out.report;
    rep.claim = "|H3(1)| <= 1/9";
    rep.oracle.bound = 1024.0;

    try {
        out.reduction = build_h3_reduction();
        rep.add("hand expansions", true, "F and G2 match monomial by monomial");
    } catch (const std::logic_error& e) {
        rep.add("hand expansions", false, e.what());
        rep.status = Status::certification_failed;
        return out;
    }

    const BiPoly F = out.reduction.F;
    auto cert_job = std::async(std::launch::async, [&F, &options] {
        bernstein::CertifyOptions co;
        co.max_depth = options.max_depth;
        co.corner = CornerPoint{Rational(0), Rational(0)};
        auto cert = bernstein::certify_positive(F, Box::unit(), co);
        auto val = bernstein::validate_certificate(cert);
        return std::make_pair(std::move(cert), std::move(val));
    });
    auto oracle_job = std::async(std::launch::async, run_oracle, options.oracle_samples, options.seed);

    out.g2_bound = bernstein::bound_above(out.reduction.G2, Box::unit(), options.g2_depth);
    const bool y_ok = y_coefficient_nonnegative(20);

    auto [cert, val] = cert_job.get();
    out.certificate = std::move(cert);
    out.validation = std::move(val);
    rep.oracle = oracle_job.get();

    rep.add("linear-in-y coefficient nonnegative", y_ok, "21x21 rational grid");

    const bool cert_ok = out.certificate.succeeded() && out.validation.proves_nonnegative;
    std::string cert_detail = std::to_string(out.certificate.leaves().size()) + " leaves, " +
                              std::to_string(out.certificate.count(bernstein::NodeStatus::coeff_positive)) +
                              " positive, " +
                              std::to_string(out.certificate.count(bernstein::NodeStatus::corner_certified)) +
                              " corner, " + std::to_string(out.certificate.count(bernstein::NodeStatus::failed)) +
                              " failed";
    if (!out.validation.valid) cert_detail += "; revalidation: " + out.validation.errors.front();
    rep.add("1024 - G1 >= 0 on [0,1]^2", cert_ok, cert_detail);

    const bool g2_ok = out.g2_bound <= Rational(1024);
    rep.add("G2 <= 1024", g2_ok, "max Bernstein coefficient " + out.g2_bound.to_string());

    const auto c = gft::SchwarzCoeffs<Rational>{ComplexQ(Rational(0)), ComplexQ(Rational(0)), ComplexQ(Rational(1)),
                                                ComplexQ(Rational(0))};
    const ComplexQ poly_value = gft::h3_schwarz_poly(c);
    const auto f = series::member_from_schwarz(series::TruncSeries::monomial(series::kDefaultOrder, 3));
    const gft::ClassCoeffs<Rational> a{ComplexQ(f[2]), ComplexQ(f[3]), ComplexQ(f[4]), ComplexQ(f[5])};
    const ComplexQ h3 = gft::hankel3(a);
    const bool sharp_ok = poly_value == ComplexQ(Rational(-1024)) && h3 == ComplexQ(Rational(-1, 9));
    rep.add("sharpness w = z^3", sharp_ok,
            "9216 H3 = " + poly_value.re.to_string() + ", H3 = " + h3.re.to_string());

    const bool oracle_ok = rep.oracle.observed_max <= 1024.0 * (1.0 + kOracleSlack);
    rep.add("oracle max <= 1024", oracle_ok, format_double(rep.oracle.observed_max));
    rep.add("oracle within majorant H", rep.oracle.violations == 0,
            std::to_string(rep.oracle.violations) + " violations");

    if (cert_ok && g2_ok) rep.bound = max(Rational(1024), out.g2_bound) / Rational(9216);

    if (!cert_ok || !g2_ok || !sharp_ok || !y_ok) {
        rep.status = Status::certification_failed;
    } else if (!oracle_ok || rep.oracle.violations != 0) {
        rep.status = Status::oracle_violation;
    } else {
        rep.status = Status::verified;
    }
    return out;
}

}  // namespace hankel::pipelines
