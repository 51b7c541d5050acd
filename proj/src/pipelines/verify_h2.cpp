#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

#include "hankel/gft/coeffs.hpp"
#include "hankel/gft/h2_reduction.hpp"
#include "hankel/pipelines/verify.hpp"
#include "hankel/series.hpp"

namespace hankel::pipelines {

namespace {

std::vector<Rational> interior_samples(int grid) {
    std::vector<Rational> out;
    for (int k = 1; k < grid; ++k) out.emplace_back(2L * k, grid);
    for (long d : {7L, 11L, 13L, 97L, 1009L}) {
        for (long n = 1; n < 2 * d; n += d / 3 + 1) out.emplace_back(n, d);
    }
    return out;
}

std::vector<ComplexD> polar_grid(int radii, int phases) {
    std::vector<ComplexD> pts{ComplexD(0.0)};
    for (int i = 1; i <= radii; ++i) {
        const double m = static_cast<double>(i) / radii;
        for (int k = 0; k < phases; ++k) pts.push_back(polar(m, 2.0 * M_PI * k / phases));
    }
    return pts;
}


OracleStats run_oracle(int grid, int phases) {
    OracleStats st;
    st.bound = 0.25;
    const auto gammas = polar_grid(grid / 4, phases);
    const auto etas = polar_grid(4, phases);
    for (int i = 0; i <= grid; ++i) {
        const Rational p_exact(2L * i, grid);
        const double p1 = p_exact.to_double();
        const double env = gft::h2_envelope(p_exact).to_double();
        for (const auto& g : gammas) {
            for (const auto& e : etas) {
                const double v = abs(gft::hankel2_lz_expression(p1, g, e));
                ++st.samples;
                st.observed_max = std::max(st.observed_max, v);
                if (v > env + 1e-12) ++st.violations;
            }
        }
    }
    st.gap = st.bound - st.observed_max;
    return st;
}

}  // namespace

VerificationReport verify_h2(const H2Options& options) {
    if (options.grid < 32) throw std::invalid_argument("verify_h2: grid must be at least 32");
    if (options.phases < 4) throw std::invalid_argument("verify_h2: phases must be at least 4");

    VerificationReport rep;
    rep.claim = "|H2(2)| <= 1/4";
    auto oracle_job = std::async(std::launch::async, run_oracle, options.grid, options.phases);

    const auto samples = interior_samples(options.grid);
    bool identity_ok = true;
    bool closed_form_ok = true;
    bool case_ok = true;
    bool decreasing_ok = true;
    Rational envelope_max = gft::h2_envelope(Rational(0));
    for (const auto& p1 : samples) {
        const auto red = gft::h2_reduction(p1);
        const auto nf = gft::h2_normalized_closed_form(p1);
        if (red.D_mag * (abs(red.A1) + abs(red.B1) + abs(red.C1)) != gft::h2_g1(p1)) identity_ok = false;
        if (nf.A1 != red.A1 || nf.B1 != red.B1 || nf.C1 != red.C1) closed_form_ok = false;
        if (!(red.A1 * red.C1 > Rational(0)) || abs(red.B1) < Rational(2) * (Rational(1) - abs(red.C1))) {
            case_ok = false;
        }
        if (!(gft::h2_g1_prime(p1) < Rational(0))) decreasing_ok = false;
        envelope_max = max(envelope_max, gft::h2_envelope(p1));
    }
    envelope_max = max(envelope_max, gft::h2_envelope(Rational(2)));
    const std::string n_samples = std::to_string(samples.size()) + " rational p1";
    rep.add("|D|(|A1|+|B1|+|C1|) = g1(p1)", identity_ok, n_samples);
    rep.add("A1, B1, C1 closed forms", closed_form_ok, n_samples);
    rep.add("A1 C1 > 0 and |B1| >= 2(1-|C1|)", case_ok, n_samples);
    rep.add("g1 decreasing on (0,2)", decreasing_ok, n_samples);

    // p1 = 0: the expression reduces to -gamma^2/4.
    const ComplexQ at_zero = gft::hankel2_lz_expression(Rational(0), ComplexQ(Rational(1)), ComplexQ(Rational(1)));
    const bool zero_ok = at_zero == ComplexQ(Rational(-1, 4)) && gft::h2_envelope(Rational(0)) == Rational(1, 4);
    rep.add("p1 = 0 gives 1/4", zero_ok, "value " + at_zero.re.to_string());

    // p1 = 2: gamma and eta drop out.
    bool two_ok = gft::h2_envelope(Rational(2)) == Rational(19, 192);
    const ComplexQ probes[] = {ComplexQ(Rational(0)), ComplexQ(Rational(1)), ComplexQ{Rational(3, 5), Rational(-4, 5)},
                               ComplexQ{Rational(0), Rational(1, 2)}};
    for (const auto& g : probes) {
        for (const auto& e : probes) {
            if (gft::hankel2_lz_expression(Rational(2), g, e) != ComplexQ(Rational(-19, 192))) two_ok = false;
        }
    }
    rep.add("p1 = 2 gives 19/192", two_ok);

    const auto f = series::member_from_schwarz(series::TruncSeries::monomial(series::kDefaultOrder, 2));
    const Rational h2 = f[2] * f[4] - f[3] * f[3];
    const bool sharp_ok = h2 == Rational(-1, 4);
    rep.add("sharpness w = z^2", sharp_ok, "H2 = " + h2.to_string());

    rep.oracle = oracle_job.get();
    const bool oracle_ok = rep.oracle.observed_max <= 0.25 + 1e-9;
    rep.add("oracle max <= 1/4", oracle_ok, format_double(rep.oracle.observed_max));
    rep.add("oracle within envelope", rep.oracle.violations == 0,
            std::to_string(rep.oracle.violations) + " violations");

    const bool exact_ok = identity_ok && closed_form_ok && case_ok && decreasing_ok && zero_ok && two_ok && sharp_ok;
    if (exact_ok) rep.bound = envelope_max;
    if (!exact_ok) {
        rep.status = Status::certification_failed;
    } else if (!oracle_ok || rep.oracle.violations != 0) {
        rep.status = Status::oracle_violation;
    } else {
        rep.status = Status::verified;
    }
    return rep;
}

}  // namespace hankel::pipelines
