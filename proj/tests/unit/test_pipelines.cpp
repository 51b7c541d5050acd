#include <doctest.h>

#include <cmath>
#include <random>

#include "hankel/gft/coeffs.hpp"
#include "hankel/pipelines/verify.hpp"

using namespace hankel;
using namespace hankel::pipelines;

namespace {

Rational unit_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> den(1, 40);
    const long d = den(rng);
    return Rational(static_cast<long>(rng() % static_cast<unsigned long>(d + 1)), d);
}

ComplexD disk_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double m = u(rng) < 0.3 ? 1.0 : std::sqrt(u(rng));
    return polar(m, 2.0 * M_PI * u(rng));
}

}  // namespace

TEST_CASE("reduction polynomials") {
    const auto red = build_h3_reduction();
    CHECK(majorant(Rational(0), Rational(0), Rational(1)) == Rational(1024));
    CHECK(majorant(Rational(0), Rational(0), Rational(0)) == Rational(0));
    CHECK(red.G1.evaluate(Rational(0), Rational(0)) == Rational(1024));
    CHECK(red.G2.evaluate(Rational(0), Rational(0)) == Rational(0));
    CHECK(red.F == hand_expanded_F());
    CHECK(red.G2 == hand_expanded_G2());
    CHECK(red.F.deg_p() == 6);
    CHECK(red.F.deg_x() == 4);
}

TEST_CASE("property: G1 and G2 are the y = 1 and y = 0 slices of H1") {
    const auto red = build_h3_reduction();
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational p = unit_rational(rng), x = unit_rational(rng), y = unit_rational(rng);
        REQUIRE(red.G1.evaluate(p, x) == majorant_linear_y_one(p, x, Rational(1)));
        REQUIRE(red.G2.evaluate(p, x) == majorant_linear_y_one(p, x, Rational(0)));
        REQUIRE(red.F.evaluate(p, x) == Rational(1024) - red.G1.evaluate(p, x));
        // H <= H1 since the linear group is nonnegative, and H1 is affine in y^2.
        const Rational h1 = majorant_linear_y_one(p, x, y);
        REQUIRE(majorant(p, x, y) <= h1);
        REQUIRE(h1 <= max(red.G1.evaluate(p, x), red.G2.evaluate(p, x)));
        REQUIRE(majorant_groups(p, x).linear >= Rational(0));
    }
}

TEST_CASE("property: |9216 H3| is majorized by H") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const double c1 = trial % 50 == 0 ? 1.0 : u(rng);
        const ComplexD g = disk_point(rng), e = disk_point(rng), r = disk_point(rng);
        const auto c = gft::schwarz_parametrize(c1, gft::ParamTriple<double>{g, e, r});
        const double lhs = abs(gft::h3_schwarz_poly(c));
        const double rhs = majorant(c1, abs(g), abs(e));
        REQUIRE(lhs <= rhs + 1e-9 * std::max(1.0, rhs));
        REQUIRE(rhs <= 1024.0 + 1e-9);
    }
}

TEST_CASE("verify_h3 end to end") {
    H3Options opt;
    opt.oracle_samples = 10000;
    const auto res = verify_h3(opt);
    CHECK(res.report.status == Status::verified);
    CHECK(res.report.bound == Rational(1, 9));
    CHECK(res.report.bound * Rational(9216) == Rational(1024));
    CHECK(res.g2_bound == Rational(910));
    CHECK(res.report.oracle.samples >= 10000);
    CHECK(res.report.oracle.observed_max <= 1024.0 * (1.0 + 1e-9));
    CHECK(res.validation.proves_nonnegative);
    const auto leaves = res.certificate.leaves();
    REQUIRE(leaves.size() == 10);
    CHECK(leaves.front()->status == bernstein::NodeStatus::corner_certified);
    CHECK(leaves.front()->box == bernstein::Box(Rational(0), Rational(1, 8), Rational(0), Rational(1, 8)));
    CHECK_THROWS_AS(verify_h3({2, 100, 0, 1}), std::invalid_argument);
}

TEST_CASE("verify_h2 end to end") {
    const auto rep = verify_h2({32, 24});
    CHECK(rep.status == Status::verified);
    CHECK(rep.bound == Rational(1, 4));
    CHECK(rep.oracle.samples >= 100000);
    CHECK(rep.oracle.observed_max <= 0.25 + 1e-9);
    CHECK(rep.all_checks_passed());
    CHECK_THROWS_AS(verify_h2({16, 24}), std::invalid_argument);
}

TEST_CASE("|a4| maximization") {
    CHECK(a4_modulus(1.0, ComplexD(0.0), ComplexD(0.0)) == doctest::Approx(7.0 / 24.0).epsilon(1e-15));
    CHECK(a4_modulus(0.0, ComplexD(0.0), ComplexD(0.0)) == 0.0);
    const auto r = max_a4(64, 40);
    CHECK(std::abs(r.value - 0.338667) <= 1e-5);
    CHECK(std::abs(r.c1 - 0.508001) <= 1e-3);
    CHECK(std::abs(r.family_t - 0.508001) <= 1e-3);
    CHECK(std::abs(a4_family(0.508001) - 0.338667) <= 1e-6);
    CHECK(r.value >= r.family_value - 1e-12);
    CHECK_THROWS_AS(max_a4(32, 10), std::invalid_argument);
}

TEST_CASE("report JSON schema") {
    VerificationReport rep;
    rep.claim = "claim";
    rep.bound = Rational(2, 6);
    rep.status = Status::oracle_violation;
    rep.artifacts = {"a.json"};
    rep.oracle.observed_max = 1.0 / 3.0;
    rep.add("check", true, "detail");
    const auto j = report_to_json(rep);
    CHECK(j.at("claim") == "claim");
    CHECK(j.at("bound") == "1/3");
    CHECK(j.at("status") == "oracle_violation");
    CHECK(j.at("artifacts").size() == 1);
    CHECK(j.at("oracle").at("observed_max") == "0.333333333333");
    CHECK(format_double(1024.0) == "1024");
    CHECK(render(rep).find("[ok] check: detail") != std::string::npos);
}
