#include <doctest.h>

#include <random>

#include "hankel/bernstein/certificate.hpp"
#include "hankel/pipelines/h3_reduction.hpp"

using namespace hankel;
using namespace hankel::bernstein;

namespace {

Rational rq(std::mt19937_64& rng, long span, long max_den) {
    std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
    return Rational(num(rng), den(rng));
}

BiPoly random_poly(std::mt19937_64& rng, std::size_t m, std::size_t n) {
    BiPoly f(m, n);
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) f.set(i, j, rq(rng, 9, 5));
    }
    return f;
}

Box random_box(std::mt19937_64& rng) {
    Rational a = rq(rng, 4, 4), b = rq(rng, 4, 4), c = rq(rng, 4, 4), d = rq(rng, 4, 4);
    if (a == b) b = a + Rational(1, 3);
    if (c == d) d = c + Rational(1, 5);
    return Box(min(a, b), max(a, b), min(c, d), max(c, d));
}

Rational lerp(const Rational& lo, const Rational& hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> k(0, 64);
    return lo + (hi - lo) * Rational(k(rng), 64);
}

const BiPoly& F() {
    static const BiPoly f = pipelines::build_h3_reduction().F;
    return f;
}

}  // namespace

TEST_CASE("BiPoly arithmetic and evaluation") {
    const BiPoly p = BiPoly::var_p(), x = BiPoly::var_x();
    const BiPoly f = p * p + Rational(3) * p * x - BiPoly::constant(Rational(1, 2));
    CHECK(f.evaluate(Rational(1), Rational(2)) == Rational(13, 2));
    CHECK(f.evaluate(1.0, 2.0) == doctest::Approx(6.5));
    CHECK(f.deg_p() == 2);
    CHECK(pow(p + x, 3).coeff(1, 2) == Rational(3));
    CHECK((f - f) == BiPoly());
    CHECK(f.with_bidegree(4, 4) == f);
    CHECK_THROWS_AS(f.with_bidegree(1, 1), std::invalid_argument);
    const BiPoly g = f.substitute_affine(Rational(1), Rational(2), Rational(0), Rational(-1));
    CHECK(g.evaluate(Rational(1, 2), Rational(3)) == f.evaluate(Rational(2), Rational(-3)));
}

TEST_CASE("polynomial text format") {
    const BiPoly f = parse_poly_text("# sample\nbidegree 2 1\n2 0 1/2\n0 1 -3\n0 1 1  # repeated\n");
    CHECK(f.coeff(2, 0) == Rational(1, 2));
    CHECK(f.coeff(0, 1) == Rational(-2));
    CHECK(parse_poly_text(to_poly_text(F())) == F());
    CHECK_THROWS_AS(parse_poly_text("2 0 1\n"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_poly_text("bidegree 1 1\n0 0 x\n"), doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_text("bidegree 1 1\n3 0 1\n"), std::invalid_argument);
    CHECK_THROWS(load_poly_file("/nonexistent/f.poly"));
}

TEST_CASE("Bernstein conversion of small polynomials") {
    const BiPoly px = BiPoly::var_p() * BiPoly::var_x();
    const auto patch = to_bernstein(px, Box::unit());
    CHECK(patch.bcoeffs(0, 0) == Rational(0));
    CHECK(patch.bcoeffs(1, 1) == Rational(1));
    const auto elevated = to_bernstein(px, Box::unit(), 2, 2);
    CHECK(elevated.bcoeffs(1, 1) == Rational(1, 4));
    CHECK(elevated.bcoeffs(2, 2) == Rational(1));
    CHECK(evaluate(elevated, Rational(1, 3), Rational(1, 2)) == Rational(1, 6));
    CHECK_THROWS_AS(evaluate(elevated, Rational(2), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(Box(Rational(1), Rational(1), Rational(0), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(bound_above(px, Box::unit(), -1), std::invalid_argument);
}

TEST_CASE("quadrant order") {
    const auto q = Box::unit().quadrants();
    CHECK(q[0] == Box(Rational(0), Rational(1, 2), Rational(0), Rational(1, 2)));
    CHECK(q[1] == Box(Rational(0), Rational(1, 2), Rational(1, 2), Rational(1)));
    CHECK(q[2] == Box(Rational(1, 2), Rational(1), Rational(0), Rational(1, 2)));
    CHECK(q[3] == Box(Rational(1, 2), Rational(1), Rational(1, 2), Rational(1)));
    CHECK(q[1].to_string() == "[0,1/2]x[1/2,1]");
}

TEST_CASE("property: enclosure bounds the polynomial") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_poly(rng, 3, 2);
        const Box box = random_box(rng);
        const auto patch = to_bernstein(f, box);
        const auto e = enclosure(patch);
        for (int k = 0; k < 10; ++k) {
            const Rational p = lerp(box.p_lo, box.p_hi, rng), x = lerp(box.x_lo, box.x_hi, rng);
            const Rational v = f.evaluate(p, x);
            REQUIRE(e.min <= v);
            REQUIRE(v <= e.max);
            REQUIRE(evaluate(patch, p, x) == v);
        }
        // Corner coefficients interpolate.
        REQUIRE(patch.bcoeffs(0, 0) == f.evaluate(box.p_lo, box.x_lo));
        REQUIRE(patch.bcoeffs(3, 2) == f.evaluate(box.p_hi, box.x_hi));
    }
}

TEST_CASE("property: subdivision equals direct conversion") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_poly(rng, 4, 3);
        const Box box = random_box(rng);
        const auto kids = subdivide(to_bernstein(f, box));
        const auto quads = box.quadrants();
        for (std::size_t k = 0; k < 4; ++k) {
            REQUIRE(kids[k].box == quads[k]);
            REQUIRE(kids[k].bcoeffs == to_bernstein(f, quads[k]).bcoeffs);
        }
    }
}

TEST_CASE("property: children enclosures are nested in the parent") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_poly(rng, 3, 3);
        const auto parent = to_bernstein(f, random_box(rng));
        const auto pe = enclosure(parent);
        for (const auto& kid : subdivide(parent)) {
            const auto ke = enclosure(kid);
            REQUIRE(ke.min >= pe.min);
            REQUIRE(ke.max <= pe.max);
        }
    }
}

TEST_CASE("property: bound_above decreases with depth and stays above") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_poly(rng, 3, 2);
        const Box box = random_box(rng);
        const Rational b0 = bound_above(f, box, 0), b1 = bound_above(f, box, 1), b2 = bound_above(f, box, 2);
        REQUIRE(b1 <= b0);
        REQUIRE(b2 <= b1);
        for (int k = 0; k < 5; ++k) REQUIRE(f.evaluate(lerp(box.p_lo, box.p_hi, rng), lerp(box.x_lo, box.x_hi, rng)) <= b2);
    }
}

TEST_CASE("corner split of F at the origin") {
    const Box box(Rational(0), Rational(1, 8), Rational(0), Rational(1, 8));
    const auto split = make_corner_split(F(), box, CornerPoint{Rational(0), Rational(0)});
    CHECK(split.quad_pp == Rational(2048));
    CHECK(split.quad_px == Rational(-1088));
    CHECK(split.quad_xx == Rational(896));
    CHECK(split.tail.size() == 29);
    CHECK(split.low_order.empty());
    const auto est = corner_estimate(split);
    CHECK(est.success);
    CHECK(est.lambda == Rational(352));
    CHECK(est.tail_sum == Rational(42177473, 131072));
    CHECK(est.margin == Rational(3959871, 131072));

    const auto hand = pipelines::hand_corner_split();
    BiPoly tail(6, 4);
    for (const auto& m : split.tail) tail.set(m.i, m.j, m.coeff);
    CHECK(tail == hand.R);

    for (const auto& [den, num] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {4, 1}}) {
        const Box big(Rational(0), Rational(num, den), Rational(0), Rational(num, den));
        CHECK_FALSE(corner_estimate(make_corner_split(F(), big, CornerPoint{Rational(0), Rational(0)})).success);
    }
    CHECK_THROWS_AS(make_corner_split(F(), box, CornerPoint{Rational(1, 16), Rational(0)}), std::invalid_argument);
}

TEST_CASE("corner estimate refuses linear terms") {
    const BiPoly f = BiPoly::var_p() + BiPoly::var_p() * BiPoly::var_p();
    const auto est = corner_estimate(make_corner_split(f, Rational(1, 4)));
    CHECK_FALSE(est.success);
    CHECK_FALSE(est.reason.empty());
}

TEST_CASE("property: successful corner estimates are sound") {
    std::mt19937_64 rng(35);
    int successes = 0;
    for (int trial = 0; trial < 400; ++trial) {
        BiPoly f = random_poly(rng, 3, 3);
        f.set(0, 0, Rational(0));
        f.set(1, 0, Rational(0));
        f.set(0, 1, Rational(0));
        f.set(2, 0, abs(f.coeff(2, 0)) + Rational(4));
        f.set(0, 2, abs(f.coeff(0, 2)) + Rational(4));
        const long corner_p = static_cast<long>(rng() % 2), corner_x = static_cast<long>(rng() % 2);
        const Rational w(1, 1 + static_cast<long>(rng() % 8));
        const Box box(Rational(corner_p) - (corner_p ? w : Rational(0)), Rational(corner_p) + (corner_p ? Rational(0) : w),
                      Rational(corner_x) - (corner_x ? w : Rational(0)), Rational(corner_x) + (corner_x ? Rational(0) : w));
        // Shift so the zero sits at the chosen vertex.
        const BiPoly g = f.substitute_affine(-Rational(corner_p), Rational(1), -Rational(corner_x), Rational(1));
        const CornerPoint c{Rational(corner_p), Rational(corner_x)};
        const auto est = corner_estimate(make_corner_split(g, box, c));
        if (!est.success) continue;
        ++successes;
        for (int k = 0; k < 20; ++k) {
            const Rational p = lerp(box.p_lo, box.p_hi, rng), x = lerp(box.x_lo, box.x_hi, rng);
            const Rational s = p - c.p, t = x - c.x;
            REQUIRE(g.evaluate(p, x) >= est.margin * (s * s + t * t));
        }
    }
    CHECK(successes >= 200);
}

TEST_CASE("certificate for F with the corner rule") {
    CertifyOptions opt;
    opt.max_depth = 3;
    opt.corner = CornerPoint{Rational(0), Rational(0)};
    const auto cert = certify_positive(F(), Box::unit(), opt);
    CHECK(cert.succeeded());
    CHECK(cert.leaves().size() == 10);
    CHECK(cert.count(NodeStatus::coeff_positive) == 9);
    CHECK(cert.count(NodeStatus::corner_certified) == 1);
    const auto val = validate_certificate(cert);
    CHECK(val.valid);
    CHECK(val.proves_nonnegative);

    opt.parallel = true;
    const auto par = certify_positive(F(), Box::unit(), opt);
    CHECK(certificate_to_json(par) == certificate_to_json(cert));

    SUBCASE("JSON round trip") {
        const auto doc = certificate_to_json(cert);
        const auto back = certificate_from_json(nlohmann::json::parse(doc.dump()));
        CHECK(certificate_to_json(back) == doc);
        CHECK(validate_certificate(back).proves_nonnegative);
        CHECK(doc.at("children").at(0).at("status") == "subdivided");
        CHECK(doc.at("summary").at("leaves") == 10);
    }
    SUBCASE("tampering is detected") {
        auto bad = cert;
        bad.root.children[3].min_bcoeff = Rational(1);
        CHECK_FALSE(validate_certificate(bad).valid);
        auto moved = cert;
        moved.root.children[0].children[0].children[0].corner->margin = Rational(400);
        CHECK_FALSE(validate_certificate(moved).valid);
        auto swapped = cert;
        std::swap(swapped.root.children[1], swapped.root.children[2]);
        CHECK_FALSE(validate_certificate(swapped).valid);
    }
}

TEST_CASE("certification fails honestly without the corner rule") {
    CertifyOptions opt;
    opt.max_depth = 3;
    const auto cert = certify_positive(F(), Box::unit(), opt);
    CHECK_FALSE(cert.succeeded());
    CHECK(cert.count(NodeStatus::failed) == 1);
    const CertNode* failed = nullptr;
    for (const auto* leaf : cert.leaves()) {
        if (leaf->status == NodeStatus::failed) failed = leaf;
    }
    REQUIRE(failed != nullptr);
    REQUIRE(failed->witness.has_value());
    CHECK(failed->witness->value == Rational(0));
    const auto val = validate_certificate(cert);
    CHECK(val.valid);
    CHECK_FALSE(val.proves_nonnegative);
}

TEST_CASE("a negative polynomial gets a negative witness") {
    const BiPoly f = BiPoly::var_p() - BiPoly::constant(Rational(1, 2));
    CertifyOptions opt;
    opt.max_depth = 2;
    const auto cert = certify_positive(f, Box::unit(), opt);
    CHECK_FALSE(cert.succeeded());
    bool negative = false;
    for (const auto* leaf : cert.leaves()) {
        if (leaf->witness && leaf->witness->value < Rational(0)) negative = true;
    }
    CHECK(negative);
    CHECK_THROWS_AS(certify_positive(f, Box::unit(), CertifyOptions{-1, std::nullopt, false}), std::invalid_argument);
}

TEST_CASE("G2 Bernstein matrix") {
    const auto patch = to_bernstein(pipelines::build_h3_reduction().G2, Box::unit());
    CHECK(patch.bcoeffs(0, 0) == Rational(0));
    for (std::size_t j = 0; j <= 4; ++j) CHECK(patch.bcoeffs(6, j) == Rational(61));
    CHECK(enclosure(patch).max == Rational(910));
    CHECK(bound_above(pipelines::build_h3_reduction().G2, Box::unit(), 0) == Rational(910));
}
