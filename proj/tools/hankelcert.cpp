// hankelcert: command-line front end for the expansions, certificates and
// scans. Exit codes: 0 verified, 2 certification failure, 3 oracle
// violation, 64 usage error.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hankel/bernstein/certificate.hpp"
#include "hankel/gft/janowski.hpp"
#include "hankel/gft/ma_minda.hpp"
#include "hankel/pipelines/verify.hpp"
#include "hankel/radius.hpp"
#include "hankel/series.hpp"

namespace {

using namespace hankel;

constexpr int kExitOk = 0;
constexpr int kExitCertification = 2;
constexpr int kExitOracle = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(pipelines::Status s) {
    switch (s) {
        case pipelines::Status::verified: return kExitOk;
        case pipelines::Status::certification_failed: return kExitCertification;
        case pipelines::Status::oracle_violation: return kExitOracle;
    }
    return kExitCertification;
}

void write_json(const std::string& path, const nlohmann::json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc.dump(2) << '\n';
}

// "z", "z^k", or a file of "k num/den" lines.
series::TruncSeries parse_schwarz(const std::string& arg, std::size_t order) {
    static const std::regex mono(R"(\s*z\s*(\^\s*(\d+))?\s*)");
    std::smatch m;
    if (std::regex_match(arg, m, mono)) {
        const std::size_t k = m[2].matched ? std::stoul(m[2].str()) : 1;
        if (k == 0) throw UsageError("Schwarz function needs w(0) = 0");
        return k <= order ? series::TruncSeries::monomial(order, k) : series::TruncSeries(order);
    }
    std::ifstream in(arg);
    if (!in) throw UsageError("'" + arg + "' is neither z^k nor a readable file");
    series::TruncSeries w(order);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::size_t k;
        std::string c;
        if (!(ls >> k)) continue;
        if (!(ls >> c)) throw UsageError(arg + ":" + std::to_string(lineno) + ": expected 'k num/den'");
        if (k == 0) throw UsageError(arg + ":" + std::to_string(lineno) + ": constant term must vanish");
        if (k <= order) w[k] += Rational::parse(c);
    }
    return w;
}

int cmd_expand(const std::string& schwarz, std::size_t order) {
    if (order < 2) throw UsageError("--order must be at least 2");
    const auto f = series::member_from_schwarz(parse_schwarz(schwarz, order), order);
    for (std::size_t k = 2; k <= order; ++k) std::cout << (k > 2 ? " " : "") << 'a' << k << '=' << f[k].to_string();
    std::cout << '\n';
    return kExitOk;
}

int cmd_verify_h2(int grid, int phases, const std::string& json_path) {
    auto rep = pipelines::verify_h2({grid, phases});
    if (!json_path.empty()) rep.artifacts.push_back(json_path);
    std::cout << pipelines::render(rep);
    if (!json_path.empty()) write_json(json_path, pipelines::report_to_json(rep));
    return exit_code(rep.status);
}

int cmd_certify_h3(int depth, long samples, const std::string& out, const std::string& json_path) {
    pipelines::H3Options opt;
    opt.max_depth = depth;
    opt.oracle_samples = samples;
    auto res = pipelines::verify_h3(opt);
    if (!out.empty()) {
        write_json(out, bernstein::certificate_to_json(res.certificate));
        res.report.artifacts.push_back(out);
    }
    if (!json_path.empty()) res.report.artifacts.push_back(json_path);
    std::cout << pipelines::render(res.report);
    std::cout << "leaves:\n";
    for (const auto* leaf : res.certificate.leaves()) {
        std::cout << "  " << leaf->box.to_string() << "  " << bernstein::to_string(leaf->status) << "  min "
                  << leaf->min_bcoeff.to_string();
        if (leaf->corner) std::cout << "  margin " << leaf->corner->margin.to_string();
        std::cout << '\n';
    }
    if (!json_path.empty()) write_json(json_path, pipelines::report_to_json(res.report));
    return exit_code(res.report.status);
}

int cmd_bernstein(const std::string& poly_path, const std::vector<std::string>& box_s, bool certify, bool bound,
                  const std::vector<std::string>& corner_s, int max_depth, int depth, const std::string& out) {
    if (certify && bound) throw UsageError("--certify and --bound-above are exclusive");
    const auto f = bernstein::load_poly_file(poly_path);
    const bernstein::Box box(Rational::parse(box_s[0]), Rational::parse(box_s[1]), Rational::parse(box_s[2]),
                             Rational::parse(box_s[3]));
    if (bound) {
        std::cout << "upper bound on " << box.to_string() << ": "
                  << bernstein::bound_above(f, box, depth).to_string() << '\n';
        return kExitOk;
    }
    if (certify) {
        bernstein::CertifyOptions opt;
        opt.max_depth = max_depth;
        if (!corner_s.empty()) opt.corner = bernstein::CornerPoint{Rational::parse(corner_s[0]), Rational::parse(corner_s[1])};
        const auto cert = bernstein::certify_positive(f, box, opt);
        const auto val = bernstein::validate_certificate(cert);
        for (const auto* leaf : cert.leaves()) {
            std::cout << leaf->box.to_string() << "  " << bernstein::to_string(leaf->status) << "  min "
                      << leaf->min_bcoeff.to_string();
            if (leaf->corner) std::cout << "  margin " << leaf->corner->margin.to_string();
            if (leaf->witness) std::cout << "  witness value " << leaf->witness->value.to_string();
            std::cout << '\n';
        }
        std::cout << "revalidation: " << (val.valid ? "ok" : "FAILED") << '\n';
        for (const auto& e : val.errors) std::cout << "  " << e << '\n';
        if (!out.empty()) write_json(out, bernstein::certificate_to_json(cert));
        std::cout << (val.proves_nonnegative ? "certified" : "not certified") << '\n';
        return val.proves_nonnegative ? kExitOk : kExitCertification;
    }
    const auto patch = bernstein::to_bernstein(f, box);
    std::cout << "Bernstein coefficients on " << box.to_string() << ":\n";
    for (std::size_t i = 0; i <= patch.deg_p(); ++i) {
        for (std::size_t j = 0; j <= patch.deg_x(); ++j) std::cout << (j ? " " : "  ") << patch.bcoeffs(i, j).to_string();
        std::cout << '\n';
    }
    const auto e = bernstein::enclosure(patch);
    std::cout << "min " << e.min.to_string() << "  max " << e.max.to_string() << '\n';
    return kExitOk;
}

int cmd_radius(const std::string& gamma, const std::string& tol) {
    radius::RadiusProblem prob{Rational::parse(gamma)};
    if (!tol.empty()) prob.tolerance = Rational::parse(tol);
    const auto sol = radius::solve_radius(prob);
    std::cout << "gamma    " << prob.order_gamma.to_string() << '\n'
              << "root     " << pipelines::format_double(sol.root) << '\n'
              << "bracket  [" << pipelines::format_double(sol.lo.to_double()) << ", "
              << pipelines::format_double(sol.hi.to_double()) << "]\n"
              << "lo       " << sol.lo.to_fraction_string() << '\n'
              << "hi       " << sol.hi.to_fraction_string() << '\n'
              << "width    " << pipelines::format_double((sol.hi - sol.lo).to_double()) << '\n'
              << "residual " << pipelines::format_double(sol.residual.to_double()) << '\n'
              << "steps    " << sol.iterations << '\n';
    return kExitOk;
}

int cmd_max_a4(int grid, int refine) {
    const auto r = pipelines::max_a4(grid, refine);
    std::cout << "max |a4|     " << pipelines::format_double(r.value) << '\n'
              << "c1           " << pipelines::format_double(r.c1) << '\n'
              << "gamma        " << pipelines::format_double(r.lz_gamma.re) << " + "
              << pipelines::format_double(r.lz_gamma.im) << "i\n"
              << "eta          " << pipelines::format_double(r.eta.re) << " + " << pipelines::format_double(r.eta.im)
              << "i\n"
              << "evaluations  " << r.evaluations << '\n'
              << "family t*    " << pipelines::format_double(r.family_t) << '\n'
              << "family max   " << pipelines::format_double(r.family_value) << '\n';
    return kExitOk;
}

int cmd_janowski(const std::string& a, const std::string& b) {
    const auto rep = gft::janowski_check({Rational::parse(a), Rational::parse(b)});
    std::cout << "center   " << rep.center.to_string() << '\n'
              << "radius   " << rep.radius.to_string() << '\n'
              << "interval [" << rep.lower.to_string() << ", " << rep.upper.to_string() << "]\n"
              << "|a-5/4|+r " << rep.disk_lhs.to_string() << '\n'
              << "inside B(5/4,1): " << (rep.disk_test ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_scan_phi(int grid, int boundary) {
    const auto r = gft::ma_minda_scan(grid, boundary);
    auto line = [](const char* name, double v, bool ok) {
        std::cout << name << pipelines::format_double(v) << (ok ? "" : "  FAILED") << '\n';
    };
    std::cout << "grid " << r.radii << " radii x " << r.angles << " angles, " << r.boundary_points
              << " boundary points\n";
    line("min |phi|          ", r.min_abs_phi, r.modulus_ok);
    line("max |phi|          ", r.max_abs_phi, r.modulus_ok);
    line("min Re phi         ", r.min_re_phi, r.real_part_ok);
    line("max |z/(8+3z)|     ", r.max_starlike_ratio, r.starlike_ok);
    line("min |phi-5/4|^2    ", r.boundary_min, r.boundary_ok);
    line("  at t = 0         ", r.boundary_at_zero, r.boundary_ok);
    line("  at t = pi        ", r.boundary_at_pi, r.boundary_ok);
    return r.all_ok() ? kExitOk : kExitCertification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact expansions, Bernstein certificates and oracle scans for Hankel determinant bounds"};
    app.require_subcommand(1);

    std::string schwarz;
    std::size_t order = 4;
    auto* expand = app.add_subcommand("expand", "Coefficients a2..aN of the class member built from w");
    expand->add_option("--schwarz", schwarz, "z, z^k, or a file of 'k num/den' lines")->required();
    expand->add_option("--order", order, "Highest coefficient index N")->capture_default_str();

    int h2_grid = 32, phases = 24;
    std::string json_path;
    auto* h2 = app.add_subcommand("verify-h2", "Exact chain and oracle for |H2(2)| <= 1/4");
    h2->add_option("--grid", h2_grid, "p1 grid points (>= 32)")->capture_default_str();
    h2->add_option("--phases", phases, "Phases per radius in the disk grids")->capture_default_str();
    h2->add_option("--json", json_path, "Write the report as JSON");

    int h3_depth = 3;
    long samples = 10000;
    std::string cert_out;
    auto* h3 = app.add_subcommand("certify-h3", "Certificate and oracle for |H3(1)| <= 1/9");
    h3->add_option("--max-depth", h3_depth, "Subdivision depth limit (>= 3)")->capture_default_str();
    h3->add_option("--samples", samples, "Random oracle samples")->capture_default_str();
    h3->add_option("--out", cert_out, "Write the certificate as JSON");
    h3->add_option("--json", json_path, "Write the report as JSON");

    std::string poly_path;
    std::vector<std::string> box_s, corner_s;
    bool certify = false, bound = false;
    int bb_max_depth = 6, bb_depth = 0;
    auto* bb = app.add_subcommand("bernstein", "Bernstein coefficients, bounds and certificates for a polynomial file");
    bb->add_option("--poly", poly_path, "Polynomial text file")->required()->check(CLI::ExistingFile);
    bb->add_option("--box", box_s, "plo phi xlo xhi")->expected(4)->required();
    bb->add_flag("--certify", certify, "Prove positivity by branch and bound");
    bb->add_flag("--bound-above", bound, "Upper bound from a uniform subdivision");
    bb->add_option("--corner", corner_s, "Designated zero: p x")->expected(2);
    bb->add_option("--max-depth", bb_max_depth, "Branch-and-bound depth limit")->capture_default_str();
    bb->add_option("--depth", bb_depth, "Uniform subdivision depth for --bound-above")->capture_default_str();
    bb->add_option("--out", cert_out, "Write the certificate as JSON");

    std::string gamma = "0", tol;
    auto* rad = app.add_subcommand("radius", "Radius of convexity of order gamma");
    rad->add_option("--gamma", gamma, "Order in [0,1), e.g. 1/2")->capture_default_str();
    rad->add_option("--tol", tol, "Bracket width and residual tolerance, e.g. 1e-12");

    int a4_grid = 64, refine = 40;
    auto* a4 = app.add_subcommand("max-a4", "Numerical maximum of |a4|");
    a4->add_option("--grid", a4_grid, "c1 grid points (>= 64)")->capture_default_str();
    a4->add_option("--refine", refine, "Pattern-search rounds")->capture_default_str();

    std::string ja, jb;
    auto* jan = app.add_subcommand("janowski", "Is the image disk of (1+Az)/(1+Bz) inside B(5/4,1)?");
    jan->add_option("--A", ja, "A, e.g. 1/2")->required();
    jan->add_option("--B", jb, "B, e.g. -1/3")->required();

    int scan_grid = 200, boundary = 10000;
    auto* scan = app.add_subcommand("scan-phi", "Grid checks of phi(z) = (1 + z/2)^2");
    scan->add_option("--grid", scan_grid, "Radii in the polar grid (>= 8)")->capture_default_str();
    scan->add_option("--boundary-points", boundary, "Points on the unit circle (even)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*expand) return cmd_expand(schwarz, order);
        if (*h2) return cmd_verify_h2(h2_grid, phases, json_path);
        if (*h3) return cmd_certify_h3(h3_depth, samples, cert_out, json_path);
        if (*bb) return cmd_bernstein(poly_path, box_s, certify, bound, corner_s, bb_max_depth, bb_depth, cert_out);
        if (*rad) return cmd_radius(gamma, tol);
        if (*a4) return cmd_max_a4(a4_grid, refine);
        if (*jan) return cmd_janowski(ja, jb);
        if (*scan) return cmd_scan_phi(scan_grid, boundary);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCertification;
    }
    return kExitUsage;
}
