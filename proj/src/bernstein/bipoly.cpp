#include "hankel/bernstein/bipoly.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hankel::bernstein {

BiPoly BiPoly::constant(const Rational& c) {
    BiPoly f;
    f.set(0, 0, c);
    return f;
}

BiPoly BiPoly::var_p() {
    BiPoly f(1, 0);
    f.set(1, 0, Rational(1));
    return f;
}

BiPoly BiPoly::var_x() {
    BiPoly f(0, 1);
    f.set(0, 1, Rational(1));
    return f;
}

Rational BiPoly::coeff(std::size_t i, std::size_t j) const {
    if (i > deg_p() || j > deg_x()) return Rational(0);
    return coeffs_(i, j);
}

void BiPoly::set(std::size_t i, std::size_t j, const Rational& c) {
    if (i > deg_p() || j > deg_x()) {
        *this = with_bidegree(std::max(i, deg_p()), std::max(j, deg_x()));
    }
    coeffs_(i, j) = c;
}

void BiPoly::add_to(std::size_t i, std::size_t j, const Rational& c) { set(i, j, coeff(i, j) + c); }

Rational BiPoly::evaluate(const Rational& p, const Rational& x) const {
    // Horner in p over Horner-in-x rows.
    Rational acc;
    for (std::size_t i = deg_p() + 1; i-- > 0;) {
        Rational row;
        for (std::size_t j = deg_x() + 1; j-- > 0;) row = row * x + coeffs_(i, j);
        acc = acc * p + row;
    }
    return acc;
}

double BiPoly::evaluate(double p, double x) const {
    double acc = 0.0;
    for (std::size_t i = deg_p() + 1; i-- > 0;) {
        double row = 0.0;
        for (std::size_t j = deg_x() + 1; j-- > 0;) row = row * x + coeffs_(i, j).to_double();
        acc = acc * p + row;
    }
    return acc;
}

BiPoly BiPoly::trimmed() const {
    std::size_t m = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i <= deg_p(); ++i) {
        for (std::size_t j = 0; j <= deg_x(); ++j) {
            if (!coeffs_(i, j).is_zero()) {
                m = std::max(m, i);
                n = std::max(n, j);
            }
        }
    }
    return with_bidegree(m, n);
}

BiPoly BiPoly::with_bidegree(std::size_t m, std::size_t n) const {
    BiPoly out(m, n);
    for (std::size_t i = 0; i <= deg_p(); ++i) {
        for (std::size_t j = 0; j <= deg_x(); ++j) {
            if (i <= m && j <= n) {
                out.coeffs_(i, j) = coeffs_(i, j);
            } else if (!coeffs_(i, j).is_zero()) {
                throw std::invalid_argument("BiPoly::with_bidegree: shape (" + std::to_string(m) + "," +
                                            std::to_string(n) + ") drops a nonzero coefficient");
            }
        }
    }
    return out;
}

BiPoly BiPoly::substitute_affine(const Rational& p0, const Rational& sp, const Rational& x0,
                                 const Rational& sx) const {
    const std::size_t m = deg_p();
    const std::size_t n = deg_x();
    // (p0 + sp u)^k = sum_a C(k,a) p0^{k-a} sp^a u^a, likewise for x.
    auto expansion = [](const Rational& base, const Rational& scale, std::size_t deg) {
        RationalMatrix e(deg + 1, deg + 1);  // e(k, a): coefficient of u^a in (base + scale u)^k
        for (std::size_t k = 0; k <= deg; ++k) {
            for (std::size_t a = 0; a <= k; ++a) {
                e(k, a) = binomial(static_cast<unsigned>(k), static_cast<unsigned>(a)) *
                          pow(base, static_cast<unsigned>(k - a)) * pow(scale, static_cast<unsigned>(a));
            }
        }
        return e;
    };
    const RationalMatrix ep = expansion(p0, sp, m);
    const RationalMatrix ex = expansion(x0, sx, n);

    BiPoly out(m, n);
    for (std::size_t k = 0; k <= m; ++k) {
        for (std::size_t l = 0; l <= n; ++l) {
            const Rational& c = coeffs_(k, l);
            if (c.is_zero()) continue;
            for (std::size_t a = 0; a <= k; ++a) {
                if (ep(k, a).is_zero()) continue;
                const Rational ca = c * ep(k, a);
                for (std::size_t b = 0; b <= l; ++b) {
                    if (!ex(l, b).is_zero()) out.coeffs_(a, b) += ca * ex(l, b);
                }
            }
        }
    }
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.deg_p() > deg_p() || o.deg_x() > deg_x()) {
        *this = with_bidegree(std::max(deg_p(), o.deg_p()), std::max(deg_x(), o.deg_x()));
    }
    for (std::size_t i = 0; i <= o.deg_p(); ++i) {
        for (std::size_t j = 0; j <= o.deg_x(); ++j) coeffs_(i, j) += o.coeffs_(i, j);
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly& BiPoly::operator*=(const Rational& s) {
    for (std::size_t i = 0; i <= deg_p(); ++i) {
        for (std::size_t j = 0; j <= deg_x(); ++j) coeffs_(i, j) *= s;
    }
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out(a.deg_p() + b.deg_p(), a.deg_x() + b.deg_x());
    for (std::size_t i = 0; i <= a.deg_p(); ++i) {
        for (std::size_t j = 0; j <= a.deg_x(); ++j) {
            const Rational& ca = a.coeffs_(i, j);
            if (ca.is_zero()) continue;
            for (std::size_t k = 0; k <= b.deg_p(); ++k) {
                for (std::size_t l = 0; l <= b.deg_x(); ++l) {
                    if (!b.coeffs_(k, l).is_zero()) out.coeffs_(i + k, j + l) += ca * b.coeffs_(k, l);
                }
            }
        }
    }
    return out;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    const std::size_t m = std::max(a.deg_p(), b.deg_p());
    const std::size_t n = std::max(a.deg_x(), b.deg_x());
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            if (a.coeff(i, j) != b.coeff(i, j)) return false;
        }
    }
    return true;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
    BiPoly out = BiPoly::constant(Rational(1));
    for (unsigned k = 0; k < exponent; ++k) out = out * base;
    return out;
}

BiPoly parse_poly_text(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t m = 0;
    std::size_t n = 0;
    BiPoly f;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("poly text line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "bidegree") {
            long mm = -1;
            long nn = -1;
            if (have_header) fail("duplicate bidegree header");
            if (!(ls >> mm >> nn) || mm < 0 || nn < 0) fail("expected 'bidegree m n'");
            m = static_cast<std::size_t>(mm);
            n = static_cast<std::size_t>(nn);
            f = BiPoly(m, n);
            have_header = true;
        } else {
            if (!have_header) fail("monomial before 'bidegree' header");
            long i = -1;
            long j = -1;
            std::string coeff;
            try {
                i = std::stol(first);
            } catch (const std::exception&) {
                fail("bad exponent '" + first + "'");
            }
            if (!(ls >> j >> coeff)) fail("expected '<i> <j> <num>/<den>'");
            if (i < 0 || j < 0 || static_cast<std::size_t>(i) > m || static_cast<std::size_t>(j) > n) {
                fail("exponent outside declared bidegree");
            }
            std::string extra;
            if (ls >> extra) fail("trailing text '" + extra + "'");
            try {
                f.add_to(static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rational::parse(coeff));
            } catch (const std::exception& e) {
                fail(e.what());
            }
        }
    }
    if (!have_header) {
        throw std::invalid_argument("poly text: missing 'bidegree m n' header");
    }
    return f;
}

BiPoly parse_poly_text(const std::string& text) {
    std::istringstream in(text);
    return parse_poly_text(in);
}

BiPoly load_poly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open polynomial file '" + path + "'");
    }
    return parse_poly_text(in);
}

std::string to_poly_text(const BiPoly& f) {
    std::ostringstream os;
    os << "bidegree " << f.deg_p() << " " << f.deg_x() << "\n";
    for (std::size_t i = 0; i <= f.deg_p(); ++i) {
        for (std::size_t j = 0; j <= f.deg_x(); ++j) {
            const Rational c = f.coeff(i, j);
            if (!c.is_zero()) os << i << " " << j << " " << c.to_fraction_string() << "\n";
        }
    }
    return os.str();
}

}  // namespace hankel::bernstein
