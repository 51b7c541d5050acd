#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel::bernstein {

/// Dense (rows x cols) matrix of rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<Rational>& data() const { return data_; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Bivariate polynomial sum a_ij p^i x^j in the power basis. The bidegree
/// (m, n) is the shape of the coefficient matrix, not necessarily the
/// exact degree; `trimmed()` gives the tight shape.
class BiPoly {
public:
    BiPoly() : BiPoly(0, 0) {}
    BiPoly(std::size_t deg_p, std::size_t deg_x) : coeffs_(deg_p + 1, deg_x + 1) {}

    static BiPoly constant(const Rational& c);
    static BiPoly var_p();
    static BiPoly var_x();

    std::size_t deg_p() const { return coeffs_.rows() - 1; }
    std::size_t deg_x() const { return coeffs_.cols() - 1; }

    /// Zero outside the stored shape.
    Rational coeff(std::size_t i, std::size_t j) const;
    /// Grows the shape when (i, j) lies outside it.
    void set(std::size_t i, std::size_t j, const Rational& c);
    void add_to(std::size_t i, std::size_t j, const Rational& c);
    const RationalMatrix& matrix() const { return coeffs_; }

    Rational evaluate(const Rational& p, const Rational& x) const;
    double evaluate(double p, double x) const;

    BiPoly trimmed() const;
    /// Same polynomial stored with shape (m, n); throws if a nonzero
    /// coefficient would be dropped.
    BiPoly with_bidegree(std::size_t m, std::size_t n) const;
    /// G(u, v) = F(p0 + sp*u, x0 + sx*v), same bidegree.
    BiPoly substitute_affine(const Rational& p0, const Rational& sp, const Rational& x0, const Rational& sx) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& s);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(BiPoly a) { return a *= Rational(-1); }

    /// Equal as polynomials (shapes may differ).
    friend bool operator==(const BiPoly& a, const BiPoly& b);

private:
    RationalMatrix coeffs_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

/// Text format: a `bidegree m n` header, then one `<i> <j> <num>/<den>`
/// monomial per line; `#` starts a comment. Repeated monomials add up.
BiPoly parse_poly_text(std::istream& in);
BiPoly parse_poly_text(const std::string& text);
BiPoly load_poly_file(const std::string& path);
std::string to_poly_text(const BiPoly& f);

}  // namespace hankel::bernstein
