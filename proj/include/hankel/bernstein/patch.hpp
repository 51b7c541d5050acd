#pragma once

#include <array>
#include <string>

#include "hankel/bernstein/bipoly.hpp"

namespace hankel::bernstein {

/// Closed box [p_lo, p_hi] x [x_lo, x_hi].
struct Box {
    Rational p_lo, p_hi, x_lo, x_hi;

    Box(Rational plo, Rational phi, Rational xlo, Rational xhi);
    static Box unit() { return Box(Rational(0), Rational(1), Rational(0), Rational(1)); }

    Rational p_mid() const { return (p_lo + p_hi) / Rational(2); }
    Rational x_mid() const { return (x_lo + x_hi) / Rational(2); }
    Rational p_width() const { return p_hi - p_lo; }
    Rational x_width() const { return x_hi - x_lo; }
    bool contains(const Rational& p, const Rational& x) const {
        return p_lo <= p && p <= p_hi && x_lo <= x && x <= x_hi;
    }
    bool has_vertex(const Rational& p, const Rational& x) const {
        return (p == p_lo || p == p_hi) && (x == x_lo || x == x_hi);
    }
    /// Midpoint quadrisection in the fixed order (lo,lo), (lo,hi), (hi,lo), (hi,hi),
    /// first index p and second index x.
    std::array<Box, 4> quadrants() const;

    std::string to_string() const;
    friend bool operator==(const Box&, const Box&) = default;
};

/// A box together with the Bernstein coefficients of a polynomial of
/// bidegree (m, n) on it, after the affine map of the box onto [0,1]^2.
struct BernsteinPatch {
    Box box;
    RationalMatrix bcoeffs;  // (m+1) x (n+1)

    std::size_t deg_p() const { return bcoeffs.rows() - 1; }
    std::size_t deg_x() const { return bcoeffs.cols() - 1; }
};

struct Enclosure {
    Rational min;
    Rational max;
};

/// Exact change of variables to the unit square followed by the power to
/// Bernstein change of basis, at the polynomial's own bidegree or at a
/// larger one (degree elevation).
BernsteinPatch to_bernstein(const BiPoly& f, const Box& box);
BernsteinPatch to_bernstein(const BiPoly& f, const Box& box, std::size_t m, std::size_t n);

/// min/max over the coefficient matrix; these bound f on the box.
Enclosure enclosure(const BernsteinPatch& patch);

/// Children by de Casteljau splitting at u = 1/2 then v = 1/2, in the
/// order of Box::quadrants().
std::array<BernsteinPatch, 4> subdivide(const BernsteinPatch& patch);

/// Value of the represented polynomial at a point of the box.
Rational evaluate(const BernsteinPatch& patch, const Rational& p, const Rational& x);

/// Largest Bernstein coefficient over the 4^depth patches of a uniform
/// subdivision of the box. An upper bound for f on the box.
Rational bound_above(const BiPoly& f, const Box& box, int depth);

}  // namespace hankel::bernstein
