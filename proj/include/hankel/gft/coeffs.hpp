#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "hankel/complex.hpp"

namespace hankel::gft {

template <class T>
struct SchwarzCoeffs {
    Complex<T> c1, c2, c3, c4;
};

template <class T>
struct CaratheodoryCoeffs {
    Complex<T> p1, p2, p3, p4;
};

template <class T>
struct ClassCoeffs {
    Complex<T> a2, a3, a4, a5;
};

/// Unit-disk parameters of the Libera-Zlotkiewicz style parametrizations.
/// `lz_gamma` is named apart from the convexity order used in `radius`.
template <class T>
struct ParamTriple {
    Complex<T> lz_gamma, eta, rho;
};

namespace detail {

template <class T>
Complex<T> k(long num, long den = 1) {
    if constexpr (std::is_same_v<T, double>) {
        return Complex<T>(static_cast<double>(num) / static_cast<double>(den));
    } else {
        return Complex<T>(T(num) / T(den));
    }
}

inline bool in_closed_disk(const ComplexQ& z) { return norm(z) <= Rational(1); }
// Grid points built from cos/sin can overshoot |z| = 1 by an ulp.
inline bool in_closed_disk(const ComplexD& z) { return norm(z) <= 1.0 + 1e-12; }

template <class T>
void require_unit_params(const ParamTriple<T>& t, const char* who) {
    if (!in_closed_disk(t.lz_gamma) || !in_closed_disk(t.eta) || !in_closed_disk(t.rho)) {
        throw std::invalid_argument(std::string(who) + ": parameters must lie in the closed unit disk");
    }
}

}  // namespace detail

template <class T>
ClassCoeffs<T> schwarz_to_coeffs(const SchwarzCoeffs<T>& c) {
    using detail::k;
    const auto c1_2 = c.c1 * c.c1;
    ClassCoeffs<T> a;
    a.a2 = c.c1;
    a.a3 = (k<T>(5) * c1_2 + k<T>(4) * c.c2) * k<T>(1, 8);
    a.a4 = (k<T>(7) * c1_2 * c.c1 + k<T>(16) * c.c1 * c.c2 + k<T>(8) * c.c3) * k<T>(1, 24);
    a.a5 = (k<T>(43) * c1_2 * c1_2 + k<T>(184) * c1_2 * c.c2 + k<T>(72) * c.c2 * c.c2 +
            k<T>(176) * c.c1 * c.c3 + k<T>(96) * c.c4) *
           k<T>(1, 384);
    return a;
}

/// Coefficients of p = (1 + w)/(1 - w) from those of w.
template <class T>
CaratheodoryCoeffs<T> caratheodory_from_schwarz(const SchwarzCoeffs<T>& w) {
    using detail::k;
    const auto w1_2 = w.c1 * w.c1;
    CaratheodoryCoeffs<T> p;
    p.p1 = k<T>(2) * w.c1;
    p.p2 = k<T>(2) * (w.c2 + w1_2);
    p.p3 = k<T>(2) * (w.c3 + k<T>(2) * w.c1 * w.c2 + w1_2 * w.c1);
    p.p4 = k<T>(2) * (w.c4 + k<T>(2) * w.c1 * w.c3 + w.c2 * w.c2 + k<T>(3) * w1_2 * w.c2 + w1_2 * w1_2);
    return p;
}

/// a2, a3, a4 through the Caratheodory coefficients.
template <class T>
std::array<Complex<T>, 3> low_coeffs_from_caratheodory(const CaratheodoryCoeffs<T>& p) {
    using detail::k;
    const auto p1_2 = p.p1 * p.p1;
    return {p.p1 * k<T>(1, 2), (p1_2 + k<T>(8) * p.p2) * k<T>(1, 32),
            (k<T>(32) * p.p3 - p1_2 * p.p1) * k<T>(1, 192)};
}

/// p2, p3, p4 from p1 in [0, 2] and unit-disk parameters.
template <class T>
CaratheodoryCoeffs<T> lz_parametrize(const T& p1, const ParamTriple<T>& t) {
    using detail::k;
    if (p1 < T(0) || p1 > T(2)) {
        throw std::invalid_argument("lz_parametrize: p1 must lie in [0, 2]");
    }
    detail::require_unit_params(t, "lz_parametrize");
    const Complex<T> p(p1);
    const auto& g = t.lz_gamma;
    const auto& e = t.eta;
    const auto four_minus = k<T>(4) - p * p;
    const Complex<T> one_g(T(1) - norm(g));
    const Complex<T> one_e(T(1) - norm(e));

    CaratheodoryCoeffs<T> out;
    out.p1 = p;
    out.p2 = (p * p + g * four_minus) * k<T>(1, 2);
    out.p3 = (p * p * p + k<T>(2) * four_minus * p * g - four_minus * p * g * g +
              k<T>(2) * four_minus * one_g * e) *
             k<T>(1, 4);
    out.p4 = (ipow(p, 4) + four_minus * g * (p * p * (g * g - k<T>(3) * g + k<T>(3)) + k<T>(4) * g) -
              k<T>(4) * four_minus * one_g * (p * (g - k<T>(1)) * e + conj(g) * e * e - one_e * t.rho)) *
             k<T>(1, 8);
    return out;
}

/// c2, c3, c4 of a Schwarz function from c1 in [0, 1] and unit-disk parameters.
template <class T>
SchwarzCoeffs<T> schwarz_parametrize(const T& c1, const ParamTriple<T>& t) {
    using detail::k;
    if (c1 < T(0) || c1 > T(1)) {
        throw std::invalid_argument("schwarz_parametrize: c1 must lie in [0, 1]");
    }
    detail::require_unit_params(t, "schwarz_parametrize");
    const Complex<T> c(c1);
    const auto& g = t.lz_gamma;
    const auto& e = t.eta;
    const Complex<T> lead(T(1) - c1 * c1);
    const Complex<T> one_g(T(1) - norm(g));
    const Complex<T> one_e(T(1) - norm(e));

    SchwarzCoeffs<T> out;
    out.c1 = c;
    out.c2 = lead * g;
    out.c3 = lead * (e * one_g - c * g * g);
    out.c4 = lead * (c * c * g * g * g - one_g * (k<T>(2) * c * g * e + conj(g) * e * e) + one_g * one_e * t.rho);
    return out;
}

/// H2(2) = a2 a4 - a3^2.
template <class T>
Complex<T> hankel2(const ClassCoeffs<T>& a) {
    return a.a2 * a.a4 - a.a3 * a.a3;
}

/// H3(1) with a1 = 1.
template <class T>
Complex<T> hankel3(const ClassCoeffs<T>& a) {
    return a.a3 * (a.a2 * a.a4 - a.a3 * a.a3) - a.a4 * (a.a4 - a.a2 * a.a3) + a.a5 * (a.a3 - a.a2 * a.a2);
}

/// 9216 H3(1) as a polynomial in the Schwarz coefficients.
template <class T>
Complex<T> h3_schwarz_poly(const SchwarzCoeffs<T>& c) {
    using detail::k;
    const auto& c1 = c.c1;
    const auto& c2 = c.c2;
    const auto& c3 = c.c3;
    const auto& c4 = c.c4;
    const auto c1_2 = c1 * c1;
    return k<T>(-61) * ipow(c1, 6) + k<T>(244) * c1_2 * c1_2 * c2 + k<T>(464) * c1_2 * c1 * c3 +
           k<T>(1088) * c1 * c2 * c3 - k<T>(8) * c1_2 * (k<T>(89) * c2 * c2 + k<T>(108) * c4) -
           k<T>(32) * (k<T>(9) * c2 * c2 * c2 + k<T>(32) * c3 * c3 - k<T>(36) * c2 * c4);
}

/// H2(2) through p1, p2, p3:
/// (-11 p1^4 - 48 p1^2 p2 + 256 p1 p3 - 192 p2^2) / 3072.
template <class T>
Complex<T> hankel2_from_caratheodory(const CaratheodoryCoeffs<T>& p) {
    using detail::k;
    const auto p1_2 = p.p1 * p.p1;
    return (k<T>(-11) * p1_2 * p1_2 - k<T>(48) * p1_2 * p.p2 + k<T>(256) * p.p1 * p.p3 - k<T>(192) * p.p2 * p.p2) *
           k<T>(1, 3072);
}

/// H2(2) after substituting the p2, p3 parametrization, as a function of
/// (p1, gamma, eta). Its modulus is the quantity bounded by 1/4.
template <class T>
Complex<T> hankel2_lz_expression(const T& p1, const Complex<T>& g, const Complex<T>& e) {
    using detail::k;
    const Complex<T> p(p1);
    const auto p2 = p * p;
    const auto p4 = p2 * p2;
    const Complex<T> g_sq_mod(norm(g));
    return (k<T>(-768) * g * g + k<T>(32) * p2 * g * (k<T>(1) + k<T>(4) * g) +
            p4 * (k<T>(-19) - k<T>(8) * g + k<T>(16) * g * g) + k<T>(512) * p * e - k<T>(128) * p2 * p * e +
            k<T>(128) * p * (p2 - k<T>(4)) * e * g_sq_mod) *
           k<T>(1, 3072);
}

}  // namespace hankel::gft
