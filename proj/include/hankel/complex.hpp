#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include "hankel/rational.hpp"

namespace hankel {

/// Minimal complex number over an ordered field. Used with `Rational` for
/// exact evaluation and with `double` inside grid oracles. Only ring
/// operations and conjugation are provided: everything the coefficient
/// formulas need stays polynomial in (z, conj z).
template <class T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(T real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
    Complex(T real, T imag) : re(std::move(real)), im(std::move(imag)) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        T r = re * o.re - im * o.im;
        T i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
        return os << "(" << z.re << ", " << z.im << ")";
    }
};

using ComplexQ = Complex<Rational>;
using ComplexD = Complex<double>;

template <class T>
Complex<T> conj(const Complex<T>& z) {
    return Complex<T>(z.re, -z.im);
}

/// |z|^2, exact for rational parts.
template <class T>
T norm(const Complex<T>& z) {
    return z.re * z.re + z.im * z.im;
}

inline double abs(const ComplexD& z) { return std::hypot(z.re, z.im); }

inline ComplexD polar(double modulus, double phase) {
    return ComplexD(modulus * std::cos(phase), modulus * std::sin(phase));
}

inline ComplexD to_double(const ComplexQ& z) { return ComplexD(z.re.to_double(), z.im.to_double()); }

template <class T>
Complex<T> ipow(const Complex<T>& z, unsigned n) {
    Complex<T> r(T(1));
    for (unsigned k = 0; k < n; ++k) r *= z;
    return r;
}

}  // namespace hankel
