#pragma once

#include <cstddef>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel::series {

inline constexpr std::size_t kDefaultOrder = 8;

/// Truncated power series sum_{k<=N} c_k z^k with exact rational
/// coefficients. All arithmetic is exact modulo z^{N+1}.
class TruncSeries {
public:
    /// Zero series of truncation order N.
    explicit TruncSeries(std::size_t order);
    /// Coefficients beyond the order are dropped; missing ones are zero.
    TruncSeries(std::size_t order, std::vector<Rational> coeffs);

    static TruncSeries constant(std::size_t order, const Rational& c);
    /// c * z^k.
    static TruncSeries monomial(std::size_t order, std::size_t k, const Rational& c = Rational(1));
    /// The identity series z.
    static TruncSeries identity(std::size_t order) { return monomial(order, 1); }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Same series at a different truncation order (zero-padded or cut).
    TruncSeries with_order(std::size_t order) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const Rational& s);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
    friend TruncSeries operator-(TruncSeries a) { return a *= Rational(-1); }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at the common order. Throws on mismatched orders.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

/// exp(a) via (exp a)' = a' exp a. Requires a[0] == 0.
TruncSeries exp(const TruncSeries& a);

/// 1/a. Requires a[0] != 0.
TruncSeries reciprocal(const TruncSeries& a);

/// outer(inner(z)) by Horner's scheme. Requires inner[0] == 0 and equal orders.
TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner);

/// Formal derivative; the top coefficient becomes zero.
TruncSeries derivative(const TruncSeries& a);

/// Termwise antiderivative with zero constant: z^k -> z^{k+1}/(k+1).
TruncSeries integrate(const TruncSeries& a);

/// a(z)/z for a series with a[0] == 0, as an index shift.
TruncSeries divide_by_z(const TruncSeries& a);

/// phi(z) = (1 + z/2)^2 = 1 + z + z^2/4.
TruncSeries phi(std::size_t order);

/// (1 + u)/(1 - u) = 1 + 2u + 2u^2 + ...
TruncSeries caratheodory_kernel(std::size_t order);

/// f(z) = z exp( int_0^z (phi(w(t)) - 1)/t dt ), truncated at z^N.
/// Index k of the result is a_k (a_0 = 0, a_1 = 1).
TruncSeries member_from_schwarz(const TruncSeries& w, std::size_t order = kDefaultOrder);

}  // namespace hankel::series
