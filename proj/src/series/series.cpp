#include "hankel/series.hpp"

#include <stdexcept>
#include <string>

namespace hankel::series {

namespace {

void require_same_order(const TruncSeries& a, const TruncSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": mismatched truncation orders " +
                                    std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
}

}  // namespace

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::constant(std::size_t order, const Rational& c) {
    TruncSeries s(order);
    s[0] = c;
    return s;
}

TruncSeries TruncSeries::monomial(std::size_t order, std::size_t k, const Rational& c) {
    TruncSeries s(order);
    if (k <= order) s[k] = c;
    return s;
}

TruncSeries TruncSeries::with_order(std::size_t order) const { return TruncSeries(order, coeffs_); }

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    require_same_order(*this, o, "series add");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    require_same_order(*this, o, "series sub");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b, "series_mul");
    const std::size_t n = a.order();
    TruncSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

TruncSeries exp(const TruncSeries& a) {
    if (!a[0].is_zero()) {
        throw std::invalid_argument("series_exp: constant term must be zero");
    }
    // E' = a' E gives k e_k = sum_{j=1..k} j a_j e_{k-j}.
    const std::size_t n = a.order();
    TruncSeries e(n);
    e[0] = Rational(1);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (!a[j].is_zero()) acc += Rational(static_cast<long>(j)) * a[j] * e[k - j];
        }
        e[k] = acc / Rational(static_cast<long>(k));
    }
    return e;
}

TruncSeries reciprocal(const TruncSeries& a) {
    if (a[0].is_zero()) {
        throw std::invalid_argument("series reciprocal: constant term must be nonzero");
    }
    const std::size_t n = a.order();
    TruncSeries r(n);
    r[0] = Rational(1) / a[0];
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
        r[k] = -acc / a[0];
    }
    return r;
}

TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner) {
    require_same_order(outer, inner, "series_compose");
    if (!inner[0].is_zero()) {
        throw std::invalid_argument("series_compose: inner series must have zero constant term");
    }
    const std::size_t n = outer.order();
    TruncSeries acc = TruncSeries::constant(n, outer[n]);
    for (std::size_t k = n; k-- > 0;) {
        acc = mul(acc, inner);
        acc[0] += outer[k];
    }
    return acc;
}

TruncSeries derivative(const TruncSeries& a) {
    const std::size_t n = a.order();
    TruncSeries d(n);
    for (std::size_t k = 1; k <= n; ++k) d[k - 1] = Rational(static_cast<long>(k)) * a[k];
    return d;
}

TruncSeries integrate(const TruncSeries& a) {
    const std::size_t n = a.order();
    TruncSeries out(n);
    for (std::size_t k = 0; k < n; ++k) out[k + 1] = a[k] / Rational(static_cast<long>(k + 1));
    return out;
}

TruncSeries divide_by_z(const TruncSeries& a) {
    if (!a[0].is_zero()) {
        throw std::invalid_argument("divide_by_z: constant term must be zero");
    }
    // The quotient's top coefficient is not determined by a; it is left zero.
    const std::size_t n = a.order();
    TruncSeries out(n);
    for (std::size_t k = 1; k <= n; ++k) out[k - 1] = a[k];
    return out;
}

TruncSeries phi(std::size_t order) {
    return TruncSeries(order, {Rational(1), Rational(1), Rational(1, 4)});
}

TruncSeries caratheodory_kernel(std::size_t order) {
    TruncSeries s(order);
    s[0] = Rational(1);
    for (std::size_t k = 1; k <= order; ++k) s[k] = Rational(2);
    return s;
}

TruncSeries member_from_schwarz(const TruncSeries& w, std::size_t order) {
    if (!w[0].is_zero()) {
        throw std::invalid_argument("member_from_schwarz: Schwarz function must vanish at 0");
    }
    if (order < 1) {
        throw std::invalid_argument("member_from_schwarz: order must be at least 1");
    }
    // The quotient's undetermined top coefficient is discarded by integrate,
    // so log(f/z) and f/z are exact through z^N.
    TruncSeries ws = w.with_order(order);
    TruncSeries shifted = compose(phi(order), ws) - TruncSeries::constant(order, Rational(1));
    TruncSeries log_ratio = integrate(divide_by_z(shifted));
    TruncSeries ratio = exp(log_ratio);

    TruncSeries f(order);
    for (std::size_t k = 0; k + 1 <= order; ++k) f[k + 1] = ratio[k];
    return f;
}

}  // namespace hankel::series
