#include "hankel/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hankel {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) {
        throw std::domain_error("Rational::from_double: non-finite value");
    }
    return Rational(mpq_class(v));
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw std::invalid_argument("Rational::parse: empty string");
    }
    s = s.substr(first, last - first + 1);

    auto dot = s.find('.');
    auto exp_pos = s.find_first_of("eE");
    if (dot != std::string::npos || exp_pos != std::string::npos) {
        // Decimal literal: exact decimal value, not the nearest double.
        std::string mantissa = exp_pos == std::string::npos ? s : s.substr(0, exp_pos);
        long exponent = 0;
        if (exp_pos != std::string::npos) {
            try {
                exponent = std::stol(s.substr(exp_pos + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("Rational::parse: bad exponent in '" + s + "'");
            }
        }
        std::string digits;
        long frac_digits = 0;
        bool seen_dot = false;
        for (char c : mantissa) {
            if (c == '.') {
                if (seen_dot) throw std::invalid_argument("Rational::parse: '" + s + "'");
                seen_dot = true;
            } else {
                digits.push_back(c);
                if (seen_dot && c >= '0' && c <= '9') ++frac_digits;
            }
        }
        mpz_class num;
        if (digits.empty() || digits == "-" || digits == "+" || num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0) {
            throw std::invalid_argument("Rational::parse: '" + s + "'");
        }
        long shift = exponent - frac_digits;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
        mpq_class q = shift < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
        return Rational(q);
    }

    mpq_class q;
    std::string body = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    if (q.set_str(body, 10) != 0) {
        throw std::invalid_argument("Rational::parse: '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw std::domain_error("Rational::parse: zero denominator in '" + s + "'");
    }
    return Rational(q);
}

std::string Rational::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(mpq_class(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace hankel
