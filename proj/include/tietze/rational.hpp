#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tietze {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Equality is equality of canonical forms.
///
/// Thin value wrapper over GMP's mpq_class. Every operation evaluates
/// eagerly so that no expression template escapes into user code.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) : v_(Integer(static_cast<long>(n))) {} // NOLINT(google-explicit-constructor)

    Rational(const Integer& n) : v_(n) {} // NOLINT(google-explicit-constructor)

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        v_.get_num() = num;
        v_.get_den() = den;
        v_.canonicalize();
    }

    template <std::integral N, std::integral D>
    Rational(N num, D den) : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

    /// Parses the grammar `[-]digits[/digits]`. Non-canonical input such as
    /// "4/6" or "-007" is accepted and normalized. Returns nullopt on any
    /// grammar violation or a zero denominator.
    static std::optional<Rational> parse(std::string_view text) {
        std::size_t pos = 0;
        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        auto digits = [&](std::string_view& out) {
            std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                ++pos;
            }
            out = text.substr(start, pos - start);
            return !out.empty();
        };
        std::string_view num_digits;
        std::string_view den_digits = "1";
        if (!digits(num_digits)) {
            return std::nullopt;
        }
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            if (!digits(den_digits)) {
                return std::nullopt;
            }
        }
        if (pos != text.size()) {
            return std::nullopt;
        }
        Integer num(std::string(num_digits), 10);
        Integer den(std::string(den_digits), 10);
        if (den == 0) {
            return std::nullopt;
        }
        if (negative) {
            num = -num;
        }
        return Rational(num, den);
    }

    /// Like parse() but throws std::invalid_argument on failure.
    static Rational from_string(std::string_view text) {
        auto r = parse(text);
        if (!r) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        return *std::move(r);
    }

    const Integer& numerator() const { return v_.get_num(); }
    const Integer& denominator() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return from_mpq(mpq_class(::abs(v_))); }

    Rational reciprocal() const {
        if (v_ == 0) {
            throw std::domain_error("reciprocal of zero");
        }
        mpq_class r;
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return from_mpq(std::move(r));
    }

    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    Integer ceil() const {
        Integer q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    /// Nearest integer; exact halves round away from zero.
    Integer round_half_away() const {
        Integer twice_num = 2 * v_.get_num() + (sign() >= 0 ? v_.get_den() : -v_.get_den());
        Integer twice_den = 2 * v_.get_den();
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
        return q;
    }

    /// Canonical text form: "n" for integers, "n/d" otherwise.
    std::string str() const {
        if (is_integer()) {
            return v_.get_num().get_str();
        }
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Truncated decimal expansion with `digits` fractional digits. Display
    /// only; never feeds back into arithmetic.
    std::string to_decimal(unsigned digits) const {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
        Integer magnitude = ::abs(v_.get_num()) * scale / v_.get_den();
        std::string body = magnitude.get_str();
        if (digits > 0) {
            if (body.size() <= digits) {
                body.insert(0, digits + 1 - body.size(), '0');
            }
            body.insert(body.size() - digits, ".");
        }
        return (sign() < 0 ? "-" : "") + body;
    }

    double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) {
            throw std::domain_error("division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational from_mpq(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

} // namespace tietze

template <>
struct std::hash<tietze::Rational> {
    std::size_t operator()(const tietze::Rational& r) const {
        return std::hash<std::string>{}(r.str());
    }
};
