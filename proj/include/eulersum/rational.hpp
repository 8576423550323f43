#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace eulersum {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator. Zero is 0/1, so equality is plain member-wise comparison.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int value) : num_(value), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(Integer value) : num_(std::move(value)), den_(1) {}

    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) {
            throw std::domain_error("rational with zero denominator");
        }
        normalize();
    }

    const Integer& numerator() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational abs() const { return Rational(num_ < 0 ? Integer(-num_) : num_, den_, unchecked{}); }

    Rational reciprocal() const
    {
        if (num_.is_zero()) {
            throw std::domain_error("reciprocal of zero");
        }
        return num_ < 0 ? Rational(Integer(-den_), Integer(-num_), unchecked{})
                        : Rational(den_, num_, unchecked{});
    }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const
    {
        if (den_ == 1) {
            return num_.str();
        }
        return num_.str() + "/" + den_.str();
    }

    /// Parses "-?digits(/digits)?". Throws std::invalid_argument on anything else
    /// and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text)
    {
        auto slash = text.find('/');
        auto num_part = text.substr(0, slash);
        auto den_part = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

        auto digits_only = [](std::string_view s) {
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };

        bool negative = !num_part.empty() && num_part.front() == '-';
        auto num_digits = negative ? num_part.substr(1) : num_part;
        if (!digits_only(num_digits) || (slash != std::string_view::npos && !digits_only(den_part))) {
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        }

        Integer num{std::string(num_digits)};
        if (negative) {
            num = -num;
        }
        if (slash == std::string_view::npos) {
            return Rational(std::move(num));
        }
        return Rational(std::move(num), Integer(std::string(den_part)));
    }

    Rational operator-() const { return Rational(Integer(-num_), den_, unchecked{}); }

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (a.den_ == b.den_) {
            return Rational(a.num_ + b.num_, a.den_);
        }
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Rational();
        }
        // cross-cancel so the product is already reduced
        Integer g1 = gcd(a.num_, b.den_);
        Integer g2 = gcd(b.num_, a.den_);
        return Rational(Integer((a.num_ / g1) * (b.num_ / g2)), Integer((a.den_ / g2) * (b.den_ / g1)),
                        unchecked{});
    }

    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        Integer lhs = a.num_ * b.den_;
        Integer rhs = b.num_ * a.den_;
        if (lhs < rhs) {
            return std::strong_ordering::less;
        }
        if (lhs > rhs) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct unchecked {};
    Rational(Integer num, Integer den, unchecked) : num_(std::move(num)), den_(std::move(den)) {}

    static Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

    void normalize()
    {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        Integer g = gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

/// base^exponent with 0^0 = 1.
inline Rational pow(const Rational& base, std::uint64_t exponent)
{
    Rational result(1);
    Rational square = base;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= square;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            square *= square;
        }
    }
    return result;
}

/// Largest rational g such that every x/g is an integer; gcd(0, x) = |x|.
inline Rational gcd(const Rational& a, const Rational& b)
{
    if (a.is_zero()) {
        return b.abs();
    }
    if (b.is_zero()) {
        return a.abs();
    }
    Integer num = boost::multiprecision::gcd(a.numerator(), b.numerator());
    Integer den = boost::multiprecision::lcm(a.denominator(), b.denominator());
    return Rational(std::move(num), std::move(den));
}

} // namespace eulersum
