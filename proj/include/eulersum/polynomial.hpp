#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace eulersum {

/// Dense univariate polynomial over a field. Coefficients are stored in
/// ascending order (coeffs()[k] multiplies z^k) with no trailing zeros, so the
/// zero polynomial has an empty coefficient list.
template <class T>
class BasicPolynomial {
public:
    using value_type = T;

    /// Degree reported for the zero polynomial.
    static constexpr std::int64_t zero_degree = std::numeric_limits<std::int64_t>::min();

    BasicPolynomial() = default;
    BasicPolynomial(std::initializer_list<T> ascending) : coeffs_(ascending) { trim(); }
    explicit BasicPolynomial(std::vector<T> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static BasicPolynomial constant(T c) { return BasicPolynomial({std::move(c)}); }

    /// z - a
    static BasicPolynomial linear_factor(const T& a) { return BasicPolynomial({-a, T(1)}); }

    /// c * z^k
    static BasicPolynomial monomial(T c, std::size_t k)
    {
        std::vector<T> coeffs(k + 1);
        coeffs[k] = std::move(c);
        return BasicPolynomial(std::move(coeffs));
    }

    const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::int64_t degree() const noexcept
    {
        return coeffs_.empty() ? zero_degree : static_cast<std::int64_t>(coeffs_.size()) - 1;
    }

    /// Coefficient of z^k; zero past the degree.
    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

    T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

    /// Horner evaluation.
    T operator()(const T& x) const
    {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    BasicPolynomial operator-() const
    {
        std::vector<T> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) {
            out.push_back(-c);
        }
        return BasicPolynomial(std::move(out));
    }

    friend BasicPolynomial operator+(const BasicPolynomial& p, const BasicPolynomial& q)
    {
        std::vector<T> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = p.coeff(k) + q.coeff(k);
        }
        return BasicPolynomial(std::move(out));
    }

    friend BasicPolynomial operator-(const BasicPolynomial& p, const BasicPolynomial& q) { return p + (-q); }

    friend BasicPolynomial operator*(const BasicPolynomial& p, const BasicPolynomial& q)
    {
        if (p.is_zero() || q.is_zero()) {
            return {};
        }
        std::vector<T> out(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (p.coeffs_[i] == T(0)) {
                continue;
            }
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
                out[i + j] += p.coeffs_[i] * q.coeffs_[j];
            }
        }
        return BasicPolynomial(std::move(out));
    }

    friend BasicPolynomial operator*(const T& c, const BasicPolynomial& p)
    {
        std::vector<T> out;
        out.reserve(p.coeffs_.size());
        for (const auto& a : p.coeffs_) {
            out.push_back(c * a);
        }
        return BasicPolynomial(std::move(out));
    }

    friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) {
            coeffs_.pop_back();
        }
    }

    std::vector<T> coeffs_;
};

using Polynomial = BasicPolynomial<Rational>;

/// Quotient and remainder of a division.
template <class T>
struct DivisionResult {
    BasicPolynomial<T> quotient;
    BasicPolynomial<T> remainder;
};

/// Quotient and scalar remainder of division by (z - a).
template <class T>
struct LinearDivisionResult {
    BasicPolynomial<T> quotient;
    T remainder;
};

/// Monic product of (z - r) over the given roots; the empty product is 1.
template <class T>
BasicPolynomial<T> poly_from_roots(std::span<const T> roots)
{
    // Multiply in place, one linear factor at a time.
    std::vector<T> acc{T(1)};
    acc.reserve(roots.size() + 1);
    for (const auto& r : roots) {
        acc.push_back(T(0));
        for (std::size_t k = acc.size() - 1; k > 0; --k) {
            acc[k] = acc[k - 1] - r * acc[k];
        }
        acc[0] = -(r * acc[0]);
    }
    return BasicPolynomial<T>(std::move(acc));
}

template <class T>
BasicPolynomial<T> poly_from_roots(const std::vector<T>& roots)
{
    return poly_from_roots(std::span<const T>(roots));
}

template <class T>
BasicPolynomial<T> poly_derivative(const BasicPolynomial<T>& p)
{
    const auto& c = p.coeffs();
    if (c.size() <= 1) {
        return {};
    }
    std::vector<T> out;
    out.reserve(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        out.push_back(T(static_cast<long long>(k)) * c[k]);
    }
    return BasicPolynomial<T>(std::move(out));
}

template <class T>
T poly_eval(const BasicPolynomial<T>& p, const T& x)
{
    return p(x);
}

template <class T>
BasicPolynomial<T> poly_add(const BasicPolynomial<T>& p, const BasicPolynomial<T>& q)
{
    return p + q;
}

template <class T>
BasicPolynomial<T> poly_mul(const BasicPolynomial<T>& p, const BasicPolynomial<T>& q)
{
    return p * q;
}

/// Synthetic division: p = (z - a) * quotient + remainder, remainder = p(a).
template <class T>
LinearDivisionResult<T> poly_divide_linear(const BasicPolynomial<T>& p, const T& a)
{
    const auto& c = p.coeffs();
    if (c.empty()) {
        return {{}, T(0)};
    }
    std::vector<T> q(c.size() - 1);
    T carry = c.back();
    for (std::size_t k = c.size() - 1; k > 0; --k) {
        q[k - 1] = carry;
        carry = c[k - 1] + a * carry;
    }
    return {BasicPolynomial<T>(std::move(q)), std::move(carry)};
}

/// Schoolbook long division by a nonzero divisor.
template <class T>
DivisionResult<T> poly_divmod(const BasicPolynomial<T>& p, const BasicPolynomial<T>& d)
{
    if (d.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<T> rem = p.coeffs();
    const auto& dc = d.coeffs();
    if (rem.size() < dc.size()) {
        return {{}, p};
    }
    std::vector<T> quot(rem.size() - dc.size() + 1);
    const T lead = dc.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        T factor = rem[k + dc.size() - 1] / lead;
        quot[k] = factor;
        if (factor == T(0)) {
            continue;
        }
        for (std::size_t j = 0; j < dc.size(); ++j) {
            rem[k + j] -= factor * dc[j];
        }
    }
    rem.resize(dc.size() - 1);
    return {BasicPolynomial<T>(std::move(quot)), BasicPolynomial<T>(std::move(rem))};
}

/// First `terms` coefficients of the power series 1/p(z). Requires p(0) != 0.
template <class T>
std::vector<T> series_inverse(const BasicPolynomial<T>& p, std::size_t terms)
{
    const T c0 = p.coeff(0);
    if (c0 == T(0)) {
        throw std::domain_error("series inverse needs a nonzero constant term");
    }
    std::vector<T> out;
    out.reserve(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        T acc = k == 0 ? T(1) : T(0);
        for (std::size_t j = 1; j <= k; ++j) {
            acc -= p.coeff(j) * out[k - j];
        }
        out.push_back(acc / c0);
    }
    return out;
}

/// Descending-power rendering, e.g. "x^4 - 22x^3 + 171x^2 - 542x + 560".
/// Non-integer coefficients are parenthesised: "(1/2)x".
inline std::string to_string(const Polynomial& p, const std::string& var = "x")
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        const Rational& a = c[k];
        if (a.is_zero()) {
            continue;
        }
        bool negative = a.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        Rational mag = a.abs();
        if (k == 0 || mag != Rational(1)) {
            out += mag.is_integer() || k == 0 ? mag.str() : "(" + mag.str() + ")";
        }
        if (k >= 1) {
            out += var;
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

} // namespace eulersum
