#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "errors.hpp"
#include "nodeset.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "symmetric.hpp"

namespace eulersum {

/// products[i] = prod_{j != i} (a_i - a_j), aligned with the ascending nodes.
struct DiffProducts {
    std::vector<Rational> products;

    friend bool operator==(const DiffProducts&, const DiffProducts&) = default;
};

/// Fractions reduced to one denominator: sum(numerators) / denominator.
struct CommonDenominator {
    std::vector<Integer> numerators;
    Integer denominator;
};

struct FractionRow {
    Rational node;
    Rational numerator;          ///< node^n
    Rational signed_denominator; ///< the true difference product
    Rational magnitude;          ///< |signed_denominator|
    int displayed_sign = 1;      ///< alternates +1, -1, ... from the smallest node
};

/// Presentation of sum a_i^n / A_i with unsigned denominators and alternating
/// signs. For n = 0 the displayed sum vanishes whatever the overall sign.
struct FractionTable {
    std::int64_t n = 0;
    std::vector<FractionRow> rows;
    /// gcd of the magnitudes; the displayed fractions are multiplied by it
    /// before they are brought over a common denominator.
    Rational scale;
    CommonDenominator common;
};

namespace detail {

inline std::uint64_t checked_exponent(std::int64_t n)
{
    if (n < 0) {
        throw NegativeExponent(n);
    }
    return static_cast<std::uint64_t>(n);
}

} // namespace detail

/// Direct product of differences; a single node gets the empty product 1.
inline DiffProducts diff_products(const NodeSet& ns)
{
    const auto v = ns.values();
    DiffProducts out;
    out.products.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational prod(1);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j != i) {
                prod *= v[i] - v[j];
            }
        }
        out.products.push_back(std::move(prod));
    }
    return out;
}

/// Same values as diff_products, obtained as w'(a_i) for the node polynomial w.
inline DiffProducts diff_products_via_derivative(const NodeSet& ns)
{
    const Polynomial dw = poly_derivative(poly_from_roots(ns.values()));
    DiffProducts out;
    out.products.reserve(ns.size());
    for (const auto& a : ns.values()) {
        out.products.push_back(dw(a));
    }
    return out;
}

/// sum_i a_i^n / A_i, with 0^0 = 1.
inline Rational euler_sum(const NodeSet& ns, std::int64_t n)
{
    const auto exponent = detail::checked_exponent(n);
    const auto prods = diff_products(ns);
    Rational sum;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        sum += pow(ns[i], exponent) / prods.products[i];
    }
    return sum;
}

/// Closed form of euler_sum: 0 while n <= m-2, then h_(n-m+1) of the nodes.
inline Rational expected_euler_sum(const NodeSet& ns, std::int64_t n)
{
    const auto exponent = detail::checked_exponent(n);
    const std::uint64_t m = ns.size();
    if (exponent + 1 < m) {
        return Rational(0);
    }
    const std::size_t k = exponent + 1 - m;
    return homogeneous_via_elementary(elementary_all(ns, k), k)[k];
}

/// Brings fractions over the lcm of their reduced denominators.
inline CommonDenominator common_denominator_form(std::span<const Rational> fractions)
{
    if (fractions.empty()) {
        throw EmptyInput("common_denominator_form");
    }
    Integer lcm(1);
    for (const auto& f : fractions) {
        lcm = boost::multiprecision::lcm(lcm, f.denominator());
    }
    CommonDenominator out;
    out.denominator = lcm;
    out.numerators.reserve(fractions.size());
    for (const auto& f : fractions) {
        out.numerators.push_back(f.numerator() * (lcm / f.denominator()));
    }
    return out;
}

inline CommonDenominator common_denominator_form(const std::vector<Rational>& fractions)
{
    return common_denominator_form(std::span<const Rational>(fractions));
}

/// Rows for sum a_i^n / A_i written with |A_i| and signs +, -, +, ... from the
/// smallest node upward. The true sign of A_i is (-1)^(m-1-i), so the display
/// agrees with it for odd m and is its negation for even m.
inline FractionTable alternating_display(const NodeSet& ns, std::int64_t n)
{
    const auto exponent = detail::checked_exponent(n);
    const auto prods = diff_products(ns);

    FractionTable table;
    table.n = n;
    table.rows.reserve(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        FractionRow row;
        row.node = ns[i];
        row.numerator = pow(ns[i], exponent);
        row.signed_denominator = prods.products[i];
        row.magnitude = prods.products[i].abs();
        row.displayed_sign = i % 2 == 0 ? 1 : -1;
        table.scale = gcd(table.scale, row.magnitude);
        table.rows.push_back(std::move(row));
    }

    std::vector<Rational> scaled;
    scaled.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        Rational f = row.numerator * table.scale / row.magnitude;
        scaled.push_back(row.displayed_sign > 0 ? f : -f);
    }
    table.common = common_denominator_form(scaled);
    return table;
}

} // namespace eulersum
