#pragma once

// Partial fractions of x^n / prod(x - a_i) over distinct poles a_i:
//
//   x^n / prod(x - a_i) = Q(x) + sum_i r_i / (x - a_i),
//   r_i = a_i^n / prod_{j != i} (a_i - a_j).
//
// The polynomial part Q is zero for n < m and otherwise has coefficient
// h_k(poles) on x^(n-m-k).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "nodes.hpp"
#include "nodeset.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "symmetric.hpp"

namespace eulersum {

struct PartialFractionDecomposition {
    std::int64_t n = 0;
    NodeSet poles;
    Polynomial polynomial_part;
    std::vector<Rational> residues; ///< aligned with poles
};

inline PartialFractionDecomposition decompose(std::int64_t n, const NodeSet& poles)
{
    const auto exponent = detail::checked_exponent(n);
    const std::size_t m = poles.size();
    const auto prods = diff_products(poles);

    std::vector<Rational> residues;
    residues.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        residues.push_back(pow(poles[i], exponent) / prods.products[i]);
    }

    Polynomial part;
    if (exponent >= m) {
        const std::size_t top = exponent - m;
        const auto h = homogeneous_via_elementary(elementary_all(poles, top), top);
        std::vector<Rational> coeffs(top + 1);
        for (std::size_t k = 0; k <= top; ++k) {
            coeffs[top - k] = h[k];
        }
        part = Polynomial(std::move(coeffs));
    }

    return {n, poles, std::move(part), std::move(residues)};
}

/// Checks x^n == Q(x) prod(x - a_i) + sum_i r_i prod_{j != i}(x - a_j) coefficient by coefficient.
inline bool reconstruct(const PartialFractionDecomposition& pfd)
{
    if (pfd.n < 0 || pfd.residues.size() != pfd.poles.size()) {
        return false;
    }
    const auto values = pfd.poles.values();
    Polynomial rhs = pfd.polynomial_part * poly_from_roots(values);
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::vector<Rational> others;
        others.reserve(values.size() - 1);
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (j != i) {
                others.push_back(values[j]);
            }
        }
        rhs = rhs + pfd.residues[i] * poly_from_roots(others);
    }
    return rhs == Polynomial::monomial(Rational(1), static_cast<std::size_t>(pfd.n));
}

/// sum_i a_i^n / A_i assembled from the decomposition over all nodes but the
/// largest x. The term for x, x^n / prod(x - a_j), is the decomposition
/// evaluated at x; each remaining term a_i^n / A_i equals r_i / (a_i - x).
inline Rational euler_sum_via_decomposition(const NodeSet& ns, std::int64_t n)
{
    detail::checked_exponent(n);
    if (ns.size() < 2) {
        throw NodeSetTooSmall(ns.size(), 2);
    }
    const NodeSet rest = ns.prefix(ns.size() - 1);
    const Rational& x = ns.largest();
    const auto pfd = decompose(n, rest);

    Rational last_term = pfd.polynomial_part(x);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        last_term += pfd.residues[i] / (x - rest[i]);
    }
    Rational sum = last_term;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        sum += pfd.residues[i] / (rest[i] - x);
    }
    return sum;
}

} // namespace eulersum
