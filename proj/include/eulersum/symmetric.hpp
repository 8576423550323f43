#pragma once

// Elementary symmetric values e_k, power sums p_k and complete homogeneous
// values h_k of a node set, with the recurrences that connect them and a
// direct-enumeration oracle for h_k.
//
// Layout conventions:
//   e and h are indexed by degree, with e[0] = h[0] = 1.
//   power-sum lists start at p_1, so entry k-1 holds p_k.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodeset.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace eulersum {

struct SymmetricTables {
    std::vector<Rational> e; ///< e[0..kmax]
    std::vector<Rational> p; ///< p_1..p_kmax
    std::vector<Rational> h; ///< h[0..kmax]
};

namespace detail {

inline Rational at_or_zero(const std::vector<Rational>& v, std::size_t k)
{
    return k < v.size() ? v[k] : Rational(0);
}

inline void require_unit_head(const std::vector<Rational>& e, const char* who)
{
    if (e.empty() || e[0] != Rational(1)) {
        throw std::invalid_argument(std::string(who) + ": e[0] must be 1");
    }
}

} // namespace detail

/// e[0..kmax], read off the node polynomial: the coefficient of z^(m-k) is (-1)^k e_k.
inline std::vector<Rational> elementary_all(const NodeSet& ns, std::size_t kmax)
{
    const Polynomial w = poly_from_roots(ns.values());
    const std::size_t m = ns.size();
    std::vector<Rational> e(kmax + 1);
    for (std::size_t k = 0; k <= kmax && k <= m; ++k) {
        const Rational& c = w.coeff(m - k);
        e[k] = (k % 2 == 0) ? c : -c;
    }
    return e;
}

/// p_1..p_kmax by direct summation.
inline std::vector<Rational> power_sums(const NodeSet& ns, std::size_t kmax)
{
    std::vector<Rational> p(kmax);
    for (const auto& a : ns.values()) {
        Rational term(1);
        for (std::size_t k = 0; k < kmax; ++k) {
            term *= a;
            p[k] += term;
        }
    }
    return p;
}

/// h[0..kmax] from h_k = sum_{j=1..k} (-1)^(j-1) e_j h_(k-j). Missing e entries count as 0.
inline std::vector<Rational> homogeneous_via_elementary(const std::vector<Rational>& e, std::size_t kmax)
{
    detail::require_unit_head(e, "homogeneous_via_elementary");
    std::vector<Rational> h(kmax + 1);
    h[0] = Rational(1);
    for (std::size_t k = 1; k <= kmax; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k && j < e.size(); ++j) {
            Rational term = e[j] * h[k - j];
            if (j % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h[k] = acc;
    }
    return h;
}

/// h[0..kmax] from k h_k = sum_{j=1..k} p_j h_(k-j).
inline std::vector<Rational> homogeneous_via_power_sums(const std::vector<Rational>& p, std::size_t kmax)
{
    if (p.size() < kmax) {
        throw std::invalid_argument("homogeneous_via_power_sums: need p_1..p_" + std::to_string(kmax));
    }
    std::vector<Rational> h(kmax + 1);
    h[0] = Rational(1);
    for (std::size_t k = 1; k <= kmax; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += p[j - 1] * h[k - j];
        }
        h[k] = acc / Rational(static_cast<long long>(k));
    }
    return h;
}

/// Newton's identities: p_k = sum_{j=1..k-1} (-1)^(j-1) e_j p_(k-j) + (-1)^(k-1) k e_k.
inline std::vector<Rational> newton_power_from_elementary(const std::vector<Rational>& e, std::size_t kmax)
{
    detail::require_unit_head(e, "newton_power_from_elementary");
    std::vector<Rational> p(kmax);
    for (std::size_t k = 1; k <= kmax; ++k) {
        Rational acc;
        for (std::size_t j = 1; j < k; ++j) {
            Rational term = detail::at_or_zero(e, j) * p[k - j - 1];
            if (j % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        Rational last = Rational(static_cast<long long>(k)) * detail::at_or_zero(e, k);
        if (k % 2 == 1) {
            acc += last;
        } else {
            acc -= last;
        }
        p[k - 1] = acc;
    }
    return p;
}

namespace detail {

// Sums the products of every nondecreasing index sequence of length `remaining`
// starting at `first`, each multiplied by `prefix`.
inline void enumerate_multisets(std::span<const Rational> values, std::size_t first, std::size_t remaining,
                                const Rational& prefix, Rational& total)
{
    if (remaining == 0) {
        total += prefix;
        return;
    }
    for (std::size_t i = first; i < values.size(); ++i) {
        enumerate_multisets(values, i, remaining - 1, prefix * values[i], total);
    }
}

} // namespace detail

/// h_k as the sum over all size-k multisets of nodes of the product of their
/// members. Cost grows like C(m+k-1, k); intended as an oracle for small inputs.
inline Rational homogeneous_brute_force(const NodeSet& ns, std::size_t k)
{
    Rational total;
    detail::enumerate_multisets(ns.values(), 0, k, Rational(1), total);
    return total;
}

/// h[0..kmax] as the coefficients of the series 1 / prod(1 - a_i z).
inline std::vector<Rational> homogeneous_via_series(const NodeSet& ns, std::size_t kmax)
{
    // prod(1 - a_i z) is the node polynomial with its coefficients reversed.
    const Polynomial w = poly_from_roots(ns.values());
    Polynomial reversed(std::vector<Rational>(w.coeffs().rbegin(), w.coeffs().rend()));
    return series_inverse(reversed, kmax + 1);
}

/// Closed-form expansions of h_0..h_5 in the elementary values P = e_1, Q = e_2, ... , T = e_5.
inline Rational homogeneous_explicit(const std::vector<Rational>& e, std::size_t k)
{
    const Rational P = detail::at_or_zero(e, 1);
    const Rational Q = detail::at_or_zero(e, 2);
    const Rational R = detail::at_or_zero(e, 3);
    const Rational S = detail::at_or_zero(e, 4);
    const Rational T = detail::at_or_zero(e, 5);
    switch (k) {
    case 0:
        return Rational(1);
    case 1:
        return P;
    case 2:
        return P * P - Q;
    case 3:
        return pow(P, 3) - Rational(2) * P * Q + R;
    case 4:
        return pow(P, 4) - Rational(3) * P * P * Q + Rational(2) * P * R + Q * Q - S;
    case 5:
        return pow(P, 5) - Rational(4) * pow(P, 3) * Q + Rational(3) * P * P * R + Rational(3) * P * Q * Q -
               Rational(2) * P * S - Rational(2) * Q * R + T;
    default:
        throw std::out_of_range("homogeneous_explicit: only h_0..h_5 are tabulated");
    }
}

/// e, p and h (through the elementary recurrence) up to kmax.
inline SymmetricTables symmetric_tables(const NodeSet& ns, std::size_t kmax)
{
    SymmetricTables t;
    t.e = elementary_all(ns, kmax);
    t.p = power_sums(ns, kmax);
    t.h = homogeneous_via_elementary(t.e, kmax);
    return t;
}

} // namespace eulersum
