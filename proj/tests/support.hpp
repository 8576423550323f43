#pragma once

// Shared test helpers: rational literals, a seeded node-set generator, and
// enumeration oracles that do not go through the library's recurrences.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <eulersum/nodeset.hpp>
#include <eulersum/polynomial.hpp>
#include <eulersum/rational.hpp>

namespace eulersum::testing {

inline Rational q(long long num, long long den = 1)
{
    return Rational(Integer(num), Integer(den));
}

inline std::vector<Rational> qs(std::initializer_list<long long> ints)
{
    std::vector<Rational> out;
    for (auto v : ints) {
        out.push_back(q(v));
    }
    return out;
}

inline NodeSet nodes(std::initializer_list<long long> ints) { return NodeSet(qs(ints)); }

/// Random rational p/q with p, q in [-20, 20], q != 0.
inline Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(-20, 19);
    int d = den(rng);
    if (d >= 0) {
        ++d;
    }
    return q(num(rng), d);
}

/// m distinct random rationals.
inline NodeSet random_nodes(std::mt19937_64& rng, std::size_t m)
{
    std::vector<Rational> values;
    while (values.size() < m) {
        Rational r = random_rational(rng);
        bool fresh = true;
        for (const auto& v : values) {
            fresh = fresh && v != r;
        }
        if (fresh) {
            values.push_back(r);
        }
    }
    return NodeSet(std::move(values));
}

/// `count` random node sets with sizes cycling through [mmin, mmax].
inline std::vector<NodeSet> random_corpus(std::uint64_t seed, std::size_t count, std::size_t mmin, std::size_t mmax)
{
    std::mt19937_64 rng(seed);
    std::vector<NodeSet> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_nodes(rng, mmin + i % (mmax - mmin + 1)));
    }
    return out;
}

/// e_k by enumerating k-subsets via bitmasks.
inline Rational elementary_by_subsets(const NodeSet& ns, std::size_t k)
{
    const std::size_t m = ns.size();
    Rational total;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) {
            continue;
        }
        Rational prod(1);
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (1U << i)) {
                prod *= ns[i];
            }
        }
        total += prod;
    }
    return total;
}

/// Direct sum of a_i^k computed by repeated multiplication.
inline Rational power_sum_direct(const NodeSet& ns, std::size_t k)
{
    Rational total;
    for (const auto& a : ns.values()) {
        Rational term(1);
        for (std::size_t i = 0; i < k; ++i) {
            term *= a;
        }
        total += term;
    }
    return total;
}

} // namespace eulersum::testing
