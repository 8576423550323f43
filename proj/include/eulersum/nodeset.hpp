#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace eulersum {

/// A nonempty set of distinct rationals, held sorted ascending.
class NodeSet {
public:
    /// Sorts a copy of `values`. Throws EmptyNodeSet or DuplicateNode.
    explicit NodeSet(std::vector<Rational> values) : values_(std::move(values))
    {
        if (values_.empty()) {
            throw EmptyNodeSet();
        }
        std::sort(values_.begin(), values_.end());
        auto dup = std::adjacent_find(values_.begin(), values_.end());
        if (dup != values_.end()) {
            throw DuplicateNode(dup->str());
        }
    }

    std::span<const Rational> values() const noexcept { return values_; }
    const Rational& operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

    const Rational& smallest() const { return values_.front(); }
    const Rational& largest() const { return values_.back(); }

    /// Every node moved by `shift`.
    NodeSet translated(const Rational& shift) const
    {
        std::vector<Rational> out;
        out.reserve(values_.size());
        for (const auto& v : values_) {
            out.push_back(v + shift);
        }
        return NodeSet(std::move(out));
    }

    /// Every node multiplied by a nonzero `factor`.
    NodeSet scaled(const Rational& factor) const
    {
        std::vector<Rational> out;
        out.reserve(values_.size());
        for (const auto& v : values_) {
            out.push_back(v * factor);
        }
        return NodeSet(std::move(out));
    }

    /// The first `count` nodes in ascending order.
    NodeSet prefix(std::size_t count) const
    {
        return NodeSet(std::vector<Rational>(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(count)));
    }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
    std::vector<Rational> values_;
};

inline NodeSet nodeset_new(std::vector<Rational> values)
{
    return NodeSet(std::move(values));
}

} // namespace eulersum
