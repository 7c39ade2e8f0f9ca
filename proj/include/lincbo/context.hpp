#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lincbo/bitset.hpp"
#include "lincbo/rng.hpp"

namespace lincbo {

/// A formal context <X, Y, I>: objects, attributes and an incidence relation,
/// stored redundantly as object rows and attribute columns so that both
/// concept-forming operators are cheap. Immutable after construction.
class FormalContext {
public:
    FormalContext() = default;

    /// Builds from object rows; columns are derived.
    FormalContext(int n_objects, int n_attributes, std::vector<AttributeSet> rows,
                  std::vector<std::string> object_names = {}, std::vector<std::string> attribute_names = {},
                  std::string name = {})
        : n_objects_(n_objects),
          n_attributes_(n_attributes),
          rows_(std::move(rows)),
          object_names_(std::move(object_names)),
          attribute_names_(std::move(attribute_names)),
          name_(std::move(name)) {
        if (n_objects_ < 0 || n_attributes_ < 0) throw std::invalid_argument("FormalContext: negative size");
        if (static_cast<int>(rows_.size()) != n_objects_)
            throw std::invalid_argument("FormalContext: row count mismatch");
        for (const auto& r : rows_)
            if (r.capacity() != n_attributes_) throw std::invalid_argument("FormalContext: row capacity mismatch");
        if (object_names_.empty()) object_names_ = default_names("o", n_objects_);
        if (attribute_names_.empty()) attribute_names_ = default_names("a", n_attributes_);
        if (static_cast<int>(object_names_.size()) != n_objects_ ||
            static_cast<int>(attribute_names_.size()) != n_attributes_)
            throw std::invalid_argument("FormalContext: name list length mismatch");
        cols_.assign(static_cast<std::size_t>(n_attributes_), ObjectSet(n_objects_));
        for (int x = 0; x < n_objects_; ++x)
            rows_[static_cast<std::size_t>(x)].for_each([&](int y) { cols_[static_cast<std::size_t>(y)].add(x); });
    }

    int n_objects() const { return n_objects_; }
    int n_attributes() const { return n_attributes_; }

    const AttributeSet& row(int x) const { return rows_[static_cast<std::size_t>(x)]; }
    const ObjectSet& column(int y) const { return cols_[static_cast<std::size_t>(y)]; }
    const std::vector<AttributeSet>& rows() const { return rows_; }
    const std::vector<ObjectSet>& columns() const { return cols_; }

    const std::string& object_name(int x) const { return object_names_[static_cast<std::size_t>(x)]; }
    const std::string& attribute_name(int y) const { return attribute_names_[static_cast<std::size_t>(y)]; }
    const std::vector<std::string>& object_names() const { return object_names_; }
    const std::vector<std::string>& attribute_names() const { return attribute_names_; }
    const std::string& name() const { return name_; }

    bool incident(int x, int y) const { return rows_[static_cast<std::size_t>(x)].contains(y); }

    /// A^up: attributes shared by all objects in A. The empty object set
    /// yields the full attribute set.
    AttributeSet up(const ObjectSet& objs) const {
        if (objs.capacity() != n_objects_) throw std::invalid_argument("up: capacity mismatch");
        AttributeSet result = AttributeSet::full(n_attributes_);
        objs.for_each([&](int x) { result &= rows_[static_cast<std::size_t>(x)]; });
        return result;
    }

    /// B^down: objects having all attributes in B. The empty attribute set
    /// yields the full object set.
    ObjectSet down(const AttributeSet& attrs) const {
        if (attrs.capacity() != n_attributes_) throw std::invalid_argument("down: capacity mismatch");
        ObjectSet result = ObjectSet::full(n_objects_);
        attrs.for_each([&](int y) { result &= cols_[static_cast<std::size_t>(y)]; });
        return result;
    }

    /// B^downup, the intent closure. Column intersection first prunes the
    /// object scan, then the surviving rows are intersected.
    AttributeSet closure_downup(const AttributeSet& attrs) const {
        ObjectSet extent = down(attrs);
        return up(extent);
    }

private:
    static std::vector<std::string> default_names(const char* prefix, int n) {
        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
        return names;
    }

    int n_objects_ = 0;
    int n_attributes_ = 0;
    std::vector<AttributeSet> rows_;
    std::vector<ObjectSet> cols_;
    std::vector<std::string> object_names_;
    std::vector<std::string> attribute_names_;
    std::string name_;
};

/// n x n context with incidence x != y; each object misses exactly one
/// attribute, so every subset of attributes is an intent.
inline FormalContext gen_contranominal(int n) {
    if (n < 1) throw std::invalid_argument("gen_contranominal: n must be >= 1");
    std::vector<AttributeSet> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        AttributeSet r = AttributeSet::full(n);
        r.remove(x);
        rows.push_back(std::move(r));
    }
    return FormalContext(n, n, std::move(rows));
}

/// Random context where every object has exactly `d` distinct attributes,
/// chosen by a partial Fisher-Yates shuffle driven by Xorshift64Star.
/// Deterministic for a given seed.
inline FormalContext gen_random(int n_objects, int n_attributes, int d, std::uint64_t seed) {
    if (n_objects < 0 || n_attributes < 0 || d < 0) throw std::invalid_argument("gen_random: negative parameter");
    if (d > n_attributes) throw std::invalid_argument("gen_random: d exceeds attribute count");
    Xorshift64Star rng(seed);
    std::vector<int> pool(static_cast<std::size_t>(n_attributes));
    std::vector<AttributeSet> rows;
    rows.reserve(static_cast<std::size_t>(n_objects));
    for (int x = 0; x < n_objects; ++x) {
        std::iota(pool.begin(), pool.end(), 0);
        AttributeSet r(n_attributes);
        for (int t = 0; t < d; ++t) {
            auto j = static_cast<std::size_t>(t) + rng.below(static_cast<std::uint64_t>(n_attributes - t));
            std::swap(pool[static_cast<std::size_t>(t)], pool[j]);
            r.add(pool[static_cast<std::size_t>(t)]);
        }
        rows.push_back(std::move(r));
    }
    return FormalContext(n_objects, n_attributes, std::move(rows));
}

}  // namespace lincbo
