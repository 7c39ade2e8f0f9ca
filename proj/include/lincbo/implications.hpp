#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lincbo/bitset.hpp"
#include "lincbo/context.hpp"

namespace lincbo {

/// Attribute implication L => R over a fixed attribute universe.
struct Implication {
    AttributeSet premise;
    AttributeSet conclusion;

    Implication(AttributeSet l, AttributeSet r) : premise(std::move(l)), conclusion(std::move(r)) {
        if (premise.capacity() != conclusion.capacity())
            throw std::invalid_argument("Implication: capacity mismatch");
    }

    bool operator==(const Implication& o) const { return premise == o.premise && conclusion == o.conclusion; }
};

/// ||L => R||_M: the implication holds in M unless L is contained in M while
/// R is not.
inline bool holds_in(const Implication& imp, const AttributeSet& m) {
    return !imp.premise.is_subset_of(m) || imp.conclusion.is_subset_of(m);
}

inline bool is_valid_in_context(const Implication& imp, const FormalContext& ctx) {
    for (int x = 0; x < ctx.n_objects(); ++x)
        if (!holds_in(imp, ctx.row(x))) return false;
    return true;
}

/// An append-only, ordered list of implications plus, per attribute, the list
/// of implication ordinals whose premise contains it. Ordinals are stable,
/// which lets closure counters refer to a counted prefix of the theory.
class Theory {
public:
    Theory() = default;
    explicit Theory(int n_attributes)
        : n_attributes_(n_attributes), lists_(static_cast<std::size_t>(n_attributes)) {}

    int n_attributes() const { return n_attributes_; }
    std::size_t size() const { return implications_.size(); }
    bool empty() const { return implications_.empty(); }

    const Implication& operator[](std::size_t j) const { return implications_[j]; }
    const std::vector<Implication>& implications() const { return implications_; }

    /// Ordinals of implications with attribute `a` in the premise, in append
    /// order.
    const std::vector<std::uint32_t>& premise_list(int a) const { return lists_[static_cast<std::size_t>(a)]; }

    /// Cached |premise| of implication j.
    std::int32_t premise_size(std::size_t j) const { return premise_sizes_[j]; }

    /// Appends and returns the new ordinal.
    std::size_t add(Implication imp) {
        if (imp.premise.capacity() != n_attributes_) throw std::invalid_argument("Theory: capacity mismatch");
        std::size_t ordinal = implications_.size();
        imp.premise.for_each(
            [&](int a) { lists_[static_cast<std::size_t>(a)].push_back(static_cast<std::uint32_t>(ordinal)); });
        premise_sizes_.push_back(imp.premise.count());
        implications_.push_back(std::move(imp));
        return ordinal;
    }

    std::size_t add(AttributeSet premise, AttributeSet conclusion) {
        return add(Implication(std::move(premise), std::move(conclusion)));
    }

private:
    int n_attributes_ = 0;
    std::vector<Implication> implications_;
    std::vector<std::int32_t> premise_sizes_;
    std::vector<std::vector<std::uint32_t>> lists_;
};

/// c_T(Z): least model of the theory containing Z, computed by full passes
/// until nothing changes. The simplest correct closure; baseline for the
/// engineered ones.
inline AttributeSet naive_closure(const Theory& theory, AttributeSet z) {
    std::vector<bool> fired(theory.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j < theory.size(); ++j) {
            if (fired[j]) continue;
            const Implication& imp = theory[j];
            if (imp.premise.is_subset_of(z)) {
                fired[j] = true;
                if (!imp.conclusion.is_subset_of(z)) {
                    z |= imp.conclusion;
                    changed = true;
                }
            }
        }
    }
    return z;
}

/// All models of the theory, by sweeping the full powerset. Test/verify use
/// only; refuses capacities above `limit`.
inline std::vector<AttributeSet> models_bruteforce(const Theory& theory, int limit = 20) {
    int n = theory.n_attributes();
    if (n > limit) throw std::invalid_argument("models_bruteforce: capacity over limit");
    std::vector<AttributeSet> models;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        AttributeSet m(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) m.add(i);
        bool ok = true;
        for (std::size_t j = 0; ok && j < theory.size(); ++j) ok = holds_in(theory[j], m);
        if (ok) models.push_back(std::move(m));
    }
    return models;
}

}  // namespace lincbo
