#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lincbo/implications.hpp"

namespace lincbo {

/// Remaining-premise counters captured at the end of a successful closure
/// run. counts[j] = |premise_j \ D| for every ordinal j below the counted
/// prefix, where D is the closure the state was captured from. A counter at
/// zero means the implication has fired and its conclusion is inside D.
struct CounterState {
    std::vector<std::int32_t> counts;

    std::size_t counted_prefix() const { return counts.size(); }
};

/// Test-build instrumentation. When `enabled` is set, every successful
/// counter-reusing run re-derives its postcondition from scratch and throws
/// on mismatch; the basis drivers add a differential check against a fresh
/// early-stop closure. The counters are cheap enough to stay compiled in.
namespace audit {
inline std::atomic<bool> enabled{false};
inline std::atomic<std::uint64_t> rc_success_checks{0};
inline std::atomic<std::uint64_t> chain_checks{0};
inline std::atomic<std::uint64_t> dequeues{0};
}  // namespace audit

namespace detail {

/// Shared propagation core of the LinClosure family. D starts as the input
/// set and Z as the queue of unprocessed attributes; `count` covers the whole
/// theory, and ordinals from `eager_from` on were initialized in this run, so
/// any of them already at zero fires before the main loop (no later dequeue
/// could reach it). When `stop_below` > 0, adding an attribute below it
/// aborts the run; the caller discards D, Z and the counters on abort.
inline bool propagate_closure(const Theory& theory, AttributeSet& d, AttributeSet& z,
                              std::vector<std::int32_t>& count, int stop_below, std::size_t eager_from) {
    auto fire = [&](std::size_t j) -> bool {
        int lowest = d.absorb(theory[j].conclusion, z);
        return lowest < 0 || stop_below <= 0 || lowest >= stop_below;
    };

    for (std::size_t j = eager_from; j < theory.size(); ++j)
        if (count[j] == 0 && !fire(j)) return false;

    const bool auditing = audit::enabled.load(std::memory_order_relaxed);
    int m;
    while ((m = z.pop_min()) >= 0) {
        if (auditing) audit::dequeues.fetch_add(1, std::memory_order_relaxed);
        for (std::uint32_t j : theory.premise_list(m)) {
            auto& c = count[j];
            if (c > 0 && --c == 0)
                if (!fire(j)) return false;
        }
    }
    return true;
}

inline void check_rc_postcondition(const Theory& theory, const AttributeSet& d,
                                   const std::vector<std::int32_t>& count) {
    for (std::size_t j = 0; j < theory.size(); ++j)
        if (count[j] != theory[j].premise.count_minus(d))
            throw std::logic_error("lin_closure_rc: counter postcondition violated");
    audit::rc_success_checks.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace detail

struct RcResult {
    AttributeSet closure;
    CounterState counters;
};

/// LinClosure with reused counters. `b` must be the closure that `prev` was
/// captured from united with `z_new`; only the attributes in `z_new` are
/// processed. Counters beyond the counted prefix are initialized to
/// |premise \ (b \ z_new)| and fire immediately when that is zero. Fails
/// (nullopt) as soon as an attribute below `y` would be added, exactly when a
/// full closure would break canonicity at `y`; a failed state must not be
/// reused. On success the returned counters cover the whole theory.
inline std::optional<RcResult> lin_closure_rc(const Theory& theory, const AttributeSet& b, int y,
                                              const AttributeSet& z_new, const CounterState& prev) {
    AttributeSet d = b;
    AttributeSet z = z_new;
    std::vector<std::int32_t> count = prev.counts;
    const std::size_t counted = count.size();
    if (counted > theory.size()) throw std::invalid_argument("lin_closure_rc: counted prefix exceeds theory");
    if (counted < theory.size()) {
        count.resize(theory.size());
        AttributeSet base = b - z_new;
        for (std::size_t j = counted; j < theory.size(); ++j)
            count[j] = theory[j].premise.count_minus(base);
    }
    if (!detail::propagate_closure(theory, d, z, count, y, counted))
        return std::nullopt;
    if (audit::enabled.load(std::memory_order_relaxed)) detail::check_rc_postcondition(theory, d, count);
    return RcResult{std::move(d), CounterState{std::move(count)}};
}

/// LinClosure with an early stop: fresh counters each call; fails exactly
/// when the full closure would add an attribute below `y`. Pass a negative
/// `y` (or 0) to disable the stop, which makes it plain LinClosure.
inline std::optional<AttributeSet> lin_closure_es(const Theory& theory, const AttributeSet& b, int y) {
    AttributeSet d = b;
    AttributeSet z = b;
    std::vector<std::int32_t> count(theory.size());
    for (std::size_t j = 0; j < theory.size(); ++j)
        count[j] = theory.premise_size(j);
    if (!detail::propagate_closure(theory, d, z, count, y, 0))
        return std::nullopt;
    return d;
}

/// LinClosure: c_T(b) via attribute counters, never fails.
inline AttributeSet lin_closure(const Theory& theory, const AttributeSet& b) {
    return *lin_closure_es(theory, b, -1);
}

/// Wild's closure: c_T(b) by repeatedly splitting the remaining implications
/// into those with a premise attribute outside D (deferred) and the rest,
/// which fire wholesale.
inline AttributeSet wild_closure(const Theory& theory, const AttributeSet& b) {
    AttributeSet d = b;
    for (std::size_t j = 0; j < theory.size(); ++j)
        if (theory[j].premise.empty()) d |= theory[j].conclusion;

    std::vector<std::uint8_t> active(theory.size(), 1);
    std::vector<std::uint8_t> deferred(theory.size(), 0);
    bool stable = false;
    while (!stable) {
        stable = true;
        std::fill(deferred.begin(), deferred.end(), 0);
        for (int a = 0; a < theory.n_attributes(); ++a) {
            if (d.contains(a)) continue;
            for (std::uint32_t j : theory.premise_list(a)) deferred[j] = 1;
        }
        for (std::size_t j = 0; j < theory.size(); ++j) {
            if (active[j] && !deferred[j]) {
                d |= theory[j].conclusion;
                stable = false;
            }
        }
        for (std::size_t j = 0; j < theory.size(); ++j) active[j] = active[j] & deferred[j];
    }
    return d;
}

}  // namespace lincbo
