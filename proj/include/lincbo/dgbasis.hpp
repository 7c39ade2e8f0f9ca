#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "lincbo/closures.hpp"
#include "lincbo/context.hpp"
#include "lincbo/enumeration.hpp"
#include "lincbo/implications.hpp"
#include "lincbo/oracle.hpp"

namespace lincbo {

enum class AlgorithmId { lincbo, lincbo1, nc1, nc2, nc3, ncp1, ncp2, ncp3 };

inline constexpr std::array<std::pair<AlgorithmId, std::string_view>, 8> algorithm_names{{
    {AlgorithmId::lincbo, "lincbo"},
    {AlgorithmId::lincbo1, "lincbo1"},
    {AlgorithmId::nc1, "nc1"},
    {AlgorithmId::nc2, "nc2"},
    {AlgorithmId::nc3, "nc3"},
    {AlgorithmId::ncp1, "ncp1"},
    {AlgorithmId::ncp2, "ncp2"},
    {AlgorithmId::ncp3, "ncp3"},
}};

inline std::string_view to_string(AlgorithmId id) {
    for (const auto& [algo, name] : algorithm_names)
        if (algo == id) return name;
    return "?";
}

inline std::optional<AlgorithmId> algorithm_from_string(std::string_view name) {
    for (const auto& [algo, algo_name] : algorithm_names)
        if (algo_name == name) return algo;
    return std::nullopt;
}

/// Outcome of a basis computation. The theory lists the implications in
/// generation (lectic) order; closure_calls counts theory-closure
/// invocations; wall_ms covers the computation only, never parsing.
struct BasisResult {
    AlgorithmId algorithm = AlgorithmId::lincbo;
    Theory basis;
    std::uint64_t intent_count = 0;
    std::uint64_t pseudo_intent_count = 0;
    std::uint64_t closure_calls = 0;
    double wall_ms = 0.0;
};

/// Optional observer invoked with every visited set (intents and
/// pseudo-intents, in lectic order). Used by tests; keep it cheap.
using VisitHook = std::function<void(const AttributeSet&)>;

namespace detail {

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// CbO for intents and pseudo-intents, shared by LinCbO (counter reuse) and
/// LinCbO1 (fresh early-stop counters per call). Iterative with resumable
/// frames: the live frames are exactly the current tree path, so at most one
/// counter state per level is alive.
inline BasisResult lincbo_driver(const FormalContext& ctx, bool reuse_counters, const VisitHook& on_visit) {
    const int n = ctx.n_attributes();
    BasisResult res;
    res.algorithm = reuse_counters ? AlgorithmId::lincbo : AlgorithmId::lincbo1;
    StopWatch watch;
    Theory theory(n);

    auto closure = [&](const AttributeSet& b, int y, const AttributeSet& z_new,
                       const CounterState& prev) -> std::optional<RcResult> {
        ++res.closure_calls;
        std::optional<RcResult> r;
        if (reuse_counters) {
            r = lin_closure_rc(theory, b, y, z_new, prev);
            if (audit::enabled.load(std::memory_order_relaxed)) {
                auto fresh = lin_closure_es(theory, b, y);
                bool agree = fresh.has_value() == r.has_value() && (!fresh || *fresh == r->closure);
                if (!agree) throw std::logic_error("lincbo: reused-counter closure disagrees with fresh early stop");
                audit::chain_checks.fetch_add(1, std::memory_order_relaxed);
            }
        } else {
            auto d = lin_closure_es(theory, b, y);
            if (d) r = RcResult{std::move(*d), CounterState{}};
        }
        return r;
    };

    struct Frame {
        AttributeSet closed;
        int y;
        int next_i;
        CounterState counters;
    };
    std::vector<Frame> path;

    // Handles one generated set: visit its closure, classify, and either
    // open a frame (intent) or record the implication and jump/leave.
    auto expand = [&](AttributeSet b, int y, AttributeSet z_new, const CounterState& prev) {
        auto r = closure(b, y, z_new, prev);
        if (!r) return;
        AttributeSet bdot = std::move(r->closure);
        if (on_visit) on_visit(bdot);
        AttributeSet intent = ctx.closure_downup(bdot);
        if (bdot == intent) {
            ++res.intent_count;
            path.push_back(Frame{std::move(bdot), y, n - 1, std::move(r->counters)});
            return;
        }
        theory.add(std::move(bdot), intent);
        ++res.pseudo_intent_count;
        const AttributeSet& premise = theory[theory.size() - 1].premise;
        if (!intent.prefix_equal(premise, y)) return;  // the whole subtree is exhausted
        // Jump to the closure, which is the next set and already known to be
        // an intent; the closure call only refreshes the counters.
        AttributeSet grown = intent - premise;
        auto r2 = closure(intent, y, grown, r->counters);
        if (!r2 || r2->closure != intent) throw std::logic_error("lincbo: jump target not stable under closure");
        if (on_visit) on_visit(intent);
        ++res.intent_count;
        path.push_back(Frame{std::move(intent), y, n - 1, std::move(r2->counters)});
    };

    expand(AttributeSet(n), -1, AttributeSet(n), CounterState{});
    while (!path.empty()) {
        Frame& f = path.back();
        int i = f.next_i;
        while (i > f.y && f.closed.contains(i)) --i;
        if (i <= f.y) {
            path.pop_back();
            continue;
        }
        f.next_i = i - 1;
        AttributeSet child = f.closed;
        child.add(i);
        AttributeSet z_new(n);
        z_new.add(i);
        expand(std::move(child), i, std::move(z_new), f.counters);
    }

    res.basis = std::move(theory);
    res.wall_ms = watch.elapsed_ms();
    return res;
}

enum class ClosureKind { naive, lin, wild };

/// NextClosure over the growing theory, optionally with the two jump
/// improvements: from a pseudo-intent whose closure keeps the generating
/// prefix, step directly to that closure; otherwise resume the scan below the
/// generating attribute since the subtree can hold no further closed sets.
inline BasisResult nextclosure_driver(const FormalContext& ctx, ClosureKind kind, bool plus,
                                      const VisitHook& on_visit) {
    const int n = ctx.n_attributes();
    BasisResult res;
    switch (kind) {
        case ClosureKind::naive: res.algorithm = plus ? AlgorithmId::ncp1 : AlgorithmId::nc1; break;
        case ClosureKind::lin: res.algorithm = plus ? AlgorithmId::ncp2 : AlgorithmId::nc2; break;
        case ClosureKind::wild: res.algorithm = plus ? AlgorithmId::ncp3 : AlgorithmId::nc3; break;
    }
    StopWatch watch;
    Theory theory(n);
    const AttributeSet full = AttributeSet::full(n);

    // Lectic successor of `from` among the theory-closed sets, scanning
    // candidate positions from `start` down. Returns the successor and the
    // position that produced it.
    auto scan = [&](const AttributeSet& from, int start) -> std::pair<AttributeSet, int> {
        AttributeSet work = from;
        work.clear_above(start);
        for (int i = start; i >= 0; --i) {
            if (work.contains(i)) {
                work.remove(i);
                continue;
            }
            AttributeSet z = work;
            z.add(i);
            ++res.closure_calls;
            std::optional<AttributeSet> d;
            if (kind == ClosureKind::lin) {
                d = lin_closure_es(theory, z, i);
            } else {
                AttributeSet cand =
                    kind == ClosureKind::naive ? naive_closure(theory, std::move(z)) : wild_closure(theory, z);
                if (canonicity(work, cand, i)) d = std::move(cand);
            }
            if (d) return {std::move(*d), i};
        }
        return {full, n};
    };

    AttributeSet b(n);
    int y_gen = -1;
    std::optional<AttributeSet> known_closure;
    while (true) {
        AttributeSet closed = known_closure ? std::move(*known_closure) : ctx.closure_downup(b);
        known_closure.reset();
        if (on_visit) on_visit(b);
        const bool pseudo = (closed != b);
        if (pseudo) {
            theory.add(b, closed);
            ++res.pseudo_intent_count;
        } else {
            ++res.intent_count;
        }
        if (b == full) break;
        int start = n - 1;
        if (plus && pseudo) {
            if (closed.prefix_equal(b, y_gen)) {
                b = std::move(closed);
                known_closure = b;  // an intent closes to itself
                continue;
            }
            start = y_gen;
        }
        auto [next, pos] = scan(b, start);
        b = std::move(next);
        y_gen = pos;
    }

    res.basis = std::move(theory);
    res.wall_ms = watch.elapsed_ms();
    return res;
}

}  // namespace detail

inline BasisResult lincbo_basis(const FormalContext& ctx, const VisitHook& on_visit = {}) {
    return detail::lincbo_driver(ctx, true, on_visit);
}

inline BasisResult lincbo1_basis(const FormalContext& ctx, const VisitHook& on_visit = {}) {
    return detail::lincbo_driver(ctx, false, on_visit);
}

inline BasisResult nextclosure_basis(const FormalContext& ctx, detail::ClosureKind kind, bool plus,
                                     const VisitHook& on_visit = {}) {
    return detail::nextclosure_driver(ctx, kind, plus, on_visit);
}

inline BasisResult compute_basis(const FormalContext& ctx, AlgorithmId id, const VisitHook& on_visit = {}) {
    using detail::ClosureKind;
    switch (id) {
        case AlgorithmId::lincbo: return lincbo_basis(ctx, on_visit);
        case AlgorithmId::lincbo1: return lincbo1_basis(ctx, on_visit);
        case AlgorithmId::nc1: return nextclosure_basis(ctx, ClosureKind::naive, false, on_visit);
        case AlgorithmId::nc2: return nextclosure_basis(ctx, ClosureKind::lin, false, on_visit);
        case AlgorithmId::nc3: return nextclosure_basis(ctx, ClosureKind::wild, false, on_visit);
        case AlgorithmId::ncp1: return nextclosure_basis(ctx, ClosureKind::naive, true, on_visit);
        case AlgorithmId::ncp2: return nextclosure_basis(ctx, ClosureKind::lin, true, on_visit);
        case AlgorithmId::ncp3: return nextclosure_basis(ctx, ClosureKind::wild, true, on_visit);
    }
    throw std::invalid_argument("compute_basis: unknown algorithm");
}

/// Per-check outcome of a basis verification run.
struct VerifyReport {
    std::uint64_t basis_size = 0;
    bool soundness_ok = true;
    bool exhaustive_checked = false;
    bool completeness_ok = true;
    bool nonredundancy_ok = true;
    bool count_checked = false;
    bool count_ok = true;
    std::uint64_t oracle_pseudo_count = 0;

    bool all_ok() const {
        return soundness_ok && (!exhaustive_checked || (completeness_ok && nonredundancy_ok)) &&
               (!count_checked || count_ok);
    }
};

/// Checks a theory against a context: soundness always; completeness
/// (models = intents), non-redundancy of every implication and the oracle
/// pseudo-intent count when the attribute count is within `exhaustive_limit`.
inline VerifyReport verify_basis(const FormalContext& ctx, const Theory& theory, int exhaustive_limit = 15) {
    VerifyReport rep;
    rep.basis_size = theory.size();
    for (std::size_t j = 0; j < theory.size(); ++j)
        if (!is_valid_in_context(theory[j], ctx)) rep.soundness_ok = false;

    const int n = ctx.n_attributes();
    if (n <= exhaustive_limit) {
        rep.exhaustive_checked = true;
        for_each_subset_lectic(n, [&](const AttributeSet& m) {
            bool model = true;
            for (std::size_t j = 0; model && j < theory.size(); ++j) model = holds_in(theory[j], m);
            if (model != (ctx.closure_downup(m) == m)) rep.completeness_ok = false;
        });
        // Dropping implication j leaves a complete theory iff the remaining
        // implications still derive conclusion_j from premise_j: the least
        // counterexample candidate is the reduced closure of the premise.
        for (std::size_t drop = 0; drop < theory.size(); ++drop) {
            Theory reduced(n);
            for (std::size_t j = 0; j < theory.size(); ++j)
                if (j != drop) reduced.add(theory[j]);
            AttributeSet m = naive_closure(reduced, theory[drop].premise);
            if (ctx.closure_downup(m) == m) rep.nonredundancy_ok = false;
        }
        rep.count_checked = true;
        rep.oracle_pseudo_count = pseudo_intents_bruteforce(ctx).size();
        rep.count_ok = rep.oracle_pseudo_count == theory.size();
    }
    return rep;
}

}  // namespace lincbo
