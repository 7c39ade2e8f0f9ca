#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lincbo/bitset.hpp"

namespace lincbo {

/// Canonicity test: the closure `d` of `b + {i}` added no attribute below
/// `i` that was not already in `b`.
inline bool canonicity(const AttributeSet& b, const AttributeSet& d, int i) {
    return d.prefix_equal(b, i);
}

/// Close-by-One over an arbitrary closure operator on {0..n-1}, with the
/// right depth-first sweep so closed sets come out in strictly increasing
/// lectic order, first c(empty), last the full set. Results are streamed to
/// `emit`; nothing is materialized.
template <class Closure, class Consumer>
void cbo_closed_sets(Closure&& close, int n, Consumer&& emit) {
    struct Candidate {
        AttributeSet base;
        int added;
    };
    AttributeSet root = close(AttributeSet(n));
    emit(static_cast<const AttributeSet&>(root));

    std::vector<Candidate> stack;
    auto push_children = [&](const AttributeSet& b, int y) {
        // Ascending pushes pop in descending attribute order: the right sweep.
        for (int i = y + 1; i < n; ++i)
            if (!b.contains(i)) stack.push_back(Candidate{b, i});
    };
    push_children(root, -1);

    while (!stack.empty()) {
        Candidate cand = std::move(stack.back());
        stack.pop_back();
        AttributeSet with = cand.base;
        with.add(cand.added);
        AttributeSet d = close(with);
        if (canonicity(cand.base, d, cand.added)) {
            emit(static_cast<const AttributeSet&>(d));
            push_children(d, cand.added);
        }
    }
}

/// The lectic successor of `b` among the closed sets of `close`, or the full
/// set when there is none.
template <class Closure>
AttributeSet next_closure(Closure&& close, const AttributeSet& b) {
    int n = b.capacity();
    AttributeSet work = b;
    for (int i = n - 1; i >= 0; --i) {
        if (work.contains(i)) {
            work.remove(i);
        } else {
            AttributeSet with = work;
            with.add(i);
            AttributeSet d = close(with);
            if (canonicity(work, d, i)) return d;
        }
    }
    return AttributeSet::full(n);
}

/// Enumerates all subsets of {0..n-1} in lectic order (attribute 0 is the
/// most significant digit of the characteristic vector).
template <class Fn>
void for_each_subset_lectic(int n, Fn&& fn) {
    if (n > 30) throw std::invalid_argument("for_each_subset_lectic: n over limit");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        AttributeSet s(n);
        for (int i = 0; i < n; ++i)
            if ((mask >> (n - 1 - i)) & 1u) s.add(i);
        fn(static_cast<const AttributeSet&>(s));
    }
}

/// Full powerset sweep collecting every fixpoint of `close`; the test oracle
/// for the enumerators. Refuses n > 20.
template <class Closure>
std::vector<AttributeSet> all_closed_subsets_naive(Closure&& close, int n) {
    if (n > 20) throw std::invalid_argument("all_closed_subsets_naive: n over limit");
    std::vector<AttributeSet> out;
    for_each_subset_lectic(n, [&](const AttributeSet& s) {
        if (close(s) == s) out.push_back(s);
    });
    return out;
}

}  // namespace lincbo
