#pragma once

#include <stdexcept>
#include <vector>

#include "lincbo/context.hpp"
#include "lincbo/enumeration.hpp"
#include "lincbo/implications.hpp"

namespace lincbo {

/// Fixpoint of the strict-premise expansion: conclusions are merged only for
/// premises that are proper subsets of the current set. Differs from
/// naive_closure exactly on sets whose closure chain hits a premise with
/// equality.
inline AttributeSet tilde_closure_naive(const Theory& theory, AttributeSet z) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j < theory.size(); ++j) {
            const Implication& imp = theory[j];
            if (imp.premise.is_proper_subset_of(z) && !imp.conclusion.is_subset_of(z)) {
                z |= imp.conclusion;
                changed = true;
            }
        }
    }
    return z;
}

/// Pseudo-intents straight from the definition: every subset is classified
/// in lectic order (which extends inclusion, so condition (ii) only refers to
/// already-classified sets). Deliberately naive; refuses n > 20.
inline std::vector<AttributeSet> pseudo_intents_bruteforce(const FormalContext& ctx) {
    int n = ctx.n_attributes();
    if (n > 20) throw std::invalid_argument("pseudo_intents_bruteforce: capacity over limit");
    std::vector<AttributeSet> pseudos;
    std::vector<AttributeSet> pseudo_closures;
    for_each_subset_lectic(n, [&](const AttributeSet& s) {
        AttributeSet closed = ctx.closure_downup(s);
        if (closed == s) return;  // intent
        for (std::size_t k = 0; k < pseudos.size(); ++k) {
            if (pseudos[k].is_proper_subset_of(s) && !pseudo_closures[k].is_subset_of(s)) return;
        }
        pseudos.push_back(s);
        pseudo_closures.push_back(std::move(closed));
    });
    return pseudos;
}

/// The Duquenne-Guigues basis by brute force: P => P^downup over all
/// pseudo-intents, in lectic order of the premises.
inline Theory dg_basis_bruteforce(const FormalContext& ctx) {
    Theory theory(ctx.n_attributes());
    for (const AttributeSet& p : pseudo_intents_bruteforce(ctx))
        theory.add(p, ctx.closure_downup(p));
    return theory;
}

}  // namespace lincbo
