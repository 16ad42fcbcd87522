#pragma once

// Brute-force satisfiability and entailment checking, capped at 24 variables.
// This is the ground-truth generator for the test suites and debug modes; it
// is never on the solving hot path.

#include <optional>
#include <stdexcept>
#include <vector>

#include "logicsat/propagate.hpp"
#include "logicsat/types.hpp"

namespace logicsat {
namespace oracle {

constexpr int kMaxVars = 24;

struct OracleVerdict {
    bool  sat = false;
    Model model;  // present iff sat
};

// Enumerates all 2^num_vars assignments in counting order (bit i-1 of the
// counter is the value of variable i); returns the first model found.
inline OracleVerdict brute_force_sat(const CnfFormula& f) {
    if (f.num_vars > kMaxVars)
        throw std::invalid_argument("oracle: formula exceeds the 24-variable cap");
    const uint32_t n = uint32_t(f.num_vars);
    Model          model(size_t(n) + 1, false);
    for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) {
        for (uint32_t v = 1; v <= n; ++v)
            model[v] = (bits >> (v - 1)) & 1;
        if (evaluate(f, model))
            return {true, model};
    }
    return {false, {}};
}

// True iff premise & antecedent entail every consequent literal, checked
// literal by literal: premise & antecedent & ~m must be UNSAT for each m.
inline bool entails(const CnfFormula& premise, const std::vector<Lit>& antecedent,
                    const std::vector<Lit>& consequent) {
    if (consequent.empty())
        throw std::invalid_argument("entails: empty consequent");
    for (Lit m : consequent) {
        CnfFormula query = premise;
        for (Lit l : antecedent)
            query.add_clause({l});
        query.add_clause({-m});
        if (brute_force_sat(query).sat)
            return false;
    }
    return true;
}

}  // namespace oracle
}  // namespace logicsat
