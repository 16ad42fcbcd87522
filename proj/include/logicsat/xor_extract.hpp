#pragma once

// Detection of XOR constraints hidden in a clause set: clauses are grouped
// by variable set, and a group holding every sign pattern of one parity
// class (all even negation counts, or all odd) is the clausal image of an
// XOR constraint. Even counts encode parity 1, odd counts parity 0.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "logicsat/types.hpp"

namespace logicsat {

struct ExtractionReport {
    std::map<int, int>        xors_found;  // arity -> count
    int                       clauses_consumed = 0;
    std::chrono::microseconds scan_time{0};

    int total_found() const {
        int n = 0;
        for (auto& [arity, cnt] : xors_found)
            n += cnt;
        return n;
    }
};

// Replaces every complete parity-class clause group of arity 2..max_arity
// with an XorConstraint. Consumed clauses are removed (one per sign
// pattern); extra clauses over the same variable set remain. A group
// containing both full parity classes forbids every assignment and yields
// the empty clause.
inline std::pair<CnfFormula, ExtractionReport> extract_xors(const CnfFormula& f,
                                                            int max_arity = 4) {
    if (max_arity < 2 || max_arity > 6)
        throw std::invalid_argument("extract_xors: max_arity must be in [2, 6]");
    auto             t0 = std::chrono::steady_clock::now();
    ExtractionReport report;

    // Group clause indices by sorted variable set; within a group keep the
    // first clause index per distinct sign pattern (duplicates count once).
    // Pattern bit i is set when the literal over the i-th variable is
    // negative.
    struct Group {
        std::map<uint32_t, size_t> pattern_to_clause;
    };
    std::unordered_map<std::vector<int>, Group, LitVecHash> groups;
    for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
        const Clause& c = f.clauses[ci];
        if (c.is_tautology() || c.size() < 2 || int(c.size()) > max_arity)
            continue;
        std::vector<int> key;
        uint32_t         pattern = 0;
        key.reserve(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            key.push_back(c[i].var());
            if (!c[i].positive())
                pattern |= uint32_t(1) << i;
        }
        Group& g = groups[key];
        g.pattern_to_clause.emplace(pattern, ci);  // keeps the first index
    }

    // Deterministic scan order: ascending arity, then variable set.
    std::vector<const std::vector<int>*> keys;
    keys.reserve(groups.size());
    for (auto& [key, g] : groups)
        keys.push_back(&key);
    std::sort(keys.begin(), keys.end(),
              [](const std::vector<int>* a, const std::vector<int>* b) {
                  if (a->size() != b->size())
                      return a->size() < b->size();
                  return *a < *b;
              });

    std::vector<bool>          consumed(f.clauses.size(), false);
    std::vector<XorConstraint> found;
    bool                       contradiction = false;
    for (const std::vector<int>* keyp : keys) {
        const std::vector<int>& vars = *keyp;
        const Group&            g    = groups[vars];
        const size_t            k    = vars.size();
        const size_t            full = size_t(1) << (k - 1);
        size_t even = 0, odd = 0;
        for (auto& [pattern, ci] : g.pattern_to_clause)
            (__builtin_popcount(pattern) % 2 == 0 ? even : odd)++;
        // even class complete -> parity 1; odd class complete -> parity 0
        for (int parity = 1; parity >= 0; --parity) {
            size_t present = parity ? even : odd;
            if (present != full)
                continue;
            for (auto& [pattern, ci] : g.pattern_to_clause) {
                bool is_even = __builtin_popcount(pattern) % 2 == 0;
                if (is_even == bool(parity)) {
                    consumed[ci] = true;
                    ++report.clauses_consumed;
                }
            }
            report.xors_found[int(k)]++;
            found.emplace_back(vars, bool(parity));
        }
        if (even == full && odd == full)
            contradiction = true;
    }

    CnfFormula out;
    out.num_vars = f.num_vars;
    for (size_t ci = 0; ci < f.clauses.size(); ++ci)
        if (!consumed[ci])
            out.clauses.push_back(f.clauses[ci]);
    out.xors = f.xors;
    if (contradiction) {
        // Both parity classes over one variable set forbid all assignments.
        out.clauses.emplace_back();
    } else {
        for (XorConstraint& x : found) {
            if (std::find(out.xors.begin(), out.xors.end(), x) == out.xors.end())
                out.xors.push_back(std::move(x));
        }
    }

    report.scan_time =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
    return {std::move(out), std::move(report)};
}

}  // namespace logicsat
