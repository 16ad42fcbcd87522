#pragma once

// Subproblem simplification: equivalent-literal detection over the binary
// implication graph (arity-2 XOR constraints are equivalences and feed the
// same graph), substitution, and backward subsumption, iterated to fixpoint.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "logicsat/types.hpp"

namespace logicsat {

// Maps each variable to a representative literal; identity when unbound.
// Idempotent: representatives map to themselves.
struct SubstitutionMap {
    std::vector<Lit> bindings;  // index 0 unused

    explicit SubstitutionMap(int num_vars = 0) { resize(num_vars); }

    void resize(int num_vars) {
        int old = int(bindings.size());
        bindings.resize(size_t(num_vars) + 1);
        for (int v = std::max(old, 1); v <= num_vars; ++v)
            bindings[size_t(v)] = Lit(v);
    }

    int num_vars() const { return int(bindings.size()) - 1; }

    Lit rep(int var) const { return bindings[size_t(var)]; }
    Lit rep(Lit l) const {
        Lit r = bindings[size_t(l.var())];
        return l.positive() ? r : -r;
    }
    bool is_identity(int var) const { return bindings[size_t(var)] == Lit(var); }

    bool trivial() const {
        for (int v = 1; v <= num_vars(); ++v)
            if (!is_identity(v))
                return false;
        return true;
    }

    int merged_count() const {
        int n = 0;
        for (int v = 1; v <= num_vars(); ++v)
            if (!is_identity(v))
                ++n;
        return n;
    }

    // this := other after this (apply `other` to every representative).
    void compose(const SubstitutionMap& other) {
        for (size_t v = 1; v < bindings.size(); ++v)
            bindings[v] = other.rep(bindings[v]);
    }
};

struct EquivalenceResult {
    bool            contradiction = false;  // some literal equivalent to its negation
    SubstitutionMap map;
};

// Builds the implication graph over literals from binary clauses
// ((a v b) contributes ~a -> b and ~b -> a; an arity-2 XOR is an
// (anti-)equivalence) and collapses strongly connected components. Each
// class maps to the positive literal of its smallest variable.
inline EquivalenceResult find_equivalent_literals(const CnfFormula& f) {
    const int n      = f.num_vars;
    auto      lit_ix = [](Lit l) { return size_t(2 * (l.var() - 1) + (l.positive() ? 0 : 1)); };
    auto      ix_lit = [](size_t ix) {
        return Lit::make(int(ix / 2) + 1, ix % 2 == 0);
    };

    std::vector<std::vector<uint32_t>> adj(size_t(2) * size_t(std::max(n, 0)));
    auto add_edge = [&](Lit a, Lit b) { adj[lit_ix(a)].push_back(uint32_t(lit_ix(b))); };
    auto add_equiv = [&](Lit a, Lit b) {
        add_edge(a, b);
        add_edge(b, a);
        add_edge(-a, -b);
        add_edge(-b, -a);
    };
    for (const Clause& c : f.clauses) {
        if (c.size() != 2 || c.is_tautology())
            continue;
        add_edge(-c[0], c[1]);
        add_edge(-c[1], c[0]);
    }
    for (const XorConstraint& x : f.xors) {
        if (x.arity() != 2)
            continue;
        Lit a(x.vars[0]), b(x.vars[1]);
        add_equiv(a, x.parity ? -b : b);
    }

    // Iterative Tarjan SCC.
    const size_t          N = adj.size();
    std::vector<uint32_t> index(N, 0), low(N, 0), comp(N, 0);
    std::vector<uint8_t>  on_stack(N, 0), visited(N, 0);
    std::vector<uint32_t> stack;
    uint32_t              next_index = 1, comp_count = 0;
    struct Frame {
        uint32_t node;
        size_t   edge;
    };
    std::vector<Frame> frames;
    for (uint32_t root = 0; root < N; ++root) {
        if (visited[root])
            continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& fr = frames.back();
            if (fr.edge == 0) {
                visited[fr.node]  = 1;
                index[fr.node]    = next_index;
                low[fr.node]      = next_index;
                ++next_index;
                stack.push_back(fr.node);
                on_stack[fr.node] = 1;
            }
            bool descended = false;
            while (fr.edge < adj[fr.node].size()) {
                uint32_t to = adj[fr.node][fr.edge++];
                if (!visited[to]) {
                    frames.push_back({to, 0});
                    descended = true;
                    break;
                }
                if (on_stack[to])
                    low[fr.node] = std::min(low[fr.node], index[to]);
            }
            if (descended)
                continue;
            if (low[fr.node] == index[fr.node]) {
                ++comp_count;
                for (;;) {
                    uint32_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w]     = comp_count;
                    if (w == fr.node)
                        break;
                }
            }
            uint32_t done = fr.node;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().node] = std::min(low[frames.back().node], low[done]);
        }
    }

    EquivalenceResult result;
    result.map.resize(n);
    if (n == 0)
        return result;

    std::vector<std::vector<uint32_t>> members(comp_count + 1);
    for (uint32_t ix = 0; ix < N; ++ix)
        members[comp[ix]].push_back(ix);
    for (uint32_t cid = 1; cid <= comp_count; ++cid) {
        const auto& lits = members[cid];
        if (lits.size() < 2)
            continue;
        int min_var = 0;
        for (uint32_t ix : lits) {
            Lit l = ix_lit(ix);
            if (min_var == 0 || l.var() < min_var)
                min_var = l.var();
            if (comp[ix] == comp[lit_ix(-l)]) {
                result.contradiction = true;
                return result;
            }
        }
        // Process only the component holding the positive literal of the
        // smallest variable; the mirror component follows by symmetry.
        if (comp[lit_ix(Lit(min_var))] != cid)
            continue;
        for (uint32_t ix : lits) {
            Lit l = ix_lit(ix);
            result.map.bindings[size_t(l.var())] = Lit::make(min_var, l.positive());
        }
    }
    return result;
}

// Rewrites every literal to its representative. Clauses are renormalized
// (tautologies dropped); XOR constraints are rewritten with parity flips
// for negative representatives and pair cancellation for repeats.
inline CnfFormula apply_substitution(const CnfFormula& f, const SubstitutionMap& m) {
    CnfFormula out;
    out.num_vars = f.num_vars;
    for (const Clause& c : f.clauses) {
        std::vector<Lit> lits;
        lits.reserve(c.size());
        for (Lit l : c.lits())
            lits.push_back(m.rep(l));
        Clause mapped(std::move(lits));
        if (!mapped.is_tautology())
            out.clauses.push_back(std::move(mapped));
    }
    for (const XorConstraint& x : f.xors) {
        std::vector<Lit> lits;
        lits.reserve(x.arity());
        for (int v : x.vars)
            lits.push_back(m.rep(v));
        out.add_xor(lits, x.parity);
    }
    return out;
}

// Removes every clause whose literal set is a strict superset of another
// clause; among identical clauses the first occurrence stays. XOR
// constraints are untouched. The result is scan-order independent.
inline CnfFormula backward_subsume(const CnfFormula& f, int* removed_count = nullptr) {
    const size_t n = f.clauses.size();
    std::vector<bool> removed(n, false);

    // Empty clause subsumes everything else.
    size_t first_empty = n;
    for (size_t i = 0; i < n; ++i)
        if (f.clauses[i].empty()) {
            first_empty = i;
            break;
        }
    if (first_empty < n) {
        for (size_t i = 0; i < n; ++i)
            removed[i] = i != first_empty;
    } else {
        std::unordered_map<int, std::vector<uint32_t>> occ;  // lit code -> clause indices
        for (size_t i = 0; i < n; ++i)
            for (Lit l : f.clauses[i].lits())
                occ[l.code()].push_back(uint32_t(i));
        for (size_t j = 0; j < n; ++j) {
            const Clause& sub = f.clauses[j];
            if (sub.is_tautology())
                continue;
            // Scan the occurrence list of sub's least frequent literal.
            int    best_lit  = 0;
            size_t best_size = SIZE_MAX;
            for (Lit l : sub.lits()) {
                size_t s = occ[l.code()].size();
                if (s < best_size) {
                    best_size = s;
                    best_lit  = l.code();
                }
            }
            for (uint32_t i : occ[best_lit]) {
                if (i == j || removed[i])
                    continue;
                const Clause& sup = f.clauses[i];
                if (sup.size() < sub.size())
                    continue;
                if (sup.size() == sub.size() && i < j)
                    continue;  // equal sets: keep the earlier clause
                if (sub.subset_of(sup))
                    removed[i] = true;
            }
        }
    }

    CnfFormula out;
    out.num_vars = f.num_vars;
    int cnt      = 0;
    for (size_t i = 0; i < n; ++i) {
        if (removed[i])
            ++cnt;
        else
            out.clauses.push_back(f.clauses[i]);
    }
    out.xors = f.xors;
    if (removed_count)
        *removed_count = cnt;
    return out;
}

struct SimplifyOutcome {
    enum class Status { Simplified, ProvenUnsat };

    CnfFormula      formula;
    SubstitutionMap substitution;
    Status          status           = Status::Simplified;
    int             clauses_subsumed = 0;
    int             literals_merged  = 0;
};

// Iterates (find_equivalent_literals; apply_substitution; backward_subsume)
// to fixpoint. The composed substitution supports model reconstruction: a
// model of the simplified formula extends to the original by giving each
// merged variable the value of its representative literal.
inline SimplifyOutcome simplify(const CnfFormula& f) {
    SimplifyOutcome out;
    out.formula = f;
    out.substitution.resize(f.num_vars);
    for (;;) {
        EquivalenceResult eq = find_equivalent_literals(out.formula);
        if (eq.contradiction) {
            out.formula.clauses.emplace_back();
            out.status = SimplifyOutcome::Status::ProvenUnsat;
            return out;
        }
        bool merged = !eq.map.trivial();
        if (merged) {
            out.literals_merged += eq.map.merged_count();
            out.formula = apply_substitution(out.formula, eq.map);
            out.substitution.compose(eq.map);
        }
        int removed = 0;
        out.formula = backward_subsume(out.formula, &removed);
        out.clauses_subsumed += removed;
        if (out.formula.has_empty_clause()) {
            out.status = SimplifyOutcome::Status::ProvenUnsat;
            return out;
        }
        if (!merged && removed == 0)
            return out;
    }
}

// Extends a model of the simplified formula back to the original variables.
inline void reconstruct_model(const SubstitutionMap& m, Model& model) {
    for (int v = 1; v <= m.num_vars(); ++v) {
        Lit r = m.rep(v);
        if (r != Lit(v))
            model[size_t(v)] = model[size_t(r.var())] == r.positive();
    }
}

}  // namespace logicsat
