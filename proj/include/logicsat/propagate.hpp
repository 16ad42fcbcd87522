#pragma once

// Unit propagation over mixed clause/XOR formulas, residual-formula
// construction, and total-model evaluation. This is the splitter-side
// propagation; the CDCL backend keeps its own watched-literal engine.

#include <stdexcept>
#include <vector>

#include "logicsat/assignment.hpp"
#include "logicsat/types.hpp"

namespace logicsat {

struct PropagationResult {
    bool   conflict = false;
    Reason conflict_at;  // violated clause/XOR when conflict

    bool fixpoint() const { return !conflict; }
};

// Runs the clause unit rule (all literals but one false => assign the rest)
// and the XOR unit rule (all variables but one assigned => assign the last
// to satisfy the parity) to fixpoint or first conflict. Propagated variables
// record their antecedent in the assignment.
inline PropagationResult propagate(const CnfFormula& f, Assignment& a) {
    if (a.num_vars() < f.num_vars)
        a.resize(f.num_vars);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
            const Clause& c = f.clauses[ci];
            if (c.is_tautology())
                continue;
            Lit  unit;
            int  unassigned = 0;
            bool satisfied  = false;
            for (Lit l : c.lits()) {
                Value v = a.value(l);
                if (v == Value::True) {
                    satisfied = true;
                    break;
                }
                if (v == Value::Unassigned) {
                    ++unassigned;
                    unit = l;
                    if (unassigned > 1)
                        break;
                }
            }
            if (satisfied || unassigned > 1)
                continue;
            if (unassigned == 0)
                return {true, Reason::clause(int(ci))};
            a.assign(unit, Reason::clause(int(ci)));
            changed = true;
        }
        for (size_t xi = 0; xi < f.xors.size(); ++xi) {
            const XorConstraint& x = f.xors[xi];
            int  last       = 0;
            int  unassigned = 0;
            bool acc        = false;
            for (int v : x.vars) {
                Value val = a.value(v);
                if (val == Value::Unassigned) {
                    ++unassigned;
                    last = v;
                    if (unassigned > 1)
                        break;
                } else if (val == Value::True) {
                    acc = !acc;
                }
            }
            if (unassigned > 1)
                continue;
            if (unassigned == 0) {
                if (acc != x.parity)
                    return {true, Reason::xor_c(int(xi))};
                continue;
            }
            a.assign(Lit::make(last, acc != x.parity), Reason::xor_c(int(xi)));
            changed = true;
        }
    }
    return {};
}

namespace detail {
// True when no clause or XOR is unit or violated under `a`.
inline bool is_conflict_free_fixpoint(const CnfFormula& f, const Assignment& a) {
    for (const Clause& c : f.clauses) {
        if (c.is_tautology())
            continue;
        int  unassigned = 0;
        bool satisfied  = false;
        for (Lit l : c.lits()) {
            Value v = a.value(l);
            if (v == Value::True) {
                satisfied = true;
                break;
            }
            if (v == Value::Unassigned)
                ++unassigned;
        }
        if (!satisfied && unassigned <= 1)
            return false;
    }
    for (const XorConstraint& x : f.xors) {
        int  unassigned = 0;
        bool acc        = false;
        for (int v : x.vars) {
            Value val = a.value(v);
            if (val == Value::Unassigned)
                ++unassigned;
            else if (val == Value::True)
                acc = !acc;
        }
        if (unassigned == 1)
            return false;
        if (unassigned == 0 && acc != x.parity)
            return false;
    }
    return true;
}
}  // namespace detail

// Returns the formula over the unassigned variables: satisfied clauses
// removed, false literals deleted, XORs reduced (assigned-true variables
// flip the parity). Variable indices are preserved, never renumbered.
// Rejects assignments that are not conflict-free propagation fixpoints.
inline CnfFormula residual(const CnfFormula& f, const Assignment& a) {
    if (!detail::is_conflict_free_fixpoint(f, a))
        throw std::invalid_argument("residual: assignment is not a conflict-free fixpoint");
    CnfFormula out;
    out.num_vars = f.num_vars;
    for (const Clause& c : f.clauses) {
        if (c.is_tautology())
            continue;
        bool             satisfied = false;
        std::vector<Lit> rest;
        for (Lit l : c.lits()) {
            Value v = a.value(l);
            if (v == Value::True) {
                satisfied = true;
                break;
            }
            if (v == Value::Unassigned)
                rest.push_back(l);
        }
        if (!satisfied)
            out.clauses.emplace_back(std::move(rest));
    }
    for (const XorConstraint& x : f.xors) {
        std::vector<int> rest;
        bool             parity = x.parity;
        for (int v : x.vars) {
            Value val = a.value(v);
            if (val == Value::Unassigned)
                rest.push_back(v);
            else if (val == Value::True)
                parity = !parity;
        }
        if (rest.empty())
            continue;  // satisfied (fixpoint precondition rules out violation)
        out.add_normalized_xor(std::move(rest), parity);
    }
    return out;
}

// True iff every clause has a true literal and every XOR parity holds.
// The model must be total over the formula's variables.
inline bool evaluate(const CnfFormula& f, const Model& model) {
    if (int(model.size()) < f.num_vars + 1)
        throw std::invalid_argument("evaluate: model does not cover all variables");
    for (const Clause& c : f.clauses) {
        bool sat = false;
        for (Lit l : c.lits())
            if (model[size_t(l.var())] == l.positive()) {
                sat = true;
                break;
            }
        if (!sat)
            return false;
    }
    for (const XorConstraint& x : f.xors) {
        bool acc = false;
        for (int v : x.vars)
            if (model[size_t(v)])
                acc = !acc;
        if (acc != x.parity)
            return false;
    }
    return true;
}

}  // namespace logicsat
