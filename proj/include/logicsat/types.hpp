#pragma once

// Core CNF value types: literals, clauses, XOR (parity) constraints, and the
// mixed formula that stores both. Everything is a plain value; formulas can
// be copied freely and never share state.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

namespace logicsat {

// A literal is a 1-based variable index with a sign, stored as the signed
// DIMACS code (+v or -v, never 0).
class Lit {
  public:
    Lit() = default;
    explicit Lit(int code) : code_(code) {
        if (code == 0)
            throw std::invalid_argument("literal code must be nonzero");
    }
    static Lit make(int var, bool positive) {
        return Lit(positive ? var : -var);
    }

    int  var() const { return code_ < 0 ? -code_ : code_; }
    bool positive() const { return code_ > 0; }
    int  code() const { return code_; }
    bool valid() const { return code_ != 0; }

    Lit operator-() const {
        Lit l;
        l.code_ = -code_;
        return l;
    }

    friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
    friend bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }
    // Orders by variable first, negative before positive within a variable.
    friend bool operator<(Lit a, Lit b) {
        int va = a.var(), vb = b.var();
        return va != vb ? va < vb : a.code_ < b.code_;
    }

  private:
    int code_ = 0;
};

// A disjunction of literals, normalized at construction: literals sorted by
// variable, duplicates dropped, and clauses containing l and -l flagged as
// tautologies. The empty clause is representable and means "unsatisfiable".
class Clause {
  public:
    Clause() = default;
    explicit Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
        std::sort(lits_.begin(), lits_.end());
        lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
        for (size_t i = 0; i + 1 < lits_.size(); ++i)
            if (lits_[i].var() == lits_[i + 1].var())
                tautology_ = true;
    }

    const std::vector<Lit>& lits() const { return lits_; }
    size_t                  size() const { return lits_.size(); }
    bool                    empty() const { return lits_.empty(); }
    bool                    is_tautology() const { return tautology_; }
    Lit                     operator[](size_t i) const { return lits_[i]; }

    bool contains(Lit l) const {
        return std::binary_search(lits_.begin(), lits_.end(), l);
    }
    // Literal-set inclusion; both clauses must be normalized.
    bool subset_of(const Clause& other) const {
        return std::includes(other.lits_.begin(), other.lits_.end(),
                             lits_.begin(), lits_.end());
    }

    friend bool operator==(const Clause& a, const Clause& b) {
        return a.lits_ == b.lits_;
    }

  private:
    std::vector<Lit> lits_;
    bool             tautology_ = false;
};

// Parity constraint x1 ^ x2 ^ ... ^ xk = parity over distinct variables,
// kept sorted. Constraints of arity < 2 are never stored; CnfFormula::add_xor
// converts them to unit or empty clauses instead.
struct XorConstraint {
    std::vector<int> vars;    // distinct, ascending
    bool             parity;  // true: XOR of values must be 1

    XorConstraint(std::vector<int> vs, bool p) : vars(std::move(vs)), parity(p) {
        assert(std::is_sorted(vars.begin(), vars.end()));
        assert(std::adjacent_find(vars.begin(), vars.end()) == vars.end());
        assert(vars.size() >= 2);
    }

    size_t arity() const { return vars.size(); }

    friend bool operator==(const XorConstraint& a, const XorConstraint& b) {
        return a.parity == b.parity && a.vars == b.vars;
    }
};

// The clausal image of an XOR constraint: the 2^(k-1) clauses that each
// forbid one wrong-parity assignment. Clauses with an even number of negated
// variables encode parity 1, odd counts encode parity 0.
inline std::vector<Clause> xor_clausal_image(const XorConstraint& x) {
    const size_t        k = x.arity();
    std::vector<Clause> out;
    out.reserve(size_t(1) << (k - 1));
    for (uint32_t mask = 0; mask < (uint32_t(1) << k); ++mask) {
        bool neg_parity_odd = (__builtin_popcount(mask) & 1) != 0;
        // parity 1 -> even negation counts; parity 0 -> odd.
        if (neg_parity_odd == x.parity)
            continue;
        std::vector<Lit> lits;
        lits.reserve(k);
        for (size_t i = 0; i < k; ++i)
            lits.push_back(Lit::make(x.vars[i], (mask & (uint32_t(1) << i)) == 0));
        out.emplace_back(std::move(lits));
    }
    return out;
}

// A mixed store of clauses plus XOR constraints over variables 1..num_vars.
// An assignment satisfies the formula iff it satisfies every clause and
// every XOR parity.
struct CnfFormula {
    int                        num_vars = 0;
    std::vector<Clause>        clauses;
    std::vector<XorConstraint> xors;

    void ensure_var(int v) {
        if (v > num_vars)
            num_vars = v;
    }

    bool empty() const { return clauses.empty() && xors.empty(); }

    bool has_empty_clause() const {
        for (const Clause& c : clauses)
            if (c.empty())
                return true;
        return false;
    }

    // Adds a normalized clause; tautologies are dropped. Returns true if the
    // clause was stored.
    bool add_clause(std::vector<Lit> lits) {
        Clause c(std::move(lits));
        if (c.is_tautology())
            return false;
        for (Lit l : c.lits())
            ensure_var(l.var());
        clauses.push_back(std::move(c));
        return true;
    }

    void add_clause(Clause c) {
        if (c.is_tautology())
            return;
        for (Lit l : c.lits())
            ensure_var(l.var());
        clauses.push_back(std::move(c));
    }

    // Adds the XOR of the given literals = rhs, normalizing to positive
    // variables plus a parity bit: a negated literal flips the parity, a
    // repeated variable cancels its pair. Degenerate arities become clauses:
    // arity 1 a unit, arity 0 with parity 1 the empty clause.
    void add_xor(const std::vector<Lit>& lits, bool rhs) {
        std::vector<int> vs;
        vs.reserve(lits.size());
        bool parity = rhs;
        for (Lit l : lits) {
            vs.push_back(l.var());
            if (!l.positive())
                parity = !parity;
        }
        std::sort(vs.begin(), vs.end());
        std::vector<int> kept;
        for (size_t i = 0; i < vs.size();) {
            size_t j = i;
            while (j < vs.size() && vs[j] == vs[i])
                ++j;
            if ((j - i) % 2 == 1)
                kept.push_back(vs[i]);
            i = j;
        }
        add_normalized_xor(std::move(kept), parity);
    }

    // Same, but over variables already known distinct-or-cancelled.
    void add_normalized_xor(std::vector<int> vars, bool parity) {
        if (vars.empty()) {
            if (parity)
                clauses.emplace_back();  // 0 = 1: unsatisfiable
            return;                      // 0 = 0: trivially true
        }
        if (vars.size() == 1) {
            add_clause({Lit::make(vars[0], parity)});
            return;
        }
        for (int v : vars)
            ensure_var(v);
        xors.emplace_back(std::move(vars), parity);
    }
};

// Hash for normalized literal sets (used by clause indexes).
struct LitVecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 0xcbf29ce484222325ULL;
        for (int x : v) {
            h ^= size_t(uint32_t(x));
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

inline std::vector<int> clause_key(const Clause& c) {
    std::vector<int> key;
    key.reserve(c.size());
    for (Lit l : c.lits())
        key.push_back(l.code());
    return key;
}

}  // namespace logicsat
