#pragma once

// The seven reasoning-rule patterns over XOR constraints plus clauses, their
// licensed consequences, and the clausal encoding of those consequences.
//
//   (1) A^B^C=1, (A v D)(~B v D)                       |- C -> D
//   (2) A^B^C=1, (A v B)(A v C)                        |- A
//   (3) A^B^C=1, (A v B)(A v C)(B v C)                 |- A & B & C
//   (4) A^B^C^D=1, (A v B)(A v C)(B v C)               |- ~D -> A & B & C
//   (5) A^B^C=1, all six (X v Y v D)/(~X v ~Y v ~D)    |- ~D -> A & B & C
//   (6) A^B^C^D=1, (A v B v E)(A v C v E)(B v C v E)   |- ~D & ~E -> A & B & C
//   (7) A^B^C^D=1, (~A v ~B v ~E)(~A v ~C v ~E)(~B v ~C v ~E)
//                                                      |- D & E -> ~A & ~B & ~C
//
// Pattern letters bind to literals over distinct variables. An XOR premise
// over literals l1..lk = 1 is satisfied by a stored XorConstraint over the
// same variables with parity p exactly when p XOR (#negative bindings mod 2)
// = 1. Symmetric positions are canonicalized by ascending variable index to
// suppress duplicate matches.

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "logicsat/oracle.hpp"
#include "logicsat/types.hpp"

namespace logicsat {

struct RuleMatch {
    int                rule_id = 0;  // 1..7
    std::array<Lit, 5> letters;      // A, B, C, D, E; unused trail entries invalid

    int letter_count() const {
        switch (rule_id) {
            case 2:
            case 3: return 3;
            case 1:
            case 4:
            case 5: return 4;
            default: return 5;
        }
    }

    Lit a() const { return letters[0]; }
    Lit b() const { return letters[1]; }
    Lit c() const { return letters[2]; }
    Lit d() const { return letters[3]; }
    Lit e() const { return letters[4]; }

    friend bool operator==(const RuleMatch& x, const RuleMatch& y) {
        if (x.rule_id != y.rule_id)
            return false;
        for (int i = 0; i < x.letter_count(); ++i)
            if (x.letters[size_t(i)] != y.letters[size_t(i)])
                return false;
        return true;
    }
    friend bool operator<(const RuleMatch& x, const RuleMatch& y) {
        if (x.rule_id != y.rule_id)
            return x.rule_id < y.rule_id;
        for (int i = 0; i < x.letter_count(); ++i) {
            if (x.letters[size_t(i)] != y.letters[size_t(i)])
                return x.letters[size_t(i)].code() < y.letters[size_t(i)].code();
        }
        return false;
    }
};

// An implication licensed by a rule match: antecedent literals (possibly
// none) imply every consequent literal.
struct Consequence {
    std::vector<Lit> antecedent;
    std::vector<Lit> consequent;
    RuleMatch        source;
};

inline Consequence consequence_of(const RuleMatch& m) {
    switch (m.rule_id) {
        case 1: return {{m.c()}, {m.d()}, m};
        case 2: return {{}, {m.a()}, m};
        case 3: return {{}, {m.a(), m.b(), m.c()}, m};
        case 4:
        case 5: return {{-m.d()}, {m.a(), m.b(), m.c()}, m};
        case 6: return {{-m.d(), -m.e()}, {m.a(), m.b(), m.c()}, m};
        case 7: return {{m.d(), m.e()}, {-m.a(), -m.b(), -m.c()}, m};
        default: throw std::logic_error("consequence_of: bad rule id");
    }
}

// The premise clauses named by a rule (excluding the XOR constraint).
inline std::vector<std::vector<Lit>> premise_clauses(const RuleMatch& m) {
    Lit A = m.a(), B = m.b(), C = m.c(), D = m.d(), E = m.e();
    switch (m.rule_id) {
        case 1: return {{A, D}, {-B, D}};
        case 2: return {{A, B}, {A, C}};
        case 3:
        case 4: return {{A, B}, {A, C}, {B, C}};
        case 5:
            return {{A, B, D}, {-A, -B, -D}, {A, C, D}, {-A, -C, -D}, {B, C, D}, {-B, -C, -D}};
        case 6: return {{A, B, E}, {A, C, E}, {B, C, E}};
        case 7: return {{-A, -B, -E}, {-A, -C, -E}, {-B, -C, -E}};
        default: throw std::logic_error("premise_clauses: bad rule id");
    }
}

// The literals under the rule's XOR premise (XOR of these = 1).
inline std::vector<Lit> premise_xor_literals(const RuleMatch& m) {
    if (m.rule_id == 4 || m.rule_id == 6 || m.rule_id == 7)
        return {m.a(), m.b(), m.c(), m.d()};
    return {m.a(), m.b(), m.c()};
}

namespace detail {

// Lookup indexes over a formula's clauses, keyed by normalized literal sets.
struct ClauseIndex {
    std::unordered_set<std::vector<int>, LitVecHash>                   sets;
    std::unordered_map<int, std::vector<Lit>>                          binary_partners;
    std::unordered_map<std::vector<int>, std::vector<Lit>, LitVecHash> ternary_thirds;

    explicit ClauseIndex(const CnfFormula& f) {
        for (const Clause& c : f.clauses) {
            if (c.is_tautology())
                continue;
            auto [it, fresh] = sets.insert(clause_key(c));
            if (!fresh)
                continue;
            if (c.size() == 2) {
                binary_partners[c[0].code()].push_back(c[1]);
                binary_partners[c[1].code()].push_back(c[0]);
            } else if (c.size() == 3) {
                for (int drop = 0; drop < 3; ++drop) {
                    std::vector<int> key;
                    Lit              third;
                    for (int i = 0; i < 3; ++i) {
                        if (i == drop)
                            third = c[size_t(i)];
                        else
                            key.push_back(c[size_t(i)].code());
                    }
                    ternary_thirds[key].push_back(third);
                }
            }
        }
    }

    bool has(std::vector<Lit> lits) const {
        Clause c(std::move(lits));
        return sets.count(clause_key(c)) != 0;
    }

    const std::vector<Lit>* partners(Lit l) const {
        auto it = binary_partners.find(l.code());
        return it == binary_partners.end() ? nullptr : &it->second;
    }

    const std::vector<Lit>* thirds(Lit l1, Lit l2) const {
        std::vector<int> key{l1.code(), l2.code()};
        if (Lit(key[1]) < Lit(key[0]))
            std::swap(key[0], key[1]);
        auto it = ternary_thirds.find(key);
        return it == ternary_thirds.end() ? nullptr : &it->second;
    }
};

// Sign of the final XOR letter, given that the count of negative bindings
// must satisfy parity XOR (#neg mod 2) = 1.
inline bool forced_positive(bool xor_parity, int neg_count_so_far) {
    int need_odd = xor_parity ? 0 : 1;  // required #neg parity
    return (neg_count_so_far % 2) == need_odd;
}

}  // namespace detail

// Enumerates every canonical binding of the seven patterns against the
// formula's XOR constraints and clauses. The result is deterministically
// ordered by (rule, letters).
inline std::vector<RuleMatch> match_rules(const CnfFormula& f) {
    detail::ClauseIndex    ix(f);
    std::vector<RuleMatch> out;

    auto emit = [&out](int rule, Lit A, Lit B, Lit C, Lit D = Lit(), Lit E = Lit()) {
        RuleMatch m;
        m.rule_id = rule;
        m.letters = {A, B, C, D, E};
        out.push_back(m);
    };

    for (const XorConstraint& x : f.xors) {
        if (x.arity() == 3) {
            const int v0 = x.vars[0], v1 = x.vars[1], v2 = x.vars[2];

            // Rule 1: C ranges over the three positions; A before B by
            // variable order (the reversed assignment mirrors to the same
            // premise via (A,B) -> (~B,~A)).
            for (int cpos = 0; cpos < 3; ++cpos) {
                int va = (cpos == 0) ? v1 : v0;
                int vb = (cpos == 2) ? v1 : v2;
                int vc = x.vars[size_t(cpos)];
                for (int sa = 0; sa < 2; ++sa)
                    for (int sb = 0; sb < 2; ++sb) {
                        Lit A = Lit::make(va, sa == 0);
                        Lit B = Lit::make(vb, sb == 0);
                        Lit C = Lit::make(vc, detail::forced_positive(x.parity, sa + sb));
                        const std::vector<Lit>* ds = ix.partners(A);
                        if (!ds)
                            continue;
                        for (Lit D : *ds) {
                            int dv = D.var();
                            if (dv == va || dv == vb || dv == vc)
                                continue;
                            if (ix.has({-B, D}))
                                emit(1, A, B, C, D);
                        }
                    }
            }

            // Rule 2: A distinguished; B, C canonical by variable order.
            for (int apos = 0; apos < 3; ++apos) {
                int va = x.vars[size_t(apos)];
                int vb = (apos == 0) ? v1 : v0;
                int vc = (apos == 2) ? v1 : v2;
                for (int sa = 0; sa < 2; ++sa)
                    for (int sb = 0; sb < 2; ++sb) {
                        Lit A = Lit::make(va, sa == 0);
                        Lit B = Lit::make(vb, sb == 0);
                        Lit C = Lit::make(vc, detail::forced_positive(x.parity, sa + sb));
                        if (ix.has({A, B}) && ix.has({A, C}))
                            emit(2, A, B, C);
                    }
            }

            // Rule 3: fully symmetric; letters in variable order.
            for (int sa = 0; sa < 2; ++sa)
                for (int sb = 0; sb < 2; ++sb) {
                    Lit A = Lit::make(v0, sa == 0);
                    Lit B = Lit::make(v1, sb == 0);
                    Lit C = Lit::make(v2, detail::forced_positive(x.parity, sa + sb));
                    if (ix.has({A, B}) && ix.has({A, C}) && ix.has({B, C}))
                        emit(3, A, B, C);
                }

            // Rule 5: A, B, C symmetric, in variable order; D from ternary
            // clauses containing A and B.
            for (int sa = 0; sa < 2; ++sa)
                for (int sb = 0; sb < 2; ++sb) {
                    Lit A = Lit::make(v0, sa == 0);
                    Lit B = Lit::make(v1, sb == 0);
                    Lit C = Lit::make(v2, detail::forced_positive(x.parity, sa + sb));
                    const std::vector<Lit>* ds = ix.thirds(A, B);
                    if (!ds)
                        continue;
                    for (Lit D : *ds) {
                        int dv = D.var();
                        if (dv == v0 || dv == v1 || dv == v2)
                            continue;
                        if (ix.has({-A, -B, -D}) && ix.has({A, C, D}) && ix.has({-A, -C, -D}) &&
                            ix.has({B, C, D}) && ix.has({-B, -C, -D}))
                            emit(5, A, B, C, D);
                    }
                }
        } else if (x.arity() == 4) {
            // Rules 4, 6, 7: D ranges over the four positions; A, B, C are
            // the remaining variables in order.
            for (int dpos = 0; dpos < 4; ++dpos) {
                int vd = x.vars[size_t(dpos)];
                int rest[3];
                int r = 0;
                for (int i = 0; i < 4; ++i)
                    if (i != dpos)
                        rest[r++] = x.vars[size_t(i)];
                for (int signs = 0; signs < 8; ++signs) {
                    int neg = 0;
                    Lit L[3];
                    for (int i = 0; i < 3; ++i) {
                        bool pos = (signs & (1 << i)) == 0;
                        L[i]     = Lit::make(rest[i], pos);
                        neg += pos ? 0 : 1;
                    }
                    Lit A = L[0], B = L[1], C = L[2];
                    Lit D = Lit::make(vd, detail::forced_positive(x.parity, neg));

                    if (ix.has({A, B}) && ix.has({A, C}) && ix.has({B, C}))
                        emit(4, A, B, C, D);

                    if (const std::vector<Lit>* es = ix.thirds(A, B)) {
                        for (Lit E : *es) {
                            int ev = E.var();
                            if (ev == rest[0] || ev == rest[1] || ev == rest[2] || ev == vd)
                                continue;
                            if (ix.has({A, C, E}) && ix.has({B, C, E}))
                                emit(6, A, B, C, D, E);
                        }
                    }
                    if (const std::vector<Lit>* es = ix.thirds(-A, -B)) {
                        for (Lit notE : *es) {
                            Lit E  = -notE;
                            int ev = E.var();
                            if (ev == rest[0] || ev == rest[1] || ev == rest[2] || ev == vd)
                                continue;
                            if (ix.has({-A, -C, -E}) && ix.has({-B, -C, -E}))
                                emit(7, A, B, C, D, E);
                        }
                    }
                }
            }
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Clausal encoding of consequences: an implication l1 & .. & lk -> m1 & .. & mj
// becomes the j clauses (~l1 v .. v ~lk v mi). Duplicate clauses across
// consequences are dropped, first occurrence order kept.
inline std::vector<Clause> encode_cnf(const std::vector<Consequence>& consequences) {
    std::vector<Clause>                              out;
    std::unordered_set<std::vector<int>, LitVecHash> seen;
    for (const Consequence& con : consequences) {
        for (Lit m : con.consequent) {
            std::vector<Lit> lits;
            lits.reserve(con.antecedent.size() + 1);
            for (Lit l : con.antecedent)
                lits.push_back(-l);
            lits.push_back(m);
            Clause c(std::move(lits));
            if (c.is_tautology())
                continue;
            if (seen.insert(clause_key(c)).second)
                out.push_back(std::move(c));
        }
    }
    return out;
}

// Debug check: the formula contains the match's premise (clauses by literal
// set, the XOR by variable set and parity condition), and the premise
// sub-formula entails the consequence. Premise variables are remapped to a
// compact range for the oracle.
inline bool verify_match(const RuleMatch& m, const CnfFormula& f) {
    detail::ClauseIndex ix(f);
    for (const std::vector<Lit>& cl : premise_clauses(m))
        if (!ix.has(cl))
            return false;
    {
        std::vector<Lit> xl = premise_xor_literals(m);
        std::vector<int> vars;
        int              neg = 0;
        for (Lit l : xl) {
            vars.push_back(l.var());
            neg += l.positive() ? 0 : 1;
        }
        std::sort(vars.begin(), vars.end());
        bool licensed = false;
        for (const XorConstraint& x : f.xors)
            if (x.vars == vars && (x.parity != (neg % 2 == 1))) {
                licensed = true;
                break;
            }
        if (!licensed)
            return false;
    }

    std::unordered_map<int, int> remap;
    auto                         lit_of = [&remap](Lit l) {
        auto [it, fresh] = remap.emplace(l.var(), int(remap.size()) + 1);
        (void)fresh;
        return Lit::make(it->second, l.positive());
    };
    CnfFormula premise;
    {
        std::vector<Lit> xl;
        for (Lit l : premise_xor_literals(m))
            xl.push_back(lit_of(l));
        premise.add_xor(xl, true);
    }
    for (const std::vector<Lit>& cl : premise_clauses(m)) {
        std::vector<Lit> mapped;
        for (Lit l : cl)
            mapped.push_back(lit_of(l));
        premise.add_clause(std::move(mapped));
    }
    Consequence      con = consequence_of(m);
    std::vector<Lit> ante, cons;
    for (Lit l : con.antecedent)
        ante.push_back(lit_of(l));
    for (Lit l : con.consequent)
        cons.push_back(lit_of(l));
    return oracle::entails(premise, ante, cons);
}

inline std::string dump_match(const RuleMatch& m) {
    static const char* names = "ABCDE";
    std::string        s    = "r" + std::to_string(m.rule_id);
    for (int i = 0; i < m.letter_count(); ++i) {
        s += ' ';
        s += names[i];
        s += '=';
        s += std::to_string(m.letters[size_t(i)].code());
    }
    return s;
}

}  // namespace logicsat
