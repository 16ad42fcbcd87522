#pragma once

// Partial truth assignment with trail, decision levels and antecedents.
// Shared by the splitter-side propagation and the CDCL backend; a single
// instance is not safe for concurrent mutation.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "logicsat/types.hpp"

namespace logicsat {

enum class Value : uint8_t { False = 0, True = 1, Unassigned = 2 };

inline Value value_of(bool b) { return b ? Value::True : Value::False; }

// Antecedent of an assigned variable: a decision, or the clause/XOR whose
// unit rule forced it.
struct Reason {
    enum class Kind : uint8_t { None, Decision, Clause, Xor };
    Kind kind  = Kind::None;
    int  index = -1;  // clause or xor index within the owning formula

    static Reason decision() { return {Kind::Decision, -1}; }
    static Reason clause(int i) { return {Kind::Clause, i}; }
    static Reason xor_c(int i) { return {Kind::Xor, i}; }
};

class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(int num_vars) { resize(num_vars); }

    void resize(int num_vars) {
        values_.resize(size_t(num_vars) + 1, Value::Unassigned);
        level_of_.resize(size_t(num_vars) + 1, 0);
        reason_of_.resize(size_t(num_vars) + 1);
    }

    int num_vars() const { return int(values_.size()) - 1; }

    Value value(int var) const { return values_[size_t(var)]; }
    Value value(Lit l) const {
        Value v = values_[size_t(l.var())];
        if (v == Value::Unassigned)
            return v;
        return (v == Value::True) == l.positive() ? Value::True : Value::False;
    }
    bool assigned(int var) const { return value(var) != Value::Unassigned; }

    int    level(int var) const { return level_of_[size_t(var)]; }
    Reason reason(int var) const { return reason_of_[size_t(var)]; }

    const std::vector<Lit>& trail() const { return trail_; }
    int                     decision_level() const { return int(trail_lim_.size()); }

    // Makes l true at the current decision level.
    void assign(Lit l, Reason why) {
        size_t v = size_t(l.var());
        if (v >= values_.size())
            throw std::out_of_range("assign: variable outside assignment");
        if (values_[v] != Value::Unassigned)
            throw std::logic_error("assign: variable already assigned");
        values_[v]    = value_of(l.positive());
        level_of_[v]  = decision_level();
        reason_of_[v] = why;
        trail_.push_back(l);
    }

    void push_decision(Lit l) {
        trail_lim_.push_back(int(trail_.size()));
        assign(l, Reason::decision());
    }

    // Undoes every assignment made at levels above `level`.
    void backtrack(int level) {
        if (level >= decision_level())
            return;
        int keep = trail_lim_[size_t(level)];
        for (size_t i = trail_.size(); i > size_t(keep); --i) {
            size_t v = size_t(trail_[i - 1].var());
            values_[v]    = Value::Unassigned;
            reason_of_[v] = Reason{};
            level_of_[v]  = 0;
        }
        trail_.resize(size_t(keep));
        trail_lim_.resize(size_t(level));
    }

    bool total() const {
        for (size_t v = 1; v < values_.size(); ++v)
            if (values_[v] == Value::Unassigned)
                return false;
        return true;
    }

    // Trail position bookkeeping for propagation queues.
    size_t qhead = 0;

  private:
    std::vector<Value>  values_;
    std::vector<Lit>    trail_;
    std::vector<int>    trail_lim_;
    std::vector<int>    level_of_;
    std::vector<Reason> reason_of_;
};

// Total model: value per variable, indexed 1..num_vars (index 0 unused).
using Model = std::vector<bool>;

}  // namespace logicsat
