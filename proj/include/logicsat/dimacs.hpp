#pragma once

// DIMACS CNF reader/writer with the extended "x" line dialect for XOR
// constraints ("x 1 2 -3 0" asserts 1 ^ 2 ^ ~3 = 1). Parsing is lenient:
// count mismatches and duplicate literals produce warnings, not errors.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logicsat/types.hpp"

namespace logicsat {

class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

struct ParseDiagnostics {
    std::vector<std::pair<int, std::string>> warnings;  // (line, message)
    int declared_vars    = -1;                          // -1: no header seen
    int declared_clauses = -1;

    void warn(int line, std::string msg) { warnings.emplace_back(line, std::move(msg)); }
};

struct ParsedDimacs {
    CnfFormula       formula;
    ParseDiagnostics diagnostics;
};

namespace detail {

struct Tokenizer {
    std::string_view text;
    size_t           pos  = 0;
    int              line = 1;

    bool at_end() const { return pos >= text.size(); }

    void skip_space_in_line() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
            ++pos;
    }

    // Advances past the current line, including the newline.
    void skip_line() {
        while (pos < text.size() && text[pos] != '\n')
            ++pos;
        if (pos < text.size()) {
            ++pos;
            ++line;
        }
    }

    // Returns the next whitespace-delimited token, crossing newlines.
    std::string_view next_token() {
        for (;;) {
            skip_space_in_line();
            if (at_end())
                return {};
            if (text[pos] == '\n') {
                ++pos;
                ++line;
                continue;
            }
            break;
        }
        size_t start = pos;
        while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
               text[pos] != '\r' && text[pos] != '\n')
            ++pos;
        return text.substr(start, pos - start);
    }

    // True when the next non-space character starts a new line context
    // (used to recognize 'c'/'p'/'x' markers only at line starts).
    char peek_line_start() {
        skip_space_in_line();
        if (at_end() || text[pos] == '\n')
            return '\n';
        return text[pos];
    }
};

inline int parse_int(std::string_view tok, int line) {
    if (tok.empty())
        throw parse_error(line, "expected integer");
    size_t i   = 0;
    bool   neg = false;
    if (tok[0] == '-') {
        neg = true;
        i   = 1;
        if (tok.size() == 1)
            throw parse_error(line, "malformed integer '-'");
    }
    long long v = 0;
    for (; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9')
            throw parse_error(line, "malformed integer token '" + std::string(tok) + "'");
        v = v * 10 + (tok[i] - '0');
        if (v > 1000000000)
            throw parse_error(line, "integer token out of range");
    }
    return neg ? int(-v) : int(v);
}

}  // namespace detail

// Parses DIMACS CNF text. Accepts "c" comments, one "p cnf V C" header,
// clause lines of integers terminated by 0 (clauses may span lines), and
// extended XOR lines ("x <lits> 0"). When require_header is set, any clause
// before the header is an error.
inline ParsedDimacs parse_dimacs(std::string_view text, bool require_header = false) {
    ParsedDimacs      out;
    CnfFormula&       f    = out.formula;
    ParseDiagnostics& diag = out.diagnostics;
    detail::Tokenizer tz{text};

    bool header_seen = false;
    while (!tz.at_end()) {
        char c = tz.peek_line_start();
        if (c == '\n') {
            tz.skip_line();
            continue;
        }
        if (c == 'c') {
            tz.skip_line();
            continue;
        }
        if (c == 'p') {
            int              header_line = tz.line;
            std::string_view p   = tz.next_token();
            std::string_view fmt = tz.next_token();
            if (p != "p" || fmt != "cnf")
                throw parse_error(header_line, "malformed header (expected 'p cnf V C')");
            if (header_seen)
                throw parse_error(header_line, "duplicate header");
            int v = detail::parse_int(tz.next_token(), tz.line);
            int n = detail::parse_int(tz.next_token(), tz.line);
            if (v < 0 || n < 0)
                throw parse_error(header_line, "negative counts in header");
            header_seen           = true;
            diag.declared_vars    = v;
            diag.declared_clauses = n;
            f.ensure_var(v);
            continue;
        }

        bool is_xor = false;
        if (c == 'x') {
            is_xor               = true;
            std::string_view tok = tz.next_token();
            if (tok != "x")
                throw parse_error(tz.line, "malformed line marker '" + std::string(tok) + "'");
        }
        if (!header_seen && require_header)
            throw parse_error(tz.line, "clause before header");

        // Read literals until the terminating 0.
        std::vector<Lit> lits;
        int              start_line = tz.line;
        for (;;) {
            std::string_view tok = tz.next_token();
            if (tok.empty())
                throw parse_error(start_line, "missing terminating 0 at end of input");
            int v = detail::parse_int(tok, tz.line);
            if (v == 0)
                break;
            if (diag.declared_vars >= 0 && std::abs(v) > f.num_vars)
                diag.warn(tz.line, "literal " + std::to_string(v) +
                                       " exceeds declared variable count");
            lits.push_back(Lit(v));
        }

        if (is_xor) {
            f.add_xor(lits, true);
            continue;
        }
        Clause clause(lits);
        if (clause.size() < lits.size() && !clause.is_tautology())
            diag.warn(start_line, "duplicate literals in clause deduplicated");
        if (clause.is_tautology()) {
            diag.warn(start_line, "tautological clause dropped");
            continue;
        }
        f.add_clause(std::move(clause));
    }

    if (header_seen) {
        int total = int(f.clauses.size() + f.xors.size());
        if (total != diag.declared_clauses)
            diag.warn(tz.line, "header declared " + std::to_string(diag.declared_clauses) +
                                   " clauses, found " + std::to_string(total));
    }
    return out;
}

enum class XorMode { Native, Expand };

// Serializes a formula. Native mode emits "x" lines for XOR constraints
// (parity 0 is encoded by negating the first variable); expand mode emits
// each XOR's 2^(k-1) clausal image. The header counts every emitted
// constraint line.
inline std::string write_dimacs(const CnfFormula& f, XorMode mode = XorMode::Native) {
    std::string body;
    auto        emit_clause = [&body](const Clause& c) {
        for (Lit l : c.lits()) {
            body += std::to_string(l.code());
            body += ' ';
        }
        body += "0\n";
    };

    size_t count = f.clauses.size();
    for (const Clause& c : f.clauses)
        emit_clause(c);
    for (const XorConstraint& x : f.xors) {
        if (mode == XorMode::Native) {
            ++count;
            body += 'x';
            for (size_t i = 0; i < x.vars.size(); ++i) {
                body += ' ';
                body += std::to_string((i == 0 && !x.parity) ? -x.vars[i] : x.vars[i]);
            }
            body += " 0\n";
        } else {
            for (const Clause& c : xor_clausal_image(x)) {
                ++count;
                emit_clause(c);
            }
        }
    }

    std::string out = "p cnf " + std::to_string(f.num_vars) + ' ' + std::to_string(count) + '\n';
    out += body;
    return out;
}

inline ParsedDimacs parse_dimacs_file(const std::string& path, bool require_header = false) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_dimacs(ss.str(), require_header);
}

}  // namespace logicsat
