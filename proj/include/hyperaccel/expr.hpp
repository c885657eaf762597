#pragma once
#include "hyperaccel/ratfunc.hpp"
#include <string>
#include <vector>

namespace hyperaccel {

// Symbol naming for the ASCII expression grammar.  The default table exposes
// n k a b; series summands use a table with the single symbol j (mapped onto
// slot 0, they are univariate anyway).
struct SymbolTable {
    std::vector<std::pair<std::string, int>> names; // name -> slot

    static const SymbolTable& nkab();
    static const SymbolTable& j_only();

    int slot_of(const std::string& s) const;       // -1 if unknown
    const std::string& name_of(int slot) const;    // asserts present
};

// Grammar: integers, symbols, + - * / ^ and parentheses.  ^ takes an integer
// exponent (negative allowed).  / builds rational functions.  Throws
// ParseError with 1-based line/column.
RatFunc parse_ratfunc(const std::string& text, const SymbolTable& syms = SymbolTable::nkab());

// same grammar, result must have a constant denominator
MultiPoly parse_poly(const std::string& text, const SymbolTable& syms = SymbolTable::nkab());

Rat parse_rational(const std::string& text);

std::string print_poly(const MultiPoly& p, const SymbolTable& syms = SymbolTable::nkab());
std::string print_ratfunc(const RatFunc& f, const SymbolTable& syms = SymbolTable::nkab());

} // namespace hyperaccel
