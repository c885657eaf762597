#include "hyperaccel/expr.hpp"
#include "hyperaccel/errors.hpp"
#include <cassert>
#include <cctype>

namespace hyperaccel {

const SymbolTable& SymbolTable::nkab() {
    static SymbolTable t{{{"n", VN}, {"k", VK}, {"a", VA}, {"b", VB}}};
    return t;
}

const SymbolTable& SymbolTable::j_only() {
    static SymbolTable t{{{"j", 0}}};
    return t;
}

int SymbolTable::slot_of(const std::string& s) const {
    for (auto& [name, slot] : names)
        if (name == s) return slot;
    return -1;
}

const std::string& SymbolTable::name_of(int slot) const {
    for (auto& [name, sl] : names)
        if (sl == slot) return name;
    assert(false && "symbol slot has no name in this table");
    static std::string dummy;
    return dummy;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
            ++pos;
        }
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    void advance() {
        ++pos;
        ++col;
    }

    bool eat(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }
};

struct Parser {
    Lexer lex;
    const SymbolTable& syms;

    Parser(const std::string& text, const SymbolTable& t) : lex(text), syms(t) {}

    RatFunc parse() {
        RatFunc r = expr();
        if (lex.peek() != '\0') lex.fail("trailing input");
        return r;
    }

    RatFunc expr() {
        RatFunc r = term();
        while (true) {
            if (lex.eat('+'))
                r = r + term();
            else if (lex.eat('-'))
                r = r - term();
            else
                return r;
        }
    }

    RatFunc term() {
        RatFunc r = factor();
        while (true) {
            if (lex.eat('*'))
                r = r * factor();
            else if (lex.eat('/')) {
                RatFunc d = factor();
                if (d.is_zero()) lex.fail("division by zero");
                r = r / d;
            } else
                return r;
        }
    }

    RatFunc factor() {
        bool neg = false;
        while (true) {
            if (lex.eat('-'))
                neg = !neg;
            else if (lex.eat('+'))
                ;
            else
                break;
        }
        RatFunc base = primary();
        if (lex.eat('^')) {
            long e = integer_exponent();
            RatFunc p(Rat(1));
            RatFunc b = base;
            long ae = e < 0 ? -e : e;
            if (e < 0 && base.is_zero()) lex.fail("zero to negative power");
            for (long i = 0; i < ae; ++i) p = p * b;
            if (e < 0) p = RatFunc(Rat(1)) / p;
            base = p;
        }
        return neg ? -base : base;
    }

    long integer_exponent() {
        bool neg = lex.eat('-');
        char c = lex.peek();
        if (!std::isdigit((unsigned char)c)) lex.fail("expected integer exponent");
        long v = 0;
        while (lex.pos < lex.s.size() && std::isdigit((unsigned char)lex.s[lex.pos])) {
            v = v * 10 + (lex.s[lex.pos] - '0');
            if (v > 1000) lex.fail("exponent too large");
            lex.advance();
        }
        return neg ? -v : v;
    }

    RatFunc primary() {
        char c = lex.peek();
        if (c == '(') {
            lex.advance();
            RatFunc r = expr();
            if (!lex.eat(')')) lex.fail("expected ')'");
            return r;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string digits;
            while (lex.pos < lex.s.size() && std::isdigit((unsigned char)lex.s[lex.pos])) {
                digits += lex.s[lex.pos];
                lex.advance();
            }
            return RatFunc(Rat(Int(digits)));
        }
        if (std::isalpha((unsigned char)c)) {
            std::string name;
            while (lex.pos < lex.s.size() &&
                   (std::isalnum((unsigned char)lex.s[lex.pos]) || lex.s[lex.pos] == '_')) {
                name += lex.s[lex.pos];
                lex.advance();
            }
            int slot = syms.slot_of(name);
            if (slot < 0) lex.fail("unknown symbol '" + name + "'");
            return RatFunc(MultiPoly::variable(slot));
        }
        if (c == '\0') lex.fail("unexpected end of input");
        lex.fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RatFunc parse_ratfunc(const std::string& text, const SymbolTable& syms) {
    Parser p(text, syms);
    return p.parse();
}

MultiPoly parse_poly(const std::string& text, const SymbolTable& syms) {
    RatFunc f = parse_ratfunc(text, syms);
    if (!f.is_polynomial()) throw ParseError(1, 1, "expected a polynomial, got a quotient");
    return f.as_poly();
}

Rat parse_rational(const std::string& text) {
    RatFunc f = parse_ratfunc(text, SymbolTable::nkab());
    if (!f.is_constant()) throw ParseError(1, 1, "expected a rational constant");
    return f.constant_value();
}

std::string print_poly(const MultiPoly& p, const SymbolTable& syms) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string vars;
        for (int v = 0; v < NVARS; ++v) {
            if (!m[v]) continue;
            if (!vars.empty()) vars += "*";
            vars += syms.name_of(v);
            if (m[v] > 1) vars += "^" + std::to_string(m[v]);
        }
        if (vars.empty()) {
            out += rat_string(ac);
        } else {
            if (ac != 1) out += rat_string(ac) + "*";
            out += vars;
        }
    }
    return out;
}

std::string print_ratfunc(const RatFunc& f, const SymbolTable& syms) {
    if (f.is_polynomial() && f.den.constant_value() == 1) return print_poly(f.num, syms);
    std::string n = print_poly(f.num, syms);
    std::string d = print_poly(f.den, syms);
    return "(" + n + ")/(" + d + ")";
}

} // namespace hyperaccel
