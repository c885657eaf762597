#pragma once
#include <stdexcept>
#include <string>

namespace hyperaccel {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

// Raised when an evaluation hits a vanishing denominator.  `where` names the
// offending factor or expression, `index` is the first bad term index when the
// pole sits inside a Pochhammer product (-1 otherwise).
struct PoleEncountered : std::runtime_error {
    std::string where;
    long index;
    PoleEncountered(std::string w, long idx = -1)
        : std::runtime_error("pole encountered in " + w +
                             (idx >= 0 ? " at index " + std::to_string(idx) : std::string())),
          where(std::move(w)), index(idx) {}
};

struct DegreeMismatch : std::runtime_error {
    explicit DegreeMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroP2 : std::runtime_error {
    ZeroP2() : std::runtime_error("certificate has p2 = 0") {}
};

struct NonLinearFactor : std::runtime_error {
    explicit NonLinearFactor(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownAtom : std::runtime_error {
    explicit UnknownAtom(const std::string& name) : std::runtime_error("unknown constant atom: " + name) {}
};

struct InsufficientScale : std::runtime_error {
    explicit InsufficientScale(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int ln, int c, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(ln) + ":" + std::to_string(c) + ": " + msg),
          line(ln), col(c) {}
};

struct ValidationError : std::runtime_error {
    std::string invariant;
    ValidationError(std::string inv, const std::string& msg)
        : std::runtime_error("validation failed [" + inv + "]: " + msg), invariant(std::move(inv)) {}
};

} // namespace hyperaccel
