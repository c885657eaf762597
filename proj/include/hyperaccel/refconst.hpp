#pragma once
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>
#include "hyperaccel/rational.hpp"

namespace hyperaccel {

// the closed-form building blocks a series target can be made of
enum class Atom { Pi, Ln2, Zeta3, Catalan, Sqrt2, Sqrt3, Cbrt2, PiSq };

const char* atom_name(Atom a);
std::optional<Atom> atom_from_name(const std::string& s);

// coefficient * prod atom^exp
struct ConstantExpr {
    Rat coefficient = 1;
    std::vector<std::pair<Atom, int>> atoms;

    // sort atoms, merge repeats, drop zero exponents, reduce the coefficient
    void normalize();
    std::string str() const; // "768 * pi^-1"
};

bool operator==(const ConstantExpr& x, const ConstantExpr& y);

ConstantExpr make_const(const Rat& coefficient,
                        std::initializer_list<std::pair<Atom, int>> atoms = {});

// mantissa * 10^-scale, guaranteed within one unit in the last place of the
// value it stands for
struct FixedDecimal {
    Int mantissa;
    long scale = 0;

    Rat value() const;
    std::string str() const;
};

// c evaluated to `digits` digits after the point (error <= 1 ulp), computed
// from classical single-purpose series with an explicit error budget
FixedDecimal reference_value(const ConstantExpr& c, long digits);

// leading significant digits on which x and ref agree; ref.scale when x sits
// within one ulp of ref
long digits_agree(const Rat& x, const FixedDecimal& ref);

// digits after the decimal point before the first disagreement
long fraction_digits_agree(const Rat& x, const FixedDecimal& ref);

} // namespace hyperaccel
