#include "doctest.h"
#include "hyperaccel/refconst.hpp"
#include "hyperaccel/errors.hpp"

using namespace hyperaccel;

namespace {

// "3.14159" -> exact rational
Rat dec(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s.c_str(), 10));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    // base must be explicit or a leading zero reads as octal
    Rat r(Int(digits.c_str(), 10), pow10z(static_cast<long>(s.size() - dot - 1)));
    r.canonicalize();
    return r;
}

Rat tenpow(long e) {
    return e >= 0 ? Rat(pow10z(e)) : Rat(1) / Rat(pow10z(-e));
}

struct AtomRef {
    Atom atom;
    const char* digits50; // published values, last digit rounded or truncated
};

const AtomRef atom_refs[] = {
    {Atom::Pi, "3.14159265358979323846264338327950288419716939937510"},
    {Atom::Ln2, "0.69314718055994530941723212145817656807550013436026"},
    {Atom::Sqrt2, "1.41421356237309504880168872420969807856967187537694"},
    {Atom::Sqrt3, "1.73205080756887729352744634150587236694280525381038"},
    {Atom::Cbrt2, "1.25992104989487316476721060727822835057025146470151"},
    {Atom::Zeta3, "1.20205690315959428539973816151144999076498629234049"},
    {Atom::Catalan, "0.91596559417721901505460351493238411077414937428167"},
    {Atom::PiSq, "9.86960440108935861883449099987615113531369940724079"},
};

} // namespace

TEST_CASE("atom oracles match published 50 digit values") {
    // one ulp of oracle error plus one of print truncation
    Rat tol = 2 * tenpow(-50);
    for (auto& [atom, lit] : atom_refs) {
        FixedDecimal f = reference_value(make_const(1, {{atom, 1}}), 50);
        CHECK(f.scale == 50);
        Rat d = f.value() - dec(lit);
        if (d < 0) d = -d;
        INFO(atom_name(atom));
        CHECK(d <= tol);
    }
}

TEST_CASE("pi agrees with an independent two-arctan recomputation") {
    // Euler's pi/4 = atan(1/2) + atan(1/3), summed here from scratch rather
    // than through the Machin split the library uses
    const long W = 55;
    Int acc = 0;
    for (long x : {2L, 3L}) {
        Int p = pow10z(W) / x, x2 = x * x;
        for (long i = 0; p != 0; ++i, p /= x2) {
            Int t = p / (2 * i + 1);
            acc += (i % 2 == 0) ? t : -t;
        }
    }
    Rat euler(4 * acc, pow10z(W));
    euler.canonicalize();
    FixedDecimal pi = reference_value(make_const(1, {{Atom::Pi, 1}}), 50);
    CHECK(digits_agree(euler, pi) == 50);
}

TEST_CASE("refinement never moves a reported value by more than an ulp") {
    for (auto& [atom, lit] : atom_refs) {
        (void)lit;
        for (long D : {7L, 20L, 33L}) {
            FixedDecimal lo = reference_value(make_const(1, {{atom, 1}}), D);
            FixedDecimal hi = reference_value(make_const(1, {{atom, 1}}), 2 * D);
            Rat d = lo.value() - hi.value();
            if (d < 0) d = -d;
            INFO(atom_name(atom) << " at " << D);
            CHECK(d <= 2 * tenpow(-D));
        }
    }
}

TEST_CASE("pi at D and 2D agree through D digits") {
    for (long D : {10L, 25L, 40L}) {
        FixedDecimal lo = reference_value(make_const(1, {{Atom::Pi, 1}}), D);
        FixedDecimal hi = reference_value(make_const(1, {{Atom::Pi, 1}}), 2 * D);
        CHECK(digits_agree(hi.value(), lo) == D);
    }
}

TEST_CASE("square root references square back to the radicand") {
    for (long D : {10L, 30L}) {
        Rat s2 = reference_value(make_const(1, {{Atom::Sqrt2, 1}}), D).value();
        Rat d2 = s2 * s2 - 2;
        if (d2 < 0) d2 = -d2;
        CHECK(d2 <= tenpow(1 - D));

        Rat s3 = reference_value(make_const(1, {{Atom::Sqrt3, 1}}), D).value();
        Rat d3 = s3 * s3 - 3;
        if (d3 < 0) d3 = -d3;
        CHECK(d3 <= tenpow(1 - D));

        Rat c = reference_value(make_const(1, {{Atom::Cbrt2, 1}}), D).value();
        Rat dc = c * c * c - 2;
        if (dc < 0) dc = -dc;
        CHECK(dc <= tenpow(1 - D));
    }
}

TEST_CASE("composite expressions track their atoms") {
    Rat pi = dec(atom_refs[0].digits50);

    SUBCASE("768 / pi") {
        FixedDecimal f = reference_value(make_const(768, {{Atom::Pi, -1}}), 20);
        CHECK(digits_agree(Rat(768) / pi, f) >= 20);
    }
    SUBCASE("pi^2 atom vs squared pi atom") {
        FixedDecimal f = reference_value(make_const(1, {{Atom::PiSq, 1}}), 30);
        Rat p = reference_value(make_const(1, {{Atom::Pi, 1}}), 40).value();
        Rat d = f.value() - p * p;
        if (d < 0) d = -d;
        CHECK(d <= 2 * tenpow(-30));
    }
    SUBCASE("rational coefficient with two atoms") {
        // 480 pi / (7 sqrt3)
        FixedDecimal f = reference_value(
            make_const(Rat(480, 7), {{Atom::Pi, 1}, {Atom::Sqrt3, -1}}), 25);
        Rat expect = Rat(480, 7) * pi / dec(atom_refs[3].digits50);
        CHECK(digits_agree(expect, f) >= 24);
    }
    SUBCASE("large coefficient keeps full precision") {
        FixedDecimal f = reference_value(
            make_const(33554432, {{Atom::Sqrt2, 1}, {Atom::Pi, -1}}), 30);
        Rat expect = Rat(33554432) * dec(atom_refs[2].digits50) / pi;
        CHECK(digits_agree(expect, f) >= 29);
    }
    SUBCASE("zero coefficient") {
        FixedDecimal f = reference_value(make_const(0, {{Atom::Pi, 3}}), 10);
        CHECK(f.mantissa == 0);
        CHECK(f.scale == 10);
    }
}

TEST_CASE("digits_agree counts leading significant agreement") {
    FixedDecimal pi10 = reference_value(make_const(1, {{Atom::Pi, 1}}), 10);

    CHECK(digits_agree(pi10.value(), pi10) == 10);
    CHECK(digits_agree(Rat(22, 7), pi10) == 3);
    CHECK(digits_agree(Rat(0), pi10) == 0);
    CHECK(digits_agree(Rat(3), pi10) == 1);
    CHECK(digits_agree(Rat(-3), pi10) == 0);

    // magnitude above one: 768/pi = 244.4616...; agreement is measured by
    // distance, so 306 (within 10^2 of the reference) still scores one digit
    FixedDecimal big = reference_value(make_const(768, {{Atom::Pi, -1}}), 20);
    CHECK(digits_agree(Rat(244), big) == 3);
    CHECK(digits_agree(Rat(24446, 100), big) == 5);
    CHECK(digits_agree(Rat(306), big) == 1);
    CHECK(digits_agree(Rat(600), big) == 0);
}

TEST_CASE("fraction_digits_agree counts positions after the point") {
    FixedDecimal pi10 = reference_value(make_const(1, {{Atom::Pi, 1}}), 10);
    CHECK(fraction_digits_agree(Rat(22, 7), pi10) == 3);
    CHECK(fraction_digits_agree(pi10.value(), pi10) == 10);
    // a unit-size error still leaves zero fractional agreement
    CHECK(fraction_digits_agree(pi10.value() + 1, pi10) == 0);

    FixedDecimal big = reference_value(make_const(768, {{Atom::Pi, -1}}), 20);
    // 244 is 0.46 away from 244.4616..., inside one unit but not one tenth
    CHECK(fraction_digits_agree(Rat(244), big) == 1);
    CHECK(fraction_digits_agree(Rat(246), big) == 0);
}

TEST_CASE("insufficient references are rejected") {
    FixedDecimal empty{Int(0), 5};
    CHECK_THROWS_AS((void)digits_agree(Rat(1), empty), InsufficientScale);
    CHECK_THROWS_AS((void)fraction_digits_agree(Rat(1), empty), InsufficientScale);
    CHECK_THROWS_AS((void)reference_value(make_const(1, {{Atom::Pi, 1}}), 0),
                    InsufficientScale);
}

TEST_CASE("atom names round trip and unknowns are flagged") {
    for (auto& [atom, lit] : atom_refs) {
        (void)lit;
        auto back = atom_from_name(atom_name(atom));
        REQUIRE(back.has_value());
        CHECK(*back == atom);
    }
    CHECK(!atom_from_name("euler").has_value());
    CHECK(!atom_from_name("").has_value());

    ConstantExpr bogus;
    bogus.atoms.emplace_back(static_cast<Atom>(99), 1);
    CHECK_THROWS_AS((void)reference_value(bogus, 10), UnknownAtom);
}

TEST_CASE("constant expressions normalize canonically") {
    ConstantExpr c;
    c.coefficient = Rat(4, 2);
    c.atoms = {{Atom::Sqrt2, 1}, {Atom::Pi, -1}, {Atom::Sqrt2, 2}, {Atom::Ln2, 0}};
    c.normalize();
    CHECK(c.coefficient == 2);
    REQUIRE(c.atoms.size() == 2);
    CHECK(c.atoms[0] == std::pair(Atom::Pi, -1));
    CHECK(c.atoms[1] == std::pair(Atom::Sqrt2, 3));

    CHECK(c == make_const(2, {{Atom::Sqrt2, 3}, {Atom::Pi, -1}}));
    CHECK(!(c == make_const(2, {{Atom::Sqrt2, 3}})));

    CHECK(make_const(Rat(768), {{Atom::Pi, -1}}).str() == "768 * pi^-1");
    CHECK(make_const(Rat(5, 3)).str() == "5/3");
}

TEST_CASE("reference rendering is plain decimal") {
    FixedDecimal f = reference_value(make_const(1, {{Atom::Pi, 1}}), 8);
    std::string s = f.str();
    REQUIRE(s.size() == 10);
    CHECK(s.substr(0, 4) == "3.14");
    CHECK(decimal_string(f.value(), 8) == s);
}
