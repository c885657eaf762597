#include <doctest.h>
#include "hyperaccel/errors.hpp"
#include "hyperaccel/expr.hpp"
#include <random>

using namespace hyperaccel;

TEST_CASE("parser basics") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-12") == Rat(-12));
    CHECK(parse_poly("n^2 - 1") == parse_poly("(n-1)*(n+1)"));
    CHECK(parse_ratfunc("(n^2-1)/(n-1)") == parse_ratfunc("n+1"));
    CHECK(parse_ratfunc("n^-2") == parse_ratfunc("1/n^2"));
    CHECK(parse_poly("-n^2") == -parse_poly("n^2"));
    CHECK(parse_poly("(-n)^2") == parse_poly("n^2"));
    CHECK(parse_poly("2^10") == parse_poly("1024"));
    CHECK(parse_poly("123456789012345678901234567890") ==
          MultiPoly(Rat(Int("123456789012345678901234567890"))));
}

TEST_CASE("parser errors carry position") {
    try {
        parse_ratfunc("n +\n* 2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 1);
    }
    CHECK_THROWS_AS(parse_ratfunc("x + 1"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("(n"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("1/0"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("n^x"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/n"), ParseError);
}

TEST_CASE("summand symbol table") {
    const auto& J = SymbolTable::j_only();
    MultiPoly p = parse_poly("12*j^2+32*j+21", J);
    CHECK(p.degree(0) == 2);
    CHECK(print_poly(p, J) == "12*j^2 + 32*j + 21");
    CHECK_THROWS_AS(parse_poly("n+1", J), ParseError);
}

TEST_CASE("print/parse round trip") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> coeff(-20, 20), deg(0, 4), nt(1, 6), den(1, 9);
    for (int trial = 0; trial < 80; ++trial) {
        MultiPoly num, d;
        int terms = nt(rng);
        for (int t = 0; t < terms; ++t) {
            Mono m = mono_one();
            for (int v = 0; v < NVARS; ++v) m[v] = (unsigned short)deg(rng);
            num.add_term(m, Rat(coeff(rng), den(rng)));
        }
        int dterms = nt(rng);
        for (int t = 0; t < dterms; ++t) {
            Mono m = mono_one();
            for (int v = 0; v < NVARS; ++v) m[v] = (unsigned short)deg(rng);
            d.add_term(m, Rat(coeff(rng), den(rng)));
        }
        if (d.is_zero()) continue;
        RatFunc f = ratfunc_normalize(num, d);
        RatFunc g = parse_ratfunc(print_ratfunc(f));
        CHECK(f == g);
    }
}
