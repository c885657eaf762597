#include <doctest.h>
#include "hyperaccel/errors.hpp"
#include "hyperaccel/expr.hpp"
#include "hyperaccel/linsolve.hpp"
#include "hyperaccel/multipoly.hpp"
#include "hyperaccel/ratfunc.hpp"
#include <random>

using namespace hyperaccel;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s); }
RatFunc F(const std::string& s) { return parse_ratfunc(s); }

MultiPoly random_poly(std::mt19937& rng, int maxdeg = 3, int maxterms = 5) {
    std::uniform_int_distribution<int> coeff(-9, 9), deg(0, maxdeg), nt(1, maxterms);
    MultiPoly p;
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        Mono m = mono_one();
        for (int v = 0; v < NVARS; ++v) m[v] = (unsigned short)deg(rng);
        p.add_term(m, Rat(coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("ratfunc_normalize canonical forms") {
    RatFunc f = ratfunc_normalize(P("n^2-1"), P("n-1"));
    CHECK(f.num == P("n+1"));
    CHECK(f.den == P("1"));

    RatFunc z = ratfunc_normalize(P("0"), P("n^3"));
    CHECK(z.num.is_zero());
    CHECK(z.den == P("1"));

    RatFunc c = ratfunc_normalize(P("2*n+2*k"), P("4"));
    CHECK(c.num == P("n+k"));
    CHECK(c.den == P("2"));
    CHECK(c.den.leading_coeff() > 0);

    CHECK_THROWS_AS(ratfunc_normalize(P("n"), P("0")), DivisionByZero);
}

TEST_CASE("ratfunc_normalize idempotent and sign convention") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 60; ++i) {
        MultiPoly num = random_poly(rng);
        MultiPoly den = random_poly(rng);
        if (den.is_zero()) continue;
        RatFunc f = ratfunc_normalize(num, den);
        RatFunc g = ratfunc_normalize(f.num, f.den);
        CHECK(f == g);
        if (!f.is_zero()) CHECK(f.den.leading_coeff() > 0);
        // cross-multiplication equality with the original
        CHECK((f.num * den - num * f.den).is_zero());
    }
}

TEST_CASE("ratfunc_equal") {
    RatFunc f = F("n/(n+1)");
    CHECK(ratfunc_equal(f, f));
    CHECK(ratfunc_equal(F("n/(n+1)"), F("(n^2+n)/((n+1)^2)")));
    CHECK_FALSE(ratfunc_equal(F("n/(n+1)"), F("n/(n+2)")));

    std::mt19937 rng(777);
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        if (b.is_zero() || c.is_zero()) continue;
        // scaling representatives never changes equality
        RatFunc f1 = ratfunc_normalize(a, b);
        RatFunc f2 = ratfunc_normalize(a * c, b * c);
        CHECK(ratfunc_equal(f1, f2));
        CHECK(f1 == f2); // and normal forms are identical
    }
}

TEST_CASE("substitute: shifts and evaluations") {
    RatFunc f = F("n^2");
    std::map<int, RatFunc> up{{VN, F("n+1")}}, down{{VN, F("n-1")}};
    CHECK(substitute(f, up) == F("n^2+2*n+1"));

    std::mt19937 rng(4242);
    for (int i = 0; i < 40; ++i) {
        MultiPoly num = random_poly(rng), den = random_poly(rng);
        if (den.is_zero()) continue;
        RatFunc g = ratfunc_normalize(num, den);
        CHECK(substitute(substitute(g, up), down) == g);
    }
}

TEST_CASE("substitute: two-term recursion coefficients at a point") {
    // g2 and g1 of the quadratic-lower-parameter family, a = b = 1/2
    RatFunc g2 = F("((a-n)^2*(b-n)^2)/((a+b-2*n)*(1+a+b-2*n)*n^2)");
    RatFunc g1 = F("(a+b+a*b-2*(1+a+b)*n+3*n^2)/((a+b-2*n)*(1+a+b-2*n))");
    std::map<int, RatFunc> at2{{VA, F("1/2")}, {VB, F("1/2")}, {VN, F("2")}};
    std::map<int, RatFunc> at3{{VA, F("1/2")}, {VB, F("1/2")}, {VN, F("3")}};
    CHECK(substitute(g2, at2).constant_value() == Rat(27, 128));
    CHECK(substitute(g1, at2).constant_value() == Rat(7, 8));
    CHECK(substitute(g1, at3).constant_value() == Rat(13, 16));
}

TEST_CASE("substitute pole reporting") {
    RatFunc f = F("1/(n-2)");
    std::map<int, RatFunc> bad{{VN, F("2")}};
    CHECK_THROWS_AS(substitute(f, bad), PoleEncountered);
}

TEST_CASE("solve_linear_system") {
    auto q = [](long n, long d = 1) { return Rat(n, d); };

    SUBCASE("identity") {
        std::vector<std::vector<Rat>> A{{q(1), q(0)}, {q(0), q(1)}};
        std::vector<Rat> b{q(5), q(-3)};
        auto r = solve_linear_system(A, b);
        REQUIRE(r.solvable);
        CHECK(r.solution == b);
    }
    SUBCASE("inconsistent rows") {
        std::vector<std::vector<Rat>> A{{q(1), q(1)}, {q(1), q(1)}};
        auto r = solve_linear_system(A, {q(1), q(2)});
        CHECK_FALSE(r.solvable);
    }
    SUBCASE("diagonal") {
        std::vector<std::vector<Rat>> A{{q(2), q(0)}, {q(0), q(3)}};
        auto r = solve_linear_system(A, {q(1), q(1)});
        REQUIRE(r.solvable);
        CHECK(r.solution[0] == q(1, 2));
        CHECK(r.solution[1] == q(1, 3));
    }
    SUBCASE("free variables zeroed, residual exact") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> d(-5, 5);
        for (int trial = 0; trial < 25; ++trial) {
            size_t rows = 3 + trial % 3, cols = 4 + trial % 4;
            std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols));
            std::vector<Rat> x(cols);
            for (auto& xi : x) xi = Rat(d(rng));
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j) A[i][j] = Rat(d(rng));
            std::vector<Rat> b(rows, Rat(0));
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j) b[i] += A[i][j] * x[j];
            auto r = solve_linear_system(A, b);
            REQUIRE(r.solvable); // b is in the column span by construction
            for (size_t i = 0; i < rows; ++i) {
                Rat acc(0);
                for (size_t j = 0; j < cols; ++j) acc += A[i][j] * r.solution[j];
                CHECK(acc == b[i]);
            }
        }
    }
}

TEST_CASE("factor_linear_rational") {
    const auto& J = SymbolTable::j_only();

    auto f = factor_linear_rational(parse_poly("12*j^2+32*j+21", J));
    CHECK(f.constant == Rat(12));
    REQUIRE(f.roots.size() == 2);
    // roots sorted by the Rat ordering of the candidate set
    bool has32 = false, has76 = false;
    for (auto& [r, m] : f.roots) {
        if (r == Rat(-3, 2)) has32 = m == 1;
        if (r == Rat(-7, 6)) has76 = m == 1;
    }
    CHECK(has32);
    CHECK(has76);
    CHECK(f.remainder == parse_poly("1", J));

    auto g = factor_linear_rational(parse_poly("j^3", J));
    REQUIRE(g.roots.size() == 1);
    CHECK(g.roots[0].first == 0);
    CHECK(g.roots[0].second == 3);
    CHECK(g.constant == Rat(1));

    auto h = factor_linear_rational(parse_poly("j^2+1", J));
    CHECK(h.roots.empty());
    CHECK(h.remainder == parse_poly("j^2+1", J));
    CHECK(h.constant == Rat(1));
}

TEST_CASE("factor_linear_rational re-expands to its input") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), nroots(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        // build a product of small linear factors times an irreducible tail
        MultiPoly p(Rat(num(rng) == 0 ? 3 : num(rng)));
        MultiPoly j = MultiPoly::variable(0);
        int nr = nroots(rng);
        for (int i = 0; i < nr; ++i)
            p = p * (j * Rat(den(rng)) + MultiPoly(Rat(num(rng))));
        if (trial % 3 == 0) p = p * (j * j + MultiPoly(Rat(1)));
        auto fac = factor_linear_rational(p);
        MultiPoly re = fac.remainder * fac.constant;
        for (auto& [root, mult] : fac.roots)
            for (int i = 0; i < mult; ++i) re = re * (j - MultiPoly(root));
        CHECK(re == p);
        // remainder really has no rational roots
        auto again = factor_linear_rational(fac.remainder);
        CHECK(again.roots.empty());
    }
}

TEST_CASE("field axioms spot check") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> d(-50, 50);
    auto q = [&] {
        Rat r(d(rng), 1 + std::abs(d(rng)));
        r.canonicalize(); // two-argument mpq_class ctor does not reduce
        return r;
    };
    for (int i = 0; i < 200; ++i) {
        Rat x = q(), y = q(), z = q();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (x != 0) CHECK(x * (Rat(1) / x) == 1);
    }
}

TEST_CASE("multipoly gcd sanity") {
    MultiPoly a = P("(n+k)^2*(a-b)");
    MultiPoly b = P("(n+k)*(a+b)");
    MultiPoly g = multipoly_gcd(a, b);
    CHECK(g == P("n+k"));

    CHECK(multipoly_gcd(P("4*n+4*k"), P("2")).is_constant());

    std::mt19937 rng(55);
    for (int i = 0; i < 25; ++i) {
        MultiPoly u = random_poly(rng, 2, 3), v = random_poly(rng, 2, 3), w = random_poly(rng, 2, 3);
        if (u.is_zero() || v.is_zero() || w.is_zero()) continue;
        MultiPoly g2 = multipoly_gcd(u * w, v * w);
        // w divides the gcd
        CHECK(divide_exact(g2 * Rat(1), multipoly_gcd(g2, w)).term_count() <= g2.term_count());
        MultiPoly q = multipoly_gcd(g2, w);
        MultiPoly wprim = w;
        wprim.make_primitive();
        CHECK(q == wprim);
    }
}

TEST_CASE("modular echelon and dixon solver") {
    SUBCASE("echelon rank and nullspace") {
        ModpEchelon e(3);
        CHECK(e.add_row(std::vector<uint64_t>{1, 2, 3}));
        CHECK(e.add_row(std::vector<uint64_t>{2, 4, 6}) == false);
        CHECK(e.add_row(std::vector<uint64_t>{0, 1, 1}));
        CHECK(e.rank() == 2);
        auto free = e.free_columns();
        REQUIRE(free.size() == 1);
        auto x = e.nullspace_vector(free[0]);
        // verify both rows annihilate x mod p
        uint64_t r1 = addp(addp(mulp(1, x[0]), mulp(2, x[1])), mulp(3, x[2]));
        uint64_t r2 = addp(mulp(1, x[1]), mulp(1, x[2]));
        CHECK(r1 == 0);
        CHECK(r2 == 0);
    }
    SUBCASE("dixon recovers rational solutions") {
        std::mt19937 rng(4096);
        std::uniform_int_distribution<long> d(-20, 20);
        for (int trial = 0; trial < 10; ++trial) {
            size_t s = 5 + trial;
            std::vector<std::vector<Int>> A(s, std::vector<Int>(s));
            std::vector<Rat> x(s);
            for (size_t i = 0; i < s; ++i) x[i] = Rat(d(rng), 1 + (trial % 7));
            for (size_t i = 0; i < s; ++i)
                for (size_t j = 0; j < s; ++j) A[i][j] = Int(d(rng));
            std::vector<Int> b(s, Int(0));
            Int den(1 + (trial % 7));
            // b = A x, scaled to integers
            std::vector<Int> xi(s);
            for (size_t i = 0; i < s; ++i) xi[i] = x[i].get_num() * (den / x[i].get_den());
            for (size_t i = 0; i < s; ++i)
                for (size_t j = 0; j < s; ++j) b[i] += A[i][j] * xi[j];
            // now A (x den) = b, so solving A y = b gives y = x den
            auto sol = dixon_solve(A, b);
            if (!sol) continue; // singular draw
            for (size_t i = 0; i < s; ++i) CHECK((*sol)[i] == x[i] * Rat(den));
        }
    }
    SUBCASE("rational reconstruction") {
        Int m = Int(MODP) * Int(MODP);
        Rat v(-1234567, 891);
        Int num = v.get_num(), den = v.get_den();
        Int x = (num % m + m) % m;
        // x * den^{-1} mod m
        Int deninv;
        mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        Int residue = (x * deninv) % m;
        auto r = rational_reconstruct(residue, m);
        REQUIRE(r.has_value());
        CHECK(*r == v);
    }
}
