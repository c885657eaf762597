#pragma once
#include "hyperaccel/multipoly.hpp"
#include <map>

namespace hyperaccel {

// Normalized quotient of MultiPolys.  Normal form: num/den integer
// polynomials with gcd(num, den) = 1, the pair jointly primitive (no common
// integer content), den's leading lex coefficient positive.  Equal rational
// functions have identical representations.
struct RatFunc {
    MultiPoly num, den;

    RatFunc() : num(), den(Rat(1)) {}
    RatFunc(const Rat& c) : num(c), den(Rat(1)) { normalize_integer_(); }
    RatFunc(long c) : RatFunc(Rat(c)) {}
    RatFunc(const MultiPoly& p) : num(p), den(Rat(1)) { normalize_integer_(); }
    RatFunc(MultiPoly n, MultiPoly d);

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.is_constant() && den.is_constant(); }
    Rat constant_value() const { return num.constant_value() / den.constant_value(); }
    bool is_polynomial() const { return den.is_constant(); }
    MultiPoly as_poly() const { return num * (Rat(1) / den.constant_value()); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;

    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }

    // exact evaluation; throws PoleEncountered on vanishing denominator
    Rat eval(const std::array<Rat, NVARS>& point) const;

    bool depends_on(int v) const { return num.depends_on(v) || den.depends_on(v); }

private:
    void normalize_integer_(); // joint content/sign only (den already constant or coprime)
    friend RatFunc ratfunc_normalize(MultiPoly num, MultiPoly den);
};

RatFunc ratfunc_normalize(MultiPoly num, MultiPoly den);

// cross-multiplication equality, no normalization needed
bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

// Simultaneous substitution symbol -> RatFunc (or shift / rational value).
// Bindings may introduce only symbols that are not themselves bound.
RatFunc substitute(const RatFunc& f, const std::map<int, RatFunc>& bindings);

// common fast paths
RatFunc subst_shift(const RatFunc& f, int v, const Rat& delta);
RatFunc subst_value(const RatFunc& f, int v, const Rat& value);

} // namespace hyperaccel
