#pragma once
#include "hyperaccel/rational.hpp"
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace hyperaccel {

// Fixed symbol universe.  Slot order doubles as the lexicographic variable
// order n > k > a > b used everywhere (denominator sign normalization, leading
// coefficients, printing).
inline constexpr int NVARS = 4;
enum Var : int { VN = 0, VK = 1, VA = 2, VB = 3 };

using Mono = std::array<unsigned short, NVARS>;

inline Mono mono_one() { return {0, 0, 0, 0}; }

// Sparse multivariate polynomial over Rat.  Terms are kept in descending
// lexicographic order so begin() is the leading term.
class MultiPoly {
public:
    using Map = std::map<Mono, Rat, std::greater<Mono>>;

    MultiPoly() = default;
    MultiPoly(const Rat& c);
    MultiPoly(long c);
    static MultiPoly variable(int v, unsigned e = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // 0 for the zero polynomial
    size_t term_count() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    Rat coeff(const Mono& m) const;
    void add_term(const Mono& m, const Rat& c); // accumulates, drops zeros

    // -1 for the zero polynomial
    int degree(int v) const;
    int total_degree() const;
    bool depends_on(int v) const { return degree(v) > 0; }

    const Mono& leading_mono() const; // requires nonzero
    const Rat& leading_coeff() const; // requires nonzero

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const Rat& c) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    // v -> v + delta
    MultiPoly shift(int v, const Rat& delta) const;
    // v -> value (partial evaluation)
    MultiPoly eval_at(int v, const Rat& value) const;
    // full evaluation
    Rat eval(const std::array<Rat, NVARS>& point) const;
    // v -> poly (polynomial substitution)
    MultiPoly subst_poly(int v, const MultiPoly& value) const;

    // coefficients of v^0..v^deg as polynomials in the other symbols
    std::vector<MultiPoly> coeffs_in(int v) const;
    static MultiPoly from_coeffs(int v, const std::vector<MultiPoly>& cs);

    // lcm of coefficient denominators (positive)
    Int denominator_lcm() const;
    // gcd of coefficient numerators for an integer-coefficient polynomial
    Int integer_content() const;
    // divide through so coefficients are coprime integers and the leading
    // (lex) coefficient is positive; returns the stripped rational factor c
    // with *this == c * primitive
    Rat make_primitive();

private:
    Map terms_;
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

// exact division, asserts divisibility
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

// exact division that reports failure instead of asserting
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);

// gcd in Q[n,k,a,b], returned integer-primitive with positive leading
// coefficient (so gcd(4n+4k, 2) = 1: rational content is not part of it)
MultiPoly multipoly_gcd(MultiPoly a, MultiPoly b);

struct LinearFactorization {
    // p = constant * prod (x - root_i)^mult_i * remainder, remainder monic
    // with no rational roots
    std::vector<std::pair<Rat, int>> roots;
    Rat constant;
    MultiPoly remainder;
    int var = VN;
};

// p must be univariate (nonzero); factors out all rational roots
LinearFactorization factor_linear_rational(const MultiPoly& p);

// univariate evaluation helper used by the factorizer and tail certification
Rat eval_univariate(const MultiPoly& p, int v, const Rat& x);

} // namespace hyperaccel
