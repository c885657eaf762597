#pragma once
#include "hyperaccel/accelerate.hpp"
#include "hyperaccel/expr.hpp"

// Hand-transcribed published certificate data shared by several test files.

namespace fixtures {

using namespace hyperaccel;

inline HyperTerm make_term(std::initializer_list<std::pair<const char*, int>> poch,
                           Rat power_base = 1, const char* prefactor = nullptr) {
    HyperTerm F;
    for (auto& [b, e] : poch) F.poch.push_back({parse_poly(b), e});
    F.power_base = power_base;
    if (prefactor) F.prefactor = parse_ratfunc(prefactor);
    return F;
}

// (a)_k (b)_k / ((n)_k)^2, rate 1/4
inline HyperTerm family_nknk() { return make_term({{"a", 1}, {"b", 1}, {"n", -2}}); }

inline Certificate cert_nknk() {
    return {parse_ratfunc("-n^2*(-2*n*(a+b-k+1)+a*b-a*k+a-b*k+b+3*n^2)"),
            parse_poly("-(a-n)^2*(b-n)^2"),
            parse_poly("n^2*(-1-a-b+2*n)*(-a-b+2*n)"), 1};
}

inline Recursion rec_nknk() {
    return {parse_ratfunc("(a+b+a*b-2*(1+a+b)*n+3*n^2)/((a+b-2*n)*(1+a+b-2*n))"),
            parse_ratfunc("((a-n)^2*(b-n)^2)/((a+b-2*n)*(1+a+b-2*n)*n^2)"), 1};
}

// (a)_k (b)_k / ((n)_k (2n)_k), rate 4/27
inline HyperTerm family_nk2nk() { return make_term({{"a", 1}, {"b", 1}, {"n", -1}, {"2*n", -1}}); }

inline Certificate cert_nk2nk() {
    return {parse_ratfunc(
                "(2*n^2*(1+2*n)*((-1+b)*b*(-1+k)*k + (3*(-1+k)*k + b^2*(-2+5*k)"
                " + b*(2+k-6*k^2))*n + (-6+8*b^2+b*(6-28*k)+k*(4+9*k))*n^2"
                " + (-4-38*b+39*k)*n^3 + 46*n^4"
                " + a*(-k*(-1+b+b^2+k-2*b*k) + (2-b*(2+5*b)+k+13*b*k-6*k^2)*n"
                " + (6+27*b-28*k)*n^2 - 38*n^3)"
                " + a^2*(b^2+(-1+k)*k+(-2+5*k)*n+8*n^2-b*(k+5*n))))/(k+2*n)"),
            parse_poly(
                "a^3*b^3 - 5*a^3*b^2*n + 8*a^3*b*n^2 - 4*a^3*n^3 - 5*a^2*b^3*n"
                " + 25*a^2*b^2*n^2 - 40*a^2*b*n^3 + 20*a^2*n^4 + 8*a*b^3*n^2"
                " - 40*a*b^2*n^3 + 64*a*b*n^4 - 32*a*n^5 - 4*b^3*n^3 + 20*b^2*n^4"
                " - 32*b*n^5 + 16*n^6 - a^3*b^2 + 3*a^3*b*n - 2*a^3*n^2 - a^2*b^3"
                " + 10*a^2*b^2*n - 23*a^2*b*n^2 + 14*a^2*n^3 + 3*a*b^3*n"
                " - 23*a*b^2*n^2 + 48*a*b*n^3 - 28*a*n^4 - 2*b^3*n^2 + 14*b^2*n^3"
                " - 28*b*n^4 + 16*n^5 + a^2*b^2 - 3*a^2*b*n + 2*a^2*n^2"
                " - 3*a*b^2*n + 9*a*b*n^2 - 6*a*n^3 + 2*b^2*n^2 - 6*b*n^3 + 4*n^4"),
            parse_poly(
                "-108*n^6 + 4*a^3*n^3 - 36*a^2*n^4 + 108*a*n^5 + 2*a^3*n^2"
                " - 18*a^2*n^3 - 54*n^5 + 6*a^2*b*n^2 + 6*a*b^2*n^2 - 36*a*b*n^3"
                " - 2*b*n^2 - 4*b*n^3 + 12*a*b^2*n^3 + 12*a^2*b*n^3 - 72*a*b*n^4"
                " - 2*a*n^2 + 12*n^4 + 6*n^3 + 4*b^3*n^3 - 36*b^2*n^4 + 108*b*n^5"
                " + 2*b^3*n^2 - 18*b^2*n^3 + 54*b*n^4 + 54*a*n^4 - 4*a*n^3"),
            1};
}

inline Recursion rec_nk2nk() {
    return {parse_ratfunc(
                "-(a*n*(2 - b*(2+5*b) + 6*n + 27*b*n - 38*n^2)"
                " + a^2*(b^2 - 5*b*n + 2*n*(-1+4*n))"
                " + 2*n*(b + b*(3-19*n)*n + b^2*(-1+4*n) + n*(-3+n*(-2+23*n))))"
                "/(2*(-1+a+b-3*n)*(a+b-3*n)*(1+a+b-3*n)*n)"),
            parse_ratfunc(
                "-((a-2*n-1)*(a-2*n)*(a-n)*(b-2*n-1)*(b-2*n)*(b-n))"
                "/(2*n^2*(2*n+1)*(a+b-3*n-1)*(a+b-3*n)*(a+b-3*n+1))"),
            1};
}

// (a)_k (b)_k / ((n)_k (a+n)_k), rate 1/4
inline HyperTerm family_nkank() { return make_term({{"a", 1}, {"b", 1}, {"n", -1}, {"a+n", -1}}); }

inline Certificate cert_nkank() {
    return {parse_ratfunc("-((a+n)*(n*(a+2*k+3*n-2)-b*(k+2*n-1)))"),
            parse_poly("-a^2*b+a^2*n+a*b^2-a*b*n-b^2*n+2*b*n^2-n^3"),
            parse_poly("a*b^2-4*a*b*n+a*b+4*a*n^2-2*a*n+b^2*n-4*b*n^2+b*n+4*n^3-2*n^2"),
            1};
}

inline Recursion rec_nkank() {
    return {parse_ratfunc("(b-2*b*n+n*(-2+a+3*n))/((b-2*n)*(1+b-2*n))"),
            parse_ratfunc("((a-n)*(b-n)*(a-b+n))/((b-2*n)*(1+b-2*n)*(a+n))"), 1};
}

// (a)_k (b)_k / ((n)_k (a+2n)_k), rate 4/27
inline HyperTerm family_nka2nk() { return make_term({{"a", 1}, {"b", 1}, {"n", -1}, {"a+2*n", -1}}); }

inline Certificate cert_nka2nk() {
    return {parse_ratfunc(
                "((a+2*n)*(1+a+2*n)*((-1+b)*b*(-1+k)*(a+k)"
                " + (2*a^2 + 3*(-1+k)*k + b^2*(-2+5*k) + a*(-3+b*(3+b-8*k)+5*k)"
                " + b*(2+k-6*k^2))*n + (-6+4*a^2+8*b^2+b*(6-28*k)+k*(4+9*k)"
                " + a*(2-16*b+15*k))*n^2 + (-4+31*a-38*b+39*k)*n^3 + 46*n^4))"
                "/(a+k+2*n)"),
            parse_poly(
                "4*a^3*b*n - 4*a^3*n^2 - 8*a^2*b^2*n + 20*a^2*b*n^2 - 12*a^2*n^3"
                " + 4*a*b^3*n - 12*a*b^2*n^2 + 8*a*b*n^3 - 4*b^3*n^2 + 20*b^2*n^3"
                " - 32*b*n^4 + 16*n^5 + 2*a^3*b - 2*a^3*n - 4*a^2*b^2 + 14*a^2*b*n"
                " - 10*a^2*n^2 + 2*a*b^3 - 10*a*b^2*n + 12*a*b*n^2 - 4*a*n^3"
                " - 2*b^3*n + 14*b^2*n^2 - 28*b*n^3 + 16*n^4 + 2*a^2*b - 2*a^2*n"
                " - 2*a*b^2 + 4*a*b*n - 2*a*n^2 + 2*b^2*n - 6*b*n^2 + 4*n^3"),
            parse_poly(
                "-4*a*b*n - a^2*b - 27*a^2*n^3 - 108*n^5 + 27*a^2*b*n^2"
                " - 36*a*b^2*n^2 + 108*a*b*n^3 - 4*b*n^2 - 18*b^2*n^2 + 54*b*n^3"
                " - a*b + 2*b^3*n + 4*a*b^3*n - 9*a^2*b^2*n + 12*a*n^2 + 3*a*n"
                " + a*b^3 - 54*n^4 + 12*n^3 + 6*n^2 - 2*n*b + 27*a*b*n^2"
                " - 9*a*b^2*n + 3*a^2*n + a^2*b^3 + 4*b^3*n^2 - 36*b^2*n^3"
                " + 108*b*n^4 - 108*a*n^4 - 27*a*n^3"),
            1};
}

inline Recursion rec_nka2nk() {
    return {parse_ratfunc(
                "(a*(-1+b)*b - (2*a^2 - 2*(-1+b)*b + a*(-3+b*(3+b)))*n"
                " - 2*(-3+a+2*a^2-8*a*b+b*(3+4*b))*n^2 + (4-31*a+38*b)*n^3"
                " - 46*n^4)/((-1+b-3*n)*(b-3*n)*(1+b-3*n)*(a+2*n))"),
            parse_ratfunc(
                "(2*(2*n+1)*(a-n)*(n-b)*(a-b+2*n)*(a-b+2*n+1))"
                "/((a+2*n)*(a+2*n+1)*(b-3*n-1)*(b-3*n)*(b-3*n+1))"),
            1};
}

// (-1)^k (a)_k (b)_k / ((a+n+1)_k (b+n+1)_k), rate -1/4, r = 2
inline HyperTerm family_altquarter() {
    return make_term({{"a", 1}, {"b", 1}, {"a+n+1", -1}, {"b+n+1", -1}}, -1);
}

inline Certificate cert_altquarter() {
    return {parse_ratfunc(
                "((a+n+1)*(a+n+2)*(b+n+1)*(b+n+2)"
                "*(a*(2*b+2*k+3*n+3)+b*(2*k+3*n+3)+6*k*n+2*k*(k+3)+5*n^2+11*n+6))"
                "/((a+k+n+1)*(b+k+n+1))"),
            parse_poly("(1+n)*(2+n)*((a-b)^2-(2+n)^2)"),
            parse_poly("-4*(1+a+n)*(2+a+n)*(1+b+n)*(2+b+n)"), 2};
}

inline Recursion rec_altquarter() {
    return {parse_ratfunc("(a*(3+2*b+3*n)+(1+n)*(6+3*b+5*n))/(4*(1+a+n)*(1+b+n))"),
            parse_ratfunc("((-2+a-b-n)*(1+n)*(2+n)*(2+a-b+n))"
                          "/(4*(1+a+n)*(2+a+n)*(1+b+n)*(2+b+n))"),
            2};
}

inline std::array<Rat, NVARS> pt(const Rat& n, const Rat& a, const Rat& b) {
    std::array<Rat, NVARS> p{};
    p[VN] = n;
    p[VA] = a;
    p[VB] = b;
    return p;
}

// family bundle with the derived recursion filled in
inline TransformFamily bundle(std::string id, HyperTerm F, Certificate c,
                              const char* section = "") {
    TransformFamily fam;
    fam.id = std::move(id);
    fam.term = F;
    fam.certificate = c;
    fam.recursion = derive_recursion(F, c);
    fam.rate = convergence_rate(fam);
    fam.section = section;
    return fam;
}

} // namespace fixtures
