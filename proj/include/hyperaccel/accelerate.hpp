#pragma once
#include <optional>
#include <string>
#include <vector>
#include "hyperaccel/certify.hpp"

namespace hyperaccel {

// A hypergeometric term bundled with its verified certificate, the recursion
// derived from it, and the geometric rate of the accelerated series
struct TransformFamily {
    std::string id;
    HyperTerm term;
    Certificate certificate;
    Recursion recursion;
    Rat rate;
    std::string section; // printable shape of the term, e.g. "(a)_k (b)_k / (n)_k^2"
};

// one (a, b, n0) assignment of a family
struct SeriesInstance {
    const TransformFamily* family = nullptr;
    Rat a, b, n0;
    long start_index = 0;

    std::array<Rat, NVARS> point() const { return {n0, Rat(0), a, b}; }
};

// sum_{k<K} F(n0, k), exact.  Terms are accumulated over a running common
// denominator driven by the k-shift ratio (one small multiply per step); a
// k-dependent prefactor numerator forces the per-term stream instead so an
// isolated prefactor zero cannot poison the ratio chain.
Rat naive_partial_sum(const SeriesInstance& inst, long K);

// sum_{j<J} (prod_{i<j} g2(n0+r i)) g1(n0+r j), exact, one running product
Rat accelerated_partial_sum(const SeriesInstance& inst, long J);

// limit of g2 along shifts: ratio of the leading n coefficients of its
// numerator and denominator; DegreeMismatch when the degrees differ
Rat convergence_rate(const TransformFamily& family);

// terms needed for `digits` significant digits at the family's rate, padded
// with a fixed guard; the evaluation loop still certifies its own stop
long terms_for_digits(const Rat& rate, long digits);

// Limit estimate for tau_{j+1}/tau_j anchored at j.  The raw ratio is a
// rational function of j, so it approaches the rate only like 1/j; Richardson
// extrapolation over the nodes j/8, j/4, j/2, j removes the 1/j..1/j^3 error
// terms and leaves O(j^-4).
Rat limit_of_term_ratios(const SeriesInstance& inst, long j);

// |prod_{i<=m} g2(n0+r i)| * |sum_k F(n0+r(m+1), k)| for m = 0..M
struct TailProbe {
    std::vector<Rat> values;
    bool decreasing_final_half = false;
};
TailProbe check_tail_vanishing(const SeriesInstance& inst, int M);

// Certified bound on |sum_{k>=K} F(n0,k)|.  The term-ratio hypotheses (sign,
// monotonicity, a Gauss-style majorant (k+A)/(k+A+s)) are verified in exact
// arithmetic via coefficient positivity after shifting k by K; nullopt when
// no hypothesis in the search set holds.
std::optional<Rat> naive_tail_bound(const SeriesInstance& inst, long K);

// same for the accelerated terms: |ratio| <= lambda < 1 verified from J on
std::optional<Rat> accelerated_tail_bound(const SeriesInstance& inst, long J);

} // namespace hyperaccel
