#pragma once
#include "hyperaccel/accelerate.hpp"
#include "hyperaccel/refconst.hpp"

namespace hyperaccel {

// sum_{j>=start} rate^j (u1)_j...(up)_j / ((l1)_j...(lq)_j) * summand(j)
// Canonical form: uppers/lowers sorted ascending with no pair differing by an
// integer (such pairs are cancelled into the summand), summand univariate in
// the summation symbol (slot VN, printed as j).
struct ChuSeries {
    Rat rate;
    std::vector<Rat> uppers, lowers;
    RatFunc summand = RatFunc(1L);
    long start_index = 0;
    ConstantExpr target;
};

// throws ValidationError when the canonical-form invariants fail
void chu_validate(const ChuSeries& s);

// single term at absolute index j
Rat chu_term(const ChuSeries& s, long j);

// exact sum of J consecutive terms from start_index
Rat evaluate_chu_series(const ChuSeries& s, long J);

// Rewrites the accelerated series of an instance in the form above:
// prod_{i<j} g2(n0+r i) = rate^j * prod (alpha)_j via prod_{i<j} (i+alpha) =
// (alpha)_j, multiplied by g1(n0+r j).  Requires g2's shifted numerator and
// denominator to split into rational linear factors (NonLinearFactor
// otherwise).  Termwise equal to accelerated_partial_sum increments.
ChuSeries emit_chu_style(const SeriesInstance& inst);

// "sum_{j>=0} (1/4)^j * [1/2, 1/2 ; 1, 1]_j * (6*j + 1)"
std::string render_chu(const ChuSeries& s);

} // namespace hyperaccel
