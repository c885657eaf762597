#pragma once
#include "hyperaccel/ratfunc.hpp"
#include <vector>

namespace hyperaccel {

// One Pochhammer factor (base)_k^exponent of a bivariate hypergeometric term.
// The base is linear in n, a, b (integer coefficient on n) and free of k; a
// negative exponent puts the factor in the denominator.
struct PochFactor {
    MultiPoly base;
    int exponent = 1;
};

// F(n,k) = prefactor(n,k,a,b) * power_base^k * prod (base_i)_k^{exp_i}
struct HyperTerm {
    std::vector<PochFactor> poch;
    Rat power_base = 1;
    RatFunc prefactor = RatFunc(MultiPoly(1L), MultiPoly(1L));
};

// throws ValidationError when a Pochhammer base leaves the supported class
void hyperterm_validate(const HyperTerm& F);

// rising factorial x(x+1)...(x+m-1); m = 0 gives 1
Rat pochhammer(const Rat& x, long m);

// F at an exact parameter point; point[VK] is ignored in favor of k.
// Throws PoleEncountered naming the factor and the first offending index when
// a denominator Pochhammer hits zero, or the prefactor denominator vanishes.
Rat term_value(const HyperTerm& F, const std::array<Rat, NVARS>& point, long k);

// F(n,k+1)/F(n,k) as a normalized rational function of n, k, a, b
RatFunc shift_ratio_k(const HyperTerm& F);

// F(n+r,k)/F(n,k), r >= 1
RatFunc shift_ratio_n(const HyperTerm& F, long r);

// prefactor at k = 0 (the Pochhammer product is empty there)
RatFunc term_at_k0(const HyperTerm& F);

// Streams F(n,0), F(n,1), ... at a fixed parameter point with one rational
// multiply per step for the Pochhammer and power parts; the prefactor is
// re-evaluated per term so its zeros do not poison later terms.
class TermStream {
public:
    TermStream(const HyperTerm& F, const std::array<Rat, NVARS>& point);
    long k() const { return k_; }
    Rat value() const;
    void advance();

private:
    const HyperTerm& F_;
    std::array<Rat, NVARS> point_;
    Rat pochprod_ = 1, powk_ = 1;
    long k_ = 0;
};

} // namespace hyperaccel
