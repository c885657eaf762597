#pragma once
#include "hyperaccel/hyperterm.hpp"
#include <optional>

namespace hyperaccel {

// Two-term telescoping certificate: with G(n,k) = R(n,k) F(n,k),
//   p1(n) F(n+r,k) + p2(n) F(n,k) = G(n,k+1) - G(n,k)
struct Certificate {
    RatFunc R;
    MultiPoly p1, p2; // in n, a, b
    long r = 1;
};

// f(n) = g1(n) + g2(n) f(n+r) for f(n) = sum_k F(n,k)
struct Recursion {
    RatFunc g1, g2; // in n, a, b
    long r = 1;
};

struct VerifyReport {
    bool holds = false;
    RatFunc residual; // normalized difference of the two sides, zero iff holds
};

// Checks the defining identity divided through by F(n,k):
//   p1 * F(n+r,k)/F(n,k) + p2 = R(n,k+1) * F(n,k+1)/F(n,k) - R(n,k)
VerifyReport verify_certificate(const HyperTerm& F, const Certificate& c);

// g2 = -p1/p2, g1 = -R(n,0) F(n,0)/p2
Recursion derive_recursion(const HyperTerm& F, const Certificate& c);

bool match_published_recursion(const Recursion& derived, const Recursion& published);

// Undetermined-coefficients search for a certificate with shift r; degrees of
// p1, p2 (and R's numerator) escalate up to degree_bound before giving up.
// Any certificate returned verifies exactly.
std::optional<Certificate> find_certificate(const HyperTerm& F, long r, int degree_bound);

} // namespace hyperaccel
