#include "hyperaccel/certify.hpp"
#include "hyperaccel/errors.hpp"

namespace hyperaccel {

VerifyReport verify_certificate(const HyperTerm& F, const Certificate& c) {
    RatFunc Sn = shift_ratio_n(F, c.r);
    RatFunc Sk = shift_ratio_k(F);
    RatFunc lhs = RatFunc(c.p1, MultiPoly(1L)) * Sn + RatFunc(c.p2, MultiPoly(1L));
    RatFunc rhs = subst_shift(c.R, VK, Rat(1)) * Sk - c.R;
    VerifyReport rep;
    rep.residual = lhs - rhs;
    rep.holds = rep.residual.is_zero();
    return rep;
}

Recursion derive_recursion(const HyperTerm& F, const Certificate& c) {
    if (c.p2.is_zero()) throw ZeroP2();
    RatFunc p2(c.p2, MultiPoly(1L));
    Recursion rec;
    rec.r = c.r;
    rec.g2 = RatFunc(-c.p1, MultiPoly(1L)) / p2;
    rec.g1 = -(subst_value(c.R, VK, Rat(0)) * term_at_k0(F)) / p2;
    return rec;
}

bool match_published_recursion(const Recursion& derived, const Recursion& published) {
    if (derived.r != published.r) return false;
    return ratfunc_equal(derived.g1, published.g1) && ratfunc_equal(derived.g2, published.g2);
}

} // namespace hyperaccel
