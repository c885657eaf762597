#include "hyperaccel/hyperterm.hpp"
#include "hyperaccel/errors.hpp"
#include "hyperaccel/expr.hpp"

namespace hyperaccel {

void hyperterm_validate(const HyperTerm& F) {
    for (const auto& pf : F.poch) {
        if (pf.exponent == 0)
            throw ValidationError("poch-exponent-nonzero", print_poly(pf.base));
        if (pf.base.is_zero())
            throw ValidationError("poch-base-nonzero", "zero base");
        if (pf.base.degree(VK) > 0)
            throw ValidationError("poch-base-k-free", print_poly(pf.base));
        for (int v : {VN, VA, VB})
            if (pf.base.degree(v) > 1)
                throw ValidationError("poch-base-linear", print_poly(pf.base));
        if (pf.base.total_degree() > 1)
            throw ValidationError("poch-base-linear", print_poly(pf.base));
        MultiPoly cn = pf.base.coeffs_in(VN).size() > 1 ? pf.base.coeffs_in(VN)[1] : MultiPoly();
        if (!cn.is_zero() && cn.constant_value().get_den() != 1)
            throw ValidationError("poch-base-integer-n-coefficient", print_poly(pf.base));
    }
    if (F.power_base == 0)
        throw ValidationError("power-base-nonzero", "x = 0 in x^k");
}

Rat pochhammer(const Rat& x, long m) {
    Rat p = 1, f = x;
    for (long i = 0; i < m; ++i, f += 1) p *= f;
    return p;
}

static Rat eval_base(const MultiPoly& base, const std::array<Rat, NVARS>& point) {
    return base.eval(point);
}

Rat term_value(const HyperTerm& F, const std::array<Rat, NVARS>& point, long k) {
    std::array<Rat, NVARS> pt = point;
    pt[VK] = Rat(k);
    Rat v = F.prefactor.eval(pt);
    v *= rat_pow(F.power_base, k);
    for (const auto& pf : F.poch) {
        Rat base = eval_base(pf.base, pt);
        Rat p = pochhammer(base, k);
        if (pf.exponent < 0) {
            if (p == 0) {
                // locate the first factor base+j that vanished
                long j = 0;
                for (Rat f = base; j < k; ++j, f += 1)
                    if (f == 0) break;
                throw PoleEncountered(print_poly(pf.base), j);
            }
            v *= rat_pow(Rat(1) / p, -pf.exponent);
        } else {
            v *= rat_pow(p, pf.exponent);
        }
    }
    return v;
}

RatFunc shift_ratio_k(const HyperTerm& F) {
    RatFunc ratio(MultiPoly(F.power_base), MultiPoly(1L));
    MultiPoly k = MultiPoly::variable(VK, 1);
    for (const auto& pf : F.poch) {
        // (x)_{k+1} / (x)_k = x + k
        RatFunc f(pf.base + k, MultiPoly(1L));
        for (int e = 0; e < pf.exponent; ++e) ratio = ratio * f;
        for (int e = 0; e > pf.exponent; --e) ratio = ratio / f;
    }
    RatFunc up = subst_shift(F.prefactor, VK, Rat(1));
    if (!F.prefactor.is_zero()) ratio = ratio * (up / F.prefactor);
    return ratio;
}

RatFunc shift_ratio_n(const HyperTerm& F, long r) {
    RatFunc ratio(MultiPoly(1L), MultiPoly(1L));
    MultiPoly k = MultiPoly::variable(VK, 1);
    for (const auto& pf : F.poch) {
        auto cs = pf.base.coeffs_in(VN);
        long beta = cs.size() > 1 ? cs[1].constant_value().get_num().get_si() : 0;
        long m = beta * r; // base shifts by an integer: (x+m)_k / (x)_k telescopes
        for (long i = 0; i < m; ++i) {
            MultiPoly xi = pf.base + MultiPoly(i);
            RatFunc f(xi + k, xi);
            for (int e = 0; e < pf.exponent; ++e) ratio = ratio * f;
            for (int e = 0; e > pf.exponent; --e) ratio = ratio / f;
        }
        for (long i = 1; i <= -m; ++i) {
            MultiPoly xi = pf.base - MultiPoly(i);
            RatFunc f(xi, xi + k);
            for (int e = 0; e < pf.exponent; ++e) ratio = ratio * f;
            for (int e = 0; e > pf.exponent; --e) ratio = ratio / f;
        }
    }
    RatFunc up = subst_shift(F.prefactor, VN, Rat(r));
    if (!F.prefactor.is_zero()) ratio = ratio * (up / F.prefactor);
    return ratio;
}

RatFunc term_at_k0(const HyperTerm& F) {
    return subst_value(F.prefactor, VK, Rat(0));
}

TermStream::TermStream(const HyperTerm& F, const std::array<Rat, NVARS>& point)
    : F_(F), point_(point) {
    point_[VK] = 0;
}

Rat TermStream::value() const {
    std::array<Rat, NVARS> pt = point_;
    pt[VK] = Rat(k_);
    return F_.prefactor.eval(pt) * powk_ * pochprod_;
}

void TermStream::advance() {
    std::array<Rat, NVARS> pt = point_;
    pt[VK] = Rat(k_);
    for (const auto& pf : F_.poch) {
        Rat f = eval_base(pf.base, pt) + k_;
        if (pf.exponent < 0) {
            if (f == 0) throw PoleEncountered(print_poly(pf.base), k_);
            pochprod_ *= rat_pow(Rat(1) / f, -pf.exponent);
        } else {
            pochprod_ *= rat_pow(f, pf.exponent);
        }
    }
    powk_ *= F_.power_base;
    ++k_;
}

} // namespace hyperaccel
