#include "hyperaccel/accelerate.hpp"
#include <array>
#include <cassert>
#include <cmath>
#include "hyperaccel/errors.hpp"

namespace hyperaccel {

Rat naive_partial_sum(const SeriesInstance& inst, long K) {
    const HyperTerm& F = inst.family->term;
    if (K <= 0) return Rat(0);
    if (F.prefactor.num.depends_on(VK)) {
        TermStream ts(F, inst.point());
        Rat s = 0;
        for (long k = 0; k < K; ++k) {
            s += ts.value();
            ts.advance();
        }
        return s;
    }
    // ratio-driven accumulation: S = P/Q and t_k = T/Q throughout, so each
    // step multiplies by the small ratio value instead of a full denominator
    RatFunc rho = shift_ratio_k(F);
    auto pt = inst.point();
    Rat t0 = term_value(F, pt, 0);
    Int P = 0, T = t0.get_num(), Q = t0.get_den();
    for (long k = 0; k < K; ++k) {
        P += T;
        if (T == 0) break; // a numerator Pochhammer terminated the series
        if (k + 1 < K) {
            pt[VK] = k;
            Rat r = rho.eval(pt);
            P *= r.get_den();
            T *= r.get_num();
            Q *= r.get_den();
        }
    }
    Rat s(P, Q);
    s.canonicalize();
    return s;
}

Rat accelerated_partial_sum(const SeriesInstance& inst, long J) {
    const Recursion& rec = inst.family->recursion;
    Rat S = 0, prod = 1;
    auto pt = inst.point();
    for (long j = 0; j < J; ++j) {
        pt[VN] = inst.n0 + Rat(rec.r * j);
        try {
            S += prod * rec.g1.eval(pt);
            if (j + 1 < J) prod *= rec.g2.eval(pt);
        } catch (const PoleEncountered& e) {
            throw PoleEncountered(e.where, j);
        }
    }
    return S;
}

Rat convergence_rate(const TransformFamily& family) {
    const RatFunc& g2 = family.recursion.g2;
    int dn = g2.num.degree(VN), dd = g2.den.degree(VN);
    if (dn != dd)
        throw DegreeMismatch("g2 numerator n-degree " + std::to_string(dn) +
                             " differs from denominator n-degree " + std::to_string(dd));
    MultiPoly ln = g2.num.coeffs_in(VN).back();
    MultiPoly ld = g2.den.coeffs_in(VN).back();
    if (!ln.is_constant() || !ld.is_constant())
        throw DegreeMismatch("leading n coefficients of g2 depend on parameters");
    return ln.constant_value() / ld.constant_value();
}

long terms_for_digits(const Rat& rate, long digits) {
    double x = std::fabs(rate.get_d());
    if (!(x > 0.0 && x < 1.0)) throw DegreeMismatch("rate magnitude outside (0,1)");
    return static_cast<long>(std::ceil(static_cast<double>(digits) / -std::log10(x))) + 15;
}

Rat limit_of_term_ratios(const SeriesInstance& inst, long j) {
    assert(j >= 8);
    const Recursion& rec = inst.family->recursion;
    auto ratio_at = [&](long m) -> Rat {
        auto pt = inst.point();
        pt[VN] = inst.n0 + Rat(rec.r * m);
        Rat g2 = rec.g2.eval(pt), g1m = rec.g1.eval(pt);
        pt[VN] = inst.n0 + Rat(rec.r * (m + 1));
        if (g1m == 0) throw DivisionByZero();
        return g2 * rec.g1.eval(pt) / g1m;
    };
    // Richardson triangle in h = 1/m over halved nodes
    std::array<Rat, 4> R{ratio_at(j / 8), ratio_at(j / 4), ratio_at(j / 2), ratio_at(j)};
    for (int lvl = 1; lvl < 4; ++lvl) {
        Rat w = Rat(Int(1) << lvl);
        for (int i = 3; i >= lvl; --i) R[i] = (w * R[i] - R[i - 1]) / (w - 1);
    }
    return R[3];
}

TailProbe check_tail_vanishing(const SeriesInstance& inst, int M) {
    const Recursion& rec = inst.family->recursion;
    TailProbe rep;
    Rat prod = 1;
    auto pt = inst.point();
    for (int m = 0; m <= M; ++m) {
        pt[VN] = inst.n0 + Rat(rec.r * m);
        prod *= rec.g2.eval(pt);
        SeriesInstance shifted = inst;
        shifted.n0 = inst.n0 + Rat(rec.r * (m + 1));
        Rat v = prod * naive_partial_sum(shifted, 200);
        if (v < 0) v = -v;
        rep.values.push_back(v);
    }
    rep.decreasing_final_half = true;
    for (size_t i = rep.values.size() / 2; i + 1 < rep.values.size(); ++i)
        if (!(rep.values[i + 1] < rep.values[i])) rep.decreasing_final_half = false;
    return rep;
}

namespace {

// p(v + base) has only nonnegative coefficients, hence p >= 0 on [base, inf)
bool nonneg_shifted(const MultiPoly& p, int v, const Rat& base) {
    MultiPoly q = p.shift(v, base);
    for (auto& [m, c] : q.terms())
        if (c < 0) return false;
    return true;
}

// strictly positive on [base, inf): nonnegative coefficients after the shift
// and a positive constant term
bool positive_shifted(const MultiPoly& p, int v, const Rat& base) {
    MultiPoly q = p.shift(v, base);
    if (!(q.coeff(mono_one()) > 0)) return false;
    for (auto& [m, c] : q.terms())
        if (c < 0) return false;
    return true;
}

const Rat kGaussS[] = {Rat(3), Rat(2), Rat(3, 2), Rat(5, 4), Rat(9, 8)};
const Rat kLeibnizS[] = {Rat(1), Rat(1, 2)};

std::vector<Rat> shift_constants(long K) {
    return {Rat(0), Rat(1), Rat(2), Rat(4), Rat(8), Rat(16), Rat(K)};
}

} // namespace

std::optional<Rat> naive_tail_bound(const SeriesInstance& inst, long K) {
    const HyperTerm& F = inst.family->term;
    auto pt = inst.point();
    Rat tK;
    try {
        tK = term_value(F, pt, K);
    } catch (const PoleEncountered&) {
        return std::nullopt;
    }
    Rat atK = tK < 0 ? Rat(-tK) : tK;
    if (tK == 0) {
        // zero stays zero only when a numerator Pochhammer has terminated
        for (auto& f : F.poch)
            if (f.exponent > 0) {
                Rat base = f.base.eval(pt);
                if (base <= 0 && base.get_den() == 1 && 1 - base <= K) return Rat(0);
            }
        if (!F.prefactor.num.depends_on(VK) && F.prefactor.num.eval(pt) == 0)
            return Rat(0);
        return std::nullopt;
    }

    RatFunc rho = shift_ratio_k(F);
    auto fix = [&](const MultiPoly& p) {
        return p.eval_at(VN, inst.n0).eval_at(VA, inst.a).eval_at(VB, inst.b);
    };
    MultiPoly u = fix(rho.num), w = fix(rho.den);
    Rat base(K);
    if (!positive_shifted(w, VK, base)) {
        u = -u;
        w = -w;
    }
    if (!positive_shifted(w, VK, base)) return std::nullopt;
    if (u.is_zero()) return atK; // single surviving term

    MultiPoly kvar = MultiPoly::variable(VK);
    if (nonneg_shifted(u, VK, base)) {
        // constant-sign terms with t_{k+1}/t_k <= (k+A)/(k+A+s) give
        // tail <= |t_K| (K+A+s-1)/(s-1), the Gauss bound summed exactly
        for (const Rat& s : kGaussS)
            for (const Rat& A : shift_constants(K)) {
                MultiPoly Q = (kvar + MultiPoly(A)) * w - (kvar + MultiPoly(A + s)) * u;
                if (nonneg_shifted(Q, VK, base))
                    return atK * (Rat(K) + A + s - 1) / (s - 1);
            }
        return std::nullopt;
    }
    if (nonneg_shifted(-u, VK, base)) {
        // alternating with |ratio| <= (k+A)/(k+A+s) < 1: terms decrease to
        // zero, so the tail is bounded by its first term
        for (const Rat& s : kLeibnizS)
            for (const Rat& A : shift_constants(K)) {
                MultiPoly Q = (kvar + MultiPoly(A)) * w + (kvar + MultiPoly(A + s)) * u;
                if (nonneg_shifted(Q, VK, base)) return atK;
            }
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Rat> accelerated_tail_bound(const SeriesInstance& inst, long J) {
    const Recursion& rec = inst.family->recursion;
    // the j-th accelerated term ratio g2(n0+rj) g1(n0+r(j+1)) / g1(n0+rj)
    // as a univariate rational function (slot VK holds j)
    auto along = [&](const RatFunc& f, long off) -> RatFunc {
        MultiPoly num = f.num.eval_at(VA, inst.a).eval_at(VB, inst.b);
        MultiPoly den = f.den.eval_at(VA, inst.a).eval_at(VB, inst.b);
        MultiPoly lin = MultiPoly::variable(VK) * Rat(rec.r) +
                        MultiPoly(inst.n0 + Rat(rec.r * off));
        return ratfunc_normalize(num.subst_poly(VN, lin), den.subst_poly(VN, lin));
    };
    RatFunc g1j = along(rec.g1, 0);
    if (g1j.is_zero()) return Rat(0);
    RatFunc ratio = along(rec.g2, 0) * along(rec.g1, 1) / g1j;
    MultiPoly u = ratio.num, w = ratio.den;
    Rat base(J);
    if (!positive_shifted(w, VK, base)) {
        u = -u;
        w = -w;
    }
    if (!positive_shifted(w, VK, base)) return std::nullopt;
    // the pointwise bound |tau_{j+1}| <= lambda |tau_j| needs tau_j != 0, so
    // g1 along the lattice must keep one sign from J on
    if (!positive_shifted(g1j.num, VK, base) && !positive_shifted(-g1j.num, VK, base))
        return std::nullopt;

    Rat prod = 1;
    auto pt = inst.point();
    for (long i = 0; i < J; ++i) {
        pt[VN] = inst.n0 + Rat(rec.r * i);
        prod *= rec.g2.eval(pt);
    }
    pt[VN] = inst.n0 + Rat(rec.r * J);
    Rat tau = prod * rec.g1.eval(pt);
    if (tau < 0) tau = -tau;

    for (const Rat& lam : {Rat(1, 2), Rat(3, 4), Rat(7, 8), Rat(15, 16)}) {
        MultiPoly lo = w * lam - u, hi = w * lam + u;
        if (nonneg_shifted(lo, VK, base) && nonneg_shifted(hi, VK, base))
            return tau / (1 - lam);
    }
    return std::nullopt;
}

} // namespace hyperaccel
