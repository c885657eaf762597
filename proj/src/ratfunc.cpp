#include "hyperaccel/ratfunc.hpp"
#include "hyperaccel/errors.hpp"
#include <cassert>

namespace hyperaccel {

RatFunc::RatFunc(MultiPoly n, MultiPoly d) {
    *this = ratfunc_normalize(std::move(n), std::move(d));
}

void RatFunc::normalize_integer_() {
    if (num.is_zero()) {
        den = MultiPoly(Rat(1));
        return;
    }
    // clear denominators jointly, then strip the joint integer content; the
    // polynomial parts are assumed coprime already
    Int dl;
    mpz_lcm(dl.get_mpz_t(), num.denominator_lcm().get_mpz_t(), den.denominator_lcm().get_mpz_t());
    if (dl != 1) {
        num = num * Rat(dl);
        den = den * Rat(dl);
    }
    Int cn = num.integer_content(), cd = den.integer_content();
    Int g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den.leading_coeff() < 0) g = -g;
    if (g != 1) {
        Rat inv = Rat(1) / Rat(g);
        num = num * inv;
        den = den * inv;
    }
}

RatFunc ratfunc_normalize(MultiPoly num, MultiPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    RatFunc f;
    if (num.is_zero()) return f;
    if (!den.is_constant()) {
        MultiPoly g = multipoly_gcd(num, den);
        if (!g.is_constant()) {
            num = divide_exact(num, g);
            den = divide_exact(den, g);
        }
    }
    f.num = std::move(num);
    f.den = std::move(den);
    f.normalize_integer_();
    return f;
}

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) {
    if (f.num == g.num && f.den == g.den) return true;
    return (f.num * g.den - g.num * f.den).is_zero();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num = -r.num;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return ratfunc_normalize(num * o.den + o.num * den, den * o.den);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return ratfunc_normalize(num * o.den - o.num * den, den * o.den);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return ratfunc_normalize(num * o.num, den * o.den);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num.is_zero()) throw DivisionByZero();
    return ratfunc_normalize(num * o.den, den * o.num);
}

Rat RatFunc::eval(const std::array<Rat, NVARS>& point) const {
    Rat d = den.eval(point);
    if (d == 0) throw PoleEncountered("rational function denominator");
    return num.eval(point) / d;
}

RatFunc substitute(const RatFunc& f, const std::map<int, RatFunc>& bindings) {
    if (bindings.empty()) return f;
    // fast paths: every binding a shift v -> v + c, or a plain value
    bool all_shift = true, all_value = true;
    for (auto& [v, g] : bindings) {
        if (g.is_constant()) {
            all_shift = false;
            continue;
        }
        all_value = false;
        bool is_shift = false;
        if (g.is_polynomial() && g.num.degree(v) == 1) {
            auto cs = g.num.coeffs_in(v);
            is_shift = cs[1].is_constant() && cs[0].is_constant() &&
                       cs[1].constant_value() == g.den.constant_value();
        }
        if (!is_shift) all_shift = false;
    }
    if (all_shift || all_value) {
        MultiPoly n = f.num, d = f.den;
        for (auto& [v, g] : bindings) {
            if (g.is_constant()) {
                Rat c = g.constant_value();
                n = n.eval_at(v, c);
                d = d.eval_at(v, c);
            } else {
                Rat c = g.num.coeffs_in(v)[0].constant_value() / g.den.constant_value();
                n = n.shift(v, c);
                d = d.shift(v, c);
            }
        }
        if (d.is_zero()) throw PoleEncountered("substitution denominator");
        // a pure shift of a normal form is still a normal form
        if (all_shift && !bindings.empty()) {
            RatFunc r;
            r.num = std::move(n);
            r.den = std::move(d);
            return r;
        }
        return ratfunc_normalize(std::move(n), std::move(d));
    }

    // general case: evaluate num and den as polynomials in the bound symbols
    // over RatFunc arithmetic, deferring normalization to the very end
    auto subst_poly = [&](const MultiPoly& p) -> std::pair<MultiPoly, MultiPoly> {
        MultiPoly acc_num, acc_den(Rat(1));
        for (auto& [m, c] : p.terms()) {
            MultiPoly t_num(c), t_den(Rat(1));
            for (int v = 0; v < NVARS; ++v) {
                if (!m[v]) continue;
                auto it = bindings.find(v);
                if (it == bindings.end()) {
                    t_num = t_num * MultiPoly::variable(v, m[v]);
                } else {
                    for (int i = 0; i < m[v]; ++i) {
                        t_num = t_num * it->second.num;
                        t_den = t_den * it->second.den;
                    }
                }
            }
            // acc += t
            acc_num = acc_num * t_den + t_num * acc_den;
            acc_den = acc_den * t_den;
        }
        return {acc_num, acc_den};
    };
    auto [nn, nd] = subst_poly(f.num);
    auto [dn, dd] = subst_poly(f.den);
    if (dn.is_zero()) throw PoleEncountered("substitution denominator");
    return ratfunc_normalize(nn * dd, nd * dn);
}

RatFunc subst_shift(const RatFunc& f, int v, const Rat& delta) {
    RatFunc r;
    r.num = f.num.shift(v, delta);
    r.den = f.den.shift(v, delta);
    return r;
}

RatFunc subst_value(const RatFunc& f, int v, const Rat& value) {
    MultiPoly d = f.den.eval_at(v, value);
    if (d.is_zero()) throw PoleEncountered("substitution denominator");
    return ratfunc_normalize(f.num.eval_at(v, value), std::move(d));
}

} // namespace hyperaccel
