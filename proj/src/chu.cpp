#include "hyperaccel/chu.hpp"
#include <algorithm>
#include "hyperaccel/errors.hpp"
#include "hyperaccel/expr.hpp"

namespace hyperaccel {

void chu_validate(const ChuSeries& s) {
    Rat mag = s.rate < 0 ? Rat(-s.rate) : s.rate;
    if (!(mag < 1)) throw ValidationError("chu-rate-bound", "|rate| must be below one");
    if (s.start_index < 0)
        throw ValidationError("chu-start-index", "start index must be nonnegative");
    for (auto& l : s.lowers)
        if (l <= 0 && l.get_den() == 1)
            throw ValidationError("chu-lower-positive",
                                  "lower parameter " + rat_string(l) +
                                      " hits a pole at index " + rat_string(1 - l));
    for (auto& u : s.uppers)
        for (auto& l : s.lowers) {
            Rat gap = u - l;
            if (gap.get_den() == 1)
                throw ValidationError("chu-pair-integer-gap",
                                      "upper " + rat_string(u) + " and lower " +
                                          rat_string(l) + " differ by an integer");
        }
}

Rat chu_term(const ChuSeries& s, long j) {
    Rat pu = 1, pl = 1;
    for (auto& u : s.uppers) pu *= pochhammer(u, j);
    for (auto& l : s.lowers) pl *= pochhammer(l, j);
    if (pl == 0) throw PoleEncountered("lower Pochhammer", j);
    std::array<Rat, NVARS> pt{};
    pt[VN] = Rat(j);
    return rat_pow(s.rate, j) * pu / pl * s.summand.eval(pt);
}

Rat evaluate_chu_series(const ChuSeries& s, long J) {
    Rat S = 0;
    Rat x = rat_pow(s.rate, s.start_index);
    Rat pu = 1, pl = 1;
    for (auto& u : s.uppers) pu *= pochhammer(u, s.start_index);
    for (auto& l : s.lowers) pl *= pochhammer(l, s.start_index);
    std::array<Rat, NVARS> pt{};
    for (long j = s.start_index; j < s.start_index + J; ++j) {
        if (pl == 0) throw PoleEncountered("lower Pochhammer", j);
        pt[VN] = Rat(j);
        S += x * pu / pl * s.summand.eval(pt);
        x *= s.rate;
        for (auto& u : s.uppers) pu *= u + j;
        for (auto& l : s.lowers) pl *= l + j;
    }
    return S;
}

ChuSeries emit_chu_style(const SeriesInstance& inst) {
    const Recursion& rec = inst.family->recursion;
    // g1, g2 along the shift lattice n0 + r j as univariate functions of j
    auto along = [&](const RatFunc& f) -> RatFunc {
        MultiPoly num = f.num.eval_at(VA, inst.a).eval_at(VB, inst.b);
        MultiPoly den = f.den.eval_at(VA, inst.a).eval_at(VB, inst.b);
        MultiPoly lin = MultiPoly::variable(VN) * Rat(rec.r) + MultiPoly(inst.n0);
        return ratfunc_normalize(num.subst_poly(VN, lin), den.subst_poly(VN, lin));
    };
    RatFunc G2 = along(rec.g2), G1 = along(rec.g1);
    if (G2.is_zero()) throw NonLinearFactor("g2 vanishes identically at this assignment");

    auto fnum = factor_linear_rational(G2.num);
    auto fden = factor_linear_rational(G2.den);
    if (!fnum.remainder.is_constant())
        throw NonLinearFactor("irreducible factor " +
                              print_poly(fnum.remainder, SymbolTable::j_only()) +
                              " in g2 numerator");
    if (!fden.remainder.is_constant())
        throw NonLinearFactor("irreducible factor " +
                              print_poly(fden.remainder, SymbolTable::j_only()) +
                              " in g2 denominator");

    ChuSeries s;
    s.rate = fnum.constant * fnum.remainder.constant_value() /
             (fden.constant * fden.remainder.constant_value());
    s.start_index = inst.start_index;
    // prod_{i<j} (i + alpha) = (alpha)_j with alpha = -root
    for (auto& [root, mult] : fnum.roots)
        for (int i = 0; i < mult; ++i) s.uppers.push_back(-root);
    for (auto& [root, mult] : fden.roots)
        for (int i = 0; i < mult; ++i) s.lowers.push_back(-root);
    s.summand = G1;

    // cancel upper/lower pairs differing by an integer into the summand:
    // (x+m)_j / (x)_j = prod_{i<m} (j+x+i)/(x+i)
    MultiPoly jvar = MultiPoly::variable(VN);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t iu = 0; iu < s.uppers.size() && !changed; ++iu)
            for (size_t il = 0; il < s.lowers.size() && !changed; ++il) {
                Rat gap = s.uppers[iu] - s.lowers[il];
                if (gap.get_den() != 1) continue;
                long m = static_cast<long>(gap.get_num().get_si());
                Rat low = m >= 0 ? s.lowers[il] : s.uppers[iu];
                for (long i = 0; i < (m >= 0 ? m : -m); ++i) {
                    RatFunc lin(jvar + MultiPoly(low + i));
                    RatFunc cst(low + i);
                    s.summand = m >= 0 ? s.summand * lin / cst : s.summand * cst / lin;
                }
                s.uppers.erase(s.uppers.begin() + iu);
                s.lowers.erase(s.lowers.begin() + il);
                changed = true;
            }
    }
    std::sort(s.uppers.begin(), s.uppers.end());
    std::sort(s.lowers.begin(), s.lowers.end());
    return s;
}

std::string render_chu(const ChuSeries& s) {
    auto join = [](const std::vector<Rat>& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += rat_string(v[i]);
        }
        return out;
    };
    std::string out = "sum_{j>=" + std::to_string(s.start_index) + "} (" +
                      rat_string(s.rate) + ")^j";
    if (!s.uppers.empty() || !s.lowers.empty())
        out += " * [" + join(s.uppers) + " ; " + join(s.lowers) + "]_j";
    out += " * (" + print_ratfunc(s.summand, SymbolTable::j_only()) + ")";
    return out;
}

} // namespace hyperaccel
