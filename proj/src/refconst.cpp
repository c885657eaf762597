#include "hyperaccel/refconst.hpp"
#include <algorithm>
#include <map>
#include <mutex>
#include "hyperaccel/errors.hpp"

namespace hyperaccel {
namespace {

// exact decimal digit count, v > 0 (sizeinbase may overcount by one)
long digits_of(const Int& v) {
    auto sz = static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 10));
    if (v < pow10z(sz - 1)) --sz;
    return sz;
}

// q with 10^q <= d < 10^(q+1), d > 0
long floor_log10(const Rat& d) {
    Int fl = d.get_num() / d.get_den();
    if (fl > 0) return digits_of(fl) - 1;
    Int num = d.get_num();
    long t = 0;
    while (num < d.get_den()) {
        num *= 10;
        ++t;
    }
    return -t;
}

// atan(1/x) * S. Floors compose exactly, so term i is floor(S / ((2i+1)
// x^(2i+1))) give or take one unit, and the alternating tail after p hits
// zero is below two units.
Int atan_inv(unsigned long x, const Int& S) {
    Int p = S / x;
    Int x2 = Int(x) * x;
    Int acc = 0;
    for (unsigned long i = 0; p != 0; ++i) {
        Int t = p / (2 * i + 1);
        if (i % 2 == 0)
            acc += t;
        else
            acc -= t;
        p /= x2;
    }
    return acc;
}

Int pi_mantissa(long W) {
    Int S = pow10z(W);
    return 16 * atan_inv(5, S) - 4 * atan_inv(239, S);
}

Int ln2_mantissa(long W) {
    Int p = pow10z(W), acc = 0;
    for (unsigned long k = 1; p != 0; ++k) {
        p /= 2;
        acc += p / k;
    }
    return acc;
}

Int sqrt_mantissa(unsigned long c, long W) {
    Int v = c * pow10z(2 * W), r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

Int cbrt2_mantissa(long W) {
    Int v = 2 * pow10z(3 * W), r;
    mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3);
    return r;
}

// Apery's series (5/2) sum (-1)^(n-1) / (n^3 binom(2n,n))
Int zeta3_mantissa(long W) {
    Int S = pow10z(W), acc = 0;
    for (unsigned long n = 1;; ++n) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
        Int t = S / (Int(n) * n * n * b);
        if (t == 0) break;
        if (n % 2 == 1)
            acc += t;
        else
            acc -= t;
    }
    return (5 * acc) / 2;
}

// G = (3/8) sum 1/((2n+1)^2 binom(2n,n)) + (pi/8) ln(2+sqrt3), with
// ln(2+sqrt3) = 2 artanh(1/sqrt3) = (2/sqrt3) sum 1/((2k+1) 3^k)
Int catalan_mantissa(long W) {
    Int S = pow10z(W), s1 = 0;
    for (unsigned long n = 0;; ++n) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
        Int t = S / (Int(2 * n + 1) * (2 * n + 1) * b);
        if (t == 0) break;
        s1 += t;
    }
    Int p = S, T = 0; // T/S ~ artanh(1/sqrt3) * sqrt3
    for (unsigned long k = 0; p != 0; ++k) {
        T += p / (2 * k + 1);
        p /= 3;
    }
    Int L = 2 * T * S / sqrt_mantissa(3, W);
    return 3 * s1 / 8 + pi_mantissa(W) * L / (8 * S);
}

Int pisq_mantissa(long W) {
    long W2 = W + 10;
    Int p = pi_mantissa(W2);
    return p * p / pow10z(2 * W2 - W);
}

// Every oracle above is within 16*W + 64 units of the true value at scale W:
// the series cost one floor per term plus a bounded tail (Machin's amounts to
// 16 and 4 times roughly W/1.4 and W/4.8 terms, the binomial sums to under
// 2W terms, artanh to 2.1W with the pi*ln recombination below tripling it),
// and the integer roots are exact floors.
Int atom_err_budget(long W) { return 16 * Int(W) + 64; }

Int atom_mantissa(Atom a, long W) {
    static std::mutex mu;
    static std::map<std::pair<int, long>, Int> cache;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find({static_cast<int>(a), W});
        if (it != cache.end()) return it->second;
    }
    Int m;
    switch (a) {
        case Atom::Pi: m = pi_mantissa(W); break;
        case Atom::Ln2: m = ln2_mantissa(W); break;
        case Atom::Zeta3: m = zeta3_mantissa(W); break;
        case Atom::Catalan: m = catalan_mantissa(W); break;
        case Atom::Sqrt2: m = sqrt_mantissa(2, W); break;
        case Atom::Sqrt3: m = sqrt_mantissa(3, W); break;
        case Atom::Cbrt2: m = cbrt2_mantissa(W); break;
        case Atom::PiSq: m = pisq_mantissa(W); break;
        default: throw UnknownAtom("#" + std::to_string(static_cast<int>(a)));
    }
    std::lock_guard<std::mutex> g(mu);
    cache.emplace(std::make_pair(static_cast<int>(a), W), m);
    return m;
}

} // namespace

const char* atom_name(Atom a) {
    switch (a) {
        case Atom::Pi: return "pi";
        case Atom::Ln2: return "ln2";
        case Atom::Zeta3: return "zeta3";
        case Atom::Catalan: return "catalan";
        case Atom::Sqrt2: return "sqrt2";
        case Atom::Sqrt3: return "sqrt3";
        case Atom::Cbrt2: return "cbrt2";
        case Atom::PiSq: return "pi2";
    }
    throw UnknownAtom("#" + std::to_string(static_cast<int>(a)));
}

std::optional<Atom> atom_from_name(const std::string& s) {
    static const std::pair<const char*, Atom> table[] = {
        {"pi", Atom::Pi},         {"ln2", Atom::Ln2},
        {"zeta3", Atom::Zeta3},   {"catalan", Atom::Catalan},
        {"sqrt2", Atom::Sqrt2},   {"sqrt3", Atom::Sqrt3},
        {"cbrt2", Atom::Cbrt2},   {"pi2", Atom::PiSq}};
    for (auto& [name, a] : table)
        if (s == name) return a;
    return std::nullopt;
}

void ConstantExpr::normalize() {
    coefficient.canonicalize();
    std::sort(atoms.begin(), atoms.end());
    std::vector<std::pair<Atom, int>> merged;
    for (auto& [a, e] : atoms) {
        if (!merged.empty() && merged.back().first == a)
            merged.back().second += e;
        else
            merged.emplace_back(a, e);
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0; });
    atoms = std::move(merged);
    if (coefficient == 0) atoms.clear();
}

std::string ConstantExpr::str() const {
    std::string s = rat_string(coefficient);
    for (auto& [a, e] : atoms) {
        s += " * ";
        s += atom_name(a);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

bool operator==(const ConstantExpr& x, const ConstantExpr& y) {
    return x.coefficient == y.coefficient && x.atoms == y.atoms;
}

ConstantExpr make_const(const Rat& coefficient,
                        std::initializer_list<std::pair<Atom, int>> atoms) {
    ConstantExpr c;
    c.coefficient = coefficient;
    c.atoms.assign(atoms.begin(), atoms.end());
    c.normalize();
    return c;
}

Rat FixedDecimal::value() const {
    return Rat(mantissa) / Rat(pow10z(scale));
}

std::string FixedDecimal::str() const { return decimal_string(value(), scale); }

FixedDecimal reference_value(const ConstantExpr& c, long digits) {
    if (digits < 1) throw InsufficientScale("reference needs at least one digit");
    if (c.coefficient == 0) return {Int(0), digits};
    // acc/S carries the atom product with a running error bound of err units
    // at scale W; the exact coefficient is applied last so its size feeds the
    // final guard check instead of inflating intermediate error
    for (long W = digits + 10;; W += 20) {
        Int S = pow10z(W);
        Int E = atom_err_budget(W);
        Int acc = S, err = 0;
        for (auto& [a, e] : c.atoms) {
            Int M = atom_mantissa(a, W);
            for (int i = 0; i < (e > 0 ? e : -e); ++i) {
                if (e > 0) {
                    err = acc * E / S + M * err / S + 3;
                    acc = acc * M / S;
                } else {
                    err = err * S / M + acc * E * S / (M * M) + 3;
                    acc = acc * S / M;
                }
            }
        }
        Int num = c.coefficient.get_num(), den = c.coefficient.get_den();
        err = abs(num) * err / den + 1;
        if (2 * err >= pow10z(W - digits)) continue; // guard spent, go wider
        Rat v(acc * num, den * pow10z(W - digits));
        v.canonicalize();
        return {scaled_round(v, 0), digits};
    }
}

long digits_agree(const Rat& x, const FixedDecimal& ref) {
    if (ref.scale < 0 || ref.mantissa == 0)
        throw InsufficientScale("reference carries no significant digits");
    Rat d = x - ref.value();
    if (d < 0) d = -d;
    Rat ulp = Rat(1) / Rat(pow10z(ref.scale));
    if (d <= ulp) return ref.scale;
    long m = digits_of(abs(ref.mantissa)) - 1 - ref.scale;
    return std::max(0L, m - floor_log10(d));
}

long fraction_digits_agree(const Rat& x, const FixedDecimal& ref) {
    if (ref.scale < 0 || ref.mantissa == 0)
        throw InsufficientScale("reference carries no significant digits");
    Rat d = x - ref.value();
    if (d < 0) d = -d;
    Rat ulp = Rat(1) / Rat(pow10z(ref.scale));
    if (d <= ulp) return ref.scale;
    return std::max(0L, -floor_log10(d));
}

} // namespace hyperaccel
