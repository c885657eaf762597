#include "hyperaccel/multipoly.hpp"
#include "hyperaccel/errors.hpp"
#include "hyperaccel/linsolve.hpp"
#include <cassert>
#include <set>

namespace hyperaccel {

MultiPoly::MultiPoly(const Rat& c) {
    if (c != 0) terms_[mono_one()] = c;
}

MultiPoly::MultiPoly(long c) {
    if (c != 0) terms_[mono_one()] = Rat(c);
}

MultiPoly MultiPoly::variable(int v, unsigned e) {
    MultiPoly p;
    if (e == 0) return MultiPoly(Rat(1));
    Mono m = mono_one();
    m[v] = static_cast<unsigned short>(e);
    p.terms_[m] = Rat(1);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == mono_one());
}

Rat MultiPoly::constant_value() const {
    assert(is_constant());
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

Rat MultiPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int MultiPoly::degree(int v) const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, (int)m[v]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) {
        int s = 0;
        for (int v = 0; v < NVARS; ++v) s += m[v];
        d = std::max(d, s);
    }
    return d;
}

const Mono& MultiPoly::leading_mono() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
}

const Rat& MultiPoly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.begin()->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

static Mono mono_mul(const Mono& x, const Mono& y) {
    Mono r;
    for (int v = 0; v < NVARS; ++v) r[v] = static_cast<unsigned short>(x[v] + y[v]);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    Rat tmp;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            tmp = c1 * c2;
            r.add_term(mono_mul(m1, m2), tmp);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(Rat(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::shift(int v, const Rat& delta) const {
    if (delta == 0) return *this;
    // (v + delta)^e expanded with a binomial row per exponent
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        unsigned e = m[v];
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        Rat binom(1), dpow(1);
        // i = kept exponent of v, from e down to 0; binom = C(e, e-i)*delta^(e-i)
        for (int i = (int)e; i >= 0; --i) {
            Mono m2 = m;
            m2[v] = static_cast<unsigned short>(i);
            r.add_term(m2, c * binom * dpow);
            if (i > 0) {
                binom *= i;
                binom /= (e - i + 1);
                dpow *= delta;
            }
        }
    }
    return r;
}

MultiPoly MultiPoly::eval_at(int v, const Rat& value) const {
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        Mono m2 = m;
        m2[v] = 0;
        r.add_term(m2, c * rat_pow(value, m[v]));
    }
    return r;
}

Rat MultiPoly::eval(const std::array<Rat, NVARS>& point) const {
    Rat s(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (int v = 0; v < NVARS; ++v)
            if (m[v]) t *= rat_pow(point[v], m[v]);
        s += t;
    }
    return s;
}

MultiPoly MultiPoly::subst_poly(int v, const MultiPoly& value) const {
    // Horner over powers of v
    auto cs = coeffs_in(v);
    if (cs.empty()) return MultiPoly();
    MultiPoly r = cs.back();
    for (int i = (int)cs.size() - 2; i >= 0; --i) r = r * value + cs[i];
    return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(int v) const {
    int d = degree(v);
    std::vector<MultiPoly> cs(d + 1);
    for (auto& [m, c] : terms_) {
        Mono m2 = m;
        m2[v] = 0;
        cs[m[v]].add_term(m2, c);
    }
    return cs;
}

MultiPoly MultiPoly::from_coeffs(int v, const std::vector<MultiPoly>& cs) {
    MultiPoly r;
    for (size_t e = 0; e < cs.size(); ++e) {
        for (auto& [m, c] : cs[e].terms()) {
            Mono m2 = m;
            assert(m2[v] == 0);
            m2[v] = static_cast<unsigned short>(e);
            r.add_term(m2, c);
        }
    }
    return r;
}

Int MultiPoly::denominator_lcm() const {
    Int l(1);
    for (auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

Int MultiPoly::integer_content() const {
    Int g(0);
    for (auto& [m, c] : terms_) {
        assert(c.get_den() == 1);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Rat MultiPoly::make_primitive() {
    if (terms_.empty()) return Rat(0);
    Int den = denominator_lcm();
    if (den != 1)
        for (auto& [m, c] : terms_) c *= den;
    Int cont = integer_content();
    bool neg = leading_coeff() < 0;
    if (neg) cont = -cont;
    if (cont != 1)
        for (auto& [m, c] : terms_) c /= cont;
    Rat f(cont, den);
    f.canonicalize();
    return f;
}

// ---- division and gcd ----

static bool mono_divides(const Mono& a, const Mono& b) {
    // does a | b
    for (int v = 0; v < NVARS; ++v)
        if (a[v] > b[v]) return false;
    return true;
}

static Mono mono_div(const Mono& b, const Mono& a) {
    Mono r;
    for (int v = 0; v < NVARS; ++v) r[v] = static_cast<unsigned short>(b[v] - a[v]);
    return r;
}

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
    assert(!b.is_zero());
    if (b.is_constant()) return a * (Rat(1) / b.constant_value());
    MultiPoly r = a, q;
    while (!r.is_zero()) {
        const Mono& lr = r.leading_mono();
        const Mono& lb = b.leading_mono();
        if (!mono_divides(lb, lr)) return std::nullopt;
        Mono qm = mono_div(lr, lb);
        Rat qc = r.leading_coeff() / b.leading_coeff();
        MultiPoly qt;
        qt.add_term(qm, qc);
        q += qt;
        r -= qt * b;
    }
    return q;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    auto q = try_divide(a, b);
    assert(q && "divide_exact: not divisible");
    return *q;
}

// pseudo-remainder of a by b in variable v (both must depend on v,
// deg_v(a) >= deg_v(b)); integer content stripped as we go to limit growth
static MultiPoly prem(MultiPoly a, const MultiPoly& b, int v) {
    int db = b.degree(v);
    auto bc = b.coeffs_in(v);
    const MultiPoly& lb = bc[db];
    while (!a.is_zero()) {
        int da = a.degree(v);
        if (da < db) break;
        auto ac = a.coeffs_in(v);
        MultiPoly la = ac[da];
        // a = lb*a - la*v^(da-db)*b
        MultiPoly xs = MultiPoly::variable(v, static_cast<unsigned>(da - db));
        a = a * lb - b * xs * la;
        a.make_primitive(); // rational factor irrelevant for gcd purposes
    }
    return a;
}

// coefficients of p as a univariate in v after sending every other variable
// to pt[var] mod p
static std::vector<uint64_t> spec_coeffs_modp(const MultiPoly& p, int v,
                                              const uint64_t pt[NVARS]) {
    std::vector<uint64_t> cs(static_cast<size_t>(p.degree(v)) + 1, 0);
    for (auto& [m, q] : p.terms()) {
        uint64_t t = rat_modp(q);
        for (int i = 0; i < NVARS; ++i)
            if (i != v && m[i]) t = mulp(t, powp(pt[i] % MODP, m[i]));
        cs[m[v]] = addp(cs[m[v]], t);
    }
    while (cs.size() > 1 && cs.back() == 0) cs.pop_back();
    return cs;
}

// Modular gcd degree probe.  Both operands must be integer primitive.  If the
// specialized leading coefficient of a survives, deg gcd(spec a, spec b) is an
// upper bound for deg_v gcd(a, b): the gcd divides a, so its leading
// coefficient divides lc_v(a) and keeps full degree under the specialization.
// A constant probe gcd therefore proves the true gcd is free of v, which lets
// the caller skip the pseudo-remainder chain entirely.  Returns -1 when every
// probe point degenerates (no information).
static int probe_gcd_degree(const MultiPoly& a, const MultiPoly& b, int v) {
    static const uint64_t pts[3][NVARS] = {
        {1237, 4391, 8887, 3571},
        {911, 65537, 2143, 7717},
        {100003, 31337, 524287, 131071},
    };
    auto strip = [](std::vector<uint64_t>& x) {
        while (!x.empty() && x.back() == 0) x.pop_back(); // empty = zero poly
    };
    for (auto& pt : pts) {
        auto ua = spec_coeffs_modp(a, v, pt);
        if (ua.back() == 0) continue;
        auto ub = spec_coeffs_modp(b, v, pt);
        strip(ub);
        if (ub.empty()) continue;
        while (!ub.empty()) {
            uint64_t li = invp(ub.back());
            while (ua.size() >= ub.size()) {
                uint64_t f = mulp(ua.back(), li);
                size_t off = ua.size() - ub.size();
                for (size_t i = 0; i < ub.size(); ++i)
                    ua[off + i] = subp(ua[off + i], mulp(f, ub[i]));
                ua.pop_back(); // leading term cancelled by construction
                strip(ua);
                if (ua.empty()) break;
            }
            std::swap(ua, ub);
        }
        return (int)ua.size() - 1;
    }
    return -1;
}

static MultiPoly content_in(const MultiPoly& p, int v) {
    auto cs = p.coeffs_in(v);
    MultiPoly g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = multipoly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// ---- heuristic gcd (Char, Geddes, Gonnet) ----
// Evaluate one variable at a large integer, gcd the images recursively, then
// read the coefficients back off as balanced base-xi digits.  A candidate
// counts only if it exactly divides both inputs, so a miss is harmless; the
// pseudo-remainder chain stays as the fallback.

static Int int_max_norm(const MultiPoly& p) {
    Int m = 0;
    for (auto& [mo, c] : p.terms()) {
        Int a = abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

// interpret integer coefficients of h as balanced base-xi digit streams; the
// digit index becomes the exponent of v
static std::optional<MultiPoly> digits_to_poly(MultiPoly h, const Int& xi, int v) {
    MultiPoly g;
    Int half = xi / 2;
    for (int i = 0; !h.is_zero(); ++i) {
        if (i > 300) return std::nullopt; // runaway digit stream, candidate useless
        MultiPoly r;
        for (auto& [m, c] : h.terms()) {
            Int d;
            mpz_fdiv_r(d.get_mpz_t(), c.get_num().get_mpz_t(), xi.get_mpz_t());
            if (d > half) d -= xi;
            if (d != 0) {
                Mono mv = m;
                mv[v] = static_cast<unsigned short>(i);
                g.add_term(mv, Rat(d));
                r.add_term(m, Rat(d));
            }
        }
        h -= r;
        MultiPoly hq;
        for (auto& [m, c] : h.terms()) {
            Int d;
            mpz_divexact(d.get_mpz_t(), c.get_num().get_mpz_t(), xi.get_mpz_t());
            hq.add_term(m, Rat(d));
        }
        h = hq;
    }
    return g;
}

// a, b integer polynomials, neither zero
static std::optional<MultiPoly> heu_gcd(const MultiPoly& a, const MultiPoly& b) {
    int v = -1;
    for (int i = 0; i < NVARS && v < 0; ++i)
        if (a.degree(i) > 0 || b.degree(i) > 0) v = i;
    if (v < 0) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_num().get_mpz_t(),
                b.constant_value().get_num().get_mpz_t());
        return MultiPoly(Rat(g));
    }
    Int na = int_max_norm(a), nb = int_max_norm(b);
    Int xi = 2 * (na < nb ? na : nb) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        MultiPoly ea = a.eval_at(v, Rat(xi)), eb = b.eval_at(v, Rat(xi));
        if (!ea.is_zero() && !eb.is_zero()) {
            if (auto h = heu_gcd(ea, eb)) {
                // the candidate keeps its integer content: at the levels above
                // this one that content is the base-xi digit stream of the
                // remaining variables, so stripping it here would corrupt them
                if (auto g = digits_to_poly(*h, xi, v)) {
                    if (!g->is_zero() && try_divide(a, *g) && try_divide(b, *g)) return g;
                }
            }
        }
        xi = xi * 73794 / 27011; // irrational-ish growth dodges repeat failures
    }
    return std::nullopt;
}

MultiPoly multipoly_gcd(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) {
        b.make_primitive();
        return b;
    }
    if (b.is_zero()) {
        a.make_primitive();
        return a;
    }
    a.make_primitive();
    b.make_primitive();
    int v = -1;
    for (int i = 0; i < NVARS && v < 0; ++i)
        if (a.degree(i) > 0 || b.degree(i) > 0) v = i;
    if (v < 0) return MultiPoly(Rat(1)); // nonzero constants
    if (a.degree(v) == 0) return multipoly_gcd(a, content_in(b, v));
    if (b.degree(v) == 0) return multipoly_gcd(b, content_in(a, v));
    if (probe_gcd_degree(a, b, v) == 0) // gcd provably free of v
        return multipoly_gcd(content_in(a, v), content_in(b, v));
    if (auto hg = heu_gcd(a, b)) {
        hg->make_primitive();
        return *hg;
    }

    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly c = multipoly_gcd(ca, cb);
    MultiPoly pa = divide_exact(a, ca), pb = divide_exact(b, cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (true) {
        MultiPoly r = prem(pa, pb, v);
        if (r.is_zero()) break;
        r = divide_exact(r, content_in(r, v));
        r.make_primitive();
        pa = pb;
        pb = r;
        if (pb.degree(v) == 0) return c; // coprime in v, content already folded
    }
    MultiPoly g = c * pb;
    g.make_primitive();
    return g;
}

// ---- rational root factorization ----

Rat eval_univariate(const MultiPoly& p, int v, const Rat& x) {
    auto cs = p.coeffs_in(v);
    Rat r(0);
    for (int i = (int)cs.size() - 1; i >= 0; --i) {
        r *= x;
        if (!cs[i].is_zero()) r += cs[i].constant_value();
    }
    return r;
}

namespace {

void push_divisors(const Int& n, std::vector<Int>& out) {
    // all positive divisors of |n| (n nonzero); trial division with a Pollard
    // rho fallback for any large leftover cofactor
    Int m = abs(n);
    std::vector<std::pair<Int, int>> fac;
    auto add_factor = [&](const Int& p) {
        for (auto& [q, e] : fac)
            if (q == p) {
                ++e;
                return;
            }
        fac.push_back({p, 1});
    };
    for (Int d(2); d * d <= m && d < 1000000; d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            add_factor(d);
            m /= d;
        }
    }
    // leftover: prime, or composite needing rho
    std::vector<Int> stack;
    if (m > 1) stack.push_back(m);
    while (!stack.empty()) {
        Int x = stack.back();
        stack.pop_back();
        if (mpz_probab_prime_p(x.get_mpz_t(), 32)) {
            add_factor(x);
            continue;
        }
        // Pollard rho (Brent variant, deterministic seed walk)
        Int d(1);
        for (unsigned long c = 1; d == 1 || d == x; ++c) {
            Int y(2), z(2);
            d = 1;
            for (int i = 0; i < 1 << 20 && d == 1; ++i) {
                y = (y * y + c) % x;
                z = (z * z + c) % x;
                z = (z * z + c) % x;
                Int diff = abs(y - z);
                if (diff == 0) break;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), x.get_mpz_t());
            }
        }
        stack.push_back(d);
        stack.push_back(x / d);
    }
    out.assign(1, Int(1));
    for (auto& [p, e] : fac) {
        size_t base = out.size();
        Int pe(1);
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
}

} // namespace

LinearFactorization factor_linear_rational(const MultiPoly& p) {
    assert(!p.is_zero());
    LinearFactorization out;
    int v = -1;
    for (int i = 0; i < NVARS; ++i)
        if (p.degree(i) > 0) {
            assert(v < 0 && "factor_linear_rational: polynomial not univariate");
            v = i;
        }
    if (v < 0) {
        out.constant = p.constant_value();
        out.remainder = MultiPoly(Rat(1));
        return out;
    }
    out.var = v;

    MultiPoly w = p;
    Rat scale = w.make_primitive();

    // root 0 first (lowest power of v)
    {
        auto cs = w.coeffs_in(v);
        int low = 0;
        while (cs[low].is_zero()) ++low;
        if (low > 0) {
            out.roots.push_back({Rat(0), low});
            std::vector<MultiPoly> shifted(cs.begin() + low, cs.end());
            w = MultiPoly::from_coeffs(v, shifted);
        }
    }

    if (w.degree(v) > 0) {
        auto cs = w.coeffs_in(v);
        Int trailing = cs.front().constant_value().get_num();
        Int leading = cs.back().constant_value().get_num();
        std::vector<Int> dt, dl;
        push_divisors(trailing, dt);
        push_divisors(leading, dl);
        std::set<Rat> candidates;
        for (auto& t : dt)
            for (auto& l : dl) {
                Rat r(t, l);
                r.canonicalize();
                candidates.insert(r);
                candidates.insert(-r);
            }
        for (const Rat& root : candidates) {
            int mult = 0;
            while (w.degree(v) > 0 && eval_univariate(w, v, root) == 0) {
                // synthetic division by (v - root)
                auto ws = w.coeffs_in(v);
                int d = (int)ws.size() - 1;
                std::vector<MultiPoly> q(d);
                MultiPoly carry = ws[d];
                for (int i = d - 1; i >= 0; --i) {
                    q[i] = carry;
                    carry = ws[i] + carry * root;
                }
                assert(carry.is_zero());
                w = MultiPoly::from_coeffs(v, q);
                ++mult;
            }
            if (mult) out.roots.push_back({root, mult});
        }
    }

    Rat lead = w.coeffs_in(v).back().constant_value();
    out.constant = scale * lead;
    out.remainder = w * (Rat(1) / lead);
    return out;
}

} // namespace hyperaccel
