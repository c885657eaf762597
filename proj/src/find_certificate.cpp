#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>
#include "hyperaccel/certify.hpp"
#include "hyperaccel/errors.hpp"

// Undetermined-coefficients search.  With Sn = F(n+r,k)/F(n,k) = A/B and
// Sk = F(n,k+1)/F(n,k) = C/E, the ansatz R = N/D for a fixed trial
// denominator D turns the telescoping identity into the polynomial equation
//
//   p1 A E D(k) D(k+1) + p2 B E D(k) D(k+1)
//       - N(k+1) C B D(k) + N(k) B E D(k+1) = 0
//
// which is linear in the coefficients of p1, p2 (in n and the parameters)
// and N (in n, k and the parameters).  Trial denominators run over the
// divisors of the k-linear factors contributed by denominator Pochhammers,
// which is where every certificate denominator in this class lives.
//
// The equation is sampled at random small integer points instead of being
// expanded monomial by monomial: each point contributes one linear equation,
// and unknowns + 40 points leave a spurious kernel only with negligible
// probability.  A nullspace vector is located mod p = 2^61 - 1, lifted p-adic
// digit by digit (Dixon) against the exact integer samples, reconstructed to
// rationals, and finally checked symbolically with verify_certificate, so a
// returned certificate is exact regardless of the probabilistic search path.
// A not-found answer is probabilistic in the unlucky-prime/unlucky-point
// sense only.

namespace hyperaccel {

namespace {

constexpr uint64_t P = (uint64_t(1) << 61) - 1;

uint64_t addm(uint64_t a, uint64_t b) { return (a += b) >= P ? a - P : a; }
uint64_t subm(uint64_t a, uint64_t b) { return a >= b ? a - b : a + P - b; }
uint64_t mulm(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % P);
}
uint64_t powm(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    for (; e; e >>= 1, a = mulm(a, a))
        if (e & 1) r = mulm(r, a);
    return r;
}
uint64_t invm(uint64_t a) { return powm(a, P - 2); }

uint64_t to_mod(const Int& v) {
    Int m = v % P;
    if (m < 0) m += P;
    return m.get_ui();
}

// dense row-major matrix over Z_p
struct ModMatrix {
    long rows = 0, cols = 0;
    std::vector<uint64_t> a;
    uint64_t& at(long i, long j) { return a[i * cols + j]; }
    uint64_t at(long i, long j) const { return a[i * cols + j]; }
};

struct Rref {
    std::vector<long> pivot_col;  // per pivot row
    std::vector<long> pivot_row_src; // original row index of each pivot row
    std::vector<long> free_cols;
};

// in-place reduced row echelon form, tracking original row identities
Rref rref(ModMatrix& M) {
    Rref out;
    std::vector<long> src(M.rows);
    for (long i = 0; i < M.rows; ++i) src[i] = i;
    long row = 0;
    for (long col = 0; col < M.cols && row < M.rows; ++col) {
        long piv = -1;
        for (long i = row; i < M.rows; ++i)
            if (M.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) {
            out.free_cols.push_back(col);
            continue;
        }
        if (piv != row) {
            for (long j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(row, j));
            std::swap(src[piv], src[row]);
        }
        uint64_t inv = invm(M.at(row, col));
        for (long j = col; j < M.cols; ++j) M.at(row, j) = mulm(M.at(row, j), inv);
        for (long i = 0; i < M.rows; ++i) {
            if (i == row) continue;
            uint64_t f = M.at(i, col);
            if (f == 0) continue;
            for (long j = col; j < M.cols; ++j)
                M.at(i, j) = subm(M.at(i, j), mulm(f, M.at(row, j)));
        }
        out.pivot_col.push_back(col);
        out.pivot_row_src.push_back(src[row]);
        ++row;
    }
    return out;
}

// kernel vector for a 0/1 assignment of the free columns, read off the RREF
std::vector<uint64_t> kernel_vector(const ModMatrix& R, const Rref& r,
                                    const std::vector<long>& ones) {
    std::vector<uint64_t> x(R.cols, 0);
    for (long f : ones) x[f] = 1;
    for (size_t i = 0; i < r.pivot_col.size(); ++i) {
        uint64_t s = 0;
        for (long f : ones) s = addm(s, R.at(static_cast<long>(i), f));
        x[r.pivot_col[i]] = subm(0, s);
    }
    return x;
}

bool block_nonzero(const std::vector<uint64_t>& x, long lo, long hi) {
    for (long i = lo; i < hi; ++i)
        if (x[i] != 0) return true;
    return false;
}

// monomials over the allowed variables with total degree <= d, k excluded
// for the p-blocks
std::vector<Mono> monomials(const std::vector<int>& vars, int d) {
    std::vector<Mono> out{mono_one()};
    for (int v : vars) {
        std::vector<Mono> next;
        for (const Mono& m : out) {
            int used = 0;
            for (int e : m) used += e;
            for (int e = 0; e + used <= d; ++e) {
                Mono t = m;
                t[v] = static_cast<unsigned short>(e);
                next.push_back(t);
            }
        }
        out = std::move(next);
    }
    return out;
}

struct SamplePoint {
    std::array<Rat, NVARS> coords;
    // powers of each coordinate and of k+1, as exact integers
    std::array<std::vector<Int>, NVARS> pw;
    std::vector<Int> pw_k1;
};

Int mono_value(const SamplePoint& s, const Mono& m, bool shift_k) {
    Int v = 1;
    for (int t = 0; t < NVARS; ++t) {
        if (m[t] == 0) continue;
        v *= (t == VK && shift_k) ? s.pw_k1[m[t]] : s.pw[t][m[t]];
    }
    return v;
}

struct LinearProblem {
    long np1 = 0, np2 = 0, nN = 0; // block sizes, columns ordered p1|p2|N
    std::vector<Int> exact;        // row-major, rows x cols
    ModMatrix mod;                 // the same matrix reduced mod P
    long cols() const { return np1 + np2 + nN; }
};

// evaluate the four cofactor polynomials at integer points and lay out one
// linear equation per point
LinearProblem build_problem(const MultiPoly& K1, const MultiPoly& K2, const MultiPoly& K3,
                            const MultiPoly& K4, const std::vector<Mono>& pmono,
                            const std::vector<Mono>& nmono, int maxdeg,
                            const std::vector<std::array<long, NVARS>>& pts) {
    LinearProblem lp;
    lp.np1 = lp.np2 = static_cast<long>(pmono.size());
    lp.nN = static_cast<long>(nmono.size());
    long rows = static_cast<long>(pts.size()), cols = lp.cols();
    lp.exact.resize(rows * cols);
    for (long i = 0; i < rows; ++i) {
        SamplePoint s;
        for (int t = 0; t < NVARS; ++t) {
            s.coords[t] = Rat(pts[i][t]);
            s.pw[t].resize(maxdeg + 1);
            s.pw[t][0] = 1;
            for (int e = 1; e <= maxdeg; ++e) s.pw[t][e] = s.pw[t][e - 1] * pts[i][t];
        }
        s.pw_k1.resize(maxdeg + 1);
        s.pw_k1[0] = 1;
        for (int e = 1; e <= maxdeg; ++e) s.pw_k1[e] = s.pw_k1[e - 1] * (pts[i][VK] + 1);

        auto val = [&](const MultiPoly& p) -> Int {
            Rat v = p.eval(s.coords);
            return v.get_num(); // cofactors have integer coefficients
        };
        Int v1 = val(K1), v2 = val(K2), v3 = val(K3), v4 = val(K4);
        Int* row = &lp.exact[i * cols];
        for (long u = 0; u < lp.np1; ++u) row[u] = mono_value(s, pmono[u], false) * v1;
        for (long u = 0; u < lp.np2; ++u) row[lp.np1 + u] = mono_value(s, pmono[u], false) * v2;
        for (long u = 0; u < lp.nN; ++u)
            row[lp.np1 + lp.np2 + u] =
                mono_value(s, nmono[u], false) * v4 - mono_value(s, nmono[u], true) * v3;
    }
    lp.mod.rows = rows;
    lp.mod.cols = cols;
    lp.mod.a.resize(rows * cols);
    for (long i = 0; i < rows * cols; ++i) lp.mod.a[i] = to_mod(lp.exact[i]);
    return lp;
}

// rational reconstruction of a centered residue mod m; nullopt when no
// small fraction exists
std::optional<Rat> rat_reconstruct(Int u, const Int& m) {
    Int bound = sqrt(m / 2);
    Int r0 = m, r1 = u % m;
    if (r1 < 0) r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    if (t1 < 0) { t1 = -t1; r1 = -r1; }
    if (gcd(r1, t1) != 1) return std::nullopt;
    Rat v(r1, t1);
    v.canonicalize();
    return v;
}

// Dixon lift: solve A x = b exactly, A given by pivot rows/cols of lp.exact,
// using one LU factorization of A mod P
std::optional<std::vector<Rat>> dixon_solve(const LinearProblem& lp, const Rref& rr,
                                            const std::vector<long>& ones) {
    long r = static_cast<long>(rr.pivot_col.size());
    long cols = lp.cols();
    // exact pivot submatrix and right-hand side
    std::vector<Int> A(r * r), d(r);
    for (long i = 0; i < r; ++i) {
        const Int* src = &lp.exact[rr.pivot_row_src[i] * cols];
        for (long j = 0; j < r; ++j) A[i * r + j] = src[rr.pivot_col[j]];
        Int b = 0;
        for (long f : ones) b -= src[f];
        d[i] = b;
    }
    // LU of A mod P with partial pivoting
    std::vector<uint64_t> lu(r * r);
    for (long i = 0; i < r * r; ++i) lu[i] = to_mod(A[i]);
    std::vector<long> perm(r);
    for (long c = 0; c < r; ++c) {
        long piv = -1;
        for (long i = c; i < r; ++i)
            if (lu[i * r + c] != 0) { piv = i; break; }
        if (piv < 0) return std::nullopt; // pivot submatrix singular, bad sample
        if (piv != c)
            for (long j = 0; j < r; ++j) std::swap(lu[piv * r + j], lu[c * r + j]);
        perm[c] = piv;
        uint64_t inv = invm(lu[c * r + c]);
        for (long i = c + 1; i < r; ++i) {
            uint64_t f = mulm(lu[i * r + c], inv);
            lu[i * r + c] = f;
            if (f == 0) continue;
            for (long j = c + 1; j < r; ++j)
                lu[i * r + j] = subm(lu[i * r + j], mulm(f, lu[c * r + j]));
        }
    }
    auto lu_solve = [&](const std::vector<uint64_t>& rhs) {
        std::vector<uint64_t> y = rhs;
        for (long c = 0; c < r; ++c) {
            std::swap(y[c], y[perm[c]]);
            for (long i = c + 1; i < r; ++i)
                if (lu[i * r + c]) y[i] = subm(y[i], mulm(lu[i * r + c], y[c]));
        }
        for (long i = r - 1; i >= 0; --i) {
            uint64_t s = y[i];
            for (long j = i + 1; j < r; ++j) s = subm(s, mulm(lu[i * r + j], y[j]));
            y[i] = mulm(s, invm(lu[i * r + i]));
        }
        return y;
    };

    std::vector<Int> x(r, 0);
    Int pk = 1;
    std::vector<uint64_t> rhs(r);
    for (int iter = 0; iter < 120; ++iter) {
        for (long i = 0; i < r; ++i) rhs[i] = to_mod(d[i]);
        std::vector<uint64_t> xi = lu_solve(rhs);
        for (long i = 0; i < r; ++i) x[i] += pk * Int(xi[i]);
        pk *= P;
        for (long i = 0; i < r; ++i) {
            Int acc = d[i];
            const Int* Ai = &A[i * r];
            for (long j = 0; j < r; ++j)
                if (xi[j]) acc -= Ai[j] * Int(xi[j]);
            // exact by construction of xi
            d[i] = acc / Int(P);
        }
        if (iter < 3 || (iter & 1)) continue;
        std::vector<Rat> out(r);
        bool ok = true;
        for (long i = 0; i < r && ok; ++i) {
            auto v = rat_reconstruct(x[i], pk);
            if (!v) ok = false;
            else out[i] = *v;
        }
        if (ok) return out;
    }
    return std::nullopt;
}

struct Ansatz {
    int dp, dN;
    MultiPoly D;
};

MultiPoly build_poly(const std::vector<Mono>& basis, const std::vector<Rat>& coef) {
    MultiPoly p;
    for (size_t i = 0; i < basis.size(); ++i)
        if (coef[i] != 0) p.add_term(basis[i], coef[i]);
    return p;
}

} // namespace

std::optional<Certificate> find_certificate(const HyperTerm& F, long r, int degree_bound) {
    if (r < 1 || degree_bound < 0) return std::nullopt;
    RatFunc Sn = shift_ratio_n(F, r), Sk = shift_ratio_k(F);
    const MultiPoly &A = Sn.num, &B = Sn.den, &C = Sk.num, &E = Sk.den;

    std::vector<int> params;
    for (int v : {VA, VB})
        if (A.depends_on(v) || B.depends_on(v) || C.depends_on(v) || E.depends_on(v))
            params.push_back(v);
    std::vector<int> pvars{VN};
    pvars.insert(pvars.end(), params.begin(), params.end());
    std::vector<int> nvars{VN, VK};
    nvars.insert(nvars.end(), params.begin(), params.end());

    // trial denominators: divisors of the k-linear factors brought in by
    // denominator Pochhammers
    std::vector<std::pair<MultiPoly, int>> pool;
    for (const PochFactor& pf : F.poch) {
        if (pf.exponent >= 0) continue;
        MultiPoly f = pf.base + MultiPoly::variable(VK);
        f.make_primitive();
        bool merged = false;
        for (auto& [g, m] : pool)
            if (g == f) { m += -pf.exponent; merged = true; break; }
        if (!merged) pool.emplace_back(f, -pf.exponent);
    }
    std::vector<MultiPoly> divisors{MultiPoly(1L)};
    for (auto& [f, m] : pool) {
        std::vector<MultiPoly> next;
        for (const MultiPoly& d : divisors) {
            MultiPoly cur = d;
            for (int e = 0; e <= m; ++e) {
                next.push_back(cur);
                if (e < m) cur = cur * f;
            }
        }
        divisors = std::move(next);
    }
    std::sort(divisors.begin(), divisors.end(), [](const MultiPoly& x, const MultiPoly& y) {
        if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
        return x.terms() < y.terms();
    });
    divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    auto small_pt = [&](int lo, int hi) { return lo + static_cast<long>(rng() % (hi - lo + 1)); };

    for (int dp = 0; dp <= degree_bound; ++dp) {
        for (const MultiPoly& D : divisors) {
            int balance = dp + A.total_degree() + E.total_degree() + D.total_degree() -
                          B.total_degree() - std::max(C.total_degree(), E.total_degree());
            std::vector<int> dNs;
            if (balance >= 0) dNs.push_back(balance);
            if (C.total_degree() == E.total_degree() && balance + 1 >= 0)
                dNs.push_back(balance + 1);
            for (int dN : dNs) {
                MultiPoly Dk1 = D.shift(VK, Rat(1));
                MultiPoly EDk = E * D, K1 = A * EDk * Dk1, K2 = B * EDk * Dk1;
                MultiPoly K3 = C * B * D, K4 = B * E * Dk1;
                std::vector<Mono> pmono = monomials(pvars, dp);
                std::vector<Mono> nmono = monomials(nvars, dN);
                int maxdeg = std::max(dp, dN) + 1;

                // probe with the parameters frozen at random values: a full
                // solution specializes, so an empty specialized kernel rules
                // the level out (up to sampling luck, which the final exact
                // verification covers)
                if (!params.empty()) {
                    std::array<long, NVARS> fix{};
                    for (int v : params) fix[v] = small_pt(3000, 4000);
                    auto freeze = [&](const MultiPoly& p) {
                        MultiPoly q = p;
                        for (int v : params) q = q.eval_at(v, Rat(fix[v]));
                        return q;
                    };
                    std::vector<Mono> pm = monomials({VN}, dp);
                    std::vector<Mono> nm = monomials({VN, VK}, dN);
                    long cols = 2 * static_cast<long>(pm.size()) + static_cast<long>(nm.size());
                    std::vector<std::array<long, NVARS>> pts(cols + 25);
                    for (auto& q : pts) {
                        q = fix;
                        q[VN] = small_pt(1, 4000);
                        q[VK] = small_pt(1, 4000);
                    }
                    LinearProblem probe = build_problem(freeze(K1), freeze(K2), freeze(K3),
                                                        freeze(K4), pm, nm, maxdeg, pts);
                    Rref pr = rref(probe.mod);
                    bool p1ok = false, p2ok = false;
                    for (long f : pr.free_cols) {
                        auto x = kernel_vector(probe.mod, pr, {f});
                        p1ok = p1ok || block_nonzero(x, 0, probe.np1);
                        p2ok = p2ok || block_nonzero(x, probe.np1, probe.np1 + probe.np2);
                    }
                    if (!p1ok || !p2ok) continue;
                }

                long cols = 2 * static_cast<long>(pmono.size()) + static_cast<long>(nmono.size());
                std::vector<std::array<long, NVARS>> pts(cols + 40);
                for (auto& q : pts)
                    for (int t = 0; t < NVARS; ++t) q[t] = small_pt(1, 4000);
                LinearProblem lp =
                    build_problem(K1, K2, K3, K4, pmono, nmono, maxdeg, pts);
                ModMatrix red = lp.mod; // rref consumes its argument
                Rref rr = rref(red);
                if (rr.free_cols.empty()) continue;

                // pick a 0/1 free-column pattern whose kernel vector has both
                // p blocks nonzero; kernels over a field are never a union of
                // two proper subspaces, so singles and pairs suffice
                long b1 = lp.np1, b2 = lp.np1 + lp.np2;
                std::vector<long> chosen;
                for (size_t i = 0; i < rr.free_cols.size() && chosen.empty(); ++i) {
                    auto x = kernel_vector(red, rr, {rr.free_cols[i]});
                    if (block_nonzero(x, 0, b1) && block_nonzero(x, b1, b2))
                        chosen = {rr.free_cols[i]};
                }
                for (size_t i = 0; i < rr.free_cols.size() && chosen.empty(); ++i)
                    for (size_t j = i + 1; j < rr.free_cols.size() && chosen.empty(); ++j) {
                        auto x = kernel_vector(red, rr, {rr.free_cols[i], rr.free_cols[j]});
                        if (block_nonzero(x, 0, b1) && block_nonzero(x, b1, b2))
                            chosen = {rr.free_cols[i], rr.free_cols[j]};
                    }
                if (chosen.empty()) continue;

                auto lifted = dixon_solve(lp, rr, chosen);
                if (!lifted) continue;

                std::vector<Rat> coef(cols, Rat(0));
                for (long f : chosen) coef[f] = 1;
                for (size_t i = 0; i < rr.pivot_col.size(); ++i) coef[rr.pivot_col[i]] = (*lifted)[i];

                Int den = 1;
                for (const Rat& c : coef) den = lcm(den, c.get_den());
                for (Rat& c : coef) c *= Rat(den);
                MultiPoly p1 = build_poly(pmono, {coef.begin(), coef.begin() + b1});
                MultiPoly p2 = build_poly(pmono, {coef.begin() + b1, coef.begin() + b2});
                MultiPoly N = build_poly(nmono, {coef.begin() + b2, coef.end()});
                if (p1.is_zero() || p2.is_zero()) continue;

                Certificate cert{ratfunc_normalize(N, D), p1, p2, r};
                if (verify_certificate(F, cert).holds) return cert;
            }
        }
    }
    return std::nullopt;
}

} // namespace hyperaccel
