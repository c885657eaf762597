#include "hyperaccel/linsolve.hpp"
#include <cassert>
#include <cmath>

namespace hyperaccel {

LinearSolveResult solve_linear_system(const std::vector<std::vector<Rat>>& A_in,
                                      const std::vector<Rat>& b_in) {
    size_t rows = A_in.size();
    size_t cols = rows ? A_in[0].size() : 0;
    std::vector<std::vector<Rat>> M(rows);
    for (size_t i = 0; i < rows; ++i) {
        assert(A_in[i].size() == cols);
        M[i] = A_in[i];
        M[i].push_back(b_in[i]);
    }

    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[r], M[piv]);
        Rat inv = Rat(1) / M[r][c];
        for (size_t j = c; j <= cols; ++j) M[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rat f = M[i][c];
            for (size_t j = c; j <= cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivot_col_of_row.push_back((int)c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (M[i][cols] != 0) return {};

    LinearSolveResult res;
    res.solvable = true;
    res.solution.assign(cols, Rat(0));
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
        res.solution[pivot_col_of_row[i]] = M[i][cols];
    return res;
}

uint64_t powp(uint64_t x, uint64_t e) {
    uint64_t r = 1;
    x %= MODP;
    while (e) {
        if (e & 1) r = mulp(r, x);
        x = mulp(x, x);
        e >>= 1;
    }
    return r;
}

uint64_t int_modp(const Int& x) {
    Int m = x % Int(MODP);
    if (m < 0) m += Int(MODP);
    return m.get_ui();
}

uint64_t rat_modp(const Rat& x) {
    uint64_t n = int_modp(x.get_num());
    uint64_t d = int_modp(x.get_den());
    assert(d != 0 && "denominator divisible by the working prime");
    return mulp(n, invp(d));
}

bool ModpEchelon::add_row(std::vector<uint64_t> row) {
    assert((int)row.size() == cols_);
    // reduce against existing pivots
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint64_t f = row[pivot_col_of_row_[i]];
        if (!f) continue;
        const auto& pr = rows_[i];
        for (int j = 0; j < cols_; ++j)
            if (pr[j]) row[j] = subp(row[j], mulp(f, pr[j]));
    }
    int pc = -1;
    for (int j = 0; j < cols_; ++j)
        if (row[j]) {
            pc = j;
            break;
        }
    if (pc < 0) return false;
    uint64_t inv = invp(row[pc]);
    for (int j = pc; j < cols_; ++j)
        if (row[j]) row[j] = mulp(row[j], inv);
    // clear the new pivot column from existing rows to stay fully reduced
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint64_t f = rows_[i][pc];
        if (!f) continue;
        auto& pr = rows_[i];
        for (int j = pc; j < cols_; ++j)
            if (row[j]) pr[j] = subp(pr[j], mulp(f, row[j]));
    }
    pivot_row_of_col_[pc] = (int)rows_.size();
    pivot_col_of_row_.push_back(pc);
    rows_.push_back(std::move(row));
    return true;
}

bool ModpEchelon::add_row(const SparseIntRow& row) {
    std::vector<uint64_t> dense(cols_, 0);
    bool any = false;
    for (auto& [c, v] : row) {
        uint64_t m = int_modp(v);
        dense[c] = m;
        any = any || m;
    }
    if (!any) return false;
    return add_row(std::move(dense));
}

std::vector<int> ModpEchelon::free_columns() const {
    std::vector<int> f;
    for (int c = 0; c < cols_; ++c)
        if (pivot_row_of_col_[c] < 0) f.push_back(c);
    return f;
}

std::vector<uint64_t> ModpEchelon::nullspace_vector(int free_col) const {
    assert(pivot_row_of_col_[free_col] < 0);
    std::vector<uint64_t> x(cols_, 0);
    x[free_col] = 1;
    // rows are fully reduced: pivot var = -(row entry at free_col)
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint64_t v = rows_[i][free_col];
        if (v) x[pivot_col_of_row_[i]] = subp(0, v);
    }
    return x;
}

std::optional<Rat> rational_reconstruct(const Int& x, const Int& m) {
    // half-extended Euclid: stop when remainder drops below sqrt(m/2)
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = x % m;
    if (r1 < 0) r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Rat(r1, t1);
}

std::optional<std::vector<Rat>> dixon_solve(const std::vector<std::vector<Int>>& A,
                                            const std::vector<Int>& b) {
    const size_t s = A.size();
    if (s == 0) return std::vector<Rat>{};
    assert(b.size() == s);

    // LU factorization of A mod p with row pivoting
    std::vector<std::vector<uint64_t>> lu(s, std::vector<uint64_t>(s));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) lu[i][j] = int_modp(A[i][j]);
    std::vector<int> perm(s);
    for (size_t i = 0; i < s; ++i) perm[i] = (int)i;
    for (size_t c = 0; c < s; ++c) {
        size_t piv = c;
        while (piv < s && lu[piv][c] == 0) ++piv;
        if (piv == s) return std::nullopt; // singular mod p
        std::swap(lu[c], lu[piv]);
        std::swap(perm[c], perm[piv]);
        uint64_t inv = invp(lu[c][c]);
        for (size_t i = c + 1; i < s; ++i) {
            uint64_t f = mulp(lu[i][c], inv);
            lu[i][c] = f; // store multiplier
            if (!f) continue;
            for (size_t j = c + 1; j < s; ++j)
                if (lu[c][j]) lu[i][j] = subp(lu[i][j], mulp(f, lu[c][j]));
        }
    }

    auto lu_solve = [&](const std::vector<uint64_t>& rhs) {
        std::vector<uint64_t> y(s);
        for (size_t i = 0; i < s; ++i) {
            uint64_t v = rhs[perm[i]];
            for (size_t j = 0; j < i; ++j)
                if (lu[i][j] && y[j]) v = subp(v, mulp(lu[i][j], y[j]));
            y[i] = v;
        }
        for (size_t i = s; i-- > 0;) {
            uint64_t v = y[i];
            for (size_t j = i + 1; j < s; ++j)
                if (lu[i][j] && y[j]) v = subp(v, mulp(lu[i][j], y[j]));
            y[i] = mulp(v, invp(lu[i][i]));
        }
        return y;
    };

    // p-adic lifting: x = sum x_i p^i, residual r_{i+1} = (r_i - A x_i)/p
    std::vector<Int> r = b;
    std::vector<Int> X(s, Int(0));
    Int pk(1);
    const Int P(MODP);

    // certified iteration cap from a crude Hadamard-style bound
    double logH = 0;
    for (size_t i = 0; i < s; ++i) {
        double rowsq = 0;
        for (size_t j = 0; j < s; ++j) {
            double v = fabs(A[i][j].get_d());
            rowsq += v * v;
        }
        logH += 0.5 * std::log2(rowsq + 1.0);
    }
    double logb = 1;
    for (size_t i = 0; i < s; ++i) logb = std::max(logb, std::log2(fabs(b[i].get_d()) + 2.0));
    long max_iter = (long)((2 * logH + logb + 64) / 61.0) + 4;

    std::vector<uint64_t> rm(s);
    for (long it = 0; it < max_iter; ++it) {
        for (size_t i = 0; i < s; ++i) rm[i] = int_modp(r[i]);
        std::vector<uint64_t> xi = lu_solve(rm);
        for (size_t i = 0; i < s; ++i)
            if (xi[i]) {
                Int t;
                mpz_mul_ui(t.get_mpz_t(), pk.get_mpz_t(), (unsigned long)xi[i]);
                X[i] += t;
            }
        // r = (r - A xi) / p
        for (size_t i = 0; i < s; ++i) {
            Int acc = r[i];
            const auto& Ai = A[i];
            for (size_t j = 0; j < s; ++j)
                if (xi[j] != 0 && Ai[j] != 0) {
                    Int t;
                    mpz_mul_ui(t.get_mpz_t(), Ai[j].get_mpz_t(), (unsigned long)xi[j]);
                    acc -= t;
                }
            assert(mpz_divisible_p(acc.get_mpz_t(), P.get_mpz_t()));
            r[i] = acc / P;
        }
        pk *= P;

        bool all_zero = true;
        for (size_t i = 0; i < s && all_zero; ++i) all_zero = (r[i] == 0);
        bool try_reconstruct = all_zero || (it >= 4 && (it & 3) == 3) || it == max_iter - 1;
        if (!try_reconstruct) continue;

        std::vector<Rat> sol(s);
        bool ok = true;
        for (size_t i = 0; i < s && ok; ++i) {
            if (all_zero) {
                // exact integer solution already
                sol[i] = Rat(X[i]);
                continue;
            }
            auto rec = rational_reconstruct(X[i], pk);
            if (!rec) ok = false;
            else sol[i] = *rec;
        }
        if (!ok) continue;
        // verify A sol = b exactly
        Int den(1);
        for (auto& q : sol) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Int> num(s);
        for (size_t i = 0; i < s; ++i) num[i] = sol[i].get_num() * (den / sol[i].get_den());
        bool verified = true;
        for (size_t i = 0; i < s && verified; ++i) {
            Int acc(0);
            for (size_t j = 0; j < s; ++j)
                if (A[i][j] != 0 && num[j] != 0) acc += A[i][j] * num[j];
            verified = (acc == b[i] * den);
        }
        if (verified) return sol;
    }
    return std::nullopt;
}

} // namespace hyperaccel
