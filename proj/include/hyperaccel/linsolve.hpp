#pragma once
#include "hyperaccel/rational.hpp"
#include <cstdint>
#include <optional>
#include <vector>

namespace hyperaccel {

struct LinearSolveResult {
    bool solvable = false;
    std::vector<Rat> solution; // free variables zeroed
};

// Exact Gaussian elimination over Q.  A is rectangular, rows = equations.
// Inconsistency is reported, not thrown.
LinearSolveResult solve_linear_system(const std::vector<std::vector<Rat>>& A,
                                      const std::vector<Rat>& b);

// ---- machinery shared with the certificate search ----

inline constexpr uint64_t MODP = (uint64_t(1) << 61) - 1;

inline uint64_t addp(uint64_t x, uint64_t y) {
    uint64_t s = x + y;
    return s >= MODP ? s - MODP : s;
}
inline uint64_t subp(uint64_t x, uint64_t y) { return x >= y ? x - y : x + MODP - y; }
inline uint64_t mulp(uint64_t x, uint64_t y) {
    return (uint64_t)((unsigned __int128)x * y % MODP);
}
uint64_t powp(uint64_t x, uint64_t e);
inline uint64_t invp(uint64_t x) { return powp(x, MODP - 2); }
uint64_t rat_modp(const Rat& x);
uint64_t int_modp(const Int& x);

using SparseIntRow = std::vector<std::pair<int, Int>>; // (column, value), column ascending

// Incremental reduced row echelon form over GF(p).  Rows are streamed in;
// begin()-to-end state is always fully reduced.
class ModpEchelon {
public:
    explicit ModpEchelon(int cols) : cols_(cols), pivot_row_of_col_(cols, -1) {}

    // returns true if the row increased the rank
    bool add_row(std::vector<uint64_t> row);
    bool add_row(const SparseIntRow& row);

    int rank() const { return (int)rows_.size(); }
    int cols() const { return cols_; }
    bool is_pivot_col(int c) const { return pivot_row_of_col_[c] >= 0; }
    std::vector<int> free_columns() const;
    // nullspace vector with x[free_col] = 1, pivots back-substituted
    std::vector<uint64_t> nullspace_vector(int free_col) const;
    const std::vector<int>& pivot_cols() const { return pivot_col_of_row_; }

private:
    int cols_;
    std::vector<std::vector<uint64_t>> rows_; // reduced, pivot entries are 1
    std::vector<int> pivot_col_of_row_;
    std::vector<int> pivot_row_of_col_;
};

// Solve A x = b exactly for square nonsingular-mod-p A via p-adic lifting and
// rational reconstruction.  Returns nullopt if A is singular mod p or the
// lifting exceeds its certified bound (callers fall back to plain
// elimination).  The result is verified by the caller against the full
// system, so a nullopt here is a performance event, not a correctness one.
std::optional<std::vector<Rat>> dixon_solve(const std::vector<std::vector<Int>>& A,
                                            const std::vector<Int>& b);

// rational reconstruction of x mod m (Wang bounds: |num|, den <= sqrt(m/2))
std::optional<Rat> rational_reconstruct(const Int& x, const Int& m);

} // namespace hyperaccel
