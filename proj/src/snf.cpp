#include "scx/abelian.hpp"

#include <cstdlib>

namespace scx {

namespace {

struct Worker {
    IntMat a, u, v;
    size_t m, n;

    Worker(IntMat mat) : a(std::move(mat)) {
        m = a.size();
        n = m ? a[0].size() : 0;
        u.assign(m, std::vector<long long>(m, 0));
        for (size_t i = 0; i < m; ++i) u[i][i] = 1;
        v.assign(n, std::vector<long long>(n, 0));
        for (size_t j = 0; j < n; ++j) v[j][j] = 1;
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    }
    // row i -= q * row j
    void row_sub(size_t i, size_t j, long long q) {
        for (size_t c = 0; c < n; ++c) a[i][c] = checked_sub(a[i][c], checked_mul(q, a[j][c]));
        for (size_t c = 0; c < m; ++c) u[i][c] = checked_sub(u[i][c], checked_mul(q, u[j][c]));
    }
    // col i -= q * col j
    void col_sub(size_t i, size_t j, long long q) {
        for (size_t r = 0; r < m; ++r) a[r][i] = checked_sub(a[r][i], checked_mul(q, a[r][j]));
        for (size_t r = 0; r < n; ++r) v[r][i] = checked_sub(v[r][i], checked_mul(q, v[r][j]));
    }
    void negate_row(size_t i) {
        for (size_t c = 0; c < n; ++c) a[i][c] = checked_sub(0, a[i][c]);
        for (size_t c = 0; c < m; ++c) u[i][c] = checked_sub(0, u[i][c]);
    }

    // clear row t and column t, pivot ending at (t,t)
    void eliminate(size_t t) {
        while (true) {
            size_t pi = t, pj = t;
            long long best = 0;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                        best = std::llabs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (best == 0) return; // submatrix is zero
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                long long q = a[i][t] / a[t][t];
                row_sub(i, t, q);
                if (a[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                long long q = a[t][j] / a[t][t];
                col_sub(j, t, q);
                if (a[t][j] != 0) clean = false;
            }
            if (clean) return;
        }
    }
};

} // namespace

SmithResult smith_normal_form(IntMat mat) {
    Worker w(std::move(mat));
    size_t r = std::min(w.m, w.n);
    for (size_t t = 0; t < r; ++t) w.eliminate(t);
    for (size_t t = 0; t < r; ++t)
        if (w.a[t][t] < 0) w.negate_row(t);

    // enforce the divisibility chain d_t | d_{t+1}
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t t = 0; t + 1 < r; ++t) {
            long long dt = w.a[t][t], dn = w.a[t + 1][t + 1];
            if (dt != 0 && dn % dt != 0) {
                // fold column t+1 into column t and re-eliminate
                w.col_sub(t, t + 1, -1);
                w.eliminate(t);
                for (size_t s = t; s < r; ++s) {
                    w.eliminate(s);
                    if (w.a[s][s] < 0) w.negate_row(s);
                }
                changed = true;
            }
            if (dt == 0 && dn != 0) {
                w.swap_rows(t, t + 1);
                w.swap_cols(t, t + 1);
                changed = true;
            }
        }
    }
    return SmithResult{std::move(w.a), std::move(w.u), std::move(w.v)};
}

Mod1Solution solve_linear_mod1(const IntMat& a, const std::vector<QmodZ>& b) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    if (b.size() != m) throw std::invalid_argument("solve_linear_mod1: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_linear_mod1: ragged matrix");

    Mod1Solution sol;
    if (n == 0) {
        for (const auto& bi : b)
            if (!bi.is_zero()) return sol;
        sol.solvable = true;
        return sol;
    }

    SmithResult snf = smith_normal_form(a);
    // c = U b, exact rational arithmetic
    std::vector<Rational> c(m, Rational(0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            c[i] += Rational(snf.U[i][j]) * b[j].value();

    size_t r = std::min(m, n);
    std::vector<Rational> y(n, Rational(0));
    std::vector<std::pair<size_t, long long>> torsion_slots; // (slot, order)
    std::vector<size_t> free_slots;
    for (size_t i = 0; i < r; ++i) {
        long long d = snf.S[i][i];
        if (d != 0) {
            y[i] = (QmodZ(c[i]).value()) / Rational(d);
            if (d > 1) torsion_slots.push_back({i, d});
        } else {
            if (!QmodZ(c[i]).is_zero()) return sol; // inconsistent
            free_slots.push_back(i);
        }
    }
    for (size_t i = r; i < m; ++i)
        if (!QmodZ(c[i]).is_zero()) return sol;
    for (size_t i = r; i < n; ++i) free_slots.push_back(i);

    sol.solvable = true;
    sol.particular.resize(n);
    for (size_t i = 0; i < n; ++i) {
        Rational acc(0);
        for (size_t j = 0; j < n; ++j) acc += Rational(snf.V[i][j]) * y[j];
        sol.particular[i] = QmodZ(acc);
    }
    for (auto [slot, d] : torsion_slots) {
        std::vector<QmodZ> dir(n);
        for (size_t i = 0; i < n; ++i) dir[i] = QmodZ(snf.V[i][slot], d);
        sol.torsion.push_back({std::move(dir), d});
    }
    for (size_t slot : free_slots) {
        std::vector<long long> dir(n);
        for (size_t i = 0; i < n; ++i) dir[i] = snf.V[i][slot];
        sol.free_dirs.push_back(std::move(dir));
    }
    return sol;
}

} // namespace scx
