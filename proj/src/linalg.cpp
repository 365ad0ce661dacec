#include "qdl/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace qdl {

IMat mul_checked(const IMat& x, const IMat& y) {
    if (x.cols != y.rows) throw InternalError("mul_checked: shape mismatch");
    IMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k) {
            const int64_t v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const int64_t w = y.at(k, j);
                if (w == 0) continue;
                __int128 prod = (__int128)v * w + r.at(i, j);
                if (prod > INT64_MAX || prod < INT64_MIN)
                    throw InternalError("mul_checked: int64 overflow");
                r.at(i, j) = (int64_t)prod;
            }
        }
    }
    return r;
}

BigMat mul(const BigMat& x, const BigMat& y) {
    if (x.cols != y.rows) throw InternalError("BigMat mul: shape mismatch");
    BigMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const BigInt& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

BigMat mul(const BigMat& x, const IMat& y) { return mul(x, BigMat(y)); }

namespace {

using RatRow = std::vector<BigRat>;

// Gaussian elimination over Q.  Returns the echelon rows (nonzero only) and
// records the pivot column of each.
std::vector<RatRow> echelon(std::vector<RatRow> rows, std::vector<int>* pivot_cols = nullptr) {
    std::vector<RatRow> out;
    if (rows.empty()) return out;
    const size_t ncols = rows[0].size();
    size_t col = 0;
    std::vector<RatRow> work = std::move(rows);
    size_t begin = 0;
    while (col < ncols && begin < work.size()) {
        size_t piv = begin;
        while (piv < work.size() && work[piv][col] == 0) ++piv;
        if (piv == work.size()) {
            ++col;
            continue;
        }
        std::swap(work[begin], work[piv]);
        const BigRat lead = work[begin][col];
        for (size_t r = begin + 1; r < work.size(); ++r) {
            if (work[r][col] == 0) continue;
            const BigRat f = work[r][col] / lead;
            for (size_t c = col; c < ncols; ++c) work[r][c] -= f * work[begin][c];
        }
        if (pivot_cols) pivot_cols->push_back((int)col);
        out.push_back(work[begin]);
        ++begin;
        ++col;
    }
    return out;
}

std::vector<RatRow> to_rat_rows(const IMat& m) {
    std::vector<RatRow> rows(m.rows, RatRow(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, j);
    return rows;
}

std::vector<int64_t> clear_denominators(const RatRow& row) {
    BigInt lcm = 1;
    for (const auto& x : row) {
        BigInt den = boost::multiprecision::denominator(x);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<BigInt> ints(row.size());
    BigInt content = 0;
    for (size_t i = 0; i < row.size(); ++i) {
        ints[i] = boost::multiprecision::numerator(row[i]) *
                  (lcm / boost::multiprecision::denominator(row[i]));
        content = boost::multiprecision::gcd(content, ints[i]);
    }
    if (content == 0) content = 1;
    std::vector<int64_t> out(row.size());
    for (size_t i = 0; i < row.size(); ++i) {
        BigInt v = ints[i] / content;
        if (v > INT64_MAX || v < INT64_MIN) throw InternalError("basis entry exceeds int64");
        out[i] = (int64_t)v;
    }
    return out;
}

} // namespace

int rank_exact(const IMat& m) { return (int)echelon(to_rat_rows(m)).size(); }

int rank_rows(const std::vector<std::vector<int64_t>>& rows) {
    if (rows.empty()) return 0;
    std::vector<RatRow> rr(rows.size(), RatRow(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) rr[i][j] = rows[i][j];
    return (int)echelon(std::move(rr)).size();
}

std::vector<std::vector<int64_t>> column_space_basis(const IMat& m) {
    // Echelonize the transpose; surviving rows are a column-space basis.
    std::vector<RatRow> rows(m.cols, RatRow(m.rows));
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i) rows[j][i] = m.at(i, j);
    auto ech = echelon(std::move(rows));
    std::vector<std::vector<int64_t>> out;
    out.reserve(ech.size());
    for (const auto& r : ech) out.push_back(clear_denominators(r));
    return out;
}

std::vector<std::vector<int64_t>> kernel_basis(const IMat& m) {
    std::vector<int> pivots;
    auto ech = echelon(to_rat_rows(m), &pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<int64_t>> out;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatRow x(m.cols, BigRat(0));
        x[free_col] = 1;
        // back-substitute through the echelon rows
        for (int r = (int)ech.size() - 1; r >= 0; --r) {
            const int pc = pivots[r];
            BigRat s = 0;
            for (int c = pc + 1; c < m.cols; ++c)
                if (x[c] != 0) s += ech[r][c] * x[c];
            x[pc] = -s / ech[r][pc];
        }
        out.push_back(clear_denominators(x));
    }
    return out;
}

bool in_span(const std::vector<std::vector<int64_t>>& span, const std::vector<int64_t>& v) {
    auto rows = span;
    const int r0 = rank_rows(rows);
    rows.push_back(v);
    return rank_rows(rows) == r0;
}

bool same_span(const std::vector<std::vector<int64_t>>& a,
               const std::vector<std::vector<int64_t>>& b) {
    const int ra = rank_rows(a);
    const int rb = rank_rows(b);
    if (ra != rb) return false;
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank_rows(both) == ra;
}

namespace {

// One inequality sum(coef*x) + rhs >= 0 with exact rational coefficients.
struct FMRow {
    std::vector<BigRat> coef;
    BigRat rhs;
};

bool fm_feasible(std::vector<FMRow> rows, int nvars) {
    for (int v = 0; v < nvars; ++v) {
        std::vector<FMRow> pos, neg, rest;
        for (auto& r : rows) {
            if (r.coef[v] > 0)
                pos.push_back(std::move(r));
            else if (r.coef[v] < 0)
                neg.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        for (const auto& p : pos)
            for (const auto& n : neg) {
                // eliminate v: n scaled by p.coef[v], p scaled by -n.coef[v]
                FMRow combo;
                combo.coef.assign(nvars, BigRat(0));
                const BigRat a = p.coef[v];
                const BigRat b = -n.coef[v]; // > 0
                for (int c = 0; c < nvars; ++c) combo.coef[c] = b * p.coef[c] + a * n.coef[c];
                combo.rhs = b * p.rhs + a * n.rhs;
                combo.coef[v] = 0;
                rest.push_back(std::move(combo));
            }
        rows = std::move(rest);
        // prune exact duplicates to keep growth in check
        std::sort(rows.begin(), rows.end(), [](const FMRow& x, const FMRow& y) {
            if (x.rhs != y.rhs) return x.rhs < y.rhs;
            return x.coef < y.coef;
        });
        rows.erase(std::unique(rows.begin(), rows.end(),
                               [](const FMRow& x, const FMRow& y) {
                                   return x.rhs == y.rhs && x.coef == y.coef;
                               }),
                   rows.end());
    }
    for (const auto& r : rows)
        if (r.rhs < 0) return false;
    return true;
}

} // namespace

bool strict_cone_feasible(const std::vector<std::vector<int64_t>>& ineq,
                          const std::vector<std::vector<int64_t>>& eq) {
    if (ineq.empty()) return true;
    const int n = (int)ineq[0].size();

    // A x > 0 on a cone is feasible iff A x >= 1 is: scale-invariance.
    // Substitute the equalities out first (they are homogeneous).
    std::vector<std::vector<BigRat>> subs; // for each eliminated var: expression in remaining vars
    std::vector<int> elim_var;
    std::vector<std::vector<BigRat>> eqs(eq.size(), std::vector<BigRat>(n));
    for (size_t i = 0; i < eq.size(); ++i)
        for (int j = 0; j < n; ++j) eqs[i][j] = eq[i][j];

    std::vector<std::vector<BigRat>> ineqs(ineq.size(), std::vector<BigRat>(n));
    for (size_t i = 0; i < ineq.size(); ++i)
        for (int j = 0; j < n; ++j) ineqs[i][j] = ineq[i][j];

    for (auto& e : eqs) {
        int pv = -1;
        for (int j = 0; j < n; ++j)
            if (e[j] != 0) { pv = j; break; }
        if (pv < 0) continue;
        // x_pv = -(sum_{j != pv} e_j x_j)/e_pv ; substitute everywhere
        for (auto& other : eqs) {
            if (&other == &e || other[pv] == 0) continue;
            const BigRat f = other[pv] / e[pv];
            for (int j = 0; j < n; ++j) other[j] -= f * e[j];
        }
        for (auto& row : ineqs) {
            if (row[pv] == 0) continue;
            const BigRat f = row[pv] / e[pv];
            for (int j = 0; j < n; ++j) row[j] -= f * e[j];
        }
    }

    std::vector<FMRow> rows;
    rows.reserve(ineqs.size());
    for (auto& r : ineqs) {
        FMRow fr;
        fr.coef = std::move(r);
        fr.rhs = -1; // coef*x - 1 >= 0
        rows.push_back(std::move(fr));
    }
    return fm_feasible(std::move(rows), n);
}

} // namespace qdl
