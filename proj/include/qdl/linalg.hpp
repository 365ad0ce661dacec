#ifndef QDL_LINALG_HPP
#define QDL_LINALG_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qdl/errors.hpp"

namespace qdl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Small dense integer matrix.  Everything in this project is at most a few
// dozen rows, so simplicity beats cleverness.
struct IMat {
    int rows = 0, cols = 0;
    std::vector<int64_t> a; // row-major

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

    int64_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
    int64_t at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IMat transposed() const {
        IMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const IMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

// int64 product with overflow detection; throws InternalError on overflow so
// exact checks can never silently wrap.
IMat mul_checked(const IMat& x, const IMat& y);

// Arbitrary-precision matrix, used for long exact cocycle products.
struct BigMat {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;

    BigMat() = default;
    BigMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
    explicit BigMat(const IMat& m) : rows(m.rows), cols(m.cols), a(m.a.begin(), m.a.end()) {}

    BigInt& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const BigInt& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static BigMat identity(int n) {
        BigMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

BigMat mul(const BigMat& x, const BigMat& y);
BigMat mul(const BigMat& x, const IMat& y);

// Exact rank over Q of an integer matrix.
int rank_exact(const IMat& m);

// Exact rank of a set of integer row vectors.
int rank_rows(const std::vector<std::vector<int64_t>>& rows);

// Column-space basis of an integer matrix, returned as integer vectors with
// content divided out (primitive).  Exact over Q.
std::vector<std::vector<int64_t>> column_space_basis(const IMat& m);

// Basis of the rational kernel {x : m x = 0}, cleared to primitive integer
// vectors.
std::vector<std::vector<int64_t>> kernel_basis(const IMat& m);

// True iff v lies in the rational span of `span`.
bool in_span(const std::vector<std::vector<int64_t>>& span, const std::vector<int64_t>& v);

// True iff the two integer row sets span the same subspace of Q^n.
bool same_span(const std::vector<std::vector<int64_t>>& a,
               const std::vector<std::vector<int64_t>>& b);

// Strict-cone feasibility: does there exist x with ineq * x > 0 componentwise
// and eq * x == 0?  Decided exactly over Q by Fourier-Motzkin elimination.
// Row counts here are small (a couple dozen), variables <= ~12.
bool strict_cone_feasible(const std::vector<std::vector<int64_t>>& ineq,
                          const std::vector<std::vector<int64_t>>& eq);

} // namespace qdl

#endif
