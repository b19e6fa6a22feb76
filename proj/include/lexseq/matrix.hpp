#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace lexseq {

// Dense row-major matrix of doubles. The numeric core is hand-written, so
// this stays deliberately small: storage plus the few kernels the models
// need. 64-bit floats throughout keep the finite-difference checks tight.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    std::span<double> row(std::size_t r) { return {a.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {a.data() + r * cols, cols}; }

    std::size_t size() const { return a.size(); }
    void zero() { a.assign(a.size(), 0.0); }
};

inline double dot(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    assert(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

// y += M x
inline void matvec_add(const Mat& m, std::span<const double> x, std::span<double> y) {
    assert(x.size() == m.cols && y.size() == m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) y[r] += dot(m.row(r), x);
}

// y += M^T x
inline void matvec_t_add(const Mat& m, std::span<const double> x, std::span<double> y) {
    assert(x.size() == m.rows && y.size() == m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) axpy(x[r], m.row(r), y);
}

// M += alpha * (x outer y)
inline void outer_add(Mat& m, std::span<const double> x, std::span<const double> y,
                      double alpha = 1.0) {
    assert(x.size() == m.rows && y.size() == m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) axpy(alpha * x[r], y, m.row(r));
}

// Sparse vector with a fixed logical dimension. Indices strictly ascending.
// TFIDF features (dim up to 4000, a handful of nonzeros per motion) would
// be wasteful to carry around densely.
struct SparseVec {
    std::size_t dim = 0;
    std::vector<std::size_t> idx;
    std::vector<double> val;

    std::size_t nnz() const { return idx.size(); }

    std::vector<double> to_dense() const {
        std::vector<double> d(dim, 0.0);
        for (std::size_t i = 0; i < idx.size(); ++i) d[idx[i]] = val[i];
        return d;
    }
};

// y += M columns picked by the sparse pattern: y += M x
inline void matvec_add(const Mat& m, const SparseVec& x, std::span<double> y) {
    assert(x.dim == m.cols && y.size() == m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const double* row = m.a.data() + r * m.cols;
        double s = 0.0;
        for (std::size_t i = 0; i < x.idx.size(); ++i) s += row[x.idx[i]] * x.val[i];
        y[r] += s;
    }
}

// M += alpha * (g outer x) with sparse x
inline void outer_add(Mat& m, std::span<const double> g, const SparseVec& x,
                      double alpha = 1.0) {
    assert(g.size() == m.rows && x.dim == m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        double* row = m.a.data() + r * m.cols;
        const double gr = alpha * g[r];
        for (std::size_t i = 0; i < x.idx.size(); ++i) row[x.idx[i]] += gr * x.val[i];
    }
}

}  // namespace lexseq
