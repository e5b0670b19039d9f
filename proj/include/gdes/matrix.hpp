#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace gdes {

// Dense row-major matrix of doubles. Just enough linear algebra for the
// spectral machinery; not a general-purpose library.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    double* row(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }
    const double* row(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::vector<double> column(int c) const {
        std::vector<double> out(rows_);
        for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    // y = M x
    std::vector<double> apply(const std::vector<double>& x) const {
        assert(static_cast<int>(x.size()) == cols_);
        std::vector<double> y(rows_, 0.0);
        for (int r = 0; r < rows_; ++r) {
            const double* row_r = row(r);
            double acc = 0.0;
            for (int c = 0; c < cols_; ++c) acc += row_r[c] * x[c];
            y[r] = acc;
        }
        return y;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double acc = 0.0;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

} // namespace gdes
