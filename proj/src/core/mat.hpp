#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "error.hpp"

namespace pod {

// Dense row-major matrix of doubles. Deliberately minimal: the numeric
// kernels in this project are written as explicit loops against it.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0) : rows(r), cols(c), v(static_cast<size_t>(r) * c, fill) {}

    double& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }

    double* row(int r) { return v.data() + static_cast<size_t>(r) * cols; }
    const double* row(int r) const { return v.data() + static_cast<size_t>(r) * cols; }

    size_t size() const { return v.size(); }
    bool empty() const { return v.empty(); }

    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

    void fill(double x) { std::fill(v.begin(), v.end(), x); }

    bool all_finite() const {
        for (double x : v)
            if (!std::isfinite(x)) return false;
        return true;
    }
};

using Vec = std::vector<double>;

// out = a * b, (n x k) * (k x m). Plain i-k-j loop; fast enough for the
// model sizes used here.
inline void matmul(const Mat& a, const Mat& b, Mat& out) {
    if (a.cols != b.rows) fail_argument("matmul: inner dimensions disagree");
    out = Mat(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        const double* arow = a.row(i);
        double* orow = out.row(i);
        for (int k = 0; k < a.cols; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row(k);
            for (int j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
        }
    }
}

inline void check_same_shape(const Mat& a, const Mat& b, const char* what) {
    if (!a.same_shape(b)) fail_argument(std::string(what) + ": shape mismatch");
}

} // namespace pod
