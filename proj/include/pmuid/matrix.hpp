#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pmuid {

// Dense row-major matrix of doubles. Deliberately small: storage, element
// access, and a few shape helpers. All heavy arithmetic lives in kernels.hpp.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
        assert(rows >= 0 && cols >= 0);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }
    double operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    std::span<double> row(int i) {
        return {data_.data() + static_cast<size_t>(i) * cols_,
                static_cast<size_t>(cols_)};
    }
    std::span<const double> row(int i) const {
        return {data_.data() + static_cast<size_t>(i) * cols_,
                static_cast<size_t>(cols_)};
    }

    std::vector<double> col(int j) const {
        std::vector<double> out(rows_);
        for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    // Rows of *this picked out by `idx`, in that order.
    Matrix select_rows(std::span<const int> idx) const {
        Matrix out(static_cast<int>(idx.size()), cols_);
        for (size_t k = 0; k < idx.size(); ++k)
            for (int j = 0; j < cols_; ++j) out(static_cast<int>(k), j) = (*this)(idx[k], j);
        return out;
    }

    Matrix select_cols(std::span<const int> idx) const {
        Matrix out(rows_, static_cast<int>(idx.size()));
        for (int i = 0; i < rows_; ++i)
            for (size_t k = 0; k < idx.size(); ++k) out(i, static_cast<int>(k)) = (*this)(i, idx[k]);
        return out;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// A block of time-series streams: one row per stream, one column per
// snapshot, plus the labeling and timing metadata the file formats carry.
struct DataMatrix {
    Matrix values;                     // streams x samples
    std::vector<std::string> stream_labels;
    double sample_rate_hz = 100.0;
    double t0 = 0.0;                   // timestamp of the first column, seconds

    int streams() const { return values.rows(); }
    int samples() const { return values.cols(); }

    // Throws validation_error if shapes, labels, the sample rate, or
    // entry finiteness are off. Non-finite entries are reported with the
    // offending stream label and snapshot index.
    void validate() const;
};

}  // namespace pmuid
