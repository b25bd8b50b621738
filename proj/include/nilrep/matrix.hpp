#ifndef NILREP_MATRIX_HPP
#define NILREP_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilrep {

/// Dense row-major matrix over an arbitrary coefficient type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
    }

    /// Copy without row `r` and column `c`.
    Matrix minor_without(std::size_t r, std::size_t c) const {
        Matrix out;
        out.rows_ = rows_ - 1;
        out.cols_ = cols_ - 1;
        out.data_.reserve(out.rows_ * out.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (j != c) out.data_.push_back((*this)(i, j));
        }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
std::vector<T> multiply(const Matrix<T>& a, const std::vector<T>& v, const T& zero) {
    if (v.size() != a.cols()) throw std::invalid_argument("matrix-vector size mismatch");
    std::vector<T> out(a.rows(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j)) && !is_zero(v[j])) out[i] += a(i, j) * v[j];
    return out;
}

}  // namespace nilrep

#endif
