#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nsbin/errors.hpp"

namespace nsbin {

/// Dense square matrix, row-major.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int dim, T fill = T(0))
        : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, fill)
    {
    }

    static SquareMatrix identity(int dim)
    {
        SquareMatrix out(dim);
        for (int i = 0; i < dim; ++i)
            out(i, i) = T(1);
        return out;
    }

    int dim() const noexcept { return dim_; }

    T& operator()(int row, int col) { return data_[index(row, col)]; }
    const T& operator()(int row, int col) const { return data_[index(row, col)]; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

    friend SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs)
    {
        if (lhs.dim_ != rhs.dim_)
            throw Error(ErrorKind::DimensionMismatch, "matrix product of mismatched sizes");
        SquareMatrix out(lhs.dim_);
        for (int i = 0; i < lhs.dim_; ++i) {
            for (int k = 0; k < lhs.dim_; ++k) {
                const T& a = lhs(i, k);
                if (a == T(0))
                    continue;
                for (int j = 0; j < lhs.dim_; ++j)
                    out(i, j) += a * rhs(k, j);
            }
        }
        return out;
    }

    template <typename U>
    SquareMatrix<U> cast() const
    {
        SquareMatrix<U> out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                out(i, j) = U(data_[index(i, j)]);
        return out;
    }

private:
    std::size_t index(int row, int col) const
    {
        return static_cast<std::size_t>(row) * dim_ + col;
    }

    int dim_ = 0;
    std::vector<T> data_;
};

/// Rows of space-separated entries, one row per line.
template <typename T>
std::string render(const SquareMatrix<T>& m)
{
    std::string out;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j)
                out += ' ';
            out += std::to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace nsbin
