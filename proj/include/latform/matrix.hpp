#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "latform/scalar.hpp"

namespace latform {

// Dense rational matrix, row-major. Dimensions here are desk scale
// (a few hundred at most), so no sparsity.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("ragged initializer for QMatrix");
            for (long v : r) entries_.emplace_back(v);
        }
    }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_integral() const {
        for (const auto& e : entries_)
            if (!latform::is_integral(e)) return false;
        return true;
    }

    bool is_symmetric() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    QMatrix transposed() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    QMatrix operator*(const QMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw std::invalid_argument("dimension mismatch in matrix product");
        QMatrix p(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t l = 0; l < cols_; ++l) {
                const Rational& a = at(i, l);
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    p.at(i, j) += a * rhs.at(l, j);
            }
        return p;
    }

    bool operator==(const QMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

}  // namespace latform
