/*
   Copyright 2026 The mqg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MQG_LINALG_HPP
#define MQG_LINALG_HPP

#include <string>
#include <utility>
#include <vector>

#include "mqg/cyclotomic.hpp"
#include "mqg/error.hpp"

namespace mqg {

/// Dense row-major matrix over a cyclotomic field. Zero-sized dimensions are allowed.
class Matrix {
   public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, CycloNum(0)) {
        if (rows < 0 || cols < 0) throw ParameterError("negative matrix dimension");
    }

    static Matrix identity(int k) {
        Matrix m(k, k);
        for (int i = 0; i < k; ++i) m(i, i) = CycloNum(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CycloNum& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const CycloNum& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ParameterError("matrix shapes do not compose");
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const CycloNum& x = a(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ParameterError("matrix shapes differ");
        Matrix out = a;
        for (size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }

    Matrix scaled(const CycloNum& c) const {
        Matrix out = *this;
        for (auto& x : out.data_) x *= c;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t k = 0; k < a.data_.size(); ++k)
            if (!(a.data_[k] == b.data_[k])) return false;
        return true;
    }

   private:
    int rows_ = 0, cols_ = 0;
    std::vector<CycloNum> data_;
};

/// Kronecker product; row index of a is the major index.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> row_reduce(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (int k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        CycloNum inv = m(r, c).inverse();
        for (int k = c; k < m.cols(); ++k)
            if (!m(r, k).is_zero()) m(r, k) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            CycloNum f = m(i, c);
            for (int k = c; k < m.cols(); ++k)
                if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

/// Basis of the right kernel, one column vector per free variable.
inline std::vector<std::vector<CycloNum>> nullspace(Matrix m) {
    std::vector<int> pivots = row_reduce(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<CycloNum>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<CycloNum> v(m.cols(), CycloNum(0));
        v[f] = CycloNum(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square matrix; StructuralError if singular.
inline Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw ParameterError("only square matrices are invertible");
    const int k = a.rows();
    Matrix aug(k, 2 * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) aug(i, j) = a(i, j);
        aug(i, k + i) = CycloNum(1);
    }
    std::vector<int> pivots = row_reduce(aug);
    if (static_cast<int>(pivots.size()) < k || (k > 0 && pivots[k - 1] >= k)) throw StructuralError("singular matrix");
    Matrix out(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out(i, j) = aug(i, k + j);
    return out;
}

}  // namespace mqg

#endif  // MQG_LINALG_HPP
