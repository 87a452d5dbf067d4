// Copyright 2026 The lrc-curves Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrc/galois.hpp"

namespace lrc {

/// Dense row-major matrix of field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    FieldElement operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<FieldElement> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const FieldElement> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

/// Reduced row echelon form; zero rows are dropped, so rows() is the rank.
Matrix row_reduce(const Field& field, Matrix m);

std::size_t rank(const Field& field, const Matrix& m);

Matrix select_columns(const Matrix& m, std::span<const std::size_t> columns);

/// v * M for a row vector v of length m.rows().
std::vector<FieldElement> vec_mat(const Field& field, std::span<const FieldElement> v, const Matrix& m);

}  // namespace lrc
