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

#include "lrc/matrix.hpp"

#include <utility>

namespace lrc {

Matrix row_reduce(const Field& field, Matrix m) {
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < m.rows() && m(pivot, col).value == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead, j));
        }
        const FieldElement scale = field.inv(m(lead, col));
        for (std::size_t j = 0; j < m.cols(); ++j) m(lead, j) = field.mul(m(lead, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead || m(i, col).value == 0) continue;
            const FieldElement f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = field.sub(m(i, j), field.mul(f, m(lead, j)));
        }
        ++lead;
    }
    Matrix out(lead, m.cols());
    for (std::size_t i = 0; i < lead; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    }
    return out;
}

std::size_t rank(const Field& field, const Matrix& m) { return row_reduce(field, m).rows(); }

Matrix select_columns(const Matrix& m, std::span<const std::size_t> columns) {
    Matrix out(m.rows(), columns.size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j) out(i, j) = m(i, columns[j]);
    }
    return out;
}

std::vector<FieldElement> vec_mat(const Field& field, std::span<const FieldElement> v, const Matrix& m) {
    std::vector<FieldElement> out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].value == 0) continue;
        const auto row = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = field.add(out[j], field.mul(v[i], row[j]));
    }
    return out;
}

}  // namespace lrc
