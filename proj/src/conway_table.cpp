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

// Conway polynomials for every non-prime field GF(p^a) with p^a <= 1024.
// Coefficients are constant-term-first and include the leading 1.

#include "conway_table.hpp"

namespace lrc::detail {

namespace {

constexpr ConwayEntry kTable[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {5, 4, {2, 4, 4, 0, 1}},
    {7, 2, {3, 6, 1}},
    {7, 3, {4, 0, 6, 1}},
    {11, 2, {2, 7, 1}},
    {13, 2, {2, 12, 1}},
    {17, 2, {3, 16, 1}},
    {19, 2, {2, 18, 1}},
    {23, 2, {5, 21, 1}},
    {29, 2, {2, 24, 1}},
    {31, 2, {3, 29, 1}},
};

}  // namespace

std::span<const ConwayEntry> conway_table() { return kTable; }

}  // namespace lrc::detail
