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

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrc {

/// Failure categories raised by the library. Each maps to one documented
/// precondition or consistency check.
enum class Errc {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    UnsupportedSize,
    DivisionByZero,
    OrderDoesNotDivide,
    DependentBasis,
    RepresentativeInSubgroupTwice,
    InvalidSubgroup,
    NotConstantOnCosets,
    DuplicateAbscissa,
    LengthMismatch,
    IndexOutOfRange,
    TooManyErasuresInGroup,
    InconsistentGroup,
    InvalidCode,
    DivisibilityViolation,
    DegreeOverflow,
    DistanceBoundNonpositive,
    NoAdmissibleRate,
    ConstraintViolated,
    NoCrossover,
    OutOfRange,
    TooLarge,
    NotAvailabilityCode,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace lrc
