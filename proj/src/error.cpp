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

#include "lrc/error.hpp"

namespace lrc {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::UnsupportedSize: return "UnsupportedSize";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::OrderDoesNotDivide: return "OrderDoesNotDivide";
        case Errc::DependentBasis: return "DependentBasis";
        case Errc::RepresentativeInSubgroupTwice: return "RepresentativeInSubgroupTwice";
        case Errc::InvalidSubgroup: return "InvalidSubgroup";
        case Errc::NotConstantOnCosets: return "NotConstantOnCosets";
        case Errc::DuplicateAbscissa: return "DuplicateAbscissa";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::TooManyErasuresInGroup: return "TooManyErasuresInGroup";
        case Errc::InconsistentGroup: return "InconsistentGroup";
        case Errc::InvalidCode: return "InvalidCode";
        case Errc::DivisibilityViolation: return "DivisibilityViolation";
        case Errc::DegreeOverflow: return "DegreeOverflow";
        case Errc::DistanceBoundNonpositive: return "DistanceBoundNonpositive";
        case Errc::NoAdmissibleRate: return "NoAdmissibleRate";
        case Errc::ConstraintViolated: return "ConstraintViolated";
        case Errc::NoCrossover: return "NoCrossover";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::TooLarge: return "TooLarge";
        case Errc::NotAvailabilityCode: return "NotAvailabilityCode";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lrc
