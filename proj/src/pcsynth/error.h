// Copyright 2026 The pcsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCSYNTH_ERROR_H
#define PCSYNTH_ERROR_H

#include <stdexcept>
#include <string>

namespace pcsynth {

/// Malformed or inconsistent user input (bad dimensions, dependent states, parse failures).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested success probabilities violate the PSD existence condition.
struct InfeasibleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A numerical kernel could not meet its contract (singular pivot, indefinite input, ...).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A synthesized or loaded circuit failed its contract check.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pcsynth

#endif
