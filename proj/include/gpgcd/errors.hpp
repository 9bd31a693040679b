/*
 Copyright 2026 The gpgcd Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gpgcd {

/// Invalid degrees, shapes or non-finite input.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A dense factorization failed or a least-squares system lost column rank.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, long effective_rank = -1)
        : std::runtime_error(what), effective_rank_(effective_rank) {}

    long effective_rank() const noexcept { return effective_rank_; }

private:
    long effective_rank_;
};

/// The constraint Jacobian lost full row rank: the iterate admits a common
/// divisor of degree larger than requested.
class RankDeficiencyError : public NumericError {
public:
    RankDeficiencyError(const std::string& what, double ratio)
        : NumericError(what), ratio_(ratio) {}

    double singular_value_ratio() const noexcept { return ratio_; }

private:
    double ratio_;
};

/// The GCD could not be recovered from a converged state.
class RecoveryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gpgcd
