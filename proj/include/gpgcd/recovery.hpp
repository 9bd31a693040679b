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

#include <cstddef>

#include "gpgcd/optimizer.hpp"
#include "gpgcd/polynomial.hpp"

namespace gpgcd {

enum class Candidate { FromA, FromB };

struct ApproxGcdResult {
    Polynomial h;        // approximate GCD, degree slot d
    Polynomial f_tilde;  // == h * b
    Polynomial g_tilde;  // == h * a
    Polynomial a;        // cofactor with g_tilde = h * a (sign resolved)
    Polynomial b;        // cofactor with f_tilde = h * b (sign resolved)
    double perturbation = 0.0;  // ||F~ - F||^2 + ||G~ - G||^2 after correction
    int iterations = 0;
    double residual_chosen = 0.0;
    Candidate candidate_used = Candidate::FromA;
    bool degenerate_leading = false;  // |lc(h)| < 1e-12 ||h||
};

/// Degree-d H minimizing ||cofactor * H - target||_2, solved as the real
/// block least-squares system on C_d(cofactor). Requires
/// deg(cofactor) + d == deg(target). Throws NumericError when the
/// convolution matrix is rank deficient (cofactor numerically zero).
Polynomial least_squares_divide(const Polynomial& target, const Polynomial& cofactor,
                                std::size_t d);

/// Recovers H from a converged state, picks the best candidate by residual,
/// and replaces F~, G~ by exact products with H.
ApproxGcdResult recover_gcd(const DecisionVector& x_final, const ProblemSpec& spec,
                            int iterations = 0);

/// run() followed by recover_gcd().
ApproxGcdResult approximate_gcd(const ProblemSpec& spec, const OptimizerConfig& config = {});

/// Copy of h rotated by a unit-modulus scalar so that its largest-magnitude
/// coefficient is real and positive. Used to compare results up to gauge.
Polynomial gauge_normalized(const Polynomial& h);

}  // namespace gpgcd
