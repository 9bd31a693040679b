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
#include <stdexcept>

#include "gpgcd/numeric.hpp"
#include "gpgcd/polynomial.hpp"

namespace gpgcd {

/// Input of one approximate-GCD problem: F, G and the target degree d, with
/// deg F = m >= deg G = n > 0 and n >= d > 0.
class ProblemSpec {
public:
    ProblemSpec(Polynomial f, Polynomial g, std::size_t d);

    const Polynomial& f() const noexcept { return f_; }
    const Polynomial& g() const noexcept { return g_; }
    std::size_t m() const noexcept { return f_.degree(); }
    std::size_t n() const noexcept { return g_.degree(); }
    std::size_t d() const noexcept { return d_; }

    /// 4(m+n-d+2)
    std::size_t variable_count() const noexcept;
    /// 2(m+n-d+1)+1
    std::size_t constraint_count() const noexcept;

private:
    Polynomial f_;
    Polynomial g_;
    std::size_t d_;
};

/// Polynomials held in a decision vector.
struct Unpacked {
    Polynomial f_tilde;
    Polynomial g_tilde;
    Polynomial a;  // cofactor of F~, degree slot n-d
    Polynomial b;  // cofactor of G~, degree slot m-d
};

/// Packed real decision vector. Layout, every block in descending degree:
///   Re f~ (m+1) | Re g~ (n+1) | Im f~ (m+1) | Im g~ (n+1) |
///   Re a (n-d+1) | Re b (m-d+1) | Im a (n-d+1) | Im b (m-d+1)
/// The trailing half-blocks (Re a; Re b) and (Im a; Im b) are v1 and v2.
class DecisionVector {
public:
    DecisionVector(const ProblemSpec& spec, RealVector x);

    const RealVector& values() const noexcept { return x_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(x_.size()); }

    /// Number of leading coordinates that hold coefficients of f~ and g~.
    std::size_t coefficient_count() const noexcept { return 2 * (m_ + n_ + 2); }
    /// Length of v1 (and of v2): m + n - 2d + 2.
    std::size_t cofactor_half() const noexcept { return m_ + n_ - 2 * d_ + 2; }

    RealVector v1() const;
    RealVector v2() const;

    DecisionVector operator+(const RealVector& step) const;

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t d() const noexcept { return d_; }

private:
    std::size_t m_, n_, d_;
    RealVector x_;
};

DecisionVector pack(const Polynomial& f_tilde, const Polynomial& g_tilde, const Polynomial& a,
                    const Polynomial& b, const ProblemSpec& spec);
Unpacked unpack(const DecisionVector& x);

/// Sum of squared coordinate perturbations of (f~, g~) from (F, G).
double objective(const DecisionVector& x, const ProblemSpec& spec);

/// Gradient of half the objective: coefficient coordinates minus the input
/// coefficients, zero on every cofactor coordinate.
RealVector gradient_fbar(const DecisionVector& x, const ProblemSpec& spec);

/// Row 0 is ||A||^2 + ||B||^2 - 1; the remaining 2(m+n-d+1) rows are
/// [[N1, -N2], [N2, N1]] (v1; v2) with N1, N2 the subresultant matrices
/// N_{d-1} of the real and imaginary parts of the current f~, g~.
RealVector constraint(const DecisionVector& x, const ProblemSpec& spec);

/// Jacobian of constraint(), shape constraint_count() x variable_count():
///   [ 0    0    2 v1^T  2 v2^T ]
///   [ A1  -A2   N1     -N2     ]
///   [ A2   A1   N2      N1     ]
/// with A1 = [C_m(Re a) C_n(Re b)] and A2 = [C_m(Im a) C_n(Im b)].
RealMatrix jacobian(const DecisionVector& x, const ProblemSpec& spec);

/// Starting point: the input coefficients, with cofactors taken from the
/// right singular vector of the smallest singular value of the embedded
/// N_{d-1}(F, G).
DecisionVector initialize(const ProblemSpec& spec);

struct OptimizerConfig {
    double epsilon = 1e-8;  // stop once ||step||_2 <= epsilon
    int max_iterations = 50;
    double rank_tolerance = 1e-12;

    void validate() const;
};

struct IterationState {
    DecisionVector x;
    int iteration = 0;
    double last_step_norm = 0.0;
    double constraint_norm = 0.0;  // ||q(x)||_inf
};

struct OptimizerOutcome {
    DecisionVector x;
    int iterations;
};

/// Raised when the iteration cap is hit; keeps the last iterate.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, IterationState last)
        : std::runtime_error(what), last_(std::move(last)) {}

    const IterationState& last_state() const noexcept { return last_; }

private:
    IterationState last_;
};

/// Modified-Newton iteration from initialize(spec): one saddle-point solve
/// and a full step per iteration, stopping once the step norm is at most
/// config.epsilon. The returned iteration count includes that final solve.
/// Throws NonConvergenceError or RankDeficiencyError.
OptimizerOutcome run(const ProblemSpec& spec, const OptimizerConfig& config = {});

/// Same as run() but starting from a caller-supplied point.
OptimizerOutcome run_from(const ProblemSpec& spec, DecisionVector start,
                          const OptimizerConfig& config = {});

}  // namespace gpgcd
