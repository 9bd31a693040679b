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

#include "gpgcd/recovery.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "gpgcd/errors.hpp"
#include "gpgcd/numeric.hpp"

namespace gpgcd {

Polynomial least_squares_divide(const Polynomial& target, const Polynomial& cofactor,
                                std::size_t d) {
    if (cofactor.degree() + d != target.degree())
        throw ArgumentError("least_squares_divide: deg(cofactor) + d must equal deg(target)");
    const RealMatrix c = complex_to_real_block(convolution_matrix(cofactor, static_cast<long>(d)));
    const RealVector h = solve_least_squares(c, complex_to_real_stack(target.descending()));
    return Polynomial::from_descending(real_stack_to_complex(h));
}

namespace {

struct Trial {
    Candidate candidate;
    Polynomial h;
    Polynomial a;
    Polynomial b;
    double residual;
};

double residual(const Polynomial& f, const Polynomial& g, const Polynomial& h,
                const Polynomial& a, const Polynomial& b) {
    return norm2_sq(f - h * b) + norm2_sq(g - h * a);
}

}  // namespace

ApproxGcdResult recover_gcd(const DecisionVector& x_final, const ProblemSpec& spec,
                            int iterations) {
    const Unpacked u = unpack(x_final);
    const std::size_t d = spec.d();

    // A F~ + B G~ = 0 forces A = t G/H and B = -t F/H, so F~ = H B and
    // G~ = H A cannot both hold with the same sign. The cofactor a candidate
    // was solved from keeps its sign; the other one is tried with both signs.
    const Polynomial h1 = least_squares_divide(u.g_tilde, u.a, d);
    const Polynomial h2 = least_squares_divide(u.f_tilde, u.b, d);
    const Polynomial neg_a = u.a.scaled(-1.0);
    const Polynomial neg_b = u.b.scaled(-1.0);

    const std::array<Trial, 4> trials{{
        {Candidate::FromA, h1, u.a, u.b, residual(u.f_tilde, u.g_tilde, h1, u.a, u.b)},
        {Candidate::FromA, h1, u.a, neg_b, residual(u.f_tilde, u.g_tilde, h1, u.a, neg_b)},
        {Candidate::FromB, h2, u.a, u.b, residual(u.f_tilde, u.g_tilde, h2, u.a, u.b)},
        {Candidate::FromB, h2, neg_a, u.b, residual(u.f_tilde, u.g_tilde, h2, neg_a, u.b)},
    }};
    const Trial* best = &trials[0];
    for (const Trial& t : trials)
        if (t.residual < best->residual) best = &t;

    const double scale = norm2_sq(u.f_tilde) + norm2_sq(u.g_tilde);
    if (!std::isfinite(best->residual) || best->residual > 10.0 * scale)
        throw RecoveryError("GCD recovery failed: best residual " +
                            std::to_string(best->residual) + " exceeds 10*(||F~||^2+||G~||^2)");

    ApproxGcdResult r{
        best->h,
        best->h * best->b,
        best->h * best->a,
        best->a,
        best->b,
    };
    r.perturbation = norm2_sq(r.f_tilde - spec.f()) + norm2_sq(r.g_tilde - spec.g());
    r.iterations = iterations;
    r.residual_chosen = best->residual;
    r.candidate_used = best->candidate;
    r.degenerate_leading = std::abs(r.h.leading()) < 1e-12 * std::sqrt(norm2_sq(r.h));
    return r;
}

ApproxGcdResult approximate_gcd(const ProblemSpec& spec, const OptimizerConfig& config) {
    const OptimizerOutcome out = run(spec, config);
    return recover_gcd(out.x, spec, out.iterations);
}

Polynomial gauge_normalized(const Polynomial& h) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < h.size(); ++j) {
        const double mag = std::abs(h.coeff(j));
        if (mag > best) {
            best = mag;
            arg = j;
        }
    }
    if (best == 0.0) return h;
    const Complex c = h.coeff(arg);
    return h.scaled(std::conj(c) / std::abs(c));
}

}  // namespace gpgcd
