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

#include <Eigen/Dense>

#include "gpgcd/polynomial.hpp"

namespace gpgcd {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// [[Re M, -Im M], [Im M, Re M]]. Acting on (Re w; Im w) it reproduces the
/// real/imaginary stack of M w.
RealMatrix complex_to_real_block(const ComplexMatrix& m);

/// (Re w; Im w).
RealVector complex_to_real_stack(const ComplexVector& w);
/// Inverse of complex_to_real_stack. The length must be even.
ComplexVector real_stack_to_complex(const RealVector& v);

struct SingularPair {
    double sigma;
    RealVector u;  // left singular vector, unit norm
    RealVector v;  // right singular vector, unit norm
};

/// Smallest singular value of a tall (rows >= cols) matrix with its singular
/// vectors. Throws ArgumentError for a wide matrix, NumericError if the SVD
/// produces non-finite values.
SingularPair smallest_singular_pair(const RealMatrix& m);

/// argmin_x ||A x - b||_2 for rows(A) >= cols(A).
/// Throws NumericError (carrying the effective rank) when A is column rank
/// deficient.
RealVector solve_least_squares(const RealMatrix& a, const RealVector& b);

struct SaddlePointSolution {
    RealVector step;    // d
    RealVector lambda;  // multipliers, one per row of J
    double singular_value_ratio;  // sigma_min(J) / sigma_max(J)
};

/// Solves [[I, J^T], [J, 0]] (d; lambda) = (-grad; -q) for J of shape r x c
/// with r <= c.
///
/// Written in minimum-norm form: d = -grad + J^+ (J grad - q) and
/// lambda = -(J^T)^+ (d + grad), both from one thin SVD of J. The KKT matrix
/// is singular exactly when J loses row rank; that is reported as a
/// RankDeficiencyError once sigma_min/sigma_max < rank_tolerance.
SaddlePointSolution solve_saddle_point(const RealMatrix& jac, const RealVector& grad,
                                       const RealVector& q, double rank_tolerance = 1e-12);

}  // namespace gpgcd
