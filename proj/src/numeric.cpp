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

#include "gpgcd/numeric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gpgcd/errors.hpp"

namespace gpgcd {

RealMatrix complex_to_real_block(const ComplexMatrix& m) {
    const auto r = m.rows();
    const auto c = m.cols();
    RealMatrix out(2 * r, 2 * c);
    const RealMatrix re = m.real();
    const RealMatrix im = m.imag();
    out.topLeftCorner(r, c) = re;
    out.topRightCorner(r, c) = -im;
    out.bottomLeftCorner(r, c) = im;
    out.bottomRightCorner(r, c) = re;
    return out;
}

RealVector complex_to_real_stack(const ComplexVector& w) {
    RealVector out(2 * w.size());
    out << w.real(), w.imag();
    return out;
}

ComplexVector real_stack_to_complex(const RealVector& v) {
    if (v.size() % 2 != 0) throw ArgumentError("real_stack_to_complex: odd length");
    const auto h = v.size() / 2;
    ComplexVector out(h);
    for (Eigen::Index i = 0; i < h; ++i) out[i] = Complex{v[i], v[h + i]};
    return out;
}

SingularPair smallest_singular_pair(const RealMatrix& m) {
    if (m.rows() < m.cols())
        throw ArgumentError("smallest_singular_pair: matrix must have rows >= cols");
    if (m.cols() == 0) throw ArgumentError("smallest_singular_pair: empty matrix");
    Eigen::BDCSVD<RealMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) throw NumericError("SVD did not converge");
    const auto last = m.cols() - 1;
    SingularPair out{svd.singularValues()[last], svd.matrixU().col(last), svd.matrixV().col(last)};
    if (!std::isfinite(out.sigma) || !out.u.allFinite() || !out.v.allFinite())
        throw NumericError("SVD produced non-finite values");
    return out;
}

RealVector solve_least_squares(const RealMatrix& a, const RealVector& b) {
    if (a.rows() < a.cols())
        throw ArgumentError("solve_least_squares: system must have rows >= cols");
    if (a.rows() != b.size()) throw ArgumentError("solve_least_squares: size mismatch");
    Eigen::ColPivHouseholderQR<RealMatrix> qr(a);
    qr.setThreshold(64.0 * std::numeric_limits<double>::epsilon() *
                    static_cast<double>(a.rows()));
    const auto rank = qr.rank();
    if (rank < a.cols())
        throw NumericError("least-squares matrix is rank deficient (rank " +
                               std::to_string(rank) + " of " + std::to_string(a.cols()) + ")",
                           static_cast<long>(rank));
    RealVector x = qr.solve(b);
    if (!x.allFinite()) throw NumericError("least-squares solution is not finite");
    return x;
}

SaddlePointSolution solve_saddle_point(const RealMatrix& jac, const RealVector& grad,
                                       const RealVector& q, double rank_tolerance) {
    const auto r = jac.rows();
    const auto c = jac.cols();
    if (r > c) throw ArgumentError("solve_saddle_point: J must have rows <= cols");
    if (grad.size() != c || q.size() != r)
        throw ArgumentError("solve_saddle_point: dimension mismatch");
    if (!grad.allFinite() || !q.allFinite() || !jac.allFinite())
        throw ArgumentError("solve_saddle_point: non-finite input");

    // Thin SVD of J^T (tall) so that U spans the row space of J.
    Eigen::BDCSVD<RealMatrix> svd(jac.transpose(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) throw NumericError("SVD of the Jacobian did not converge");
    const RealVector& s = svd.singularValues();
    const double smax = s.size() ? s[0] : 0.0;
    const double smin = s.size() ? s[s.size() - 1] : 0.0;
    const double ratio = smax > 0.0 ? smin / smax : 0.0;
    if (r > 0 && !(ratio >= rank_tolerance))
        throw RankDeficiencyError("Jacobian is rank deficient (sigma_min/sigma_max = " +
                                      std::to_string(ratio) + ")",
                                  ratio);

    // J^T = W S Z^T  =>  J^+ = W S^-1 Z^T and (J^T)^+ = Z S^-1 W^T.
    const RealMatrix& w = svd.matrixU();  // c x r
    const RealMatrix& z = svd.matrixV();  // r x r
    const RealVector rhs = jac * grad - q;
    const RealVector correction = w * (s.cwiseInverse().asDiagonal() * (z.transpose() * rhs));
    RealVector step = correction - grad;
    RealVector lambda = -(z * (s.cwiseInverse().asDiagonal() * (w.transpose() * correction)));
    return {std::move(step), std::move(lambda), ratio};
}

}  // namespace gpgcd
