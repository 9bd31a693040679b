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

#include "gpgcd/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gpgcd/errors.hpp"

namespace gpgcd {

namespace {

void require_finite(const std::vector<Complex>& c) {
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (!std::isfinite(c[j].real()) || !std::isfinite(c[j].imag()))
            throw ArgumentError("non-finite coefficient at x^" + std::to_string(j));
    }
}

}  // namespace

Polynomial::Polynomial() : coeffs_{Complex{0.0, 0.0}} {}

Polynomial::Polynomial(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
    if (coeffs_.empty())
        throw ArgumentError("polynomial needs at least one coefficient");
    require_finite(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<Complex> ascending)
    : Polynomial(std::vector<Complex>(ascending)) {}

Polynomial Polynomial::zero(std::size_t degree) {
    return Polynomial(std::vector<Complex>(degree + 1, Complex{}));
}

Polynomial Polynomial::constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }

Polynomial Polynomial::from_descending(const ComplexVector& desc) {
    std::vector<Complex> asc(static_cast<std::size_t>(desc.size()));
    for (Eigen::Index i = 0; i < desc.size(); ++i)
        asc[asc.size() - 1 - static_cast<std::size_t>(i)] = desc[i];
    return Polynomial(std::move(asc));
}

ComplexVector Polynomial::descending() const {
    ComplexVector v(static_cast<Eigen::Index>(coeffs_.size()));
    const auto n = coeffs_.size();
    for (std::size_t j = 0; j < n; ++j)
        v[static_cast<Eigen::Index>(n - 1 - j)] = coeffs_[j];
    return v;
}

Polynomial Polynomial::real_part() const {
    std::vector<Complex> c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(),
                   [](Complex z) { return Complex{z.real(), 0.0}; });
    return Polynomial(std::move(c));
}

Polynomial Polynomial::imag_part() const {
    std::vector<Complex> c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(),
                   [](Complex z) { return Complex{z.imag(), 0.0}; });
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(Complex s) const {
    std::vector<Complex> c(coeffs_);
    for (auto& z : c) z *= s;
    return Polynomial(std::move(c));
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    std::vector<Complex> c(std::max(p.size(), q.size()), Complex{});
    for (std::size_t j = 0; j < p.size(); ++j) c[j] += p.coeff(j);
    for (std::size_t j = 0; j < q.size(); ++j) c[j] += q.coeff(j);
    return Polynomial(std::move(c));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
    return add(p, q.scaled(-1.0));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    std::vector<Complex> c(p.size() + q.size() - 1, Complex{});
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Complex pi = p.coeff(i);
        for (std::size_t j = 0; j < q.size(); ++j) c[i + j] += pi * q.coeff(j);
    }
    return Polynomial(std::move(c));
}

double norm2_sq(const Polynomial& p) {
    double s = 0.0;
    for (const Complex& z : p.coeffs()) s += std::norm(z);
    return s;
}

ComplexMatrix convolution_matrix(const Polynomial& p, long k) {
    if (k < 0) throw ArgumentError("convolution_matrix: k must be non-negative");
    const auto deg = static_cast<Eigen::Index>(p.degree());
    const auto cols = static_cast<Eigen::Index>(k) + 1;
    ComplexMatrix c = ComplexMatrix::Zero(deg + cols, cols);
    const ComplexVector desc = p.descending();
    for (Eigen::Index col = 0; col < cols; ++col) c.block(col, col, deg + 1, 1) = desc;
    return c;
}

ComplexMatrix subresultant_matrix(const Polynomial& f, const Polynomial& g, long k) {
    const long m = static_cast<long>(f.degree());
    const long n = static_cast<long>(g.degree());
    if (n > m)
        throw ArgumentError("subresultant_matrix: deg f must be >= deg g");
    if (k < 0 || k >= n)
        throw ArgumentError("subresultant_matrix: need 0 <= k < deg g");
    const ComplexMatrix cf = convolution_matrix(f, n - k - 1);
    const ComplexMatrix cg = convolution_matrix(g, m - k - 1);
    ComplexMatrix out(cf.rows(), cf.cols() + cg.cols());
    out << cf, cg;
    return out;
}

}  // namespace gpgcd
