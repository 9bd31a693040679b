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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gpgcd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Univariate polynomial with complex coefficients.
///
/// Coefficients are stored in ascending order: coeff(j) multiplies x^j.
/// The degree is a container property. A leading coefficient may be zero
/// or tiny and it is never trimmed, because the structured matrices built
/// from a polynomial depend on its nominal degree.
class Polynomial {
public:
    /// The zero polynomial: degree 0, coefficients [0].
    Polynomial();

    /// Throws ArgumentError on an empty sequence or a non-finite coefficient.
    explicit Polynomial(std::vector<Complex> ascending);
    Polynomial(std::initializer_list<Complex> ascending);

    /// Zero polynomial occupying a degree slot of `degree`.
    static Polynomial zero(std::size_t degree);
    static Polynomial constant(Complex c);
    /// Builds from a descending coefficient vector (leading coefficient first).
    static Polynomial from_descending(const ComplexVector& desc);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    Complex coeff(std::size_t j) const { return coeffs_.at(j); }
    Complex leading() const noexcept { return coeffs_.back(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Descending coefficient vector (p_deg, ..., p_0).
    ComplexVector descending() const;

    Polynomial real_part() const;
    Polynomial imag_part() const;

    /// Scales all coefficients, keeping the degree slot.
    Polynomial scaled(Complex s) const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<Complex> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

/// Sum of |c_j|^2 over all coefficients.
double norm2_sq(const Polynomial& p);

/// Band matrix C_k(p) of size (deg p + k + 1) x (k + 1).
///
/// Column c holds the descending coefficients of p shifted down by c rows, so
/// that C_k(p) * q.descending() == (p * q).descending() for deg q == k.
ComplexMatrix convolution_matrix(const Polynomial& p, long k);

/// Subresultant matrix N_k(f, g) = [C_{n-k-1}(f) | C_{m-k-1}(g)] with
/// m = deg f, n = deg g. Requires 0 <= k < n <= m.
ComplexMatrix subresultant_matrix(const Polynomial& f, const Polynomial& g, long k);

}  // namespace gpgcd
