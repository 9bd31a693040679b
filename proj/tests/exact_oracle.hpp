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

// Exact arithmetic over Q(i) for test oracles: polynomial GCD degree of
// Gaussian-rational polynomials by the Euclidean algorithm.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "gpgcd/polynomial.hpp"

namespace oracle {

struct GaussQ {
    mpq_class re{0};
    mpq_class im{0};

    bool is_zero() const { return re == 0 && im == 0; }
};

inline GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
inline GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
inline GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussQ operator/(const GaussQ& a, const GaussQ& b) {
    const mpq_class den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

// Ascending coefficients, trailing zeros trimmed (the zero polynomial is empty).
using ExactPoly = std::vector<GaussQ>;

inline void trim(ExactPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline ExactPoly from_gaussian_ints(const std::vector<std::pair<long, long>>& ascending) {
    ExactPoly p;
    for (auto [re, im] : ascending) p.push_back({mpq_class(re), mpq_class(im)});
    trim(p);
    return p;
}

inline ExactPoly mul(const ExactPoly& a, const ExactPoly& b) {
    if (a.empty() || b.empty()) return {};
    ExactPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    trim(c);
    return c;
}

inline ExactPoly remainder(ExactPoly a, const ExactPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const GaussQ q = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = a[shift + j] - q * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline ExactPoly gcd(ExactPoly a, ExactPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ExactPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Degree of gcd(a, b); -1 when both are zero.
inline long gcd_degree(const ExactPoly& a, const ExactPoly& b) {
    return static_cast<long>(gcd(a, b).size()) - 1;
}

inline gpgcd::Polynomial to_double(const ExactPoly& p) {
    if (p.empty()) return gpgcd::Polynomial();
    std::vector<gpgcd::Complex> c;
    for (const auto& z : p) c.emplace_back(z.re.get_d(), z.im.get_d());
    return gpgcd::Polynomial(std::move(c));
}

/// prod (x - r) over the given Gaussian-integer roots.
inline ExactPoly from_roots(const std::vector<std::pair<long, long>>& roots) {
    ExactPoly p = from_gaussian_ints({{1, 0}});
    for (auto [re, im] : roots) p = mul(p, from_gaussian_ints({{-re, -im}, {1, 0}}));
    return p;
}

}  // namespace oracle
