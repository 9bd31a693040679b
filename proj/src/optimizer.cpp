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

#include "gpgcd/optimizer.hpp"

#include <string>

#include "gpgcd/errors.hpp"

namespace gpgcd {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

struct Offsets {
    Index fre, gre, fim, gim, v1, v2, half, a_len, b_len;
};

Offsets offsets(std::size_t m, std::size_t n, std::size_t d) {
    Offsets o{};
    o.fre = 0;
    o.gre = idx(m + 1);
    o.fim = idx(m + n + 2);
    o.gim = idx(2 * m + n + 3);
    o.v1 = idx(2 * (m + n + 2));
    o.half = idx(m + n - 2 * d + 2);
    o.v2 = o.v1 + o.half;
    o.a_len = idx(n - d + 1);
    o.b_len = idx(m - d + 1);
    return o;
}

Polynomial poly_from_parts(const RealVector& re_desc, const RealVector& im_desc) {
    ComplexVector z(re_desc.size());
    for (Index i = 0; i < z.size(); ++i) z[i] = Complex{re_desc[i], im_desc[i]};
    return Polynomial::from_descending(z);
}

void check_slot(const Polynomial& p, std::size_t slot, const char* name) {
    if (p.degree() > slot)
        throw ArgumentError(std::string("pack: ") + name + " exceeds its degree slot " +
                            std::to_string(slot));
}

// Descending coefficients of p padded on the left to a slot of `slot` + 1.
ComplexVector padded_desc(const Polynomial& p, std::size_t slot) {
    ComplexVector out = ComplexVector::Zero(idx(slot + 1));
    out.tail(idx(p.size())) = p.descending();
    return out;
}

}  // namespace

ProblemSpec::ProblemSpec(Polynomial f, Polynomial g, std::size_t d)
    : f_(std::move(f)), g_(std::move(g)), d_(d) {
    if (f_.degree() < g_.degree())
        throw ArgumentError("degree constraint violated: need deg F >= deg G");
    if (g_.degree() == 0) throw ArgumentError("degree constraint violated: need deg G > 0");
    if (d_ == 0 || d_ > g_.degree())
        throw ArgumentError("degree constraint violated: need deg G >= d > 0");
}

std::size_t ProblemSpec::variable_count() const noexcept { return 4 * (m() + n() - d_ + 2); }

std::size_t ProblemSpec::constraint_count() const noexcept {
    return 2 * (m() + n() - d_ + 1) + 1;
}

DecisionVector::DecisionVector(const ProblemSpec& spec, RealVector x)
    : m_(spec.m()), n_(spec.n()), d_(spec.d()), x_(std::move(x)) {
    if (x_.size() != idx(spec.variable_count()))
        throw ArgumentError("decision vector has length " + std::to_string(x_.size()) +
                            ", expected " + std::to_string(spec.variable_count()));
}

RealVector DecisionVector::v1() const {
    const auto o = offsets(m_, n_, d_);
    return x_.segment(o.v1, o.half);
}

RealVector DecisionVector::v2() const {
    const auto o = offsets(m_, n_, d_);
    return x_.segment(o.v2, o.half);
}

DecisionVector DecisionVector::operator+(const RealVector& step) const {
    if (step.size() != x_.size()) throw ArgumentError("step has wrong length");
    DecisionVector out(*this);
    out.x_ += step;
    return out;
}

DecisionVector pack(const Polynomial& f_tilde, const Polynomial& g_tilde, const Polynomial& a,
                    const Polynomial& b, const ProblemSpec& spec) {
    const std::size_t m = spec.m(), n = spec.n(), d = spec.d();
    check_slot(f_tilde, m, "f~");
    check_slot(g_tilde, n, "g~");
    check_slot(a, n - d, "a");
    check_slot(b, m - d, "b");
    const auto o = offsets(m, n, d);
    const ComplexVector fd = padded_desc(f_tilde, m);
    const ComplexVector gd = padded_desc(g_tilde, n);
    const ComplexVector ad = padded_desc(a, n - d);
    const ComplexVector bd = padded_desc(b, m - d);

    RealVector x(idx(spec.variable_count()));
    x.segment(o.fre, fd.size()) = fd.real();
    x.segment(o.gre, gd.size()) = gd.real();
    x.segment(o.fim, fd.size()) = fd.imag();
    x.segment(o.gim, gd.size()) = gd.imag();
    x.segment(o.v1, o.a_len) = ad.real();
    x.segment(o.v1 + o.a_len, o.b_len) = bd.real();
    x.segment(o.v2, o.a_len) = ad.imag();
    x.segment(o.v2 + o.a_len, o.b_len) = bd.imag();
    return DecisionVector(spec, std::move(x));
}

Unpacked unpack(const DecisionVector& xv) {
    const auto o = offsets(xv.m(), xv.n(), xv.d());
    const RealVector& x = xv.values();
    const Index fl = idx(xv.m() + 1), gl = idx(xv.n() + 1);
    return Unpacked{
        poly_from_parts(x.segment(o.fre, fl), x.segment(o.fim, fl)),
        poly_from_parts(x.segment(o.gre, gl), x.segment(o.gim, gl)),
        poly_from_parts(x.segment(o.v1, o.a_len), x.segment(o.v2, o.a_len)),
        poly_from_parts(x.segment(o.v1 + o.a_len, o.b_len), x.segment(o.v2 + o.a_len, o.b_len)),
    };
}

namespace {

// The coefficient block of pack(F, G, 0, 0).
RealVector input_coefficients(const ProblemSpec& spec) {
    const auto o = offsets(spec.m(), spec.n(), spec.d());
    const ComplexVector fd = spec.f().descending();
    const ComplexVector gd = spec.g().descending();
    RealVector c(o.v1);
    c.segment(o.fre, fd.size()) = fd.real();
    c.segment(o.gre, gd.size()) = gd.real();
    c.segment(o.fim, fd.size()) = fd.imag();
    c.segment(o.gim, gd.size()) = gd.imag();
    return c;
}

void check_compatible(const DecisionVector& x, const ProblemSpec& spec) {
    if (x.m() != spec.m() || x.n() != spec.n() || x.d() != spec.d())
        throw ArgumentError("decision vector does not belong to this problem");
}

}  // namespace

double objective(const DecisionVector& x, const ProblemSpec& spec) {
    check_compatible(x, spec);
    const RealVector c = input_coefficients(spec);
    return (x.values().head(c.size()) - c).squaredNorm();
}

RealVector gradient_fbar(const DecisionVector& x, const ProblemSpec& spec) {
    check_compatible(x, spec);
    const RealVector c = input_coefficients(spec);
    RealVector grad = RealVector::Zero(x.values().size());
    grad.head(c.size()) = x.values().head(c.size()) - c;
    return grad;
}

RealVector constraint(const DecisionVector& x, const ProblemSpec& spec) {
    check_compatible(x, spec);
    const Unpacked u = unpack(x);
    const long k = static_cast<long>(spec.d()) - 1;
    // N_{d-1} is linear in the coefficients, so its real and imaginary parts
    // are N1 = N_{d-1}(Re f~, Re g~) and N2 = N_{d-1}(Im f~, Im g~).
    const ComplexMatrix nk = subresultant_matrix(u.f_tilde, u.g_tilde, k);
    RealVector v(2 * x.cofactor_half());
    v << x.v1(), x.v2();

    RealVector q(idx(spec.constraint_count()));
    q[0] = v.squaredNorm() - 1.0;
    q.tail(q.size() - 1) = complex_to_real_block(nk) * v;
    return q;
}

RealMatrix jacobian(const DecisionVector& x, const ProblemSpec& spec) {
    check_compatible(x, spec);
    const std::size_t m = spec.m(), n = spec.n(), d = spec.d();
    const Unpacked u = unpack(x);
    const auto o = offsets(m, n, d);
    const Index rows = idx(spec.constraint_count());
    const Index half_rows = idx(m + n - d + 1);

    RealMatrix jac = RealMatrix::Zero(rows, idx(spec.variable_count()));
    jac.block(0, o.v1, 1, o.half) = 2.0 * x.v1().transpose();
    jac.block(0, o.v2, 1, o.half) = 2.0 * x.v2().transpose();

    // d/d(f~, g~): multiplication by the cofactors, [[A1, -A2], [A2, A1]].
    const ComplexMatrix ca = convolution_matrix(u.a, static_cast<long>(m));
    const ComplexMatrix cb = convolution_matrix(u.b, static_cast<long>(n));
    ComplexMatrix cof(half_rows, ca.cols() + cb.cols());
    cof << ca, cb;
    jac.block(1, 0, 2 * half_rows, o.v1) = complex_to_real_block(cof);

    // d/d(v1, v2): the subresultant block itself.
    const ComplexMatrix nk = subresultant_matrix(u.f_tilde, u.g_tilde, static_cast<long>(d) - 1);
    jac.block(1, o.v1, 2 * half_rows, 2 * o.half) = complex_to_real_block(nk);
    return jac;
}

DecisionVector initialize(const ProblemSpec& spec) {
    const long k = static_cast<long>(spec.d()) - 1;
    const RealMatrix nk = complex_to_real_block(subresultant_matrix(spec.f(), spec.g(), k));
    const SingularPair sp = smallest_singular_pair(nk);

    const auto o = offsets(spec.m(), spec.n(), spec.d());
    RealVector x(idx(spec.variable_count()));
    x.head(o.v1) = input_coefficients(spec);
    x.tail(2 * o.half) = sp.v;
    return DecisionVector(spec, std::move(x));
}

void OptimizerConfig::validate() const {
    if (!(epsilon > 0.0)) throw ArgumentError("epsilon must be positive");
    if (max_iterations < 1) throw ArgumentError("max_iterations must be at least 1");
    if (!(rank_tolerance >= 0.0)) throw ArgumentError("rank_tolerance must be non-negative");
}

OptimizerOutcome run(const ProblemSpec& spec, const OptimizerConfig& config) {
    config.validate();
    return run_from(spec, initialize(spec), config);
}

OptimizerOutcome run_from(const ProblemSpec& spec, DecisionVector start,
                          const OptimizerConfig& config) {
    config.validate();
    check_compatible(start, spec);
    IterationState state{std::move(start), 0, 0.0, 0.0};
    while (state.iteration < config.max_iterations) {
        const RealVector q = constraint(state.x, spec);
        const auto sol = solve_saddle_point(jacobian(state.x, spec), gradient_fbar(state.x, spec),
                                            q, config.rank_tolerance);
        if (!sol.step.allFinite()) throw NumericError("iteration produced a non-finite step");
        state.x = state.x + sol.step;
        ++state.iteration;
        state.last_step_norm = sol.step.norm();
        state.constraint_norm = q.lpNorm<Eigen::Infinity>();
        if (state.last_step_norm <= config.epsilon) return {std::move(state.x), state.iteration};
    }
    state.constraint_norm = constraint(state.x, spec).lpNorm<Eigen::Infinity>();
    throw NonConvergenceError("no convergence within " + std::to_string(config.max_iterations) +
                                  " iterations (last step norm " +
                                  std::to_string(state.last_step_norm) + ")",
                              std::move(state));
}

}  // namespace gpgcd
