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

#include "gpgcd/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gpgcd/errors.hpp"
#include "gpgcd/recovery.hpp"

namespace gpgcd {

void InstanceParams::validate() const {
    if (!(m >= n && n > d && d > 0))
        throw ArgumentError("degree constraint violated: need m >= n > d > 0");
    if (!(e_f >= 0.0) || !(e_g >= 0.0) || !std::isfinite(e_f) || !std::isfinite(e_g))
        throw ArgumentError("noise norms must be finite and non-negative");
    if (!(coeff_range > 0.0) || !std::isfinite(coeff_range))
        throw ArgumentError("coefficient range must be positive");
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class CoefficientSampler {
public:
    CoefficientSampler(std::uint64_t seed, double range, bool real_only)
        : rng_(seed), dist_(-range, range), real_only_(real_only) {}

    Complex draw() {
        const double re = dist_(rng_);
        const double im = real_only_ ? 0.0 : dist_(rng_);
        return {re, im};
    }

    // Monic when `monic`, otherwise every coefficient is random.
    Polynomial poly(std::size_t degree, bool monic) {
        std::vector<Complex> c(degree + 1);
        for (std::size_t j = 0; j < degree; ++j) c[j] = draw();
        c[degree] = monic ? Complex{1.0, 0.0} : draw();
        return Polynomial(std::move(c));
    }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> dist_;
    bool real_only_;
};

Polynomial add_scaled_noise(const Polynomial& base, const Polynomial& noise, double target_norm) {
    const double nn = std::sqrt(norm2_sq(noise));
    if (target_norm == 0.0 || nn == 0.0) return base;
    return base + noise.scaled(target_norm / nn);
}

struct TrialOutcome {
    bool converged = false;
    double error = 0.0;
    double iterations = 0.0;
    double seconds = 0.0;
};

TrialOutcome run_trial(const InstanceParams& base, int index, const OptimizerConfig& config) {
    InstanceParams p = base;
    p.seed = trial_seed(base.seed, static_cast<std::uint64_t>(index));
    const Instance inst = generate_instance(p);
    TrialOutcome out;
    try {
        const ProblemSpec spec(inst.f, inst.g, p.d);
        const auto start = std::chrono::steady_clock::now();
        const ApproxGcdResult r = approximate_gcd(spec, config);
        const auto stop = std::chrono::steady_clock::now();
        out.converged = true;
        out.error = r.perturbation;
        out.iterations = r.iterations;
        out.seconds = std::chrono::duration<double>(stop - start).count();
    } catch (const std::exception&) {
        out.converged = false;
    }
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
    std::uint64_t state = master;
    const std::uint64_t a = splitmix64(state);
    state = a ^ (trial * 0xD1B54A32D192ED03ULL);
    return splitmix64(state);
}

Instance generate_instance(const InstanceParams& p) {
    p.validate();
    CoefficientSampler s(p.seed, p.coeff_range, p.real_only);
    Polynomial gcd = s.poly(p.d, true);
    const Polynomial f_prime = s.poly(p.m - p.d, true);
    const Polynomial g_prime = s.poly(p.n - p.d, true);
    const Polynomial f_noise = s.poly(p.m - 1, false);
    const Polynomial g_noise = s.poly(p.n - 1, false);
    Polynomial f0 = gcd * f_prime;
    Polynomial g0 = gcd * g_prime;
    Polynomial f = add_scaled_noise(f0, f_noise, p.e_f);
    Polynomial g = add_scaled_noise(g0, g_noise, p.e_g);
    return {std::move(f), std::move(g), std::move(gcd), std::move(f0), std::move(g0)};
}

ExperimentRecord run_batch(const InstanceParams& p, int trials, const OptimizerConfig& config,
                           int workers) {
    p.validate();
    config.validate();
    if (trials < 1) throw ArgumentError("trials must be at least 1");
    workers = std::clamp(workers, 1, trials);

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
    if (workers == 1) {
        for (int i = 0; i < trials; ++i) outcomes[static_cast<std::size_t>(i)] = run_trial(p, i, config);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int i = w; i < trials; i += workers)
                    outcomes[static_cast<std::size_t>(i)] = run_trial(p, i, config);
            });
        }
    }

    ExperimentRecord rec;
    rec.params = p;
    rec.trials = trials;
    int converged = 0;
    double err = 0.0, iters = 0.0, secs = 0.0;
    for (const TrialOutcome& o : outcomes) {
        if (!o.converged) continue;
        ++converged;
        err += o.error;
        iters += o.iterations;
        secs += o.seconds;
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rec.convergence_rate = static_cast<double>(converged) / trials;
    rec.mean_error = converged ? err / converged : nan;
    rec.mean_iterations = converged ? iters / converged : nan;
    rec.mean_time_seconds = converged ? secs / converged : nan;
    return rec;
}

std::string csv_header() {
    return "m,n,d,e_F,e_G,trials,mean_error,mean_iterations,mean_time_s,convergence_rate";
}

std::string to_csv_row(const ExperimentRecord& r) {
    return std::to_string(r.params.m) + "," + std::to_string(r.params.n) + "," +
           std::to_string(r.params.d) + "," + fmt_double(r.params.e_f) + "," +
           fmt_double(r.params.e_g) + "," + std::to_string(r.trials) + "," +
           fmt_double(r.mean_error) + "," + fmt_double(r.mean_iterations) + "," +
           fmt_double(r.mean_time_seconds) + "," + fmt_double(r.convergence_rate);
}

std::string to_json(const ExperimentRecord& r) {
    // Non-finite means (no converged trial) are written as null.
    auto num = [](double v) -> nlohmann::ordered_json {
        return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
    };
    nlohmann::ordered_json j;
    j["m"] = r.params.m;
    j["n"] = r.params.n;
    j["d"] = r.params.d;
    j["e_F"] = r.params.e_f;
    j["e_G"] = r.params.e_g;
    j["trials"] = r.trials;
    j["mean_error"] = num(r.mean_error);
    j["mean_iterations"] = num(r.mean_iterations);
    j["mean_time_s"] = num(r.mean_time_seconds);
    j["convergence_rate"] = r.convergence_rate;
    return j.dump();
}

}  // namespace gpgcd
