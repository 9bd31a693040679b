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

#include <cstdint>
#include <string>
#include <utility>

#include "gpgcd/optimizer.hpp"
#include "gpgcd/polynomial.hpp"

namespace gpgcd {

/// Random benchmark instance: monic GCD of degree d times monic prime parts
/// of degrees m-d and n-d, plus noise of 2-norm e_f and e_g.
struct InstanceParams {
    std::size_t m = 10;
    std::size_t n = 10;
    std::size_t d = 5;
    double e_f = 0.1;
    double e_g = 0.1;
    double coeff_range = 10.0;
    std::uint64_t seed = 1;
    bool real_only = false;  // draw real coefficients only

    void validate() const;  // m >= n > d > 0, e_f, e_g >= 0, coeff_range > 0
};

struct Instance {
    Polynomial f;
    Polynomial g;
    Polynomial gcd;  // planted monic GCD
    Polynomial f0;   // noise-free F
    Polynomial g0;   // noise-free G
};

/// Deterministic in params (including seed).
Instance generate_instance(const InstanceParams& p);

struct ExperimentRecord {
    InstanceParams params;
    int trials = 0;
    double mean_error = 0.0;  // over converged trials
    double mean_iterations = 0.0;
    double mean_time_seconds = 0.0;
    double convergence_rate = 0.0;  // over all trials
};

/// Per-trial seed derived from the master seed and the trial index.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// generate -> optimize -> recover for `trials` instances. Failures count
/// against the convergence rate; they are not raised. `workers` > 1 fans the
/// trials out over threads; results are reduced in trial order.
ExperimentRecord run_batch(const InstanceParams& p, int trials, const OptimizerConfig& config,
                           int workers = 1);

std::string csv_header();
/// One CSV data row, no trailing newline.
std::string to_csv_row(const ExperimentRecord& r);
/// JSON object with the CSV fields.
std::string to_json(const ExperimentRecord& r);

}  // namespace gpgcd
