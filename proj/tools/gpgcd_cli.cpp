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

// gpgcd: approximate GCD of complex polynomials from the command line.
//
//   gpgcd gcd F.json G.json --d 2 [--epsilon 1e-8] [--max-iter 50] [--format json|text]
//   gpgcd bench --m 10 --n 10 --d 5 --trials 100 --noise 0.1 --seed 1 [--format csv|json]
//
// Exit codes: 0 success, 2 input/parse error, 3 non-convergence,
// 4 rank deficiency or recovery failure, 1 anything else.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpgcd/gpgcd.h"
#include "poly_file.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitOther = 1;

struct PolyDeleter {
    void operator()(gpgcd_poly* p) const { gpgcd_poly_destroy(p); }
};
struct ResultDeleter {
    void operator()(gpgcd_result* r) const { gpgcd_result_destroy(r); }
};
using PolyHandle = std::unique_ptr<gpgcd_poly, PolyDeleter>;
using ResultHandle = std::unique_ptr<gpgcd_result, ResultDeleter>;

// One machine-readable line on stderr.
int report(int code, const std::string& kind, const std::string& reason) {
    std::cerr << "error: exit=" << code << " kind=" << kind << " reason="
              << nlohmann::json(reason).dump() << "\n";
    return code;
}

int exit_code_for(gpgcd_status s) {
    switch (s) {
        case GPGCD_OK: return 0;
        case GPGCD_ERR_ARGUMENT: return kExitInput;
        case GPGCD_ERR_NO_CONVERGENCE: return kExitNoConvergence;
        case GPGCD_ERR_NUMERIC:
        case GPGCD_ERR_RANK_DEFICIENT:
        case GPGCD_ERR_RECOVERY: return kExitNumeric;
        default: return kExitOther;
    }
}

int report_status(gpgcd_status s) {
    return report(exit_code_for(s), gpgcd_status_name(s), gpgcd_last_error());
}

PolyHandle make_poly(const gpgcd::cli::PolyData& p) {
    gpgcd_poly* out = nullptr;
    if (gpgcd_poly_create(p.re.data(), p.im.data(), p.degree(), &out) != GPGCD_OK)
        throw gpgcd::cli::ParseError(gpgcd_last_error());
    return PolyHandle(out);
}

struct GcdOptions {
    std::string f_path;
    std::string g_path;
    int d = 0;
    double epsilon = 1e-8;
    int max_iter = 50;
    std::string format = "json";
};

void print_text_poly(const char* name, const gpgcd::cli::PolyData& p) {
    std::printf("%s (degree %zu, ascending):\n", name, p.degree());
    for (std::size_t j = 0; j < p.re.size(); ++j)
        std::printf("  x^%zu: %.17g %+.17gi\n", j, p.re[j], p.im[j]);
}

int cmd_gcd(const GcdOptions& o) {
    gpgcd::cli::PolyData f, g;
    try {
        f = gpgcd::cli::read_poly_file(o.f_path);
        g = gpgcd::cli::read_poly_file(o.g_path);
    } catch (const gpgcd::cli::ParseError& e) {
        return report(kExitInput, "parse", e.what());
    }
    if (o.d <= 0 || g.degree() <= static_cast<std::size_t>(o.d) || f.degree() < g.degree())
        return report(kExitInput, "argument",
                      "degree constraint violated: need deg F >= deg G > d > 0");

    PolyHandle fh, gh;
    try {
        fh = make_poly(f);
        gh = make_poly(g);
    } catch (const gpgcd::cli::ParseError& e) {
        return report(kExitInput, "parse", e.what());
    }

    gpgcd_config config;
    gpgcd_config_default(&config);
    config.epsilon = o.epsilon;
    config.max_iterations = o.max_iter;

    gpgcd_result* raw = nullptr;
    const gpgcd_status s = gpgcd_solve(fh.get(), gh.get(), o.d, &config, &raw);
    if (s != GPGCD_OK) return report_status(s);
    const ResultHandle r(raw);

    using gpgcd::cli::from_handle;
    const auto h = from_handle(gpgcd_result_gcd(r.get()));
    const auto ft = from_handle(gpgcd_result_f_tilde(r.get()));
    const auto gt = from_handle(gpgcd_result_g_tilde(r.get()));
    const auto a = from_handle(gpgcd_result_cofactor_a(r.get()));
    const auto b = from_handle(gpgcd_result_cofactor_b(r.get()));
    const char* candidate =
        gpgcd_result_candidate(r.get()) == GPGCD_CANDIDATE_FROM_B ? "from_B" : "from_A";

    if (o.format == "text") {
        std::printf("status: converged\n");
        std::printf("iterations: %d\n", gpgcd_result_iterations(r.get()));
        std::printf("perturbation: %.17g\n", gpgcd_result_perturbation(r.get()));
        std::printf("residual_chosen: %.17g\n", gpgcd_result_residual(r.get()));
        std::printf("candidate_used: %s\n", candidate);
        print_text_poly("H", h);
        print_text_poly("F_tilde", ft);
        print_text_poly("G_tilde", gt);
        print_text_poly("A", a);
        print_text_poly("B", b);
        return 0;
    }

    nlohmann::ordered_json doc;
    doc["status"] = "converged";
    doc["d"] = o.d;
    doc["H"] = gpgcd::cli::to_json(h);
    doc["F_tilde"] = gpgcd::cli::to_json(ft);
    doc["G_tilde"] = gpgcd::cli::to_json(gt);
    doc["A"] = gpgcd::cli::to_json(a);
    doc["B"] = gpgcd::cli::to_json(b);
    doc["perturbation"] = gpgcd_result_perturbation(r.get());
    doc["iterations"] = gpgcd_result_iterations(r.get());
    doc["residual_chosen"] = gpgcd_result_residual(r.get());
    doc["candidate_used"] = candidate;
    doc["degenerate_leading"] = gpgcd_result_degenerate_leading(r.get()) != 0;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

struct BenchOptions {
    int m = 10, n = 10, d = 5;
    int trials = 100;
    double noise = 0.1;
    double noise_g = -1.0;  // defaults to `noise`
    double coeff_range = 10.0;
    std::uint64_t seed = 1;
    bool real_only = false;
    int jobs = 1;
    double epsilon = 1e-8;
    int max_iter = 50;
    std::string format = "csv";
};

int cmd_bench(const BenchOptions& o) {
    if (o.trials < 1) return report(kExitInput, "argument", "trials must be at least 1");
    gpgcd_instance_params p;
    gpgcd_instance_params_default(&p);
    p.m = o.m;
    p.n = o.n;
    p.d = o.d;
    p.e_f = o.noise;
    p.e_g = o.noise_g < 0.0 ? o.noise : o.noise_g;
    p.coeff_range = o.coeff_range;
    p.seed = o.seed;
    p.real_only = o.real_only ? 1 : 0;

    gpgcd_config config;
    gpgcd_config_default(&config);
    config.epsilon = o.epsilon;
    config.max_iterations = o.max_iter;

    gpgcd_experiment_record rec;
    gpgcd_status s = gpgcd_run_batch(&p, o.trials, &config, o.jobs, &rec);
    if (s != GPGCD_OK) return report_status(s);

    const gpgcd_format fmt = o.format == "json" ? GPGCD_FORMAT_JSON : GPGCD_FORMAT_CSV;
    std::size_t needed = 0;
    gpgcd_record_format(&rec, fmt, nullptr, 0, &needed);
    std::string buf(needed, '\0');
    s = gpgcd_record_format(&rec, fmt, buf.data(), buf.size(), &needed);
    if (s != GPGCD_OK) return report_status(s);
    std::fputs(buf.c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate GCD of univariate polynomials with complex coefficients"};
    app.set_version_flag("--version", std::string(gpgcd_version()));
    app.require_subcommand(1);

    GcdOptions gcd;
    auto* gcd_cmd = app.add_subcommand("gcd", "Approximate GCD of degree d for two polynomial files");
    gcd_cmd->add_option("f", gcd.f_path, "Polynomial file for F (the one of larger degree)")->required();
    gcd_cmd->add_option("g", gcd.g_path, "Polynomial file for G")->required();
    gcd_cmd->add_option("-d,--d", gcd.d, "Degree of the approximate GCD")->required();
    gcd_cmd->add_option("--epsilon", gcd.epsilon, "Stop threshold on the step 2-norm");
    gcd_cmd->add_option("--max-iter", gcd.max_iter, "Iteration cap");
    gcd_cmd->add_option("--format", gcd.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Randomized benchmark over generated instances");
    bench_cmd->add_option("--m", bench.m, "Degree of F");
    bench_cmd->add_option("--n", bench.n, "Degree of G");
    bench_cmd->add_option("--d", bench.d, "Degree of the planted GCD");
    bench_cmd->add_option("--trials", bench.trials, "Number of random instances");
    bench_cmd->add_option("--noise", bench.noise, "Noise 2-norm for F (and G unless --noise-g)");
    bench_cmd->add_option("--noise-g", bench.noise_g, "Noise 2-norm for G");
    bench_cmd->add_option("--coeff-range", bench.coeff_range, "Coefficients drawn from [-r, r]");
    bench_cmd->add_option("--seed", bench.seed, "Master seed");
    bench_cmd->add_flag("--real-only", bench.real_only, "Draw real coefficients only");
    bench_cmd->add_option("--jobs", bench.jobs, "Worker threads");
    bench_cmd->add_option("--epsilon", bench.epsilon, "Stop threshold on the step 2-norm");
    bench_cmd->add_option("--max-iter", bench.max_iter, "Iteration cap");
    bench_cmd->add_option("--format", bench.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return report(kExitInput, "usage", e.what());
    }

    try {
        if (*gcd_cmd) return cmd_gcd(gcd);
        return cmd_bench(bench);
    } catch (const std::exception& e) {
        return report(kExitOther, "internal", e.what());
    }
}
