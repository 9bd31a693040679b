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

#include "gpgcd/gpgcd.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "gpgcd/errors.hpp"
#include "gpgcd/harness.hpp"
#include "gpgcd/recovery.hpp"

struct gpgcd_poly {
    gpgcd::Polynomial value;
};

struct gpgcd_result {
    gpgcd::ApproxGcdResult value;
    gpgcd_poly h, f_tilde, g_tilde, a, b;
};

namespace {

std::string& last_error() {
    thread_local std::string message;
    return message;
}

gpgcd_status fail(gpgcd_status s, const std::string& what) {
    last_error() = what;
    return s;
}

template <class Body>
gpgcd_status guarded(Body&& body) noexcept {
    last_error().clear();
    try {
        return body();
    } catch (const gpgcd::NonConvergenceError& e) {
        return fail(GPGCD_ERR_NO_CONVERGENCE, e.what());
    } catch (const gpgcd::RankDeficiencyError& e) {
        return fail(GPGCD_ERR_RANK_DEFICIENT, e.what());
    } catch (const gpgcd::NumericError& e) {
        return fail(GPGCD_ERR_NUMERIC, e.what());
    } catch (const gpgcd::RecoveryError& e) {
        return fail(GPGCD_ERR_RECOVERY, e.what());
    } catch (const gpgcd::ArgumentError& e) {
        return fail(GPGCD_ERR_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(GPGCD_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(GPGCD_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(GPGCD_ERR_INTERNAL, "unknown error");
    }
}

gpgcd::OptimizerConfig to_config(const gpgcd_config* c) {
    gpgcd::OptimizerConfig out;
    if (c) {
        out.epsilon = c->epsilon;
        out.max_iterations = c->max_iterations;
        out.rank_tolerance = c->rank_tolerance;
    }
    out.validate();
    return out;
}

gpgcd::InstanceParams to_params(const gpgcd_instance_params* p) {
    if (!p) throw gpgcd::ArgumentError("null instance parameters");
    if (p->m < 0 || p->n < 0 || p->d < 0)
        throw gpgcd::ArgumentError("degree constraint violated: degrees must be non-negative");
    gpgcd::InstanceParams out;
    out.m = static_cast<std::size_t>(p->m);
    out.n = static_cast<std::size_t>(p->n);
    out.d = static_cast<std::size_t>(p->d);
    out.e_f = p->e_f;
    out.e_g = p->e_g;
    out.coeff_range = p->coeff_range;
    out.seed = p->seed;
    out.real_only = p->real_only != 0;
    out.validate();
    return out;
}

gpgcd_poly* new_poly(gpgcd::Polynomial p) { return new gpgcd_poly{std::move(p)}; }

}  // namespace

extern "C" {

const char* gpgcd_version(void) { return "1.0.0"; }

const char* gpgcd_last_error(void) { return last_error().c_str(); }

const char* gpgcd_status_name(gpgcd_status status) {
    switch (status) {
        case GPGCD_OK: return "ok";
        case GPGCD_ERR_ARGUMENT: return "argument";
        case GPGCD_ERR_NUMERIC: return "numeric";
        case GPGCD_ERR_RANK_DEFICIENT: return "rank_deficient";
        case GPGCD_ERR_NO_CONVERGENCE: return "no_convergence";
        case GPGCD_ERR_RECOVERY: return "recovery";
        case GPGCD_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
        case GPGCD_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

gpgcd_status gpgcd_poly_create(const double* re, const double* im, size_t degree,
                               gpgcd_poly** out) {
    return guarded([&] {
        if (!re || !out) throw gpgcd::ArgumentError("null pointer");
        *out = nullptr;
        std::vector<gpgcd::Complex> c(degree + 1);
        for (size_t j = 0; j <= degree; ++j) c[j] = {re[j], im ? im[j] : 0.0};
        *out = new_poly(gpgcd::Polynomial(std::move(c)));
        return GPGCD_OK;
    });
}

void gpgcd_poly_destroy(gpgcd_poly* p) { delete p; }

size_t gpgcd_poly_degree(const gpgcd_poly* p) { return p ? p->value.degree() : 0; }

gpgcd_status gpgcd_poly_coeffs(const gpgcd_poly* p, double* re, double* im, size_t capacity) {
    return guarded([&] {
        if (!p || !re || !im) throw gpgcd::ArgumentError("null pointer");
        if (capacity < p->value.size())
            return fail(GPGCD_ERR_BUFFER_TOO_SMALL, "coefficient buffer too small");
        for (size_t j = 0; j < p->value.size(); ++j) {
            re[j] = p->value.coeff(j).real();
            im[j] = p->value.coeff(j).imag();
        }
        return GPGCD_OK;
    });
}

double gpgcd_poly_norm2_sq(const gpgcd_poly* p) {
    return p ? gpgcd::norm2_sq(p->value) : std::numeric_limits<double>::quiet_NaN();
}

void gpgcd_config_default(gpgcd_config* config) {
    if (!config) return;
    const gpgcd::OptimizerConfig d;
    config->epsilon = d.epsilon;
    config->max_iterations = d.max_iterations;
    config->rank_tolerance = d.rank_tolerance;
}

gpgcd_status gpgcd_solve(const gpgcd_poly* f, const gpgcd_poly* g, int d,
                         const gpgcd_config* config, gpgcd_result** out) {
    return guarded([&] {
        if (!f || !g || !out) throw gpgcd::ArgumentError("null pointer");
        *out = nullptr;
        if (d <= 0) throw gpgcd::ArgumentError("degree constraint violated: need d > 0");
        const gpgcd::ProblemSpec spec(f->value, g->value, static_cast<std::size_t>(d));
        gpgcd::ApproxGcdResult r = gpgcd::approximate_gcd(spec, to_config(config));
        auto* res = new gpgcd_result{r, {r.h}, {r.f_tilde}, {r.g_tilde}, {r.a}, {r.b}};
        *out = res;
        return GPGCD_OK;
    });
}

void gpgcd_result_destroy(gpgcd_result* r) { delete r; }

const gpgcd_poly* gpgcd_result_gcd(const gpgcd_result* r) { return r ? &r->h : nullptr; }
const gpgcd_poly* gpgcd_result_f_tilde(const gpgcd_result* r) { return r ? &r->f_tilde : nullptr; }
const gpgcd_poly* gpgcd_result_g_tilde(const gpgcd_result* r) { return r ? &r->g_tilde : nullptr; }
const gpgcd_poly* gpgcd_result_cofactor_a(const gpgcd_result* r) { return r ? &r->a : nullptr; }
const gpgcd_poly* gpgcd_result_cofactor_b(const gpgcd_result* r) { return r ? &r->b : nullptr; }

double gpgcd_result_perturbation(const gpgcd_result* r) {
    return r ? r->value.perturbation : std::numeric_limits<double>::quiet_NaN();
}
int gpgcd_result_iterations(const gpgcd_result* r) { return r ? r->value.iterations : -1; }
double gpgcd_result_residual(const gpgcd_result* r) {
    return r ? r->value.residual_chosen : std::numeric_limits<double>::quiet_NaN();
}
gpgcd_candidate gpgcd_result_candidate(const gpgcd_result* r) {
    return r && r->value.candidate_used == gpgcd::Candidate::FromB ? GPGCD_CANDIDATE_FROM_B
                                                                   : GPGCD_CANDIDATE_FROM_A;
}
int gpgcd_result_degenerate_leading(const gpgcd_result* r) {
    return r && r->value.degenerate_leading ? 1 : 0;
}

void gpgcd_instance_params_default(gpgcd_instance_params* p) {
    if (!p) return;
    const gpgcd::InstanceParams d;
    p->m = static_cast<int>(d.m);
    p->n = static_cast<int>(d.n);
    p->d = static_cast<int>(d.d);
    p->e_f = d.e_f;
    p->e_g = d.e_g;
    p->coeff_range = d.coeff_range;
    p->seed = d.seed;
    p->real_only = d.real_only ? 1 : 0;
}

gpgcd_status gpgcd_generate_instance(const gpgcd_instance_params* p, gpgcd_poly** f,
                                     gpgcd_poly** g) {
    return guarded([&] {
        if (!f || !g) throw gpgcd::ArgumentError("null pointer");
        *f = nullptr;
        *g = nullptr;
        gpgcd::Instance inst = gpgcd::generate_instance(to_params(p));
        *f = new_poly(std::move(inst.f));
        *g = new_poly(std::move(inst.g));
        return GPGCD_OK;
    });
}

gpgcd_status gpgcd_run_batch(const gpgcd_instance_params* p, int trials,
                             const gpgcd_config* config, int workers,
                             gpgcd_experiment_record* out) {
    return guarded([&] {
        if (!out) throw gpgcd::ArgumentError("null pointer");
        const gpgcd::ExperimentRecord r =
            gpgcd::run_batch(to_params(p), trials, to_config(config), workers);
        out->params = *p;
        out->trials = r.trials;
        out->mean_error = r.mean_error;
        out->mean_iterations = r.mean_iterations;
        out->mean_time_s = r.mean_time_seconds;
        out->convergence_rate = r.convergence_rate;
        return GPGCD_OK;
    });
}

gpgcd_status gpgcd_record_format(const gpgcd_experiment_record* r, gpgcd_format fmt, char* buf,
                                 size_t capacity, size_t* needed) {
    return guarded([&] {
        if (!r) throw gpgcd::ArgumentError("null record");
        gpgcd::ExperimentRecord rec;
        rec.params = to_params(&r->params);
        rec.trials = r->trials;
        rec.mean_error = r->mean_error;
        rec.mean_iterations = r->mean_iterations;
        rec.mean_time_seconds = r->mean_time_s;
        rec.convergence_rate = r->convergence_rate;
        std::string text;
        if (fmt == GPGCD_FORMAT_CSV)
            text = gpgcd::csv_header() + "\n" + gpgcd::to_csv_row(rec) + "\n";
        else if (fmt == GPGCD_FORMAT_JSON)
            text = gpgcd::to_json(rec) + "\n";
        else
            throw gpgcd::ArgumentError("unknown format");
        if (needed) *needed = text.size() + 1;
        if (!buf || capacity < text.size() + 1)
            return fail(GPGCD_ERR_BUFFER_TOO_SMALL, "output buffer too small");
        std::memcpy(buf, text.c_str(), text.size() + 1);
        return GPGCD_OK;
    });
}

}  // extern "C"
