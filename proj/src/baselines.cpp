// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "augkaf/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace augkaf {

namespace {

cplx clamp_imag(cplx z) {
    return {z.real(), std::clamp(z.imag(), -kTanhImagClamp, kTanhImagClamp)};
}

cplx uniform_complex(SeededRng& rng, double scale) {
    const double re = (2.0 * rng.uniform() - 1.0) * scale;
    const double im = (2.0 * rng.uniform() - 1.0) * scale;
    return {re, im};
}

void require_positive_step(double mu, const char* who) {
    if (!(mu > 0.0)) throw std::invalid_argument(std::string(who) + ": mu must be positive");
}

} // namespace

cplx ctanh(cplx z) { return std::tanh(clamp_imag(z)); }

cplx ctanh_derivative(cplx z) {
    const cplx t = ctanh(z);
    return 1.0 - t * t;
}

// ---------------------------------------------------------------------------

double cngd_loss(const CngdParams& p, const ComplexVec& z, cplx d) {
    return std::norm(d - ctanh(hermitian_dot(z, p.w) + p.bias));
}

CngdDescent cngd_descent(const CngdParams& p, const ComplexVec& z, cplx d) {
    const cplx s = hermitian_dot(z, p.w) + p.bias;
    const cplx e = d - ctanh(s);
    const cplx g = ctanh_derivative(s);
    // s depends on w^* and b holomorphically, so only one Wirtinger term survives
    CngdDescent out{e, {std::conj(e) * g * z, e * std::conj(g)}};
    return out;
}

Cngd::Cngd(const CngdConfig& config, std::uint64_t init_seed) : config_(config) {
    if (config.length == 0) throw std::invalid_argument("Cngd: length must be positive");
    require_positive_step(config.mu, "Cngd");
    SeededRng rng(init_seed);
    params_.w = ComplexVec(config.length);
    for (std::size_t k = 0; k < config.length; ++k) params_.w[k] = uniform_complex(rng, config.init_scale);
    params_.bias = uniform_complex(rng, config.init_scale);
}

void Cngd::set_params(CngdParams p) {
    require_same_length(config_.length, p.w.size(), "Cngd::set_params");
    params_ = std::move(p);
}

cplx Cngd::predict(const ComplexVec& z) const {
    require_same_length(config_.length, z.size(), "Cngd::predict");
    return ctanh(hermitian_dot(z, params_.w) + params_.bias);
}

cplx Cngd::update(const ComplexVec& z, cplx d) {
    require_same_length(config_.length, z.size(), "Cngd::update");
    const auto step = cngd_descent(params_, z, d);
    params_.w.axpy(config_.mu, step.direction.w);
    params_.bias += config_.mu * step.direction.bias;
    return step.error;
}

// ---------------------------------------------------------------------------

MlpParams MlpParams::zeros(std::size_t inputs, std::size_t hidden) {
    MlpParams p;
    p.hidden_weights.assign(hidden, ComplexVec(inputs));
    p.hidden_bias = ComplexVec(hidden);
    p.out_weights = ComplexVec(hidden);
    return p;
}

namespace {

struct MlpForward {
    std::vector<cplx> pre;    // hidden pre-activations
    std::vector<cplx> act;    // hidden activations
    cplx out_pre;
    cplx out;
};

MlpForward mlp_forward(const MlpParams& p, const ComplexVec& z, bool linear_output) {
    require_same_length(p.inputs(), z.size(), "mlp forward");
    MlpForward f;
    const std::size_t h = p.hidden();
    f.pre.resize(h);
    f.act.resize(h);
    cplx acc = p.out_bias;
    for (std::size_t j = 0; j < h; ++j) {
        const auto& row = p.hidden_weights[j];
        cplx s = p.hidden_bias[j];
        for (std::size_t k = 0; k < z.size(); ++k) s += row[k] * z[k];
        f.pre[j] = s;
        f.act[j] = ctanh(s);
        acc += std::conj(p.out_weights[j]) * f.act[j];
    }
    f.out_pre = acc;
    f.out = linear_output ? acc : ctanh(acc);
    return f;
}

} // namespace

double mlp_loss(const MlpParams& p, const ComplexVec& z, cplx d, bool linear_output) {
    return std::norm(d - mlp_forward(p, z, linear_output).out);
}

MlpDescent mlp_descent(const MlpParams& p, const ComplexVec& z, cplx d, bool linear_output) {
    const auto f = mlp_forward(p, z, linear_output);
    const cplx e = d - f.out;
    const cplx g_out = linear_output ? cplx{1.0, 0.0} : ctanh_derivative(f.out_pre);

    MlpDescent out{e, MlpParams::zeros(p.inputs(), p.hidden())};
    auto& dir = out.direction;
    // The output is holomorphic in u^*, c and in every hidden parameter.
    dir.out_bias = e * std::conj(g_out);
    const ComplexVec zc = z.conj();
    for (std::size_t j = 0; j < p.hidden(); ++j) {
        dir.out_weights[j] = std::conj(e) * g_out * f.act[j];
        const cplx delta = e * std::conj(g_out) * p.out_weights[j] * std::conj(ctanh_derivative(f.pre[j]));
        dir.hidden_bias[j] = delta;
        dir.hidden_weights[j] = delta * zc;
    }
    return out;
}

Mlp::Mlp(const MlpConfig& config, std::uint64_t init_seed) : config_(config) {
    if (config.length == 0 || config.hidden == 0)
        throw std::invalid_argument("Mlp: input and hidden sizes must be positive");
    require_positive_step(config.mu, "Mlp");
    SeededRng rng(init_seed);
    params_ = MlpParams::zeros(config.length, config.hidden);
    for (auto& row : params_.hidden_weights)
        for (std::size_t k = 0; k < row.size(); ++k) row[k] = uniform_complex(rng, config.init_scale);
    for (std::size_t j = 0; j < config.hidden; ++j) {
        params_.hidden_bias[j] = uniform_complex(rng, config.init_scale);
        params_.out_weights[j] = uniform_complex(rng, config.init_scale);
    }
    params_.out_bias = uniform_complex(rng, config.init_scale);
}

void Mlp::set_params(MlpParams p) {
    if (p.hidden() != config_.hidden || p.inputs() != config_.length || p.hidden_bias.size() != config_.hidden ||
        p.out_weights.size() != config_.hidden)
        throw DimensionError("Mlp::set_params", config_.hidden, p.hidden());
    params_ = std::move(p);
}

cplx Mlp::predict(const ComplexVec& z) const {
    return mlp_forward(params_, z, config_.linear_output).out;
}

cplx Mlp::update(const ComplexVec& z, cplx d) {
    const auto step = mlp_descent(params_, z, d, config_.linear_output);
    const auto& dir = step.direction;
    for (std::size_t j = 0; j < config_.hidden; ++j) {
        params_.hidden_weights[j].axpy(config_.mu, dir.hidden_weights[j]);
        params_.hidden_bias[j] += config_.mu * dir.hidden_bias[j];
        params_.out_weights[j] += config_.mu * dir.out_weights[j];
    }
    params_.out_bias += config_.mu * dir.out_bias;
    return step.error;
}

} // namespace augkaf
