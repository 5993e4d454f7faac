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

#pragma once

#include "augkaf/core.hpp"
#include "augkaf/filter.hpp"

#include <cstdint>
#include <vector>

namespace augkaf {

/// |Im z| is clamped to this before evaluating tanh, keeping clear of the
/// poles at i(pi/2 + k pi).
inline constexpr double kTanhImagClamp = 1.4;

/// Fully complex tanh with the imaginary part clamped to +-kTanhImagClamp.
cplx ctanh(cplx z);
/// d/dz ctanh = 1 - ctanh^2, evaluated at the clamped point.
cplx ctanh_derivative(cplx z);

// ---------------------------------------------------------------------------
// CNGD: single neuron y = ctanh(w^H z + b)

struct CngdParams {
    ComplexVec w;
    cplx bias{0.0, 0.0};
};

struct CngdConfig {
    std::size_t length = 5;
    double mu = 0.0005;
    /// Initial weights are uniform in [-init_scale, init_scale]^2.
    double init_scale = 0.1;
};

/// |d - ctanh(w^H z + b)|^2
double cngd_loss(const CngdParams& p, const ComplexVec& z, cplx d);

/// Minus the Wirtinger gradient of cngd_loss with respect to each conjugated
/// parameter; the step is p += mu * direction.
struct CngdDescent {
    cplx error;
    CngdParams direction;
};
CngdDescent cngd_descent(const CngdParams& p, const ComplexVec& z, cplx d);

class Cngd final : public AdaptiveFilter {
public:
    Cngd(const CngdConfig& config, std::uint64_t init_seed);

    cplx predict(const ComplexVec& z) const override;
    cplx update(const ComplexVec& z, cplx d) override;

    const CngdParams& params() const noexcept { return params_; }
    void set_params(CngdParams p);

private:
    CngdConfig config_;
    CngdParams params_;
};

// ---------------------------------------------------------------------------
// MLP: L inputs, one hidden layer, one complex output
//   h_j = ctanh(sum_k W_jk z_k + b_j)
//   y   = ctanh(u^H h + c)        (or u^H h + c with linear_output)

struct MlpParams {
    std::vector<ComplexVec> hidden_weights; // one row of length L per hidden node
    ComplexVec hidden_bias;
    ComplexVec out_weights;
    cplx out_bias{0.0, 0.0};

    std::size_t hidden() const noexcept { return hidden_weights.size(); }
    std::size_t inputs() const noexcept { return hidden_weights.empty() ? 0 : hidden_weights[0].size(); }
    static MlpParams zeros(std::size_t inputs, std::size_t hidden);
};

struct MlpConfig {
    std::size_t length = 5;
    std::size_t hidden = 50;
    double mu = 0.0003;
    double init_scale = 0.1;
    bool linear_output = false;
};

double mlp_loss(const MlpParams& p, const ComplexVec& z, cplx d, bool linear_output = false);

struct MlpDescent {
    cplx error;
    MlpParams direction;
};
MlpDescent mlp_descent(const MlpParams& p, const ComplexVec& z, cplx d, bool linear_output = false);

class Mlp final : public AdaptiveFilter {
public:
    Mlp(const MlpConfig& config, std::uint64_t init_seed);

    cplx predict(const ComplexVec& z) const override;
    cplx update(const ComplexVec& z, cplx d) override;

    const MlpParams& params() const noexcept { return params_; }
    void set_params(MlpParams p);
    const MlpConfig& config() const noexcept { return config_; }

private:
    MlpConfig config_;
    MlpParams params_;
};

} // namespace augkaf
