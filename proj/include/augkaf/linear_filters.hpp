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

#include <optional>

namespace augkaf {

struct LinearFilterConfig {
    std::size_t length = 5;
    double mu = 1.0 / 16.0;
    double epsilon = 1e-8;
    /// Adds the conjugate branch v^H z^*.
    bool widely_linear = false;
    bool normalized = true;
};

/// NCLMS (w only) and NACLMS (w and v). Weights start at zero.
///
/// prediction  = w^H z  [+ v^H z^*]
/// w          += mu_eff e^* z
/// v          += mu_eff e^* z^*
/// with mu_eff = mu / (eps + |z|^2) for the C-linear filter and
/// mu / (eps + 2|z|^2) for the widely-linear one, whose augmented regressor
/// (z, z^*) carries twice the energy.
class LinearFilter final : public AdaptiveFilter {
public:
    explicit LinearFilter(const LinearFilterConfig& config);

    cplx predict(const ComplexVec& z) const override;
    cplx update(const ComplexVec& z, cplx d) override;

    /// Step applied for regressor z.
    double effective_step(const ComplexVec& z) const;

    const LinearFilterConfig& config() const noexcept { return config_; }
    const ComplexVec& w() const noexcept { return w_; }
    const std::optional<ComplexVec>& v() const noexcept { return v_; }

    void set_weights(ComplexVec w, std::optional<ComplexVec> v = std::nullopt);
    /// Keeps v fixed during updates (degenerate-configuration testing).
    void freeze_conjugate_branch(bool frozen) noexcept { v_frozen_ = frozen; }

private:
    LinearFilterConfig config_;
    ComplexVec w_;
    std::optional<ComplexVec> v_;
    bool v_frozen_ = false;
};

/// Negative Wirtinger gradients -dL/dw^* and -dL/dv^* of
/// L = |d - w^H z - v^H z^*|^2, i.e. e^* z and e^* z^*.
struct LinearDescent {
    cplx error;
    ComplexVec w_direction;
    ComplexVec v_direction;
};
LinearDescent linear_descent_direction(const ComplexVec& w, const ComplexVec& v,
                                       const ComplexVec& z, cplx d);

/// Four real blocks of the dual-real-channel operator
///   [dr]   [u11^T u12^T] [x]
///   [di] = [u21^T u22^T] [y]
struct RealOperatorBlocks {
    std::vector<double> u11, u12, u21, u22;
};

/// Applies the real operator to z = x + iy and returns dr + i di.
cplx apply_real_operator(const RealOperatorBlocks& blocks, const ComplexVec& z);

/// Widely-linear pair (w, v) with <z, w> + <z^*, v> equal to the real operator.
struct WidelyLinearPair {
    ComplexVec w;
    ComplexVec v;
};
WidelyLinearPair decompose_operator(const RealOperatorBlocks& blocks);

} // namespace augkaf
