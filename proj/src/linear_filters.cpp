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

#include "augkaf/linear_filters.hpp"

#include <stdexcept>

namespace augkaf {

LinearFilter::LinearFilter(const LinearFilterConfig& config)
    : config_(config), w_(config.length) {
    if (config.length == 0) throw std::invalid_argument("LinearFilter: length must be positive");
    if (!(config.mu > 0.0)) throw std::invalid_argument("LinearFilter: mu must be positive");
    if (config.epsilon < 0.0) throw std::invalid_argument("LinearFilter: epsilon must be >= 0");
    if (config.widely_linear) v_ = ComplexVec(config.length);
}

void LinearFilter::set_weights(ComplexVec w, std::optional<ComplexVec> v) {
    require_same_length(config_.length, w.size(), "LinearFilter::set_weights(w)");
    if (v.has_value() != config_.widely_linear)
        throw std::invalid_argument("LinearFilter::set_weights: v must be given iff widely linear");
    if (v) require_same_length(config_.length, v->size(), "LinearFilter::set_weights(v)");
    w_ = std::move(w);
    v_ = std::move(v);
}

cplx LinearFilter::predict(const ComplexVec& z) const {
    require_same_length(config_.length, z.size(), "LinearFilter::predict");
    cplx y = hermitian_dot(z, w_);
    if (v_) y += hermitian_dot(z.conj(), *v_);
    return y;
}

double LinearFilter::effective_step(const ComplexVec& z) const {
    if (!config_.normalized) return config_.mu;
    const double energy = (config_.widely_linear ? 2.0 : 1.0) * z.squared_norm();
    const double denom = config_.epsilon + energy;
    // zero regressor with epsilon = 0: nothing to learn from
    return denom > 0.0 ? config_.mu / denom : 0.0;
}

cplx LinearFilter::update(const ComplexVec& z, cplx d) {
    const cplx e = d - predict(z);
    const cplx g = effective_step(z) * std::conj(e);
    w_.axpy(g, z);
    if (v_ && !v_frozen_) v_->axpy(g, z.conj());
    return e;
}

LinearDescent linear_descent_direction(const ComplexVec& w, const ComplexVec& v,
                                       const ComplexVec& z, cplx d) {
    require_same_length(w.size(), z.size(), "linear_descent_direction(w)");
    require_same_length(v.size(), z.size(), "linear_descent_direction(v)");
    const ComplexVec zc = z.conj();
    const cplx e = d - hermitian_dot(z, w) - hermitian_dot(zc, v);
    return {e, std::conj(e) * z, std::conj(e) * zc};
}

cplx apply_real_operator(const RealOperatorBlocks& b, const ComplexVec& z) {
    const std::size_t n = z.size();
    require_same_length(n, b.u11.size(), "apply_real_operator(u11)");
    require_same_length(n, b.u12.size(), "apply_real_operator(u12)");
    require_same_length(n, b.u21.size(), "apply_real_operator(u21)");
    require_same_length(n, b.u22.size(), "apply_real_operator(u22)");
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = z[k].real(), y = z[k].imag();
        re += b.u11[k] * x + b.u12[k] * y;
        im += b.u21[k] * x + b.u22[k] * y;
    }
    return {re, im};
}

WidelyLinearPair decompose_operator(const RealOperatorBlocks& b) {
    const std::size_t n = b.u11.size();
    require_same_length(n, b.u12.size(), "decompose_operator(u12)");
    require_same_length(n, b.u21.size(), "decompose_operator(u21)");
    require_same_length(n, b.u22.size(), "decompose_operator(u22)");
    WidelyLinearPair out{ComplexVec(n), ComplexVec(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const double w1 = (b.u11[k] + b.u22[k]) / 2.0;
        const double w2 = (b.u12[k] - b.u21[k]) / 2.0;
        const double v1 = (b.u11[k] - b.u22[k]) / 2.0;
        const double v2 = -(b.u21[k] + b.u12[k]) / 2.0;
        out.w[k] = {w1, w2};
        out.v[k] = {v1, v2};
    }
    return out;
}

} // namespace augkaf
