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

#include "augkaf/kernel_filters.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace augkaf {

std::string_view to_string(KernelMode mode) noexcept {
    switch (mode) {
    case KernelMode::ComplexifiedLinear: return "complexified-linear";
    case KernelMode::PureComplexLinear: return "pure-complex-linear";
    case KernelMode::PureComplexAugmented: return "pure-complex-augmented";
    case KernelMode::ComplexifiedAugmented: return "complexified-augmented";
    }
    return "unknown";
}

bool uses_real_kernel(KernelMode mode) noexcept {
    return mode == KernelMode::ComplexifiedLinear || mode == KernelMode::ComplexifiedAugmented;
}

void KernelFilterConfig::validate() const {
    const bool real = std::holds_alternative<RealKernel>(kernel);
    if (uses_real_kernel(mode) && !real)
        throw std::invalid_argument(std::string("kernel mode ") + std::string(to_string(mode)) +
                                    " requires a real kernel");
    if (!uses_real_kernel(mode) && real)
        throw std::invalid_argument(std::string("kernel mode ") + std::string(to_string(mode)) +
                                    " requires a complex kernel");
    if (!(mu > 0.0)) throw std::invalid_argument("kernel filter: mu must be positive");
    if (epsilon < 0.0) throw std::invalid_argument("kernel filter: epsilon must be >= 0");
    if (!(delta1 >= 0.0) || !(delta2 >= 0.0))
        throw std::invalid_argument("kernel filter: novelty thresholds must be >= 0");
    if (capacity && *capacity == 0)
        throw std::invalid_argument("kernel filter: capacity must be positive when set");
}

void Dictionary::append(ComplexVec center, cplx coeff) {
    if (!centers_.empty()) require_same_length(centers_.front().size(), center.size(), "Dictionary::append");
    centers_.push_back(std::move(center));
    coeffs_.push_back(coeff);
}

double Dictionary::min_distance(const ComplexVec& z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : centers_) {
        require_same_length(c.size(), z.size(), "Dictionary::min_distance");
        double d2 = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) d2 += std::norm(z[k] - c[k]);
        best = std::min(best, d2);
    }
    return std::sqrt(best);
}

bool novelty_check(const Dictionary& dict, const ComplexVec& z, cplx e, double delta1,
                   double delta2) {
    if (!(std::abs(e) > delta2)) return false;
    return dict.min_distance(z) > delta1;
}

KernelLms::KernelLms(KernelFilterConfig config)
    : config_(std::move(config)), dict_(config_.capacity) {
    config_.validate();
}

double KernelLms::real_kernel(const ComplexVec& a, const ComplexVec& b) const {
    return complexified_eval(std::get<RealKernel>(config_.kernel), a, b);
}

cplx KernelLms::complex_kernel(const ComplexVec& a, const ComplexVec& b) const {
    return std::get<ComplexKernel>(config_.kernel)(a, b);
}

cplx KernelLms::basis(const ComplexVec& center, const ComplexVec& z) const {
    switch (config_.mode) {
    case KernelMode::PureComplexLinear: return complex_kernel(z, center);
    case KernelMode::PureComplexAugmented: {
        const cplx k = complex_kernel(center, z);
        return k + std::conj(k);
    }
    case KernelMode::ComplexifiedLinear: return 2.0 * real_kernel(center, z);
    case KernelMode::ComplexifiedAugmented: return 4.0 * real_kernel(center, z);
    }
    return {};
}

cplx KernelLms::predict(const ComplexVec& z) const {
    cplx acc{0.0, 0.0};
    const auto& centers = dict_.centers();
    const auto& coeffs = dict_.coeffs();
    for (std::size_t k = 0; k < centers.size(); ++k) acc += coeffs[k] * basis(centers[k], z);
    return acc;
}

double KernelLms::effective_step(const ComplexVec& z) const {
    if (!config_.normalized) return config_.mu;
    double energy = 0.0;
    switch (config_.mode) {
    case KernelMode::PureComplexLinear: energy = std::abs(complex_kernel(z, z)); break;
    case KernelMode::PureComplexAugmented: {
        const cplx k = complex_kernel(z, z);
        energy = std::abs(k + std::conj(k));
        break;
    }
    case KernelMode::ComplexifiedLinear:
    case KernelMode::ComplexifiedAugmented: energy = std::abs(real_kernel(z, z)); break;
    }
    const double denom = config_.epsilon + energy;
    return denom > 0.0 ? config_.mu / denom : 0.0;
}

KernelUpdate KernelLms::step(const ComplexVec& z, cplx d) {
    if (!dict_.empty()) require_same_length(dict_.centers().front().size(), z.size(), "KernelLms::step");
    const cplx e = d - predict(z);
    if (dict_.full() || !novelty_check(dict_, z, e, config_.delta1, config_.delta2))
        return {e, false};
    dict_.append(z, effective_step(z) * e);
    return {e, true};
}

std::vector<cplx> KernelLms::coefficient_descent_direction(const ComplexVec& z, cplx d) const {
    const cplx e = d - predict(z);
    std::vector<cplx> out;
    out.reserve(dict_.size());
    for (const auto& c : dict_.centers()) out.push_back(e * std::conj(basis(c, z)));
    return out;
}

} // namespace augkaf
