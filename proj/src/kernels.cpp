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

#include "augkaf/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace augkaf {

namespace {

void require_positive_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("kernel width sigma must be positive and finite");
}

} // namespace

RealKernel::RealKernel(GaussianRbf k) : kernel_(k) { require_positive_sigma(k.sigma); }

RealKernel::RealKernel(Polynomial k) : kernel_(k) {
    if (k.degree < 1) throw std::invalid_argument("polynomial kernel degree must be >= 1");
}

double RealKernel::operator()(std::span<const double> x, std::span<const double> y) const {
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, GaussianRbf>)
                return real_gaussian(x, y, k.sigma);
            else
                return polynomial(x, y, k.degree);
        },
        kernel_);
}

ComplexKernel::ComplexKernel(double sigma) : sigma_(sigma) { require_positive_sigma(sigma); }

cplx ComplexKernel::operator()(const ComplexVec& z, const ComplexVec& w) const {
    return complex_gaussian(z, w, sigma_);
}

double real_gaussian(std::span<const double> x, std::span<const double> y, double sigma) {
    require_same_length(x.size(), y.size(), "real_gaussian");
    require_positive_sigma(sigma);
    double dist = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double d = x[k] - y[k];
        dist += d * d;
    }
    return std::exp(-dist / (sigma * sigma));
}

double polynomial(std::span<const double> x, std::span<const double> y, int degree) {
    require_same_length(x.size(), y.size(), "polynomial");
    double dot = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) dot += x[k] * y[k];
    return std::pow(1.0 + dot, degree);
}

cplx complex_gaussian(const ComplexVec& z, const ComplexVec& w, double sigma) {
    require_same_length(z.size(), w.size(), "complex_gaussian");
    require_positive_sigma(sigma);
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < z.size(); ++k) {
        const cplx d = z[k] - std::conj(w[k]);
        acc += d * d;
    }
    return std::exp(-acc / (sigma * sigma));
}

double complexified_eval(const RealKernel& kernel, const ComplexVec& z, const ComplexVec& c) {
    require_same_length(z.size(), c.size(), "complexified_eval");
    const auto zs = z.stacked_real();
    const auto cs = c.stacked_real();
    return kernel(zs, cs);
}

} // namespace augkaf
