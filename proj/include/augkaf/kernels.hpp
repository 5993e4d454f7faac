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

#include <span>
#include <variant>

namespace augkaf {

/// exp(-|x - y|^2 / sigma^2). Note: no factor 2 in the denominator.
struct GaussianRbf {
    double sigma = 1.0;
};

/// (1 + x^T y)^degree
struct Polynomial {
    int degree = 2;
};

/// Real positive-definite kernel on R^d.
class RealKernel {
public:
    using Variant = std::variant<GaussianRbf, Polynomial>;

    RealKernel(GaussianRbf k); // NOLINT(google-explicit-constructor)
    RealKernel(Polynomial k);  // NOLINT(google-explicit-constructor)

    double operator()(std::span<const double> x, std::span<const double> y) const;
    const Variant& variant() const noexcept { return kernel_; }

private:
    Variant kernel_;
};

/// Complex Gaussian kernel exp(-sum_k (z_k - conj(w_k))^2 / sigma^2), using
/// the complex square and the complex exponential. Unlike the real RBF,
/// kappa(z, z) is generally not 1.
class ComplexKernel {
public:
    explicit ComplexKernel(double sigma);

    double sigma() const noexcept { return sigma_; }
    cplx operator()(const ComplexVec& z, const ComplexVec& w) const;

private:
    double sigma_;
};

double real_gaussian(std::span<const double> x, std::span<const double> y, double sigma);
double polynomial(std::span<const double> x, std::span<const double> y, int degree);
cplx complex_gaussian(const ComplexVec& z, const ComplexVec& w, double sigma);

/// Real kernel evaluated on the stacked (Re z || Im z) and (Re c || Im c).
double complexified_eval(const RealKernel& kernel, const ComplexVec& z, const ComplexVec& c);

} // namespace augkaf
