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
#include "augkaf/kernels.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace augkaf {

/// How the kernel expansion turns centers into an output.
enum class KernelMode {
    /// NCKLMS1: real kernel on (Re z || Im z), output 2 * sum a_k kR(c_k, z).
    ComplexifiedLinear,
    /// NCKLMS2: output sum a_k kC(z, c_k), holomorphic in the query z.
    PureComplexLinear,
    /// NACKLMS: output sum a_k (kC(c_k, z) + kC(c_k, z)^*).
    PureComplexAugmented,
    /// Augmented filter under complexification, output 4 * sum a_k kR(c_k, z).
    /// Collapses onto ComplexifiedLinear with twice the step.
    ComplexifiedAugmented,
};

std::string_view to_string(KernelMode mode) noexcept;
bool uses_real_kernel(KernelMode mode) noexcept;

struct KernelFilterConfig {
    std::variant<RealKernel, ComplexKernel> kernel = ComplexKernel(10.0);
    KernelMode mode = KernelMode::PureComplexAugmented;
    double mu = 1.0 / 8.0;
    double epsilon = 1e-8;
    /// Novelty thresholds: input-space distance and error magnitude.
    double delta1 = 0.1;
    double delta2 = 0.2;
    bool normalized = true;
    std::optional<std::size_t> capacity;

    /// Throws std::invalid_argument on a bad combination.
    void validate() const;
};

/// Centers and their expansion coefficients. Coefficients hold mu_eff * e(k)
/// and are fixed once admitted.
class Dictionary {
public:
    explicit Dictionary(std::optional<std::size_t> capacity = std::nullopt) : capacity_(capacity) {}

    std::size_t size() const noexcept { return centers_.size(); }
    bool empty() const noexcept { return centers_.empty(); }
    bool full() const noexcept { return capacity_ && size() >= *capacity_; }

    const std::vector<ComplexVec>& centers() const noexcept { return centers_; }
    const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
    std::vector<cplx>& coeffs() noexcept { return coeffs_; }

    void append(ComplexVec center, cplx coeff);
    /// Euclidean distance in R^{2L} to the closest center; +inf when empty.
    double min_distance(const ComplexVec& z) const;

private:
    std::vector<ComplexVec> centers_;
    std::vector<cplx> coeffs_;
    std::optional<std::size_t> capacity_;
};

/// Admit iff the nearest center is farther than delta1 and |e| > delta2.
bool novelty_check(const Dictionary& dict, const ComplexVec& z, cplx e, double delta1,
                   double delta2);

struct KernelUpdate {
    cplx error;
    bool admitted;
};

/// Kernel LMS family with novelty sparsification.
///
/// Normalization (when enabled) divides mu by eps plus the feature-space
/// self-similarity of the new sample:
///   PureComplexLinear     |kC(z, z)|
///   PureComplexAugmented  |kC(z, z) + kC(z, z)^*|
///   Complexified*         kR(z, z)
/// Both complexified modes share the same normalizer so that the augmented
/// one stays an exact rescaling of the linear one.
class KernelLms final : public AdaptiveFilter {
public:
    explicit KernelLms(KernelFilterConfig config);

    cplx predict(const ComplexVec& z) const override;
    cplx update(const ComplexVec& z, cplx d) override { return step(z, d).error; }
    KernelUpdate step(const ComplexVec& z, cplx d);
    std::size_t dictionary_size() const override { return dict_.size(); }

    /// Multiplier of coefficient a_k in the output for center c and input z.
    cplx basis(const ComplexVec& center, const ComplexVec& z) const;
    double effective_step(const ComplexVec& z) const;

    /// e * conj(basis(c_k, z)) for every center: minus the Wirtinger gradient
    /// of |d - predict(z)|^2 with respect to a_k^*.
    std::vector<cplx> coefficient_descent_direction(const ComplexVec& z, cplx d) const;

    const KernelFilterConfig& config() const noexcept { return config_; }
    const Dictionary& dictionary() const noexcept { return dict_; }
    Dictionary& dictionary() noexcept { return dict_; }

private:
    double real_kernel(const ComplexVec& a, const ComplexVec& b) const;
    cplx complex_kernel(const ComplexVec& a, const ComplexVec& b) const;

    KernelFilterConfig config_;
    Dictionary dict_;
};

} // namespace augkaf
