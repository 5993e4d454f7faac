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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace augkaf {

using cplx = std::complex<double>;

/// Raised whenever two operands that must agree in length do not.
class DimensionError : public std::invalid_argument {
public:
    DimensionError(const std::string& what, std::size_t expected, std::size_t got);
};

/// Fixed-length complex vector. The length is set at construction and every
/// binary operation checks it.
class ComplexVec {
public:
    ComplexVec() = default;
    explicit ComplexVec(std::size_t n) : data_(n) {}
    ComplexVec(std::initializer_list<cplx> values) : data_(values) {}
    explicit ComplexVec(std::vector<cplx> values) : data_(std::move(values)) {}

    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    cplx& operator[](std::size_t i) noexcept { return data_[i]; }
    const cplx& operator[](std::size_t i) const noexcept { return data_[i]; }

    std::span<const cplx> view() const noexcept { return data_; }
    std::span<cplx> view() noexcept { return data_; }
    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    ComplexVec conj() const;
    /// Sum of squared magnitudes.
    double squared_norm() const noexcept;
    /// Real parts followed by imaginary parts, length 2n.
    std::vector<double> stacked_real() const;

    /// this += alpha * other
    void axpy(cplx alpha, const ComplexVec& other);

    ComplexVec& operator+=(const ComplexVec& other);
    ComplexVec& operator-=(const ComplexVec& other);
    ComplexVec& operator*=(cplx alpha) noexcept;

    friend bool operator==(const ComplexVec&, const ComplexVec&) = default;

private:
    std::vector<cplx> data_;
};

ComplexVec operator+(ComplexVec a, const ComplexVec& b);
ComplexVec operator-(ComplexVec a, const ComplexVec& b);
ComplexVec operator*(cplx alpha, ComplexVec v);

void require_same_length(std::size_t a, std::size_t b, const char* where);

/// <a, b> = sum_k conj(b_k) a_k. Linear in the first argument.
cplx hermitian_dot(const ComplexVec& a, const ComplexVec& b);

/// Sliding window over the most recent L samples, newest first.
/// Slots that have not been written yet hold zero.
class RegressorWindow {
public:
    explicit RegressorWindow(std::size_t length);

    void push(cplx sample);
    std::size_t length() const noexcept { return buffer_.size(); }
    /// Snapshot in newest-first order.
    ComplexVec snapshot() const;

private:
    std::vector<cplx> buffer_;
    std::size_t head_ = 0; // slot that receives the next sample
};

/// Deterministic standard-normal source.
///
/// Uniforms come from std::mt19937_64 (the 64-bit Mersenne Twister, whose
/// output sequence is fixed by the C++ standard) as (x >> 11) * 2^-53.
/// Normals are produced in pairs by the Box-Muller transform
///   r = sqrt(-2 ln(1 - u1)), X = r cos(2 pi u2), Y = r sin(2 pi u2)
/// so that any other implementation of the same two steps reproduces the
/// stream bit for bit.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform on [0, 1).
    double uniform();
    std::pair<double, double> gaussian_pair();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept;

} // namespace augkaf
