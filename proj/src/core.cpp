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

#include "augkaf/core.hpp"

#include <cmath>
#include <numbers>

namespace augkaf {

DimensionError::DimensionError(const std::string& what, std::size_t expected, std::size_t got)
    : std::invalid_argument(what + ": expected length " + std::to_string(expected) + ", got " +
                            std::to_string(got)) {}

void require_same_length(std::size_t a, std::size_t b, const char* where) {
    if (a != b) throw DimensionError(where, a, b);
}

ComplexVec ComplexVec::conj() const {
    ComplexVec out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = std::conj(data_[i]);
    return out;
}

double ComplexVec::squared_norm() const noexcept {
    double acc = 0.0;
    for (const auto& v : data_) acc += std::norm(v);
    return acc;
}

std::vector<double> ComplexVec::stacked_real() const {
    std::vector<double> out(2 * size());
    for (std::size_t i = 0; i < size(); ++i) {
        out[i] = data_[i].real();
        out[size() + i] = data_[i].imag();
    }
    return out;
}

void ComplexVec::axpy(cplx alpha, const ComplexVec& other) {
    require_same_length(size(), other.size(), "ComplexVec::axpy");
    for (std::size_t i = 0; i < size(); ++i) data_[i] += alpha * other[i];
}

ComplexVec& ComplexVec::operator+=(const ComplexVec& other) {
    require_same_length(size(), other.size(), "ComplexVec::operator+=");
    for (std::size_t i = 0; i < size(); ++i) data_[i] += other[i];
    return *this;
}

ComplexVec& ComplexVec::operator-=(const ComplexVec& other) {
    require_same_length(size(), other.size(), "ComplexVec::operator-=");
    for (std::size_t i = 0; i < size(); ++i) data_[i] -= other[i];
    return *this;
}

ComplexVec& ComplexVec::operator*=(cplx alpha) noexcept {
    for (auto& v : data_) v *= alpha;
    return *this;
}

ComplexVec operator+(ComplexVec a, const ComplexVec& b) { return a += b; }
ComplexVec operator-(ComplexVec a, const ComplexVec& b) { return a -= b; }
ComplexVec operator*(cplx alpha, ComplexVec v) { return v *= alpha; }

cplx hermitian_dot(const ComplexVec& a, const ComplexVec& b) {
    require_same_length(a.size(), b.size(), "hermitian_dot");
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(b[k]) * a[k];
    return acc;
}

RegressorWindow::RegressorWindow(std::size_t length) : buffer_(length) {
    if (length == 0) throw std::invalid_argument("RegressorWindow: length must be positive");
}

void RegressorWindow::push(cplx sample) {
    buffer_[head_] = sample;
    head_ = (head_ + 1) % buffer_.size();
}

ComplexVec RegressorWindow::snapshot() const {
    const std::size_t n = buffer_.size();
    ComplexVec out(n);
    // newest sample sits just before head_
    for (std::size_t k = 0; k < n; ++k) out[k] = buffer_[(head_ + n - 1 - k) % n];
    return out;
}

double SeededRng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::pair<double, double> SeededRng::gaussian_pair() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace augkaf
