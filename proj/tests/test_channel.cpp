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

#include "augkaf/channel.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace augkaf;

namespace {

cplx pseudo_covariance(const std::vector<cplx>& x) {
    cplx acc{0.0, 0.0};
    for (const auto& v : x) acc += v * v;
    return acc / static_cast<double>(x.size());
}

} // namespace

TEST_CASE("gen_input with rho = 0 is purely real") {
    SeededRng rng(1);
    for (const auto& v : gen_input({0.0, 0.70}, 1000, rng)) CHECK(v.imag() == 0.0);
    CHECK_THROWS(gen_input({1.5, 0.70}, 10, rng));
}

TEST_CASE("gen_input circular at rho = sqrt(2)/2") {
    SeededRng rng(2);
    const auto s = gen_input({std::numbers::sqrt2 / 2.0, 0.70}, 100000, rng);
    CHECK(std::abs(pseudo_covariance(s)) < 0.01);
    CHECK(mean_power(s) == doctest::Approx(0.49).epsilon(0.02));
}

TEST_CASE("gen_input non-circular at rho = 0.1") {
    // E[s^2] = 0.49 (1 - rho^2 - rho^2) from independence of X and Y
    SeededRng rng(3);
    const auto s = gen_input({0.1, 0.70}, 100000, rng);
    const cplx pc = pseudo_covariance(s);
    CHECK(pc.real() == doctest::Approx(0.49 * (1.0 - 2.0 * 0.01)).epsilon(0.02));
    CHECK(std::abs(pc.imag()) < 0.01);
}

TEST_CASE("soft channel") {
    CHECK(soft_channel(std::vector<cplx>(8)).distorted == std::vector<cplx>(8));

    std::vector<cplx> impulse(4);
    impulse[0] = 1.0;
    const auto out = soft_channel(impulse);
    const cplx t0{-0.9, 0.8};
    CHECK(out.linear[0] == t0);
    CHECK(out.linear[1] == cplx{0.6, -0.7});
    CHECK(out.linear[2] == cplx{0.0, 0.0});
    const cplx q0 = t0 + cplx{0.1, 0.15} * t0 * t0 + cplx{0.06, 0.05} * t0 * t0 * t0;
    CHECK(std::abs(out.distorted[0] - q0) < 1e-15);

    std::mt19937_64 gen(4);
    const auto s = testing::random_vec(gen, 50);
    const cplx a{0.3, -1.2};
    const auto t1 = soft_channel(s.view()).linear;
    const auto t2 = soft_channel((a * s).view()).linear;
    for (std::size_t n = 0; n < t1.size(); ++n) CHECK(std::abs(t2[n] - a * t1[n]) < 1e-13);
}

TEST_CASE("strong channel") {
    const auto spec = ChannelSpec::strong();
    CHECK(spec.taps.size() == 5);
    CHECK(spec.taps[4] == cplx{-0.1, -0.2});
    CHECK(strong_channel(std::vector<cplx>(8)).distorted == std::vector<cplx>(8));

    std::vector<cplx> impulse(8);
    impulse[0] = 1.0;
    const auto out = strong_channel(impulse);
    for (std::size_t j = 0; j < 5; ++j) CHECK(out.linear[j] == spec.taps[j]);
    for (std::size_t j = 5; j < 8; ++j) CHECK(out.linear[j] == cplx{0.0, 0.0});

    std::mt19937_64 gen(5);
    const auto s = testing::random_vec(gen, 64);
    const auto r = strong_channel(s.view());
    for (std::size_t n = 0; n < s.size(); ++n) {
        const cplx t = r.linear[n];
        CHECK(std::abs((r.distorted[n] - t) - (spec.nl2 * t * t + spec.nl3 * t * t * t)) < 1e-14);
    }
    CHECK_THROWS(apply_channel(ChannelSpec{}, s.view()));
}

TEST_CASE("add_noise hits the target SNR with circular noise") {
    SeededRng rng(6);
    const auto s = gen_input({0.1, 0.70}, 100000, rng);
    const auto q = soft_channel(s).distorted;
    const auto r = add_noise(q, 15.0, rng);
    std::vector<cplx> noise(q.size());
    for (std::size_t n = 0; n < q.size(); ++n) noise[n] = r[n] - q[n];
    const double snr = 10.0 * std::log10(mean_power(q) / mean_power(noise));
    CHECK(std::abs(snr - 15.0) < 0.2);
    CHECK(std::abs(pseudo_covariance(noise)) < 0.02 * mean_power(noise));

    SeededRng untouched(6);
    CHECK(add_noise(q, INFINITY, untouched) == q);
    CHECK_THROWS(add_noise(std::vector<cplx>{}, 10.0, rng));
    CHECK_THROWS(add_noise(q, NAN, rng));
}

TEST_CASE("dataset alignment") {
    std::mt19937_64 gen(7);
    const auto s = testing::random_vec(gen, 40);
    std::vector<cplx> sv(s.begin(), s.end());

    // identity channel, no noise, D = 0, L = 1 recovers s exactly
    const auto trivial = make_dataset(sv, sv, 1, 0);
    for (std::size_t n = 0; n < sv.size(); ++n) {
        CHECK(trivial.inputs[n][0] == sv[n]);
        CHECK(trivial.targets[n] == sv[n]);
    }

    const std::size_t L = 3, D = 2, N = 30;
    const auto data = make_dataset(sv, std::span<const cplx>(sv).first(N), L, D);
    CHECK(data.size() == N);
    for (std::size_t n = 0; n < N; ++n) {
        for (std::size_t j = 0; j < L; ++j) {
            const long idx = static_cast<long>(n + D) - static_cast<long>(j);
            const cplx expected = idx >= 0 ? sv[static_cast<std::size_t>(idx)] : cplx{0.0, 0.0};
            CHECK(data.inputs[n][j] == expected);
        }
    }
    CHECK_THROWS_AS(make_dataset(std::span<const cplx>(sv).first(N), std::span<const cplx>(sv).first(N), L, D),
                    DimensionError);
    CHECK(fingerprint(data) == fingerprint(make_dataset(sv, std::span<const cplx>(sv).first(N), L, D)));
    CHECK(fingerprint(data) != fingerprint(trivial));
}
