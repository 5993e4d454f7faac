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

#include <cstddef>
#include <memory>
#include <string>

namespace augkaf {

/// Common online interface used by the experiment runner. update() returns
/// the a-priori error d - prediction(z) and then adapts.
class AdaptiveFilter {
public:
    virtual ~AdaptiveFilter() = default;

    virtual cplx predict(const ComplexVec& z) const = 0;
    virtual cplx update(const ComplexVec& z, cplx d) = 0;
    /// Number of stored kernel centers; zero for parametric filters.
    virtual std::size_t dictionary_size() const { return 0; }
};

} // namespace augkaf
