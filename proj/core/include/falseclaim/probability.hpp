/*
   Copyright 2026 The falseclaim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cmath>
#include <compare>
#include <string>

#include "falseclaim/error.hpp"

namespace falseclaim {

/// A real number in [0, 1]. Out-of-range or NaN values are rejected at construction.
class Probability {
public:
    constexpr Probability() = default;

    explicit Probability(double value) : value_(value) {
        if (!(value >= 0.0 && value <= 1.0)) {
            throw DomainError("probability out of [0, 1]: " + std::to_string(value));
        }
    }

    /// Clamps into [0, 1]; for values that are probabilities up to rounding.
    static Probability clamped(double value) {
        if (std::isnan(value)) throw DomainError("probability is NaN");
        return Probability(value < 0.0 ? 0.0 : (value > 1.0 ? 1.0 : value));
    }

    constexpr double value() const noexcept { return value_; }
    constexpr operator double() const noexcept { return value_; }

    Probability complement() const { return Probability(1.0 - value_); }

    friend constexpr auto operator<=>(Probability, Probability) = default;

private:
    double value_ = 0.0;
};

}  // namespace falseclaim
