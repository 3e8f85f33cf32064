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

#include <span>
#include <vector>

#include "falseclaim/rng.hpp"

namespace falseclaim {

/// Draw from N(mean, sd^2). sd == 0 returns mean exactly.
double sample_normal(double mean, double sd, Rng& rng);

/// Draw from Gamma(shape, 1), Marsaglia-Tsang squeeze with boosting for shape < 1.
double sample_gamma(double shape, Rng& rng);

/// ln of a Gamma(shape, 1) draw; stays finite for tiny shapes where the draw
/// itself underflows.
double sample_log_gamma(double shape, Rng& rng);

/// Dirichlet(alphas) draw written into `out` (same length as alphas, >= 2).
void sample_dirichlet(std::span<const double> alphas, Rng& rng, std::span<double> out);

std::vector<double> sample_dirichlet(std::span<const double> alphas, Rng& rng);

}  // namespace falseclaim
