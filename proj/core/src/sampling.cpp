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

#include "falseclaim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "falseclaim/error.hpp"

namespace falseclaim {

namespace {

double standard_normal(Rng& rng) {
    // Marsaglia polar method; the second variate is discarded so that every
    // draw is a pure function of the generator position.
    for (;;) {
        const double u = 2.0 * rng.uniform() - 1.0;
        const double v = 2.0 * rng.uniform() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

// Marsaglia & Tsang (2000), valid for shape >= 1.
double gamma_marsaglia_tsang(double shape, Rng& rng) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double x = standard_normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        const double u = rng.uniform_open();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

void check_shape(double shape) {
    if (!(shape > 0.0) || !std::isfinite(shape)) {
        throw DomainError("gamma shape must be finite and > 0, got " + std::to_string(shape));
    }
}

}  // namespace

double sample_normal(double mean, double sd, Rng& rng) {
    if (!(sd >= 0.0) || !std::isfinite(sd)) {
        throw DomainError("normal sd must be finite and >= 0, got " + std::to_string(sd));
    }
    if (sd == 0.0) return mean;
    return mean + sd * standard_normal(rng);
}

double sample_gamma(double shape, Rng& rng) {
    check_shape(shape);
    if (shape >= 1.0) return gamma_marsaglia_tsang(shape, rng);
    // Gamma(a) = Gamma(a + 1) * U^(1/a)
    const double boosted = gamma_marsaglia_tsang(shape + 1.0, rng);
    return boosted * std::pow(rng.uniform_open(), 1.0 / shape);
}

double sample_log_gamma(double shape, Rng& rng) {
    check_shape(shape);
    if (shape >= 1.0) return std::log(gamma_marsaglia_tsang(shape, rng));
    const double boosted = gamma_marsaglia_tsang(shape + 1.0, rng);
    return std::log(boosted) + std::log(rng.uniform_open()) / shape;
}

void sample_dirichlet(std::span<const double> alphas, Rng& rng, std::span<double> out) {
    if (alphas.size() < 2) {
        throw DomainError("dirichlet needs at least two concentration parameters");
    }
    if (out.size() != alphas.size()) {
        throw DomainError("dirichlet output size does not match alphas");
    }
    for (double a : alphas) check_shape(a);

    const bool small_shape =
        std::any_of(alphas.begin(), alphas.end(), [](double a) { return a < 1.0; });
    double total = 0.0;
    if (!small_shape) {
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            out[i] = gamma_marsaglia_tsang(alphas[i], rng);
            total += out[i];
        }
    } else {
        // Normalize in log space: boosted draws for tiny shapes underflow.
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            out[i] = sample_log_gamma(alphas[i], rng);
        }
        const double top = *std::max_element(out.begin(), out.end());
        for (double& v : out) {
            v = std::exp(v - top);
            total += v;
        }
    }
    for (double& v : out) v /= total;
}

std::vector<double> sample_dirichlet(std::span<const double> alphas, Rng& rng) {
    std::vector<double> out(alphas.size());
    sample_dirichlet(alphas, rng, out);
    return out;
}

}  // namespace falseclaim
