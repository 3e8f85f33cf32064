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

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "falseclaim/error.hpp"
#include "falseclaim/rng.hpp"
#include "falseclaim/sampling.hpp"

using namespace falseclaim;

TEST_SUITE("sampling") {

TEST_CASE("zero sd returns the mean exactly") {
    Rng rng(3);
    for (int i = 0; i < 10; ++i) CHECK(sample_normal(0.8, 0.0, rng) == 0.8);
}

TEST_CASE("standard normal variance over 1e6 draws") {
    Rng rng(42);
    constexpr int kDraws = 1'000'000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < kDraws; ++i) {
        const double z = sample_normal(0.0, 1.0, rng);
        sum += z;
        sum_sq += z * z;
    }
    const double mean = sum / kDraws;
    CHECK(std::fabs(mean) < 0.005);
    CHECK(std::fabs(sum_sq / kDraws - mean * mean - 1.0) < 0.006);
}

TEST_CASE("normal draws are symmetric about the mean") {
    Rng rng(8);
    constexpr int kDraws = 1'000'000;
    int below = 0;
    for (int i = 0; i < kDraws; ++i) below += sample_normal(0.75, 0.01, rng) < 0.75;
    CHECK(std::fabs(static_cast<double>(below) / kDraws - 0.5) < 0.002);
}

TEST_CASE("negative sd is rejected") {
    Rng rng(1);
    CHECK_THROWS_AS(sample_normal(0.0, -1.0, rng), DomainError);
}

TEST_CASE("gamma mean and variance") {
    for (double shape : {0.3, 1.0, 2.5, 40.0}) {
        Rng rng(17);
        constexpr int kDraws = 400'000;
        double sum = 0.0, sum_sq = 0.0;
        for (int i = 0; i < kDraws; ++i) {
            const double g = sample_gamma(shape, rng);
            REQUIRE(g >= 0.0);
            sum += g;
            sum_sq += g * g;
        }
        const double mean = sum / kDraws;
        INFO("shape=" << shape);
        CHECK(mean == doctest::Approx(shape).epsilon(0.01));
        CHECK(sum_sq / kDraws - mean * mean == doctest::Approx(shape).epsilon(0.03));
    }
    Rng rng(1);
    CHECK_THROWS_AS(sample_gamma(0.0, rng), DomainError);
}

TEST_CASE("log gamma draws agree with gamma draws in distribution") {
    Rng rng(21);
    constexpr int kDraws = 200'000;
    double sum = 0.0;
    for (int i = 0; i < kDraws; ++i) sum += std::exp(sample_log_gamma(0.05, rng));
    CHECK(sum / kDraws == doctest::Approx(0.05).epsilon(0.05));
}

TEST_CASE("dirichlet draws lie on the simplex with the right mean") {
    const std::array<double, 4> alphas = {2.0, 0.5, 1.0, 6.5};
    Rng rng(4);
    std::array<double, 4> mean{};
    constexpr int kDraws = 200'000;
    std::array<double, 4> theta{};
    for (int i = 0; i < kDraws; ++i) {
        sample_dirichlet(alphas, rng, theta);
        double total = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            REQUIRE(theta[k] >= 0.0);
            total += theta[k];
            mean[k] += theta[k];
        }
        REQUIRE(std::fabs(total - 1.0) < 1e-12);
    }
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(mean[k] / kDraws == doctest::Approx(alphas[k] / 10.0).epsilon(0.02));
    }
}

TEST_CASE("dirichlet ordering fraction matches I_0.5(14, 9)") {
    // posterior for table (67,13,8,12) under a flat prior
    const std::array<double, 4> alphas = {68.0, 14.0, 9.0, 13.0};
    Rng rng(42);
    constexpr int kDraws = 200'000;
    int hits = 0;
    std::array<double, 4> theta{};
    for (int i = 0; i < kDraws; ++i) {
        sample_dirichlet(alphas, rng, theta);
        hits += theta[2] > theta[1];
    }
    CHECK(std::fabs(static_cast<double>(hits) / kDraws - 0.1431) < 0.002);
}

TEST_CASE("dirichlet sequences are reproducible") {
    const std::array<double, 4> alphas = {1.5, 0.2, 3.0, 1.0};
    Rng a(77), b(77);
    for (int i = 0; i < 1000; ++i) {
        const auto x = sample_dirichlet(alphas, a);
        const auto y = sample_dirichlet(alphas, b);
        REQUIRE(x == y);
    }
}

TEST_CASE("dirichlet argument checks") {
    Rng rng(1);
    const std::array<double, 2> bad = {1.0, 0.0};
    CHECK_THROWS_AS(sample_dirichlet(bad, rng), DomainError);
    const std::array<double, 2> ok = {1.0, 1.0};
    std::array<double, 3> wrong{};
    CHECK_THROWS(sample_dirichlet(ok, rng, wrong));
}

}  // TEST_SUITE
