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

#include <cmath>
#include <random>

#include "falseclaim/clf_model.hpp"
#include "falseclaim/error.hpp"
#include "falseclaim/rng.hpp"
#include "falseclaim/special.hpp"
#include "oracles.hpp"

using namespace falseclaim;
using namespace falseclaim::clf;

TEST_SUITE("clf") {

TEST_CASE("congruence bounds and clamping") {
    const auto b = congruence_bounds(0.8, 0.75);
    CHECK(b.lo == doctest::Approx(0.55));
    CHECK(b.hi == 0.75);
    CHECK(clamp_congruence(0.9, 0.8, 0.75) == 0.75);
    CHECK(clamp_congruence(0.1, 0.8, 0.75) == doctest::Approx(0.55));
    CHECK(clamp_congruence(0.67, 0.8, 0.75) == 0.67);
}

TEST_CASE("imputed table for the worked example") {
    const auto t = impute_table(0.80, 0.75, 0.67, 100);
    CHECK(t == ContingencyTable{67, 13, 8, 12});
    const auto c = expected_counts(0.80, 0.75, 0.67, 100);
    CHECK(c.c11 == doctest::Approx(67.0));
    CHECK(c.c10 == doctest::Approx(13.0));
    CHECK(c.c01 == doctest::Approx(8.0));
    CHECK(c.c00 == doctest::Approx(12.0));
}

TEST_CASE("exact path on (67,13,8,12)") {
    const double p = clf_false_claim_exact(ContingencyTable{67, 13, 8, 12}).value();
    CHECK(std::fabs(p - 600370.0 / 4194304.0) < 1e-12);
    CHECK(std::fabs(p - testing::binomial_tail_half(14, 9)) < 1e-10);
}

TEST_CASE("exact path uses only the off-diagonal cells") {
    const double a = clf_false_claim_exact(ContingencyTable{67, 13, 8, 12}).value();
    const double b = clf_false_claim_exact(ContingencyTable{0, 13, 8, 500}).value();
    CHECK(a == b);
    // a heavier prior pulls towards one half
    const double shrunk = clf_false_claim_exact(ContingencyTable{67, 13, 8, 12}, {1, 20, 20, 1}).value();
    CHECK(shrunk > a);
    CHECK(shrunk < 0.5);
}

TEST_CASE("congruence clamp is idempotent for the table") {
    std::mt19937_64 gen(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double pa = u(gen), pb = u(gen), p11 = u(gen);
        const auto n = static_cast<std::int64_t>(1 + 3000 * u(gen));
        CHECK(impute_table(pa, pb, clamp_congruence(p11, pa, pb), n) == impute_table(pa, pb, p11, n));
    }
}

TEST_CASE("counts are conserved") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double corners[] = {0.0, 1e-12, 0.5, 1.0 - 1e-12, 1.0};
    auto check = [](double pa, double pb, double p11, std::int64_t n) {
        const auto t = impute_table(pa, pb, p11, n);
        REQUIRE(t.n11 >= 0);
        REQUIRE(t.n10 >= 0);
        REQUIRE(t.n01 >= 0);
        REQUIRE(t.n00 >= 0);
        REQUIRE(t.total() == n);
        // marginals within half a case (plus the rounding snap)
        REQUIRE(std::fabs(static_cast<double>(t.n11 + t.n10) - pa * static_cast<double>(n)) <= 0.5 + 1e-6);
        REQUIRE(std::fabs(static_cast<double>(t.n11 + t.n01) - pb * static_cast<double>(n)) <= 0.5 + 1e-6);
        const auto c = expected_counts(pa, pb, p11, n);
        REQUIRE(c.c10 >= 0.0);
        REQUIRE(c.c01 >= 0.0);
        REQUIRE(c.c00 >= 0.0);
        REQUIRE(std::fabs(c.c11 + c.c10 + c.c01 + c.c00 - static_cast<double>(n)) <=
                1e-9 * static_cast<double>(n));
    };
    for (int i = 0; i < 10000; ++i) {
        const auto n = static_cast<std::int64_t>(1 + (i % 4 == 0 ? 5 * u(gen) : 5000 * u(gen)));
        check(u(gen), u(gen), u(gen), n);
    }
    for (double pa : corners)
        for (double pb : corners)
            for (double p11 : corners)
                for (std::int64_t n : {1, 2, 3, 7, 1000}) check(pa, pb, p11, n);
}

TEST_CASE("swapping the accuracies swaps the off-diagonal cells") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double pa = u(gen), pb = u(gen), p11 = u(gen);
        const auto n = static_cast<std::int64_t>(1 + 1000 * u(gen));
        const auto t = impute_table(pa, pb, p11, n);
        const auto s = impute_table(pb, pa, p11, n);
        CHECK(t.n10 == s.n01);
        CHECK(t.n01 == s.n10);
    }
}

TEST_CASE("swap symmetry of the posterior, p -> 1 - p") {
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double pa = 0.5 + 0.45 * u(gen), pb = 0.5 + 0.45 * u(gen);
        const auto n = static_cast<std::int64_t>(10 + 2000 * u(gen));
        for (auto mode : {CountMode::Expected, CountMode::Rounded}) {
            const double fwd = clf_false_claim_exact(impute_counts(pa, pb, 0.67, n, mode)).value();
            const double back = clf_false_claim_exact(impute_counts(pb, pa, 0.67, n, mode)).value();
            CHECK(std::fabs(fwd + back - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("Monte Carlo inner path agrees with the exact path") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const double pa = 0.6 + 0.35 * u(gen), pb = 0.6 + 0.35 * u(gen);
        const double p11 = 0.4 + 0.55 * u(gen);
        const auto n = static_cast<std::int64_t>(10 + 990 * u(gen));
        const auto counts = expected_counts(pa, pb, p11, n);
        const double exact = clf_false_claim_exact(counts).value();
        const double mc = clf_false_claim_mc(counts, kFlatPrior, 100'000, Rng(7 + i)).value();
        INFO("pa=" << pa << " pb=" << pb << " p11=" << p11 << " n=" << n);
        CHECK(std::fabs(mc - exact) < 0.01);
    }
}

TEST_CASE("Monte Carlo path does not depend on the worker count") {
    const CellCounts counts = ContingencyTable{67, 13, 8, 12};
    const Rng rng(42);
    const double one = clf_false_claim_mc(counts, kFlatPrior, 50'000, rng, 1).value();
    const double four = clf_false_claim_mc(counts, kFlatPrior, 50'000, rng, 4).value();
    CHECK(one == four);
}

TEST_CASE("zero seed variance reproduces the posterior bit for bit") {
    std::mt19937_64 gen(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double pa = u(gen), pb = u(gen), p11 = u(gen);
        const auto n = static_cast<std::int64_t>(1 + 3000 * u(gen));
        for (auto mode : {CountMode::Expected, CountMode::Rounded}) {
            ClfParams params;
            params.congruence_p11 = p11;
            params.counts = mode;
            const auto est = clf_false_claim_underspec({pa, pb, n}, params);
            const double want = clf_false_claim_exact(impute_counts(pa, pb, p11, n, mode)).value();
            CHECK(est.prob.value() == want);
            CHECK(est.std_error == 0.0);
        }
    }
}

TEST_CASE("non-increasing in n without seed variance") {
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double pb = 0.55 + 0.35 * u(gen);
        const double pa = std::min(1.0, pb + 0.001 + 0.1 * u(gen));
        const double p11 = u(gen);
        double prev = 1.0;
        for (std::int64_t n : {10, 30, 100, 300, 1000, 3000}) {
            const double p = clf_false_claim_exact(expected_counts(pa, pb, p11, n)).value();
            INFO("pa=" << pa << " pb=" << pb << " p11=" << p11 << " n=" << n);
            CHECK(p <= prev);
            prev = p;
        }
    }
}

TEST_CASE("strictly decreasing in the observed difference") {
    for (std::int64_t n : {10, 100, 1000}) {
        double prev = 2.0;
        for (int k = 0; k < 100; ++k) {
            const double pa = 0.737 + 0.001 * k;
            const double p = clf_false_claim_exact(expected_counts(pa, 0.737, 0.67, n)).value();
            CHECK(p < prev);
            prev = p;
        }
    }
}

TEST_CASE("seed variance raises the false-claim probability") {
    std::mt19937_64 gen(404);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 6; ++i) {
        const double pb = 0.6 + 0.3 * u(gen);
        const double pa = pb + 0.01 + 0.08 * u(gen);
        const auto n = static_cast<std::int64_t>(100 + 2900 * u(gen));
        ClfParams params;
        params.outer_samples = 200'000;
        params.seed = 100 + i;
        const double base = clf_false_claim_underspec({pa, pb, n}, params).prob.value();
        params.delta_a = params.delta_b = 0.005 + 0.015 * u(gen);
        const auto est = clf_false_claim_underspec({pa, pb, n}, params);
        INFO("pa=" << pa << " pb=" << pb << " n=" << n << " delta=" << params.delta_a);
        CHECK(est.prob.value() > base + 3.0 * est.std_error);
    }
}

TEST_CASE("outer loop is independent of the worker count") {
    ClfParams params;
    params.delta_a = params.delta_b = 0.01;
    params.outer_samples = 3000;
    params.workers = 1;
    const auto a = clf_false_claim_underspec({0.79, 0.76, 300}, params);
    params.workers = 3;
    const auto b = clf_false_claim_underspec({0.79, 0.76, 300}, params);
    CHECK(a.prob.value() == b.prob.value());
    CHECK(a.std_error == b.std_error);
    params.inner = InnerPath::MonteCarlo;
    params.mc_samples = 2000;
    params.outer_samples = 200;
    params.workers = 1;
    const auto c = clf_false_claim_underspec({0.79, 0.76, 300}, params);
    params.workers = 2;
    CHECK(clf_false_claim_underspec({0.79, 0.76, 300}, params).prob.value() == c.prob.value());
}

TEST_CASE("asymptotic floor") {
    CHECK(std::fabs(clf_asymptotic_floor(0.06, 0.01, 0.01).value() - 1.1045248499292733e-05) < 1e-16);
    CHECK_THROWS_AS(clf_asymptotic_floor(0.06, 0.0, 0.0), DomainError);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(impute_table(0.8, 0.7, 0.6, 0), DomainError);
    CHECK_THROWS_AS(impute_table(1.1, 0.7, 0.6, 10), DomainError);
    CHECK_THROWS_AS(clf_false_claim_exact(ContingencyTable{1, 1, 1, 1}, {1, 0, 1, 1}), DomainError);
    CHECK_THROWS_AS(clf_false_claim_mc(ContingencyTable{1, 1, 1, 1}, kFlatPrior, 0, Rng(1)),
                    DomainError);
    ClfParams params;
    params.delta_a = -0.01;
    CHECK_THROWS_AS(clf_false_claim_underspec({0.8, 0.7, 10}, params), DomainError);
    params = {};
    params.outer_samples = 0;
    CHECK_THROWS_AS(clf_false_claim_underspec({0.8, 0.7, 10}, params), DomainError);
    CHECK_THROWS_AS(clf_false_claim_underspec({0.8, 0.7, 0}, ClfParams{}), DomainError);
}

}  // TEST_SUITE
