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

#include "falseclaim/error.hpp"
#include "falseclaim/grid.hpp"
#include "falseclaim/seg_model.hpp"

using namespace falseclaim;
using namespace falseclaim::grid;

namespace {

GridSpec small_clf(double delta, unsigned workers) {
    GridSpec spec;
    spec.task = Task::Classification;
    spec.n_values = log_spaced_counts(20, 2000, 6);
    spec.delta_values = linear_values(0.0, 0.1, 11);
    spec.clf_params.delta_a = spec.clf_params.delta_b = delta;
    spec.clf_params.outer_samples = 1500;
    spec.workers = workers;
    return spec;
}

// Direct root of seg probability = threshold in delta by bisection.
double bisect_seg(const seg::SegParams& params, std::int64_t n, double threshold) {
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double p = seg::seg_false_claim_prob({mid, 0.0, n}, params).prob.value();
        (p > threshold ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("axes") {
    const auto ns = log_spaced_counts(10, 10000, 30);
    CHECK(ns.front() == 10);
    CHECK(ns.back() == 10000);
    CHECK(ns.size() == 30);
    for (std::size_t i = 1; i < ns.size(); ++i) CHECK(ns[i] > ns[i - 1]);
    // duplicates collapse on narrow ranges
    CHECK(log_spaced_counts(2, 5, 10) == std::vector<std::int64_t>{2, 3, 4, 5});
    const auto ds = linear_values(0.0, 0.1, 50);
    CHECK(ds.front() == 0.0);
    CHECK(ds.back() == 0.1);
    CHECK(ds[1] == doctest::Approx(0.1 / 49.0));
    const auto spec = GridSpec::with_default_axes(Task::Segmentation);
    CHECK(spec.n_values.size() == 30);
    CHECK(spec.delta_values.size() == 50);
}

TEST_CASE("spec validation") {
    auto spec = GridSpec::with_default_axes(Task::Segmentation);
    spec.n_values = {10, 5};
    CHECK_THROWS_AS(run_grid(spec), DomainError);
    spec.n_values = {};
    CHECK_THROWS_AS(run_grid(spec), UsageError);
    spec = GridSpec::with_default_axes(Task::Classification);
    spec.baseline = 0.95;
    CHECK_THROWS_AS(run_grid(spec), DomainError);
}

TEST_CASE("segmentation cells match the model") {
    auto spec = GridSpec::with_default_axes(Task::Segmentation);
    spec.seg_params.delta_a = spec.seg_params.delta_b = 0.01;
    const auto res = run_grid(spec);
    for (std::size_t r = 0; r < res.delta_values.size(); r += 7) {
        for (std::size_t c = 0; c < res.n_values.size(); c += 5) {
            const double want = seg::seg_false_claim_prob({res.delta_values[r], 0.0, res.n_values[c]},
                                                          spec.seg_params)
                                    .prob.value();
            CHECK(res.at(r, c).prob == want);
        }
    }
    CHECK(res.seed_delta == 0.01);
}

TEST_CASE("segmentation contour agrees with bisection") {
    for (double delta : {0.0, 0.01}) {
        auto spec = GridSpec::with_default_axes(Task::Segmentation);
        spec.seg_params.delta_a = spec.seg_params.delta_b = delta;
        const auto res = run_grid(spec);
        const double step = spec.delta_values[1] - spec.delta_values[0];
        for (std::size_t c = 0; c < res.n_values.size(); ++c) {
            const double root = bisect_seg(spec.seg_params, res.n_values[c], spec.threshold);
            if (root > spec.delta_values.back()) {
                CHECK_FALSE(res.contour[c].has_value());
                continue;
            }
            REQUIRE(res.contour[c].has_value());
            INFO("n=" << res.n_values[c] << " delta=" << delta);
            CHECK(std::fabs(*res.contour[c] - root) <= step);
        }
    }
}

TEST_CASE("columns are non-increasing in n without seed variance") {
    auto spec = GridSpec::with_default_axes(Task::Segmentation);
    const auto res = run_grid(spec);
    for (std::size_t r = 1; r < res.delta_values.size(); ++r) {
        for (std::size_t c = 1; c < res.n_values.size(); ++c) {
            CHECK(res.at(r, c).prob <= res.at(r, c - 1).prob);
        }
    }
    const auto clf = run_grid(small_clf(0.0, 1));
    for (std::size_t r = 1; r < clf.delta_values.size(); ++r) {
        for (std::size_t c = 1; c < clf.n_values.size(); ++c) {
            CHECK(clf.at(r, c).prob <= clf.at(r, c - 1).prob);
        }
    }
}

TEST_CASE("seed variance saturates at the floor") {
    auto spec = GridSpec::with_default_axes(Task::Segmentation);
    spec.n_values = log_spaced_counts(10, 1000000, 25);
    spec.seg_params.delta_a = spec.seg_params.delta_b = 0.01;
    const auto res = run_grid(spec);
    for (std::size_t r = 1; r < res.delta_values.size(); ++r) {
        const double floor = seg::seg_asymptotic_floor(res.delta_values[r], 0.01, 0.01).value();
        for (std::size_t c = 0; c < res.n_values.size(); ++c) {
            CHECK(res.at(r, c).prob >= floor);
        }
    }

    auto clf = small_clf(0.01, 1);
    clf.n_values = {100, 1000, 10000, 100000};
    const auto cres = run_grid(clf);
    for (std::size_t r = 1; r < cres.delta_values.size(); ++r) {
        const double floor = seg::seg_asymptotic_floor(cres.delta_values[r], 0.01, 0.01).value();
        for (std::size_t c = 0; c < cres.n_values.size(); ++c) {
            // rare events may see no hits, so the tolerance is the binomial SE at the floor
            const double draws = static_cast<double>(clf.clf_params.outer_samples);
            const double tol = 4.0 * std::sqrt(floor * (1.0 - floor) / draws) + 1e-12;
            CHECK(cres.at(r, c).prob >= floor - tol);
        }
    }
}

TEST_CASE("classification grid is independent of worker count") {
    const auto a = run_grid(small_clf(0.01, 1));
    const auto b = run_grid(small_clf(0.01, 4));
    for (std::size_t r = 0; r < a.delta_values.size(); ++r) {
        for (std::size_t c = 0; c < a.n_values.size(); ++c) {
            CHECK(a.at(r, c).prob == b.at(r, c).prob);
            CHECK(a.at(r, c).std_error == b.at(r, c).std_error);
        }
    }
    CHECK(a.contour == b.contour);
}

TEST_CASE("sub-grids reproduce the same cells") {
    auto full = small_clf(0.01, 1);
    auto sub = full;
    sub.n_values = {full.n_values[2]};
    sub.delta_values = {full.delta_values[3]};
    const auto a = run_grid(full);
    const auto b = run_grid(sub);
    CHECK(b.at(0, 0).prob == a.at(3, 2).prob);
}

TEST_CASE("cells past accuracy one are invalid") {
    auto spec = small_clf(0.0, 1);
    spec.baseline = 0.95;
    spec.delta_values = linear_values(0.0, 0.05, 6);
    const auto cell = evaluate_cell(spec, 0.06, 100);
    CHECK_FALSE(cell.valid);
}

TEST_CASE("threshold crossing interpolates linearly") {
    const std::vector<double> d = {0.0, 0.1, 0.2};
    const std::vector<GridCell> col = {{0.5, 0, true}, {0.1, 0, true}, {0.0, 0, true}};
    CHECK(*threshold_crossing(d, col, 0.05) == doctest::Approx(0.15));
    CHECK(*threshold_crossing(d, col, 0.6) == 0.0);
    CHECK_FALSE(threshold_crossing(d, {{0.5, 0, true}, {0.4, 0, true}, {0.3, 0, true}}, 0.05));
    // invalid cells are skipped
    const std::vector<GridCell> gap = {{0.5, 0, true}, {0.0, 0, false}, {0.0, 0, true}};
    CHECK(*threshold_crossing(d, gap, 0.05) == doctest::Approx(0.18));
}

TEST_CASE("seed variance pushes the contour up") {
    auto spec = GridSpec::with_default_axes(Task::Segmentation);
    const auto base = run_grid(spec);
    spec.seg_params.delta_a = spec.seg_params.delta_b = 0.01;
    const auto under = run_grid(spec);
    const auto shifts = compare_grids(base, under);
    REQUIRE(shifts.size() == spec.n_values.size());
    for (const auto& s : shifts) {
        if (s.baseline && s.underspec) CHECK(*s.shift > 0.0);
    }
    auto other = spec;
    other.n_values.pop_back();
    CHECK_THROWS_AS(compare_grids(base, run_grid(other)), UsageError);
}

}  // TEST_SUITE
