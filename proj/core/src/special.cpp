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

#include "falseclaim/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace falseclaim::special {

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kFpMin = 1e-300;
constexpr double kCfEps = 1e-15;

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double beta_continued_fraction(double x, double a, double b) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kBetaMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kCfEps) return h;
    }
    throw NumericError("incomplete beta continued fraction did not converge for a=" +
                           std::to_string(a) + ", b=" + std::to_string(b) +
                           ", x=" + std::to_string(x),
                       kBetaMaxIterations);
}

}  // namespace

double log_gamma(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw DomainError("log_gamma requires finite x > 0, got " + std::to_string(x));
    }
    if (x < 0.5) {
        // Γ(x) = Γ(x + 1) / x
        return log_gamma(x + 1.0) - std::log(x);
    }
    const double z = x - 1.0;
    double series = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        series += kLanczos[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(series);
}

double log_beta(double a, double b) {
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

Probability reg_inc_beta(double x, double a, double b) {
    return reg_inc_beta(x, 1.0 - x, a, b);
}

Probability reg_inc_beta(double x, double y, double a, double b) {
    if (!(x >= 0.0 && x <= 1.0) || !(y >= 0.0 && y <= 1.0)) {
        throw DomainError("reg_inc_beta requires x in [0, 1], got " + std::to_string(x));
    }
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("reg_inc_beta requires a, b > 0, got a=" + std::to_string(a) +
                          ", b=" + std::to_string(b));
    }
    if (x == 0.0) return Probability(0.0);
    if (y == 0.0) return Probability(1.0);
    if (x == 0.5 && a == b) return Probability(0.5);

    const double log_front = a * std::log(x) + b * std::log(y) - log_beta(a, b);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return Probability::clamped(front * beta_continued_fraction(x, a, b) / a);
    }
    return Probability::clamped(1.0 - front * beta_continued_fraction(y, b, a) / b);
}

Probability student_t_cdf(double t, double df) {
    if (!(df > 0.0) || !std::isfinite(df)) {
        throw DomainError("student_t_cdf requires finite df > 0, got " + std::to_string(df));
    }
    if (!std::isfinite(t)) {
        throw DomainError("student_t_cdf requires finite t");
    }
    if (t == 0.0) return Probability(0.5);

    const double t2 = t * t;
    double tail = 0.0;  // P(T > |t|)
    if (std::isfinite(t2)) {
        const double denom = df + t2;
        tail = 0.5 * reg_inc_beta(df / denom, t2 / denom, 0.5 * df, 0.5).value();
    }
    return t < 0.0 ? Probability(tail) : Probability(1.0 - tail);
}

Probability normal_cdf(double z) {
    if (!std::isfinite(z)) {
        throw DomainError("normal_cdf requires finite z");
    }
    return Probability::clamped(0.5 * std::erfc(-z / std::numbers::sqrt2));
}

}  // namespace falseclaim::special
