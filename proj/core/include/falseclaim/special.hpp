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

#include "falseclaim/probability.hpp"

/// Special functions behind the comparison models.
///
/// Everything here is reentrant: no global state (std::lgamma writes signgam
/// on glibc, so log_gamma is implemented locally).
namespace falseclaim::special {

/// Iteration cap for the incomplete-beta continued fraction.
inline constexpr int kBetaMaxIterations = 300;

/// ln Γ(x) for x > 0. Throws DomainError for non-positive or non-finite x.
double log_gamma(double x);

/// ln B(a, b) = ln Γ(a) + ln Γ(b) − ln Γ(a + b).
double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation with
/// the symmetry switch at x = (a + 1) / (a + b + 2).
///
/// Throws DomainError on x outside [0, 1] or non-positive a, b, and
/// NumericError if the continued fraction does not converge within
/// kBetaMaxIterations.
Probability reg_inc_beta(double x, double a, double b);

/// Same as reg_inc_beta(x, a, b) but with the complement y = 1 - x supplied
/// by the caller, for arguments where forming 1 - x would lose digits.
Probability reg_inc_beta(double x, double y, double a, double b);

/// P(T <= t) for T ~ Student-t(df).
Probability student_t_cdf(double t, double df);

/// Standard normal CDF.
Probability normal_cdf(double z);

}  // namespace falseclaim::special
