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

#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "falseclaim/calibrate.hpp"

namespace falseclaim::io {

/// Calibration targets, header `n,delta,target_prob`. Throws UsageError
/// naming the first malformed line.
std::vector<calib::ReferencePoint> read_references(std::istream& in);

void write_references(std::ostream& out, std::span<const calib::ReferencePoint> refs);

/// Per-candidate trace, header `s,sse`.
void write_calibration_trace(std::ostream& out, std::span<const calib::CandidateScore> trace);

}  // namespace falseclaim::io
