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

#include <string>
#include <string_view>

#include "falseclaim/error.hpp"

namespace falseclaim {

enum class Task { Segmentation, Classification };

/// Short CSV/CLI name: "seg" or "clf".
inline std::string_view task_name(Task task) {
    return task == Task::Segmentation ? "seg" : "clf";
}

/// Accepts "seg"/"segmentation" and "clf"/"classification".
inline Task parse_task(std::string_view text) {
    if (text == "seg" || text == "segmentation") return Task::Segmentation;
    if (text == "clf" || text == "classification") return Task::Classification;
    throw UsageError("unknown task '" + std::string(text) + "' (expected seg or clf)");
}

/// Probability at or above which a false claim is considered concerning.
inline constexpr double kConcernThreshold = 0.05;

inline std::string_view verdict(double prob) {
    return prob >= kConcernThreshold ? "CONCERNING" : "OK";
}

}  // namespace falseclaim
