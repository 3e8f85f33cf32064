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

#include <stdexcept>
#include <string>

namespace falseclaim {

/// Argument outside the mathematical domain of a function or model.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative evaluation failed to converge.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, int iterations)
        : std::runtime_error(what + " (after " + std::to_string(iterations) + " iterations)"),
          iterations_(iterations) {}

    int iterations() const noexcept { return iterations_; }

private:
    int iterations_;
};

/// Malformed request: empty inputs, mismatched axes, unparsable records.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace falseclaim
