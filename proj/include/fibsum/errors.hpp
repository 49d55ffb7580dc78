/*
   Copyright 2026 The fibsum Authors

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

#ifndef FIBSUM_ERRORS_HPP
#define FIBSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fibsum {

/// Raised for caller mistakes: out-of-range spacing, exponent or index.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an identity that must hold exactly does not (an expansion or
/// composition bug, never a user error).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fibsum

#endif  // FIBSUM_ERRORS_HPP
