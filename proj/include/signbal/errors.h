// Copyright 2026 The Signbal Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIGNBAL_ERRORS_H_
#define SIGNBAL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace signbal {

// Malformed input: bad edge-list lines, invalid parameters. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A shift z that does not exceed the relevant leading eigenvalue, so the
// walk sums behind a metric diverge. CLI exit code 3.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace signbal

#endif  // SIGNBAL_ERRORS_H_
