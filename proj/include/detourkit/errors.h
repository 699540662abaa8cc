// Copyright 2026 The detourkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DETOURKIT_ERRORS_H_
#define DETOURKIT_ERRORS_H_

#include <stdexcept>

namespace detourkit {

// Preconditions use std::invalid_argument and bad vertex ids use
// std::out_of_range. A configured size guard being exceeded raises this.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace detourkit

#endif  // DETOURKIT_ERRORS_H_
