// Copyright 2026 The tsemi Authors
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

#ifndef TSEMI_TYPES_HPP_
#define TSEMI_TYPES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace tsemi {

// States are 1-based: Q = {1, ..., n}.
using State = std::uint32_t;

// Sorted ascending, no duplicates.
using StateSet = std::vector<State>;

StateSet    make_state_set(std::vector<State> states);
std::string to_string(StateSet const& set);

}  // namespace tsemi

#endif  // TSEMI_TYPES_HPP_
