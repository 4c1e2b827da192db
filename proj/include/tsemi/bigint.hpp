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

#ifndef TSEMI_BIGINT_HPP_
#define TSEMI_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace tsemi {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned k) {
  BigInt result = 1;
  for (unsigned i = 2; i <= k; ++i) {
    result *= i;
  }
  return result;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace tsemi

#endif  // TSEMI_BIGINT_HPP_
