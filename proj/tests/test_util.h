// Copyright 2026 The etcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ETCS_TESTS_TEST_UTIL_H_
#define ETCS_TESTS_TEST_UTIL_H_

#include <string>
#include <vector>

#include "etcs/numeric.h"
#include "etcs/rational_matrix.h"

namespace etcs::testing {

inline std::string DataPath(const std::string& relative) {
  return std::string(ETCS_DATA_DIR) + "/" + relative;
}

inline Rational Q(long long num, long long den = 1) { return Rational(num, den); }

inline RationalMatrix M(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<RationalVector> v;
  for (const auto& r : rows) v.emplace_back(r);
  return RationalMatrix::FromRows(v);
}

}  // namespace etcs::testing

#endif  // ETCS_TESTS_TEST_UTIL_H_
