/*
 * Copyright 2026 The measure-audit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <string>
#include <vector>

#include "maudit/inconsistency.hpp"

namespace maudit::testing {

// Six binary triplets over ten elements; every pair of the eight measures
// below is strictly inconsistent on the listed triplet.
inline std::vector<Triplet> discriminating_triplets() {
  auto L = [](std::vector<int> v) { return Labeling(std::move(v), 2); };
  return {
      {L({1, 1, 1, 0, 1, 1, 0, 1, 1, 0}), L({1, 1, 1, 0, 1, 0, 1, 1, 1, 1}), L({1, 0, 0, 1, 0, 1, 0, 1, 1, 0})},
      {L({0, 1, 1, 1, 1, 0, 1, 1, 0, 1}), L({1, 0, 0, 1, 0, 1, 0, 1, 1, 0}), L({0, 1, 0, 0, 0, 0, 0, 0, 0, 0})},
      {L({0, 0, 0, 0, 1, 1, 1, 0, 1, 0}), L({1, 1, 1, 1, 1, 1, 1, 1, 0, 1}), L({0, 1, 1, 1, 1, 0, 1, 1, 0, 1})},
      {L({0, 1, 1, 1, 1, 0, 1, 1, 0, 1}), L({1, 1, 1, 1, 1, 1, 1, 1, 0, 1}), L({0, 1, 0, 1, 1, 1, 1, 1, 0, 1})},
      {L({0, 0, 0, 0, 1, 1, 1, 0, 1, 0}), L({0, 1, 1, 0, 0, 1, 0, 0, 0, 1}), L({0, 1, 0, 0, 0, 0, 0, 0, 0, 0})},
      {L({1, 1, 1, 1, 1, 1, 1, 1, 0, 1}), L({1, 1, 1, 0, 1, 1, 0, 1, 1, 0}), L({0, 1, 1, 0, 0, 1, 0, 0, 0, 1})},
  };
}

inline const std::array<std::string, 8>& discriminated_measures() {
  static const std::array<std::string, 8> ids{"acc", "ba", "f1", "kappa", "ce", "gm:r=1", "cc", "sba"};
  return ids;
}

// 1-based triplet index for the pair (i, j), i < j, in discriminated_measures() order.
inline int discriminating_triplet(std::size_t i, std::size_t j) {
  static const int table[8][8] = {
      {0, 1, 2, 6, 6, 1, 5, 5},
      {0, 0, 1, 1, 1, 3, 3, 1},
      {0, 0, 0, 2, 2, 1, 2, 2},
      {0, 0, 0, 0, 4, 1, 3, 3},
      {0, 0, 0, 0, 0, 1, 3, 3},
      {0, 0, 0, 0, 0, 0, 5, 1},
      {0, 0, 0, 0, 0, 0, 0, 4},
      {0, 0, 0, 0, 0, 0, 0, 0},
  };
  return table[i][j];
}

}  // namespace maudit::testing
