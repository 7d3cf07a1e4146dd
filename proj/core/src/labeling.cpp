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

#include "maudit/labeling.hpp"

#include <string>

#include "maudit/errors.hpp"

namespace maudit {

Labeling::Labeling(std::vector<int> labels, int num_classes)
    : labels_(std::move(labels)), m_(num_classes) {
  if (m_ < 2) throw InputError("a labeling needs at least two classes");
  if (labels_.empty()) throw InputError("a labeling needs at least one element");
  for (int l : labels_) {
    if (l < 0 || l >= m_)
      throw InputError("label " + std::to_string(l) + " outside 0.." + std::to_string(m_ - 1));
  }
}

std::vector<std::int64_t> Labeling::class_sizes() const {
  std::vector<std::int64_t> sizes(m_, 0);
  for (int l : labels_) ++sizes[l];
  return sizes;
}

}  // namespace maudit
