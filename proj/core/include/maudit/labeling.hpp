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

#include <cstdint>
#include <span>
#include <vector>

namespace maudit {

/** Assignment of n elements to classes 0..m-1. */
class Labeling {
 public:
  Labeling(std::vector<int> labels, int num_classes);

  std::size_t size() const { return labels_.size(); }
  int num_classes() const { return m_; }
  int operator[](std::size_t k) const { return labels_[k]; }
  std::span<const int> labels() const { return labels_; }
  std::vector<std::int64_t> class_sizes() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> labels_;
  int m_;
};

}  // namespace maudit
