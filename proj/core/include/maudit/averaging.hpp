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

#include <functional>

#include "maudit/confusion.hpp"
#include "maudit/measures.hpp"
#include "maudit/value.hpp"

namespace maudit {

using BinaryMeasure = std::function<Value(const BinaryCounts&)>;

/// Pooled counts: TP = trace, FN = FP = n - trace, TN = (m-2)n + trace.
BinaryCounts micro_counts(const ConfusionMatrix& c);

Value micro_extend(const BinaryMeasure& measure, const ConfusionMatrix& c);
/// Plain mean of the one-vs-all values over all m classes.
Value macro_extend(const BinaryMeasure& measure, const ConfusionMatrix& c);
/// (1/n) sum_i a_i M(one_vs_all(c, i)); classes with a_i = 0 carry no weight.
Value weighted_extend(const BinaryMeasure& measure, const ConfusionMatrix& c);

Value extend(Averaging scheme, const BinaryMeasure& measure, const ConfusionMatrix& c);

/// The binary measure behind a descriptor, ignoring its averaging suffix.
BinaryMeasure as_binary_measure(const MeasureDescriptor& d);

}  // namespace maudit
