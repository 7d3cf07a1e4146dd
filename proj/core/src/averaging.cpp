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

#include "maudit/averaging.hpp"

#include "maudit/errors.hpp"

namespace maudit {

BinaryCounts micro_counts(const ConfusionMatrix& c) {
  const Rational n = c.total();
  const Rational t = c.trace();
  return BinaryCounts(t, n - t, n - t, (c.num_classes() - 2) * n + t);
}

Value micro_extend(const BinaryMeasure& measure, const ConfusionMatrix& c) {
  return measure(micro_counts(c));
}

Value macro_extend(const BinaryMeasure& measure, const ConfusionMatrix& c) {
  Value sum = Value::exact(0);
  for (int i = 0; i < c.num_classes(); ++i) sum = sum + measure(one_vs_all(c, i));
  return sum.scaled(Rational(1, c.num_classes()));
}

Value weighted_extend(const BinaryMeasure& measure, const ConfusionMatrix& c) {
  Value sum = Value::exact(0);
  for (int i = 0; i < c.num_classes(); ++i) {
    if (c.row_sum(i) == 0) continue;
    sum = sum + measure(one_vs_all(c, i)).scaled(c.row_sum(i));
  }
  return sum.scaled(1 / c.total());
}

Value extend(Averaging scheme, const BinaryMeasure& measure, const ConfusionMatrix& c) {
  switch (scheme) {
    case Averaging::Micro: return micro_extend(measure, c);
    case Averaging::Macro: return macro_extend(measure, c);
    case Averaging::Weighted: return weighted_extend(measure, c);
    case Averaging::None: break;
  }
  throw InputError("no averaging scheme given");
}

BinaryMeasure as_binary_measure(const MeasureDescriptor& d) {
  MeasureDescriptor base = d.base();
  return [base](const BinaryCounts& bc) { return evaluate(base, ConfusionMatrix(bc)); };
}

}  // namespace maudit
