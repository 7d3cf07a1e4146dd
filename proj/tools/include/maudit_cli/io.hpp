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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "maudit/confusion.hpp"
#include "maudit/labeling.hpp"

namespace maudit::cli {

enum class InputFormat { LabelsCsv, MatrixJson, MatrixCsv };

std::optional<InputFormat> parse_input_format(std::string_view name);
const char* to_string(InputFormat f);
/// .json -> matrix-json, anything else -> labels-csv.
InputFormat guess_format(const std::filesystem::path& path);

struct LabeledPair {
  Labeling truth;
  Labeling pred;
  /// Class names in index order; integer labels map to "0", "1", ...
  std::vector<std::string> alphabet;
};

struct LabelOptions {
  /// Declared class names; required for non-integer labels.
  std::vector<std::string> alphabet;
  /// Class count for integer labels; defaults to max label + 1 (at least 2).
  std::optional<int> classes;
};

LabeledPair parse_labels_csv(std::string_view text, const LabelOptions& opt = {});
ConfusionMatrix parse_matrix_json(std::string_view text);
ConfusionMatrix parse_matrix_csv(std::string_view text);

nlohmann::json matrix_to_json(const ConfusionMatrix& c);
ConfusionMatrix matrix_from_json(const nlohmann::json& j);

std::string read_file(const std::filesystem::path& path);

struct LoadedInput {
  std::string name;  ///< file stem
  ConfusionMatrix matrix;
  std::optional<LabeledPair> labels;
};

LoadedInput load_input(const std::filesystem::path& path, std::optional<InputFormat> format,
                       const LabelOptions& opt = {});

}  // namespace maudit::cli
