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

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "maudit/inconsistency.hpp"
#include "maudit/properties.hpp"
#include "maudit/value.hpp"

namespace maudit::cli {

using Doc = nlohmann::ordered_json;

enum class OutputFormat { Json, Markdown, Csv };
std::optional<OutputFormat> parse_output_format(std::string_view name);

Doc value_json(const Value& v);
Doc witness_json(const Witness& w);
Doc verdict_json(const Verdict& v);

/// Renders a command document; the layout is chosen by doc["command"].
std::string render(const Doc& doc, OutputFormat format);

/// One decimal, e.g. "96.5".
std::string percent_string(double p);

}  // namespace maudit::cli
