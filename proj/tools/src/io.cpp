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

#include "maudit_cli/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "maudit/errors.hpp"

namespace maudit::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    out.emplace_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(no, std::string(t));
  }
  return out;
}

std::optional<int> as_index(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0) return std::nullopt;
  return v;
}

Rational entry_from_json(const nlohmann::json& x) {
  if (x.is_number_integer() || x.is_number_unsigned()) return Rational(x.dump());
  if (x.is_number_float()) return parse_rational(x.dump());
  if (x.is_string()) return parse_rational(x.get<std::string>());
  throw InputError("matrix entries must be numbers or \"p/q\" strings");
}

ConfusionMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t m = rows.size();
  if (m < 2) throw InputError("a confusion matrix needs at least two classes");
  std::vector<Rational> cells;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != m)
      throw InputError("ragged matrix: row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(m));
    for (const auto& x : rows[i]) {
      if (x < 0) throw InputError("negative count " + maudit::to_string(x) + " in row " + std::to_string(i));
      cells.push_back(x);
    }
  }
  return ConfusionMatrix(static_cast<int>(m), std::move(cells));
}

}  // namespace

std::optional<InputFormat> parse_input_format(std::string_view name) {
  if (name == "labels-csv") return InputFormat::LabelsCsv;
  if (name == "matrix-json") return InputFormat::MatrixJson;
  if (name == "matrix-csv") return InputFormat::MatrixCsv;
  return std::nullopt;
}

const char* to_string(InputFormat f) {
  switch (f) {
    case InputFormat::LabelsCsv: return "labels-csv";
    case InputFormat::MatrixJson: return "matrix-json";
    case InputFormat::MatrixCsv: return "matrix-csv";
  }
  return "?";
}

InputFormat guess_format(const std::filesystem::path& path) {
  return path.extension() == ".json" ? InputFormat::MatrixJson : InputFormat::LabelsCsv;
}

LabeledPair parse_labels_csv(std::string_view text, const LabelOptions& opt) {
  auto lines = content_lines(text);
  if (!lines.empty()) {
    auto f = split_fields(lines.front().second);
    if (f.size() == 2 && f[0] == "true" && f[1] == "pred") lines.erase(lines.begin());
  }
  if (lines.empty()) throw InputError("labels-csv input has no rows");

  std::map<std::string, int> index;
  for (std::size_t k = 0; k < opt.alphabet.size(); ++k)
    if (!index.emplace(opt.alphabet[k], static_cast<int>(k)).second)
      throw InputError("duplicate class '" + opt.alphabet[k] + "' in alphabet");

  std::vector<int> truth, pred;
  int max_label = 0;
  for (const auto& [no, line] : lines) {
    auto f = split_fields(line);
    if (f.size() != 2)
      throw InputError("line " + std::to_string(no) + ": expected 2 columns (true,pred), got " +
                       std::to_string(f.size()));
    for (int col = 0; col < 2; ++col) {
      int v;
      if (!opt.alphabet.empty()) {
        auto it = index.find(f[col]);
        if (it == index.end())
          throw InputError("line " + std::to_string(no) + ": label '" + f[col] + "' is not in the alphabet");
        v = it->second;
      } else {
        auto idx = as_index(f[col]);
        if (!idx)
          throw InputError("line " + std::to_string(no) + ": label '" + f[col] +
                           "' is not a class index; declare an alphabet");
        v = *idx;
      }
      max_label = std::max(max_label, v);
      (col == 0 ? truth : pred).push_back(v);
    }
  }

  int m;
  if (!opt.alphabet.empty()) {
    m = static_cast<int>(opt.alphabet.size());
  } else {
    m = opt.classes.value_or(std::max(2, max_label + 1));
    if (max_label >= m)
      throw InputError("label " + std::to_string(max_label) + " exceeds the declared class count " +
                       std::to_string(m));
  }
  std::vector<std::string> names = opt.alphabet;
  if (names.empty())
    for (int i = 0; i < m; ++i) names.push_back(std::to_string(i));
  return {Labeling(std::move(truth), m), Labeling(std::move(pred), m), std::move(names)};
}

ConfusionMatrix matrix_from_json(const nlohmann::json& j) {
  const nlohmann::json& rows = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  if (!rows.is_array()) throw InputError("matrix-json must be an array of rows");
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("matrix-json rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(entry_from_json(x));
    out.push_back(std::move(r));
  }
  return from_rows(out);
}

ConfusionMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

ConfusionMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& [no, line] : content_lines(text)) {
    std::vector<Rational> r;
    for (const auto& f : split_fields(line)) {
      try {
        r.push_back(parse_rational(f));
      } catch (const InputError& e) {
        throw InputError("line " + std::to_string(no) + ": " + e.what());
      }
    }
    rows.push_back(std::move(r));
  }
  return from_rows(rows);
}

nlohmann::json matrix_to_json(const ConfusionMatrix& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < c.num_classes(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < c.num_classes(); ++j) {
      const Rational& x = c(i, j);
      if (x.get_den() == 1 && x.get_num().fits_slong_p())
        row.push_back(x.get_num().get_si());
      else
        row.push_back(maudit::to_string(x));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedInput load_input(const std::filesystem::path& path, std::optional<InputFormat> format,
                       const LabelOptions& opt) {
  const std::string text = read_file(path);
  const InputFormat f = format.value_or(guess_format(path));
  LoadedInput out{path.stem().string(), ConfusionMatrix(2, {0, 0, 0, 1}), std::nullopt};
  try {
    switch (f) {
      case InputFormat::LabelsCsv:
        out.labels = parse_labels_csv(text, opt);
        out.matrix = build_confusion(out.labels->truth, out.labels->pred);
        break;
      case InputFormat::MatrixJson: out.matrix = parse_matrix_json(text); break;
      case InputFormat::MatrixCsv: out.matrix = parse_matrix_csv(text); break;
    }
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return out;
}

}  // namespace maudit::cli
