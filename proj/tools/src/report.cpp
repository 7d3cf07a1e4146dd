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

#include "maudit_cli/report.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "maudit/errors.hpp"

namespace maudit::cli {

namespace {

const char* kinds[] = {"extreme_not_constant", "extreme_not_strict", "asymmetric", "class_asymmetric",
                       "triangle", "not_monotone", "baseline_varies", "approx_baseline_varies"};

std::string label_of(const Doc& doc, const std::string& id) {
  if (doc.contains("measure_labels") && doc["measure_labels"].contains(id))
    return doc["measure_labels"][id].get<std::string>();
  return id;
}

std::string matrix_text(const Doc& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) s += ",";
      s += m[i][j].is_string() ? m[i][j].get<std::string>() : m[i][j].dump();
    }
    s += "]";
  }
  return s + "]";
}

std::string cell_symbol(const Doc& cell) {
  const std::string st = cell["status"];
  if (st == "satisfied") return "✓";
  if (st == "violated") return cell.value("ties_only", false) ? "✗ (tie)" : "✗";
  return st;
}

std::string witness_line(const Doc& w) {
  std::ostringstream s;
  s << w["kind"].get<std::string>();
  if (w.contains("matrices") && !w["matrices"].empty()) {
    s << ":";
    for (const auto& m : w["matrices"]) s << " " << matrix_text(m);
  }
  if (w.contains("sizes") && !w["sizes"].empty()) {
    s << "; sizes";
    for (const auto& z : w["sizes"]) s << " " << z.dump();
  }
  if (w.contains("values") && !w["values"].empty()) {
    s << "; values";
    for (const auto& v : w["values"]) s << " " << v["exact"].get<std::string>();
  }
  if (w.contains("note") && !w["note"].get<std::string>().empty()) s << " (" << w["note"].get<std::string>() << ")";
  return s.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void timestamp_line(const Doc& doc, std::ostringstream& s) {
  if (doc.contains("generated_at")) s << "\nGenerated at " << doc["generated_at"].get<std::string>() << ".\n";
}

std::string render_eval(const Doc& doc, OutputFormat f) {
  std::ostringstream s;
  if (f == OutputFormat::Csv) {
    s << "measure,value,decimal,arithmetic\n";
    for (const auto& r : doc["results"])
      s << csv_field(r["measure"]) << "," << csv_field(r["value"]["exact"]) << "," << r["value"]["decimal"].get<std::string>()
        << "," << r["value"]["arithmetic"].get<std::string>() << "\n";
    return s.str();
  }
  s << "Confusion matrix " << matrix_text(doc["matrix"]) << " (n = " << doc["n"].get<std::string>() << ")\n\n";
  s << "| Measure | Value | Decimal | Arithmetic |\n|---|---|---|---|\n";
  for (const auto& r : doc["results"])
    s << "| " << r["label"].get<std::string>() << " | " << r["value"]["exact"].get<std::string>() << " | "
      << r["value"]["decimal"].get<std::string>() << " | " << r["value"]["arithmetic"].get<std::string>() << " |\n";
  timestamp_line(doc, s);
  return s.str();
}

std::string render_audit(const Doc& doc, OutputFormat f) {
  std::ostringstream s;
  const auto& props = doc["properties"];
  if (f == OutputFormat::Csv) {
    s << "measure,property,status,ties_only\n";
    for (const auto& c : doc["cells"])
      s << csv_field(c["measure"]) << "," << c["property"].get<std::string>() << "," << c["status"].get<std::string>()
        << "," << (c.value("ties_only", false) ? "true" : "false") << "\n";
    if (doc.contains("averaging"))
      for (const auto& c : doc["averaging"])
        s << "averaging:" << c["scheme"].get<std::string>() << "," << c["property"].get<std::string>() << ","
          << c["status"].get<std::string>() << "," << (c.value("ties_only", false) ? "true" : "false") << "\n";
    return s.str();
  }
  const auto& sp = doc["space"];
  s << "Audit space: m = " << sp["m"] << ", n = " << sp["n_min"] << ".." << sp["n_max"]
    << " (distance: n <= " << sp["n_max_dist"] << ")\n\n";
  s << "| Measure |";
  for (const auto& p : props) s << " " << p.get<std::string>() << " |";
  s << "\n|---|";
  for (std::size_t k = 0; k < props.size(); ++k) s << "---|";
  s << "\n";
  std::map<std::string, std::map<std::string, const Doc*>> grid;
  for (const auto& c : doc["cells"]) grid[c["measure"]][c["property"]] = &c;
  for (const auto& m : doc["measures"]) {
    s << "| " << label_of(doc, m) << " |";
    for (const auto& p : props) s << " " << cell_symbol(*grid[m][p]) << " |";
    s << "\n";
  }
  if (doc.contains("averaging")) {
    s << "\n| Averaging |";
    for (const auto& p : props) s << " " << p.get<std::string>() << " |";
    s << "\n|---|";
    for (std::size_t k = 0; k < props.size(); ++k) s << "---|";
    s << "\n";
    std::map<std::string, std::map<std::string, const Doc*>> avg;
    std::vector<std::string> schemes;
    for (const auto& c : doc["averaging"]) {
      if (!avg.count(c["scheme"])) schemes.push_back(c["scheme"]);
      avg[c["scheme"]][c["property"]] = &c;
    }
    for (const auto& sc : schemes) {
      s << "| " << sc << " |";
      for (const auto& p : props) s << " " << cell_symbol(*avg[sc][p]) << " |";
      s << "\n";
    }
  }
  bool header = false;
  for (const auto& c : doc["cells"]) {
    if (!c.contains("witness")) continue;
    if (!header) s << "\nWitnesses:\n\n", header = true;
    s << "- " << label_of(doc, c["measure"]) << " / " << c["property"].get<std::string>() << ": "
      << witness_line(c["witness"]) << "\n";
  }
  if (doc.contains("averaging"))
    for (const auto& c : doc["averaging"]) {
      if (!c.contains("witness")) continue;
      if (!header) s << "\nWitnesses:\n\n", header = true;
      s << "- " << c["witness_measure"].get<std::string>() << " / " << c["property"].get<std::string>() << ": "
        << witness_line(c["witness"]) << "\n";
    }
  timestamp_line(doc, s);
  return s.str();
}

std::string group_text(const Doc& doc, const Doc& groups) {
  if (groups.empty()) return "-";
  std::string s;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g) s += "; ";
    s += "[";
    for (std::size_t k = 0; k < groups[g].size(); ++k) {
      if (k) s += ", ";
      s += label_of(doc, groups[g][k]);
    }
    s += "]";
  }
  return s;
}

std::string render_distinguish(const Doc& doc, OutputFormat f) {
  std::ostringstream s;
  const auto& rows = doc["rows"];
  if (f == OutputFormat::Csv) {
    s << "n,method,triplets,groups\n";
    for (const auto& r : rows)
      s << r["n"] << "," << r["method"].get<std::string>() << "," << r["triplets"] << ","
        << csv_field(group_text(doc, r["groups"])) << "\n";
    return s.str();
  }
  s << "| n | measures |\n|---|---|\n";
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j + 1 < rows.size() && rows[j + 1]["groups"] == rows[i]["groups"] &&
           rows[j + 1]["n"].get<int>() == rows[j]["n"].get<int>() + 1)
      ++j;
    std::string n = std::to_string(rows[i]["n"].get<int>());
    if (j > i) n += "-" + std::to_string(rows[j]["n"].get<int>());
    s << "| " << n << " | " << group_text(doc, rows[i]["groups"]) << " |\n";
    i = j + 1;
  }
  timestamp_line(doc, s);
  return s.str();
}

std::string render_compare(const Doc& doc, OutputFormat f) {
  std::ostringstream s;
  if (f == OutputFormat::Csv) {
    s << "first,second,inconsistent,total,percent,unstable\n";
    for (const auto& p : doc["pairs"])
      s << csv_field(p["first"]) << "," << csv_field(p["second"]) << "," << p["inconsistent"] << "," << p["total"]
        << "," << p["percent"].get<std::string>() << "," << p["unstable"] << "\n";
    return s.str();
  }
  const auto& ms = doc["measures"];
  std::map<std::pair<std::string, std::string>, std::string> pct;
  for (const auto& p : doc["pairs"]) {
    pct[{p["first"], p["second"]}] = p["percent"];
    pct[{p["second"], p["first"]}] = p["percent"];
  }
  s << "Inconsistency over " << doc["comparisons"] << " comparisons (%)\n\n|  |";
  for (const auto& m : ms) s << " " << label_of(doc, m) << " |";
  s << "\n|---|";
  for (std::size_t k = 0; k < ms.size(); ++k) s << "---|";
  s << "\n";
  for (const auto& a : ms) {
    s << "| " << label_of(doc, a) << " |";
    for (const auto& b : ms) s << " " << (a == b ? std::string("-") : pct[{a, b}]) << " |";
    s << "\n";
  }
  timestamp_line(doc, s);
  return s.str();
}

std::string render_rank(const Doc& doc, OutputFormat f) {
  std::ostringstream s;
  const auto& models = doc["models"];
  if (f == OutputFormat::Csv) {
    s << "model,measure,value,decimal,rank\n";
    for (const auto& m : doc["rankings"])
      for (std::size_t k = 0; k < models.size(); ++k)
        s << csv_field(models[k]) << "," << csv_field(m["measure"]) << "," << csv_field(m["values"][k]["exact"])
          << "," << m["values"][k]["decimal"].get<std::string>() << "," << m["ranks"][k] << "\n";
    return s.str();
  }
  s << "| Model |";
  for (const auto& m : doc["rankings"]) s << " " << label_of(doc, m["measure"]) << " |";
  s << "\n|---|";
  for (std::size_t k = 0; k < doc["rankings"].size(); ++k) s << "---|";
  s << "\n";
  for (std::size_t k = 0; k < models.size(); ++k) {
    s << "| " << models[k].get<std::string>() << " |";
    for (const auto& m : doc["rankings"])
      s << " " << m["values"][k]["decimal"].get<std::string>().substr(0, 8) << " (" << m["ranks"][k] << ") |";
    s << "\n";
  }
  timestamp_line(doc, s);
  return s.str();
}

std::string render_baseline(const Doc& doc, OutputFormat f) {
  std::ostringstream s;
  if (f == OutputFormat::Csv) {
    s << "measure,expectation,decimal,arithmetic,cross_check\n";
    for (const auto& r : doc["results"])
      s << csv_field(r["measure"]) << "," << csv_field(r["expectation"]["exact"]) << ","
        << r["expectation"]["decimal"].get<std::string>() << "," << r["expectation"]["arithmetic"].get<std::string>()
        << "," << r.value("cross_check", std::string("skipped")) << "\n";
    return s.str();
  }
  s << "Expectation over random predictions with a = " << doc["a"].dump() << ", b = " << doc["b"].dump() << "\n\n";
  s << "| Measure | E[M] | Decimal | Arithmetic | Cross-check |\n|---|---|---|---|---|\n";
  for (const auto& r : doc["results"])
    s << "| " << r["label"].get<std::string>() << " | " << r["expectation"]["exact"].get<std::string>() << " | "
      << r["expectation"]["decimal"].get<std::string>() << " | " << r["expectation"]["arithmetic"].get<std::string>()
      << " | " << r.value("cross_check", std::string("skipped")) << " |\n";
  timestamp_line(doc, s);
  return s.str();
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "markdown" || name == "md") return OutputFormat::Markdown;
  if (name == "csv") return OutputFormat::Csv;
  return std::nullopt;
}

std::string percent_string(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", p);
  return buf;
}

Doc value_json(const Value& v) {
  return Doc{{"exact", v.exact_string()}, {"decimal", v.decimal_string()},
             {"arithmetic", to_string(v.arithmetic_class())}};
}

Doc witness_json(const Witness& w) {
  Doc j;
  j["kind"] = kinds[static_cast<int>(w.kind)];
  j["via"] = to_string(w.via);
  Doc ms = Doc::array();
  for (const auto& c : w.matrices) {
    Doc rows = Doc::array();
    for (int i = 0; i < c.num_classes(); ++i) {
      Doc row = Doc::array();
      for (int k = 0; k < c.num_classes(); ++k) {
        const Rational& x = c(i, k);
        if (x.get_den() == 1 && x.get_num().fits_slong_p())
          row.push_back(x.get_num().get_si());
        else
          row.push_back(to_string(x));
      }
      rows.push_back(std::move(row));
    }
    ms.push_back(std::move(rows));
  }
  j["matrices"] = std::move(ms);
  Doc vals = Doc::array();
  for (const auto& v : w.values) vals.push_back(value_json(v));
  j["values"] = std::move(vals);
  if (!w.sizes.empty()) j["sizes"] = w.sizes;
  if (!w.labelings.empty()) {
    Doc ls = Doc::array();
    for (const auto& l : w.labelings) ls.push_back(std::vector<int>(l.labels().begin(), l.labels().end()));
    j["labelings"] = std::move(ls);
  }
  if (!w.permutation.empty()) j["permutation"] = w.permutation;
  j["note"] = w.note;
  return j;
}

Doc verdict_json(const Verdict& v) {
  Doc j;
  j["measure"] = v.measure;
  j["property"] = to_string(v.property);
  j["status"] = v.holds() ? "satisfied" : "violated";
  if (!v.holds()) j["ties_only"] = v.ties_only;
  if (v.witness) j["witness"] = witness_json(*v.witness);
  return j;
}

std::string render(const Doc& doc, OutputFormat format) {
  if (format == OutputFormat::Json) return doc.dump(2) + "\n";
  const std::string cmd = doc.at("command");
  if (cmd == "eval") return render_eval(doc, format);
  if (cmd == "audit") return render_audit(doc, format);
  if (cmd == "distinguish") return render_distinguish(doc, format);
  if (cmd == "compare") return render_compare(doc, format);
  if (cmd == "rank") return render_rank(doc, format);
  if (cmd == "baseline") return render_baseline(doc, format);
  throw InvariantError("no renderer for command '" + cmd + "'");
}

}  // namespace maudit::cli
