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

#include "maudit_cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "maudit/errors.hpp"
#include "maudit/inconsistency.hpp"
#include "maudit/properties.hpp"
#include "maudit_cli/io.hpp"
#include "maudit_cli/report.hpp"

namespace maudit::cli {

namespace {

using maudit::to_string;

constexpr const char* kTripletMeasures = "acc,ba,f1,kappa,ce,gm:r=1,cc,sba";

struct Common {
  std::string format = "json";
  std::string output;
  long double eps = kDefaultEpsilon;
  std::optional<std::uint64_t> budget;
  int threads = 1;
  bool no_timestamp = false;
};

struct InputOptions {
  std::string input_format;
  std::string alphabet;
  std::optional<int> classes;

  std::optional<InputFormat> format() const {
    if (input_format.empty()) return std::nullopt;
    auto f = parse_input_format(input_format);
    if (!f) throw InputError("unknown input format '" + input_format + "'");
    return f;
  }

  LabelOptions labels() const {
    LabelOptions o;
    o.classes = classes;
    std::stringstream ss(alphabet);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) o.alphabet.push_back(tok);
    return o;
  }
};

std::uint64_t resolve_budget(const Common& c) {
  if (c.budget) {
    if (*c.budget == 0) throw InputError("budget must be positive");
    return *c.budget;
  }
  if (const char* env = std::getenv("MEASURE_AUDIT_BUDGET")) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(env, &pos);
      if (pos != std::string(env).size() || v <= 0) throw std::invalid_argument(env);
      return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw InputError(std::string("MEASURE_AUDIT_BUDGET is not a positive integer: '") + env + "'");
    }
  }
  return kDefaultBudget;
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Doc begin(const std::string& command, const Common& c) {
  Doc d;
  d["command"] = command;
  if (!c.no_timestamp) d["generated_at"] = utc_now();
  return d;
}

void add_labels(Doc& doc, const std::vector<MeasureDescriptor>& ms) {
  Doc labels = Doc::object();
  for (const auto& d : ms) labels[d.id()] = d.label();
  doc["measure_labels"] = std::move(labels);
}

std::vector<MeasureDescriptor> measures_for(const std::string& text, int m) {
  if (!text.empty()) return parse_measure_list(text);
  std::vector<MeasureDescriptor> out;
  for (const auto& d : default_measures())
    if (m == 2 || d.arity() == Arity::Multiclass) out.push_back(d);
  return out;
}

std::vector<std::int64_t> parse_sizes(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(tok, &pos);
      if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("class sizes must be nonnegative integers, got '" + tok + "'");
    }
  }
  if (out.size() < 2) throw InputError("class-size vectors need at least two entries");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  try {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw InputError("expected n or lo:hi, got '" + text + "'");
  }
}

SupportFilter parse_filter(const std::string& s) {
  if (s == "nonunary") return SupportFilter::NonUnary;
  if (s == "full") return SupportFilter::Full;
  throw InputError("support filter must be 'nonunary' or 'full', got '" + s + "'");
}

const char* filter_name(SupportFilter f) { return f == SupportFilter::Full ? "full" : "nonunary"; }

Doc space_json(const AuditSpace& s) {
  return Doc{{"m", s.m},
             {"n_min", s.n_min},
             {"n_max", s.n_max},
             {"n_max_dist", s.n_max_dist},
             {"extremes_filter", filter_name(s.extremes_filter)},
             {"monotone_filter", filter_name(s.monotone_filter)},
             {"baseline_filter", filter_name(s.baseline_filter)},
             {"epsilon", static_cast<double>(s.eps)}};
}

// ---- commands -------------------------------------------------------------

struct EvalArgs {
  std::string matrix, labels, measures;
  InputOptions in;
};

Doc cmd_eval(const EvalArgs& a, const Common& c) {
  if (a.matrix.empty() == a.labels.empty()) throw InputError("give exactly one of --matrix or --labels");
  LoadedInput input = a.labels.empty()
                          ? load_input(a.matrix, a.in.format(), a.in.labels())
                          : load_input(a.labels, a.in.format().value_or(InputFormat::LabelsCsv), a.in.labels());
  const auto& mat = input.matrix;
  auto ms = measures_for(a.measures, mat.num_classes());
  Doc doc = begin("eval", c);
  doc["matrix"] = matrix_to_json(mat);
  doc["n"] = to_string(mat.total());
  doc["classes"] = mat.num_classes();
  if (input.labels) doc["alphabet"] = input.labels->alphabet;
  add_labels(doc, ms);
  Doc results = Doc::array();
  for (const auto& d : ms) {
    Value v = evaluate(d, mat);
    results.push_back(Doc{{"measure", d.id()},
                          {"label", d.label()},
                          {"orientation", d.orientation() == Orientation::Similarity ? "similarity" : "dissimilarity"},
                          {"value", value_json(v)}});
  }
  doc["results"] = std::move(results);
  return doc;
}

struct AuditArgs {
  std::string measures = "all", properties = "all";
  bool binary = false, averaging = false;
  int m = 2, n_min = 1, n_max = 8, n_max_dist = 6;
  int avg_n_max = 6, avg_n_max_dist = 4;
  std::string extremes_filter = "full", monotone_filter = "nonunary";
};

Doc cmd_audit(const AuditArgs& a, const Common& c) {
  AuditSpace space;
  space.m = a.binary ? 2 : a.m;
  space.n_min = a.n_min;
  space.n_max = a.n_max;
  space.n_max_dist = a.n_max_dist;
  space.eps = c.eps;
  space.extremes_filter = parse_filter(a.extremes_filter);
  space.monotone_filter = parse_filter(a.monotone_filter);
  if (space.m < 2 || space.n_max < 1 || space.n_min < 1 || space.n_max_dist < 1)
    throw InputError("audit bounds must be positive and m >= 2");

  std::vector<Property> props;
  if (a.properties == "all") {
    props = all_properties();
  } else {
    std::stringstream ss(a.properties);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto p = parse_property(tok);
      if (!p) throw InputError("unknown property '" + tok + "'");
      props.push_back(*p);
    }
  }
  auto ms = parse_measure_list(a.measures);

  Budget budget(resolve_budget(c));
  Doc doc = begin("audit", c);
  doc["space"] = space_json(space);
  add_labels(doc, ms);
  Doc mids = Doc::array(), pnames = Doc::array(), cells = Doc::array();
  for (const auto& d : ms) mids.push_back(d.id());
  for (auto p : props) pnames.push_back(to_string(p));
  doc["measures"] = std::move(mids);
  doc["properties"] = std::move(pnames);
  for (const auto& d : ms)
    for (auto p : props) {
      if (d.arity() == Arity::BinaryOnly && space.m != 2) {
        cells.push_back(Doc{{"measure", d.id()}, {"property", to_string(p)}, {"status", "binary-only"}});
        continue;
      }
      cells.push_back(verdict_json(check_property(d, p, space, budget)));
    }
  doc["cells"] = std::move(cells);

  if (a.averaging) {
    AuditSpace binary = space;
    binary.m = 2;
    AuditSpace multi = space;
    multi.m = space.m > 2 ? space.m : 3;
    multi.n_max = a.avg_n_max;
    multi.n_max_dist = a.avg_n_max_dist;
    doc["averaging_space"] = space_json(multi);
    Doc rows = Doc::array();
    for (auto scheme : {Averaging::Micro, Averaging::Macro, Averaging::Weighted})
      for (auto p : props) {
        auto r = check_averaging_preservation(scheme, p, binary, multi, budget);
        Doc j = verdict_json(r.verdict);
        j.erase("measure");
        Doc row{{"scheme", to_string(scheme)}};
        row.update(j);
        row["measures_checked"] = r.measures_checked;
        if (!r.witness_measure.empty()) {
          row["witness_measure"] = r.witness_measure;
          row["witness_m"] = r.verdict.space.m;
        }
        rows.push_back(std::move(row));
      }
    doc["averaging"] = std::move(rows);
  }
  doc["states_enumerated"] = budget.used();
  return doc;
}

struct DistinguishArgs {
  std::string n = "2:8", measures = kTripletMeasures, method = "auto";
  bool full = false, exclude_equal = false;
};

Doc cmd_distinguish(const DistinguishArgs& a, const Common& c) {
  auto [lo, hi] = parse_range(a.n);
  if (lo < 2 || hi < lo) throw InputError("n range must satisfy 2 <= lo <= hi");
  auto ms = parse_measure_list(a.measures);
  DistinguishOptions opt;
  opt.include_equal_predictions = !a.exclude_equal;
  opt.threads = c.threads;
  opt.eps = c.eps;
  Budget budget(resolve_budget(c));

  Doc doc = begin("distinguish", c);
  add_labels(doc, ms);
  Doc mids = Doc::array();
  for (const auto& d : ms) mids.push_back(d.id());
  doc["measures"] = mids;
  doc["include_equal_predictions"] = opt.include_equal_predictions;
  Doc rows = Doc::array();
  for (int n = lo; n <= hi; ++n) {
    GroupMethod method;
    if (a.method == "labelings") {
      method = GroupMethod::Labelings;
    } else if (a.method == "matrices") {
      method = GroupMethod::MatrixClasses;
    } else if (a.method == "auto") {
      method = (n <= 7 || a.full) ? GroupMethod::Labelings : GroupMethod::MatrixClasses;
    } else {
      throw InputError("method must be auto, labelings or matrices");
    }
    if (method == GroupMethod::Labelings && n > 10 && !a.full)
      throw InputError("labeling enumeration above n = 10 needs --full");
    auto r = indistinguishable_groups(n, ms, method, budget, opt);
    Doc pairs = Doc::array();
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        pairs.push_back(Doc{{"first", r.measures[i]}, {"second", r.measures[j]}, {"inconsistent", r.inconsistent[i][j]}});
    rows.push_back(Doc{{"n", n},
                       {"method", method == GroupMethod::Labelings ? "labelings" : "matrices"},
                       {"triplets", r.triplets},
                       {"groups", r.groups},
                       {"pairs", std::move(pairs)}});
  }
  doc["rows"] = std::move(rows);
  return doc;
}

struct CompareArgs {
  std::vector<std::string> inputs;
  std::string pairs, measures = kTripletMeasures;
  InputOptions in;
};

Doc cmd_compare(const CompareArgs& a, const Common& c) {
  auto ms = parse_measure_list(a.measures);
  std::vector<MatrixPair> comparisons;
  Doc models = Doc::array();
  if (!a.pairs.empty()) {
    if (!a.inputs.empty()) throw InputError("give either model files or --pairs, not both");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(a.pairs));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(a.pairs + ": invalid JSON: " + e.what());
    }
    if (!j.is_array()) throw InputError(a.pairs + ": expected an array of [C1, C2] pairs");
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2) throw InputError(a.pairs + ": each comparison is a pair of matrices");
      comparisons.emplace_back(matrix_from_json(p[0]), matrix_from_json(p[1]));
    }
  } else {
    if (a.inputs.size() < 2) throw InputError("compare needs at least two model files");
    std::vector<ConfusionMatrix> mats;
    std::optional<Labeling> truth;
    for (const auto& path : a.inputs) {
      auto in = load_input(path, a.in.format(), a.in.labels());
      if (in.labels) {
        if (truth && !(*truth == in.labels->truth))
          throw InputError(path + ": true labels differ from the first model file");
        truth = in.labels->truth;
      }
      models.push_back(in.name);
      mats.push_back(in.matrix);
    }
    comparisons = unordered_pairs(mats);
  }
  auto rep = pairwise_inconsistency(ms, comparisons, c.eps);
  Doc doc = begin("compare", c);
  add_labels(doc, ms);
  doc["measures"] = rep.measures;
  if (!models.empty()) doc["models"] = models;
  doc["comparisons"] = rep.comparisons;
  Doc pairs = Doc::array();
  for (const auto& p : rep.pairs)
    pairs.push_back(Doc{{"first", p.first},
                        {"second", p.second},
                        {"inconsistent", p.inconsistent},
                        {"total", p.total},
                        {"rate", to_string(p.rate())},
                        {"percent", percent_string(p.percent())},
                        {"unstable", p.unstable}});
  doc["pairs"] = std::move(pairs);
  return doc;
}

struct RankArgs {
  std::vector<std::string> inputs;
  std::string measures;
  InputOptions in;
};

Doc cmd_rank(const RankArgs& a, const Common& c) {
  if (a.inputs.empty()) throw InputError("rank needs at least one model file");
  std::vector<LoadedInput> loaded;
  for (const auto& path : a.inputs) loaded.push_back(load_input(path, a.in.format(), a.in.labels()));
  const int m = loaded.front().matrix.num_classes();
  auto ms = measures_for(a.measures, m);

  RankingTable table;
  const bool all_labels = std::all_of(loaded.begin(), loaded.end(), [](const auto& x) { return x.labels.has_value(); });
  if (all_labels) {
    std::vector<std::pair<std::string, Labeling>> preds;
    for (const auto& x : loaded) {
      if (!(x.labels->truth == loaded.front().labels->truth))
        throw InputError(x.name + ": true labels differ from the first model file");
      preds.emplace_back(x.name, x.labels->pred);
    }
    table = rank_models(ms, loaded.front().labels->truth, preds, c.eps);
  } else {
    std::vector<std::pair<std::string, ConfusionMatrix>> mats;
    for (const auto& x : loaded) {
      if (x.matrix.num_classes() != m) throw InputError(x.name + ": class count differs");
      mats.emplace_back(x.name, x.matrix);
    }
    table = rank_matrices(ms, mats, c.eps);
  }
  Doc doc = begin("rank", c);
  add_labels(doc, ms);
  doc["models"] = table.models;
  Doc rankings = Doc::array();
  for (std::size_t k = 0; k < table.measures.size(); ++k) {
    Doc vals = Doc::array();
    for (const auto& v : table.values[k]) vals.push_back(value_json(v));
    rankings.push_back(Doc{{"measure", table.measures[k]}, {"values", std::move(vals)}, {"ranks", table.ranks[k]}});
  }
  doc["rankings"] = std::move(rankings);
  return doc;
}

struct BaselineArgs {
  std::string a, b, measures;
  bool check = false;
};

Doc cmd_baseline(const BaselineArgs& a, const Common& c) {
  auto sa = parse_sizes(a.a), sb = parse_sizes(a.b);
  if (sa.size() != sb.size()) throw InputError("a and b must have the same number of classes");
  const int m = static_cast<int>(sa.size());
  auto ms = parse_measure_list(a.measures.empty() ? (m == 2 ? "cc,kappa,ba,sba,gm:r=1" : "cc,kappa,ba,sba")
                                                  : a.measures);
  Budget budget(resolve_budget(c));
  Doc doc = begin("baseline", c);
  doc["a"] = sa;
  doc["b"] = sb;
  add_labels(doc, ms);
  Doc results = Doc::array();
  for (const auto& d : ms) {
    if (d.arity() == Arity::BinaryOnly && m != 2) throw ArityError(d.id() + " is binary-only");
    Value e = exact_baseline_expectation(d, sa, sb, budget);
    Doc r{{"measure", d.id()}, {"label", d.label()}, {"expectation", value_json(e)}};
    if (a.check) {
      Value e2 = baseline_expectation_by_labelings(d, sa, sb, budget);
      if (!equal(e, e2, c.eps))
        throw InvariantError("baseline oracles disagree for " + d.id() + ": " + e.exact_string() + " vs " +
                             e2.exact_string());
      r["cross_check"] = "agrees";
    }
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  return doc;
}

void add_input_options(CLI::App* sub, InputOptions& in) {
  sub->add_option("--input-format", in.input_format, "labels-csv, matrix-json or matrix-csv (default: by extension)");
  sub->add_option("--alphabet", in.alphabet, "Comma-separated class names for labels-csv");
  sub->add_option("--classes", in.classes, "Class count for integer labels");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Audit classification performance measures"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  std::string eps_text, budget_text;
  app.add_option("--format", common.format, "Report format: json, markdown or csv")->capture_default_str();
  app.add_option("-o,--output", common.output, "Write the report to a file instead of stdout");
  app.add_option("--epsilon", eps_text, "Tie tolerance for non-exact values (default 1e-12)");
  app.add_option("--budget", budget_text, "Enumeration budget (states); overrides MEASURE_AUDIT_BUDGET");
  app.add_option("--threads", common.threads, "Worker threads for triplet enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--no-timestamp", common.no_timestamp, "Omit the generation timestamp");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate measures on one confusion matrix or labeling pair");
  eval->add_option("--matrix", ev.matrix, "Confusion matrix file (matrix-json or matrix-csv)");
  eval->add_option("--labels", ev.labels, "labels-csv file with columns true,pred");
  eval->add_option("--measures", ev.measures, "Measure list, e.g. acc,cc,gm:r=-1:macro");
  add_input_options(eval, ev.in);

  AuditArgs au;
  auto* audit = app.add_subcommand("audit", "Check properties over a bounded matrix space");
  audit->add_option("--measures", au.measures, "Measure list or 'all'");
  audit->add_option("--properties", au.properties, "Property list or 'all'");
  audit->add_flag("--binary", au.binary, "Audit the binary space (m = 2)");
  audit->add_option("--m", au.m, "Class count");
  audit->add_option("--n-min", au.n_min, "Smallest n");
  audit->add_option("--n-max", au.n_max, "Largest n");
  audit->add_option("--n-max-dist", au.n_max_dist, "Largest n for the triangle search");
  audit->add_option("--extremes-filter", au.extremes_filter, "Support filter for Max/Min: full or nonunary");
  audit->add_option("--mon-filter", au.monotone_filter, "Support filter for Mon/SMon: full or nonunary");
  audit->add_flag("--averaging", au.averaging, "Also check preservation by micro, macro and weighted averaging");
  audit->add_option("--averaging-n-max", au.avg_n_max, "Largest n of the multiclass space for --averaging");
  audit->add_option("--averaging-n-max-dist", au.avg_n_max_dist, "Largest n of the multiclass triangle search");

  DistinguishArgs di;
  auto* dist = app.add_subcommand("distinguish", "Groups of measures consistent on every triplet of labelings");
  dist->add_option("--n", di.n, "n or lo:hi");
  dist->add_option("--measures", di.measures, "Measure list");
  dist->add_option("--method", di.method, "auto, labelings or matrices");
  dist->add_flag("--full", di.full, "Enumerate labelings for every n, including n >= 8");
  dist->add_flag("--exclude-equal", di.exclude_equal, "Skip triplets with B1 = B2");

  CompareArgs co;
  auto* cmp = app.add_subcommand("compare", "Pairwise inconsistency of measures over model comparisons");
  cmp->add_option("inputs", co.inputs, "Model files (labels-csv or matrices)");
  cmp->add_option("--pairs", co.pairs, "JSON array of [C1, C2] matrix pairs");
  cmp->add_option("--measures", co.measures, "Measure list");
  add_input_options(cmp, co.in);

  RankArgs ra;
  auto* rank = app.add_subcommand("rank", "Rank models under each measure");
  rank->add_option("inputs", ra.inputs, "Model files (labels-csv or matrices)")->required();
  rank->add_option("--measures", ra.measures, "Measure list");
  add_input_options(rank, ra.in);

  BaselineArgs ba;
  auto* base = app.add_subcommand("baseline", "Exact expectation under random predictions with fixed class sizes");
  base->add_option("--a", ba.a, "True class sizes, e.g. 4,3,0")->required();
  base->add_option("--b", ba.b, "Predicted class sizes")->required();
  base->add_option("--measures", ba.measures, "Measure list");
  base->add_flag("--check", ba.check, "Cross-check by enumerating labelings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    auto format = parse_output_format(common.format);
    if (!format) throw InputError("unknown output format '" + common.format + "'");
    if (!eps_text.empty()) {
      try {
        common.eps = std::stold(eps_text);
      } catch (const std::exception&) {
        throw InputError("invalid epsilon '" + eps_text + "'");
      }
      if (!(common.eps > 0)) throw InputError("epsilon must be positive");
    }
    if (!budget_text.empty()) {
      try {
        std::size_t pos = 0;
        long long v = std::stoll(budget_text, &pos);
        if (pos != budget_text.size() || v <= 0) throw std::invalid_argument(budget_text);
        common.budget = static_cast<std::uint64_t>(v);
      } catch (const std::exception&) {
        throw InputError("budget must be a positive integer, got '" + budget_text + "'");
      }
    }

    Doc doc;
    if (*eval) doc = cmd_eval(ev, common);
    else if (*audit) doc = cmd_audit(au, common);
    else if (*dist) doc = cmd_distinguish(di, common);
    else if (*cmp) doc = cmd_compare(co, common);
    else if (*rank) doc = cmd_rank(ra, common);
    else doc = cmd_baseline(ba, common);

    const std::string text = render(doc, *format);
    if (common.output.empty()) {
      out << text;
    } else {
      std::ofstream f(common.output, std::ios::binary);
      if (!f) throw InputError("cannot write '" + common.output + "'");
      f << text;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kExitInvariantFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariantFailure;
  }
}

}  // namespace maudit::cli
