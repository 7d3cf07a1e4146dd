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

#include <algorithm>
#include <cctype>

#include "maudit/averaging.hpp"
#include "maudit/errors.hpp"
#include "maudit/measures.hpp"

namespace maudit {

namespace {

bool param_is_integer(const Rational& q) { return q.get_den() == 1; }

// Terminating decimals print as decimals, everything else as p/q.
std::string param_string(const Rational& q) {
  if (q.get_den() == 1) return to_string(q);
  Integer scale = 10;
  for (int digits = 1; digits <= 30; ++digits, scale *= 10) {
    if (scale % q.get_den() != 0) continue;
    std::string s = Integer(abs(q.get_num()) * (scale / q.get_den())).get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') s.pop_back();
    return (q < 0 ? "-" : "") + s;
  }
  return to_string(q);
}

}  // namespace

MeasureDescriptor MeasureDescriptor::of(MeasureKind kind, Rational param, Averaging scheme) {
  MeasureDescriptor d;
  d.kind = kind;
  d.param = std::move(param);
  d.scheme = scheme;
  if (kind != MeasureKind::FBeta && kind != MeasureKind::GeneralizedMeans) d.param = 1;
  if (kind == MeasureKind::FBeta && d.param <= 0) throw InputError("F-measure needs beta > 0");
  if (kind == MeasureKind::GeneralizedMeans && d.param == 0)
    throw InputError("GM_r needs r != 0; use cc for the r -> 0 limit");
  return d;
}

std::string MeasureDescriptor::id() const {
  std::string s;
  switch (kind) {
    case MeasureKind::Accuracy: s = "acc"; break;
    case MeasureKind::BalancedAccuracy: s = "ba"; break;
    case MeasureKind::SymmetricBalancedAccuracy: s = "sba"; break;
    case MeasureKind::CohensKappa: s = "kappa"; break;
    case MeasureKind::Matthews: s = "cc"; break;
    case MeasureKind::ConfusionEntropy: s = "ce"; break;
    case MeasureKind::FBeta: s = "f:beta=" + param_string(param); break;
    case MeasureKind::Jaccard: s = "jaccard"; break;
    case MeasureKind::GeneralizedMeans: s = "gm:r=" + param_string(param); break;
    case MeasureKind::CorrelationDistance: s = "cd"; break;
    case MeasureKind::CorrelationDistancePrime: s = "cdprime"; break;
    case MeasureKind::SignedAgreement: s = "tptn"; break;
    case MeasureKind::AnyAgreement: s = "anyagree"; break;
  }
  if (scheme != Averaging::None) s += std::string(":") + to_string(scheme);
  return s;
}

std::string MeasureDescriptor::label() const {
  std::string s;
  switch (kind) {
    case MeasureKind::Accuracy: s = "Acc"; break;
    case MeasureKind::BalancedAccuracy: s = "BA"; break;
    case MeasureKind::SymmetricBalancedAccuracy: s = "SBA"; break;
    case MeasureKind::CohensKappa: s = "Kappa"; break;
    case MeasureKind::Matthews: s = "CC"; break;
    case MeasureKind::ConfusionEntropy: s = "CE"; break;
    case MeasureKind::FBeta: s = "F_" + param_string(param); break;
    case MeasureKind::Jaccard: s = "J"; break;
    case MeasureKind::GeneralizedMeans: s = "GM_" + param_string(param); break;
    case MeasureKind::CorrelationDistance: s = "CD"; break;
    case MeasureKind::CorrelationDistancePrime: s = "CD'"; break;
    case MeasureKind::SignedAgreement: s = "TP+TN-FP-FN"; break;
    case MeasureKind::AnyAgreement: s = "1{TP+TN>0}"; break;
  }
  if (scheme != Averaging::None) s += std::string("^") + to_string(scheme);
  return s;
}

Arity MeasureDescriptor::arity() const {
  if (scheme != Averaging::None) return Arity::Multiclass;
  switch (kind) {
    case MeasureKind::FBeta:
    case MeasureKind::Jaccard:
    case MeasureKind::GeneralizedMeans:
    case MeasureKind::SignedAgreement:
    case MeasureKind::AnyAgreement:
      return Arity::BinaryOnly;
    default:
      return Arity::Multiclass;
  }
}

Orientation MeasureDescriptor::orientation() const {
  switch (kind) {
    case MeasureKind::ConfusionEntropy:
    case MeasureKind::CorrelationDistance:
    case MeasureKind::CorrelationDistancePrime:
      return Orientation::Dissimilarity;
    default:
      return Orientation::Similarity;
  }
}

NumericClass MeasureDescriptor::numeric_class() const {
  switch (kind) {
    case MeasureKind::ConfusionEntropy:
    case MeasureKind::CorrelationDistance:
    case MeasureKind::CorrelationDistancePrime:
      return NumericClass::Transcendental;
    case MeasureKind::GeneralizedMeans:
      return param_is_integer(param) ? NumericClass::Exact : NumericClass::Transcendental;
    default:
      return NumericClass::Exact;
  }
}

MeasureDescriptor MeasureDescriptor::base() const { return with_scheme(Averaging::None); }

MeasureDescriptor MeasureDescriptor::with_scheme(Averaging s) const {
  MeasureDescriptor d = *this;
  d.scheme = s;
  return d;
}

std::optional<Value> MeasureDescriptor::c_max() const {
  switch (kind) {
    case MeasureKind::SignedAgreement:
    case MeasureKind::AnyAgreement:
      return std::nullopt;
    case MeasureKind::ConfusionEntropy:
    case MeasureKind::CorrelationDistance:
    case MeasureKind::CorrelationDistancePrime:
      return Value::real(0);
    default:
      return Value::exact(1);
  }
}

std::optional<Value> MeasureDescriptor::c_min(int m) const {
  if (scheme != Averaging::None) return std::nullopt;
  switch (kind) {
    case MeasureKind::Accuracy:
    case MeasureKind::BalancedAccuracy:
    case MeasureKind::SymmetricBalancedAccuracy:
      return Value::exact(0);
    case MeasureKind::Matthews:
    case MeasureKind::GeneralizedMeans:
      if (m == 2) return Value::exact(-1);
      return std::nullopt;
    case MeasureKind::CorrelationDistance:
      if (m == 2) return Value::real(-1);
      return std::nullopt;
    case MeasureKind::CorrelationDistancePrime:
      if (m == 2) return Value::real(-2);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<Value> MeasureDescriptor::c_base(int m) const {
  if (scheme != Averaging::None) return std::nullopt;
  switch (kind) {
    case MeasureKind::Matthews:
    case MeasureKind::CohensKappa:
      return Value::exact(0);
    case MeasureKind::GeneralizedMeans:
      if (param_is_integer(param)) return Value::exact(0);
      return std::nullopt;
    case MeasureKind::BalancedAccuracy:
    case MeasureKind::SymmetricBalancedAccuracy:
      return Value::exact(Rational(1, m));
    default:
      return std::nullopt;
  }
}

const char* to_string(Averaging s) {
  switch (s) {
    case Averaging::None: return "none";
    case Averaging::Micro: return "micro";
    case Averaging::Macro: return "macro";
    case Averaging::Weighted: return "weighted";
  }
  return "?";
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string trim(std::string s) {
  auto ws = [](unsigned char ch) { return std::isspace(ch) != 0; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t k = 0;
  while (k < s.size() && ws(s[k])) ++k;
  return s.substr(k);
}

}  // namespace

MeasureDescriptor parse_measure(std::string_view text) {
  auto parts = split(text, ':');
  std::string name = lower(trim(parts[0]));
  MeasureKind kind;
  Rational param = 1;
  std::string param_key;
  if (name == "acc" || name == "accuracy") kind = MeasureKind::Accuracy;
  else if (name == "ba") kind = MeasureKind::BalancedAccuracy;
  else if (name == "sba") kind = MeasureKind::SymmetricBalancedAccuracy;
  else if (name == "kappa") kind = MeasureKind::CohensKappa;
  else if (name == "cc" || name == "mcc") kind = MeasureKind::Matthews;
  else if (name == "ce") kind = MeasureKind::ConfusionEntropy;
  else if (name == "f" || name == "f1") kind = MeasureKind::FBeta, param_key = "beta";
  else if (name == "jaccard" || name == "j") kind = MeasureKind::Jaccard;
  else if (name == "gm") kind = MeasureKind::GeneralizedMeans, param_key = "r";
  else if (name == "cd") kind = MeasureKind::CorrelationDistance;
  else if (name == "cdprime") kind = MeasureKind::CorrelationDistancePrime;
  else if (name == "tptn") kind = MeasureKind::SignedAgreement;
  else if (name == "anyagree") kind = MeasureKind::AnyAgreement;
  else throw InputError("unknown measure '" + std::string(text) + "'");

  Averaging scheme = Averaging::None;
  bool have_param = false;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::string tok = lower(trim(parts[k]));
    if (auto eq = tok.find('='); eq != std::string::npos) {
      std::string key = tok.substr(0, eq);
      if (param_key.empty() || key != param_key || have_param || name == "f1")
        throw InputError("unexpected parameter '" + tok + "' in '" + std::string(text) + "'");
      param = parse_rational(tok.substr(eq + 1));
      have_param = true;
    } else if (scheme == Averaging::None && tok == "micro") {
      scheme = Averaging::Micro;
    } else if (scheme == Averaging::None && tok == "macro") {
      scheme = Averaging::Macro;
    } else if (scheme == Averaging::None && tok == "weighted") {
      scheme = Averaging::Weighted;
    } else {
      throw InputError("unexpected token '" + tok + "' in '" + std::string(text) + "'");
    }
  }
  return MeasureDescriptor::of(kind, param, scheme);
}

std::vector<MeasureDescriptor> default_measures() {
  using K = MeasureKind;
  return {MeasureDescriptor::of(K::FBeta, 1),
          MeasureDescriptor::of(K::Jaccard),
          MeasureDescriptor::of(K::Matthews),
          MeasureDescriptor::of(K::Accuracy),
          MeasureDescriptor::of(K::BalancedAccuracy),
          MeasureDescriptor::of(K::CohensKappa),
          MeasureDescriptor::of(K::ConfusionEntropy),
          MeasureDescriptor::of(K::SymmetricBalancedAccuracy),
          MeasureDescriptor::of(K::GeneralizedMeans, 1),
          MeasureDescriptor::of(K::CorrelationDistance)};
}

std::vector<MeasureDescriptor> registry_binary_measures() {
  auto all = default_measures();
  all.push_back(MeasureDescriptor::of(MeasureKind::CorrelationDistancePrime));
  return all;
}

std::vector<MeasureDescriptor> parse_measure_list(std::string_view text) {
  std::vector<MeasureDescriptor> out;
  for (const auto& tok : split(text, ',')) {
    std::string t = trim(tok);
    if (t.empty()) continue;
    if (lower(t) == "all") {
      for (const auto& d : default_measures()) out.push_back(d);
    } else {
      out.push_back(parse_measure(t));
    }
  }
  if (out.empty()) throw InputError("empty measure list");
  return out;
}

Value evaluate(const MeasureDescriptor& d, const ConfusionMatrix& c) {
  if (d.scheme != Averaging::None) return extend(d.scheme, as_binary_measure(d), c);
  if (d.arity() == Arity::BinaryOnly && c.num_classes() != 2)
    throw ArityError(d.id() + " is binary-only; use :micro, :macro or :weighted for " +
                     std::to_string(c.num_classes()) + " classes");
  switch (d.kind) {
    case MeasureKind::Accuracy: return accuracy(c);
    case MeasureKind::BalancedAccuracy: return balanced_accuracy(c);
    case MeasureKind::SymmetricBalancedAccuracy: return symmetric_balanced_accuracy(c);
    case MeasureKind::CohensKappa: return cohens_kappa(c);
    case MeasureKind::Matthews: return matthews_cc(c);
    case MeasureKind::ConfusionEntropy: return confusion_entropy(c);
    case MeasureKind::CorrelationDistance: return correlation_distance(c);
    case MeasureKind::CorrelationDistancePrime: return cd_prime(c);
    case MeasureKind::FBeta: return f_beta(c.binary(), d.param);
    case MeasureKind::Jaccard: return jaccard(c.binary());
    case MeasureKind::GeneralizedMeans: return generalized_means(c.binary(), d.param);
    case MeasureKind::SignedAgreement: return signed_agreement(c.binary());
    case MeasureKind::AnyAgreement: return any_agreement(c.binary());
  }
  throw InvariantError("unhandled measure kind");
}

Value orient(const MeasureDescriptor& d, const Value& v) {
  return d.orientation() == Orientation::Dissimilarity ? -v : v;
}

Value evaluate_oriented(const MeasureDescriptor& d, const ConfusionMatrix& c) {
  return orient(d, evaluate(d, c));
}

}  // namespace maudit
