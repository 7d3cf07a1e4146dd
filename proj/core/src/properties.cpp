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

#include "maudit/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "maudit/errors.hpp"

namespace maudit {

const std::vector<Property>& all_properties() {
  static const std::vector<Property> props = {Property::Max, Property::Min,  Property::CSym,
                                              Property::Sym, Property::Dist, Property::Mon,
                                              Property::SMon, Property::CB,  Property::ACB};
  return props;
}

const char* to_string(Property p) {
  switch (p) {
    case Property::Max: return "Max";
    case Property::Min: return "Min";
    case Property::CSym: return "CSym";
    case Property::Sym: return "Sym";
    case Property::Dist: return "Dist";
    case Property::Mon: return "Mon";
    case Property::SMon: return "SMon";
    case Property::CB: return "CB";
    case Property::ACB: return "ACB";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  for (Property p : all_properties()) {
    std::string s = to_string(p);
    if (s.size() != name.size()) continue;
    if (std::equal(s.begin(), s.end(), name.begin(),
                   [](char x, char y) { return std::tolower(x) == std::tolower(y); }))
      return p;
  }
  return std::nullopt;
}

namespace {

// Memoized evaluation keyed by the entry list; the audit spaces revisit the
// same small matrices many times.
class Memo {
 public:
  struct Entry {
    Value raw;
    Value oriented;
    long double approx;  // oriented
  };

  explicit Memo(MeasureDescriptor d) : d_(std::move(d)) {}

  const Entry& get(const ConfusionMatrix& c) {
    std::string key = key_of(c);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return insert(std::move(key), c);
  }

  const Entry& get_cells(const std::vector<std::int64_t>& cells, int m) {
    std::string key(cells.size(), '\0');
    bool small = true;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (cells[k] > 250) small = false;
      key[k] = static_cast<char>(cells[k]);
    }
    if (!small) return get(ConfusionMatrix::from_counts(m, cells));
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return insert(std::move(key), ConfusionMatrix::from_counts(m, cells));
  }

  const MeasureDescriptor& measure() const { return d_; }

 private:
  static std::string key_of(const ConfusionMatrix& c) {
    std::string key;
    bool small = c.is_integral();
    if (small)
      for (const auto& x : c.entries())
        if (x > 250) small = false;
    if (small) {
      for (const auto& x : c.entries()) key.push_back(static_cast<char>(x.get_num().get_si()));
      return key;
    }
    return "#" + c.to_string();
  }

  const Entry& insert(std::string key, const ConfusionMatrix& c) {
    Value raw = evaluate(d_, c);
    Value o = orient(d_, raw);
    long double a = o.approx();
    return cache_.emplace(std::move(key), Entry{std::move(raw), std::move(o), a}).first->second;
  }

  MeasureDescriptor d_;
  std::unordered_map<std::string, Entry> cache_;
};

std::vector<std::int64_t> cells_of(const ConfusionMatrix& c) {
  std::vector<std::int64_t> out;
  for (const auto& x : c.entries()) out.push_back(x.get_num().get_si());
  return out;
}

bool passes(const ConfusionMatrix& c, SupportFilter f) {
  if (f == SupportFilter::Full) return c.full_support();
  return !c.true_unary() && !c.pred_unary();
}

void for_each_in_space(const AuditSpace& s, int n_max, Budget& budget,
                       const std::function<void(const ConfusionMatrix&)>& visit) {
  for (int n = std::max(1, s.n_min); n <= n_max; ++n) for_each_matrix_with_total(s.m, n, budget, visit);
}

Verdict start(const MeasureDescriptor& d, Property p, const AuditSpace& s) {
  Verdict v;
  v.measure = d.id();
  v.property = p;
  v.space = s;
  return v;
}

// Tracks the first violation and whether every violation seen was a tie.
// A strict violation, when one exists, is preferred as the reported witness.
struct Violations {
  std::optional<Witness> first;
  bool any_strict = false;

  void add(Witness w, bool tie) {
    if (!tie && !any_strict) {
      any_strict = true;
      first = std::move(w);
    } else if (!first) {
      first = std::move(w);
    }
  }

  void finish(Verdict& v) {
    if (!first) return;
    v.status = Status::Violated;
    v.witness = std::move(first);
    v.ties_only = !any_strict;
  }
};

Witness make_witness(WitnessKind kind, Property via, std::vector<ConfusionMatrix> ms,
                     std::vector<Value> vals, std::string note = {}) {
  Witness w;
  w.kind = kind;
  w.via = via;
  w.matrices = std::move(ms);
  w.values = std::move(vals);
  w.note = std::move(note);
  return w;
}

Verdict check_extreme(const MeasureDescriptor& d, Property p, const AuditSpace& s, Budget& budget) {
  const bool is_max = p == Property::Max;
  auto extreme = [&](const ConfusionMatrix& c) { return is_max ? c.is_diagonal() : c.is_zero_diagonal(); };
  Verdict v = start(d, p, s);
  Memo memo(d);
  Violations bad;
  std::optional<ConfusionMatrix> ref;

  for_each_in_space(s, s.n_max, budget, [&](const ConfusionMatrix& c) {
    if (!passes(c, s.extremes_filter) || !extreme(c)) return;
    if (!ref) {
      ref = c;
      return;
    }
    const auto& e = memo.get(c);
    const auto& r = memo.get(*ref);
    if (compare(e.oriented, r.oriented, s.eps) != Relation::Equal)
      bad.add(make_witness(WitnessKind::ExtremeNotConstant, p, {*ref, c}, {r.raw, e.raw},
                           is_max ? "diagonal matrices disagree" : "zero-diagonal matrices disagree"),
              false);
  });
  if (!ref) throw InputError("search space has no " + std::string(is_max ? "diagonal" : "zero-diagonal") +
                             " matrix with the required support");

  const Value ref_value = memo.get(*ref).oriented;
  for_each_in_space(s, s.n_max, budget, [&](const ConfusionMatrix& c) {
    if (!passes(c, s.extremes_filter) || extreme(c)) return;
    const auto& e = memo.get(c);
    Relation rel = compare(e.oriented, ref_value, s.eps);
    bool ok = is_max ? rel == Relation::Less : rel == Relation::Greater;
    if (!ok)
      bad.add(make_witness(WitnessKind::ExtremeNotStrict, p, {*ref, c}, {memo.get(*ref).raw, e.raw},
                           is_max ? "non-diagonal matrix reaches the maximum"
                                  : "non-zero-diagonal matrix reaches the minimum"),
              rel == Relation::Equal);
  });
  bad.finish(v);
  return v;
}

Verdict check_symmetry(const MeasureDescriptor& d, const AuditSpace& s, Budget& budget) {
  Verdict v = start(d, Property::Sym, s);
  Memo memo(d);
  Violations bad;
  for_each_in_space(s, s.n_max, budget, [&](const ConfusionMatrix& c) {
    if (bad.first) return;
    ConfusionMatrix t = transpose(c);
    const auto& x = memo.get(c);
    const auto& y = memo.get(t);
    if (!equal(x.raw, y.raw, s.eps))
      bad.add(make_witness(WitnessKind::Asymmetric, Property::Sym, {c, t}, {x.raw, y.raw}), false);
  });
  bad.finish(v);
  return v;
}

Verdict check_class_symmetry(const MeasureDescriptor& d, const AuditSpace& s, Budget& budget) {
  Verdict v = start(d, Property::CSym, s);
  Memo memo(d);
  Violations bad;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(s.m);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) perms.push_back(perm);

  for_each_in_space(s, s.n_max, budget, [&](const ConfusionMatrix& c) {
    if (bad.first) return;
    const auto& x = memo.get(c);
    for (const auto& p : perms) {
      ConfusionMatrix q = permute_classes(c, p);
      const auto& y = memo.get(q);
      if (!equal(x.raw, y.raw, s.eps)) {
        Witness w = make_witness(WitnessKind::ClassAsymmetric, Property::CSym, {c, q}, {x.raw, y.raw});
        w.permutation = p;
        bad.add(std::move(w), false);
        return;
      }
    }
  });
  bad.finish(v);
  return v;
}

Verdict check_monotone(const MeasureDescriptor& d, Property p, const AuditSpace& s, Budget& budget) {
  const bool strong = p == Property::SMon;
  const int m = s.m;
  Verdict v = start(d, p, s);
  Memo memo(d);
  Violations bad;

  auto test = [&](const ConfusionMatrix& c, const Memo::Entry& base, std::vector<std::int64_t> cells,
                  const char* note) {
    const auto& e = memo.get_cells(cells, m);
    Relation rel = compare(e.oriented, base.oriented, s.eps);
    if (rel != Relation::Greater)
      bad.add(make_witness(WitnessKind::NotMonotone, p, {c, ConfusionMatrix::from_counts(m, cells)},
                           {base.raw, e.raw}, note),
              rel == Relation::Equal);
  };

  for_each_in_space(s, s.n_max, budget, [&](const ConfusionMatrix& c) {
    if (!passes(c, s.monotone_filter)) return;
    const auto cells = cells_of(c);
    const auto& base = memo.get(c);
    const std::int64_t n = std::accumulate(cells.begin(), cells.end(), std::int64_t{0});
    if (!strong) {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          if (a == b || cells[a * m + b] == 0) continue;
          for (int target : {a, b}) {
            auto e = cells;
            --e[a * m + b];
            ++e[target * m + target];
            test(c, base, e, "off-diagonal entry moved onto the diagonal");
          }
        }
      return;
    }
    auto skip = [&](const std::vector<std::int64_t>& e) {
      bool d0 = c.is_diagonal(), z0 = c.is_zero_diagonal();
      bool d1 = true, z1 = true;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (i != j && e[i * m + j] != 0) d1 = false;
          if (i == j && e[i * m + j] != 0) z1 = false;
        }
      return (d0 && d1) || (z0 && z1);
    };
    for (int i = 0; i < m; ++i) {
      auto e = cells;
      ++e[i * m + i];
      if (!skip(e)) test(c, base, e, "diagonal entry increased");
    }
    if (n < 2) return;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j || cells[i * m + j] == 0) continue;
        auto e = cells;
        --e[i * m + j];
        if (!skip(e)) test(c, base, e, "off-diagonal entry decreased");
      }
  });
  bad.finish(v);
  return v;
}

Verdict check_distance(const MeasureDescriptor& d, const AuditSpace& s, Budget& budget) {
  Verdict v = start(d, Property::Dist, s);
  for (Property pre : {Property::Sym, Property::Max}) {
    Verdict pv = check_property(d, pre, s, budget);
    if (!pv.holds()) {
      v.status = Status::Violated;
      v.witness = pv.witness;
      std::string note = std::string("distance needs ") + to_string(pre);
      if (!v.witness->note.empty()) note += ": " + v.witness->note;
      v.witness->note = note;
      v.ties_only = pv.ties_only;
      return v;
    }
  }

  const int m = s.m;
  Memo memo(d);
  std::vector<std::int64_t> diag(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) diag[i * m + i] = 1;
  const Value c_max = memo.get_cells(diag, m).oriented;
  const long double c_max_approx = c_max.approx();

  const int cube = m * m * m;
  std::vector<std::int64_t> ab(m * m), bc(m * m), ac(m * m);
  Violations bad;

  for (int n = std::max(1, s.n_min); n <= s.n_max_dist && !bad.first; ++n) {
    for_each_composition(n, cube, [&](std::span<const std::int64_t> t) {
      if (bad.first) return;
      budget.charge();
      std::fill(ab.begin(), ab.end(), 0);
      std::fill(bc.begin(), bc.end(), 0);
      std::fill(ac.begin(), ac.end(), 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k) {
            std::int64_t x = t[(i * m + j) * m + k];
            if (!x) continue;
            ab[i * m + j] += x;
            bc[j * m + k] += x;
            ac[i * m + k] += x;
          }
      const auto& e_ab = memo.get_cells(ab, m);
      const auto& e_bc = memo.get_cells(bc, m);
      const auto& e_ac = memo.get_cells(ac, m);
      long double slack = (c_max_approx - e_ab.approx) + (c_max_approx - e_bc.approx) -
                          (c_max_approx - e_ac.approx);
      if (slack > 1e-9L) return;
      Value lhs = (c_max - e_ab.oriented) + (c_max - e_bc.oriented);
      Value rhs = c_max - e_ac.oriented;
      if (compare(lhs, rhs, s.eps) != Relation::Less) return;

      std::vector<int> la, lb, lc;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k)
            for (std::int64_t r = 0; r < t[(i * m + j) * m + k]; ++r) {
              la.push_back(i);
              lb.push_back(j);
              lc.push_back(k);
            }
      Witness w = make_witness(WitnessKind::Triangle, Property::Dist,
                               {ConfusionMatrix::from_counts(m, ab), ConfusionMatrix::from_counts(m, bc),
                                ConfusionMatrix::from_counts(m, ac)},
                               {e_ab.raw, e_bc.raw, e_ac.raw},
                               "d(A,C) > d(A,B) + d(B,C) for d = c_max - M");
      w.labelings = {Labeling(la, m), Labeling(lb, m), Labeling(lc, m)};
      bad.add(std::move(w), false);
    });
  }
  bad.finish(v);
  return v;
}

template <typename F>
void for_each_size_pair(const AuditSpace& s, F&& visit) {
  for (int n = std::max(2, s.n_min); n <= s.n_max; ++n) {
    std::vector<std::vector<std::int64_t>> comps;
    for_each_composition(n, s.m, [&](std::span<const std::int64_t> x) { comps.emplace_back(x.begin(), x.end()); });
    for (const auto& a : comps)
      for (const auto& b : comps) {
        if (is_unary(b)) continue;
        if (s.baseline_filter == SupportFilter::Full &&
            (std::count(a.begin(), a.end(), 0) || std::count(b.begin(), b.end(), 0)))
          continue;
        if (!visit(a, b)) return;
      }
  }
}

Verdict check_baseline(const MeasureDescriptor& d, Property p, const AuditSpace& s, Budget& budget) {
  Verdict v = start(d, p, s);
  const bool exact = p == Property::CB;
  std::optional<Value> ref;
  std::vector<std::int64_t> ref_a, ref_b;
  for_each_size_pair(s, [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    Value e = exact ? exact_baseline_expectation(d, a, b, budget)
                    : evaluate(d, expected_matrix(std::span<const std::int64_t>(a), std::span<const std::int64_t>(b)));
    if (!exact) budget.charge();
    if (!ref) {
      ref = e;
      ref_a = a;
      ref_b = b;
      return true;
    }
    if (equal(e, *ref, s.eps)) return true;
    Witness w;
    w.kind = exact ? WitnessKind::BaselineVaries : WitnessKind::ApproxBaselineVaries;
    w.via = p;
    w.sizes = {ref_a, ref_b, a, b};
    w.values = {*ref, e};
    if (!exact)
      w.matrices = {expected_matrix(std::span<const std::int64_t>(ref_a), std::span<const std::int64_t>(ref_b)),
                    expected_matrix(std::span<const std::int64_t>(a), std::span<const std::int64_t>(b))};
    w.note = exact ? "expectation under random predictions depends on class sizes"
                   : "value at the expected matrix depends on class sizes";
    v.status = Status::Violated;
    v.witness = std::move(w);
    return false;
  });
  return v;
}

}  // namespace

Verdict check_property(const MeasureDescriptor& d, Property p, const AuditSpace& space, Budget& budget) {
  if (space.m < 2 || space.n_max < 1) throw InputError("audit space needs m >= 2 and n_max >= 1");
  if (d.arity() == Arity::BinaryOnly && space.m != 2)
    throw ArityError(d.id() + " is binary-only; audit it with m = 2 or an averaging suffix");
  switch (p) {
    case Property::Max:
    case Property::Min: return check_extreme(d, p, space, budget);
    case Property::Sym: return check_symmetry(d, space, budget);
    case Property::CSym: return check_class_symmetry(d, space, budget);
    case Property::Dist: return check_distance(d, space, budget);
    case Property::Mon:
    case Property::SMon: return check_monotone(d, p, space, budget);
    case Property::CB:
    case Property::ACB: return check_baseline(d, p, space, budget);
  }
  throw InvariantError("unhandled property");
}

bool replay_witness(const MeasureDescriptor& d, const Witness& w, long double eps) {
  auto ov = [&](const ConfusionMatrix& c) { return evaluate_oriented(d, c); };
  switch (w.kind) {
    case WitnessKind::ExtremeNotConstant:
      return !equal(ov(w.matrices[0]), ov(w.matrices[1]), eps);
    case WitnessKind::ExtremeNotStrict: {
      Relation r = compare(ov(w.matrices[1]), ov(w.matrices[0]), eps);
      return w.via == Property::Max ? r != Relation::Less : r != Relation::Greater;
    }
    case WitnessKind::Asymmetric:
      return w.matrices[1] == transpose(w.matrices[0]) &&
             !equal(evaluate(d, w.matrices[0]), evaluate(d, w.matrices[1]), eps);
    case WitnessKind::ClassAsymmetric:
      return w.matrices[1] == permute_classes(w.matrices[0], w.permutation) &&
             !equal(evaluate(d, w.matrices[0]), evaluate(d, w.matrices[1]), eps);
    case WitnessKind::Triangle: {
      const auto& L = w.labelings;
      ConfusionMatrix ab = build_confusion(L[0], L[1]);
      ConfusionMatrix bc = build_confusion(L[1], L[2]);
      ConfusionMatrix ac = build_confusion(L[0], L[2]);
      const int m = L[0].num_classes();
      std::vector<std::int64_t> diag(static_cast<std::size_t>(m) * m, 0);
      for (int i = 0; i < m; ++i) diag[i * m + i] = 1;
      Value c_max = ov(ConfusionMatrix::from_counts(m, diag));
      Value lhs = (c_max - ov(ab)) + (c_max - ov(bc));
      return compare(lhs, c_max - ov(ac), eps) == Relation::Less;
    }
    case WitnessKind::NotMonotone:
      return compare(ov(w.matrices[1]), ov(w.matrices[0]), eps) != Relation::Greater;
    case WitnessKind::BaselineVaries: {
      Budget budget;
      return !equal(exact_baseline_expectation(d, w.sizes[0], w.sizes[1], budget),
                    exact_baseline_expectation(d, w.sizes[2], w.sizes[3], budget), eps);
    }
    case WitnessKind::ApproxBaselineVaries: {
      auto em = [&](int k) {
        return evaluate(d, expected_matrix(std::span<const std::int64_t>(w.sizes[k]),
                                           std::span<const std::int64_t>(w.sizes[k + 1])));
      };
      return !equal(em(0), em(2), eps);
    }
  }
  return false;
}

Value exact_baseline_expectation(const MeasureDescriptor& d, std::span<const std::int64_t> a,
                                 std::span<const std::int64_t> b, Budget& budget) {
  if (is_unary(a) && is_unary(b))
    throw InputError("both class-size vectors are unary; the baseline is undefined there");
  Value total = Value::exact(0);
  for_each_confusion_matrix(a, b, budget, [&](const ConfusionMatrix& c, const Integer& k) {
    total = total + evaluate(d, c).scaled(Rational(k));
  });
  return total.scaled(Rational(1) / Rational(multinomial(b)));
}

Value baseline_expectation_by_labelings(const MeasureDescriptor& d, std::span<const std::int64_t> a,
                                        std::span<const std::int64_t> b, Budget& budget) {
  if (is_unary(a) && is_unary(b))
    throw InputError("both class-size vectors are unary; the baseline is undefined there");
  const int m = static_cast<int>(a.size());
  std::vector<int> truth;
  for (int c = 0; c < m; ++c)
    for (std::int64_t k = 0; k < a[c]; ++k) truth.push_back(c);
  Labeling A(truth, m);
  LabelingSpace space;
  space.n = static_cast<int>(truth.size());
  space.m = m;
  space.class_sizes = std::vector<std::int64_t>(b.begin(), b.end());
  Value total = Value::exact(0);
  Integer count = 0;
  for_each_labeling(space, budget, [&](const Labeling& B) {
    total = total + evaluate(d, build_confusion(A, B));
    ++count;
    return true;
  });
  return total.scaled(Rational(1) / Rational(count));
}

PreservationResult check_averaging_preservation(Averaging scheme, Property p, const AuditSpace& binary,
                                                const AuditSpace& multiclass, Budget& budget) {
  if (scheme == Averaging::None) throw InputError("no averaging scheme given");
  PreservationResult out;
  std::vector<MeasureDescriptor> candidates = registry_binary_measures();
  candidates.push_back(MeasureDescriptor::of(MeasureKind::SignedAgreement));
  candidates.push_back(MeasureDescriptor::of(MeasureKind::AnyAgreement));

  std::vector<MeasureDescriptor> holders;
  for (const auto& d : candidates)
    if (check_property(d, p, binary, budget).holds()) holders.push_back(d);

  auto run = [&](const AuditSpace& space) {
    for (const auto& d : holders) {
      MeasureDescriptor avg = d.with_scheme(scheme);
      Verdict v = check_property(avg, p, space, budget);
      if (!v.holds()) {
        out.verdict = std::move(v);
        out.witness_measure = avg.id();
        return true;
      }
    }
    return false;
  };

  // One-vs-all reductions of a matrix with a missing class are unary, where
  // the binary property was never required; averaged forms are audited on
  // full support only.
  AuditSpace space = multiclass;
  space.extremes_filter = space.monotone_filter = space.baseline_filter = SupportFilter::Full;
  for (const auto& d : holders) out.measures_checked.push_back(d.id());
  if (run(space)) return out;
  if (p == Property::SMon && space.m < 4) {
    AuditSpace wider = space;
    wider.m = 4;
    wider.n_max = std::min(multiclass.n_max, 5);
    if (run(wider)) return out;
  }
  out.verdict.measure = std::string("registry:") + to_string(scheme);
  out.verdict.property = p;
  out.verdict.space = space;
  out.verdict.status = Status::Satisfied;
  return out;
}

}  // namespace maudit
