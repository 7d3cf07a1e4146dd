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

#include "maudit/inconsistency.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

#include "maudit/errors.hpp"

namespace maudit {

Relation triplet_relation(const MeasureDescriptor& d, const Triplet& t, long double eps) {
  return compare(evaluate_oriented(d, build_confusion(t.truth, t.first)),
                 evaluate_oriented(d, build_confusion(t.truth, t.second)), eps);
}

Consistency triplet_verdict(const MeasureDescriptor& m1, const MeasureDescriptor& m2, const Triplet& t,
                            long double eps) {
  return triplet_relation(m1, t, eps) == triplet_relation(m2, t, eps) ? Consistency::Consistent
                                                                      : Consistency::Inconsistent;
}

bool strictly_inconsistent(const MeasureDescriptor& m1, const MeasureDescriptor& m2, const Triplet& t,
                           long double eps) {
  int r1 = static_cast<int>(triplet_relation(m1, t, eps));
  int r2 = static_cast<int>(triplet_relation(m2, t, eps));
  return r1 * r2 == -1;
}

namespace {

// Distinct binary confusion matrices of n elements with non-unary
// predictions, grouped by the number of true positives a1.
struct MatrixTable {
  int n;
  std::vector<BinaryCounts> counts;
  std::vector<Integer> multiplicity;  // labelings B per fixed A
  std::vector<std::vector<int>> by_a1;
  std::vector<int> index;  // [a1][c11][c01] flattened, -1 if absent

  int lookup(int a1, int c11, int c01) const { return index[(a1 * (n + 1) + c11) * (n + 1) + c01]; }
};

MatrixTable build_table(int n) {
  MatrixTable t;
  t.n = n;
  t.by_a1.resize(n + 1);
  t.index.assign(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1), -1);
  for (int a1 = 1; a1 < n; ++a1) {
    const int a0 = n - a1;
    for (int c11 = 0; c11 <= a1; ++c11)
      for (int c01 = 0; c01 <= a0; ++c01) {
        int b1 = c11 + c01;
        if (b1 < 1 || b1 > n - 1) continue;
        int id = static_cast<int>(t.counts.size());
        t.counts.emplace_back(c11, a1 - c11, c01, a0 - c01);
        t.multiplicity.push_back(binomial(a1, c11) * binomial(a0, c01));
        t.by_a1[a1].push_back(id);
        t.index[(a1 * (n + 1) + c11) * (n + 1) + c01] = id;
      }
  }
  return t;
}

// codes[i * K + j]: base-3 digits of the relation of each measure between
// matrices i and j (0 '<', 1 '=', 2 '>'); only same-a1 pairs are filled.
std::vector<std::uint32_t> relation_codes(const MatrixTable& t, const std::vector<MeasureDescriptor>& ms,
                                          long double eps) {
  const std::size_t K = t.counts.size();
  std::vector<std::vector<Value>> values(ms.size());
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (const auto& bc : t.counts) values[k].push_back(evaluate_oriented(ms[k], ConfusionMatrix(bc)));
  std::vector<std::uint32_t> codes(K * K, 0);
  for (const auto& group : t.by_a1)
    for (int i : group)
      for (int j : group) {
        std::uint32_t code = 0, place = 1;
        for (std::size_t k = 0; k < ms.size(); ++k, place *= 3)
          code += place * static_cast<std::uint32_t>(static_cast<int>(compare(values[k][i], values[k][j], eps)) + 1);
        codes[i * K + j] = code;
      }
  return codes;
}

std::vector<std::vector<std::string>> groups_from(const std::vector<std::vector<std::uint64_t>>& bad,
                                                  const std::vector<std::string>& names) {
  const std::size_t M = names.size();
  std::vector<std::size_t> parent(M);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = i + 1; j < M; ++j)
      if (bad[i][j] == 0) parent[find(j)] = find(i);

  std::vector<std::vector<std::string>> groups;
  std::vector<bool> done(M, false);
  for (std::size_t i = 0; i < M; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> members;
    for (std::size_t j = i; j < M; ++j)
      if (find(j) == find(i)) members.push_back(j), done[j] = true;
    if (members.size() < 2) continue;
    for (std::size_t x : members)
      for (std::size_t y : members)
        if (x != y && bad[x][y] != 0)
          throw InvariantError("indistinguishability is not transitive between " + names[x] + " and " + names[y]);
    std::vector<std::string> g;
    for (std::size_t x : members) g.push_back(names[x]);
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace

IndistinguishabilityResult indistinguishable_groups(int n, const std::vector<MeasureDescriptor>& measures,
                                                    GroupMethod method, Budget& budget,
                                                    const DistinguishOptions& options) {
  if (n < 2 || n > 62) throw InputError("indistinguishability needs 2 <= n <= 62");
  if (measures.empty() || measures.size() > 12) throw InputError("between 1 and 12 measures are supported");
  for (const auto& d : measures)
    if (d.scheme != Averaging::None && d.arity() == Arity::BinaryOnly)
      throw InputError("binary triplets take plain measures");

  IndistinguishabilityResult res;
  res.n = n;
  res.method = method;
  for (const auto& d : measures) res.measures.push_back(d.id());

  const MatrixTable table = build_table(n);
  const std::size_t K = table.counts.size();
  const auto codes = relation_codes(table, measures, options.eps);
  std::size_t code_space = 1;
  for (std::size_t k = 0; k < measures.size(); ++k) code_space *= 3;
  std::vector<std::uint64_t> hist(code_space, 0);

  if (method == GroupMethod::MatrixClasses) {
    for (int a1 = 1; a1 < n; ++a1) {
      const Integer labelings_a = binomial(n, a1);
      const auto& g = table.by_a1[a1];
      budget.charge(g.size() * g.size());
      for (int i : g)
        for (int j : g) {
          Integer w = table.multiplicity[i] * table.multiplicity[j];
          if (i == j && !options.include_equal_predictions) w -= table.multiplicity[i];
          w *= labelings_a;
          hist[codes[i * K + j]] += w.get_ui();
        }
    }
  } else {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> labelings;
    for (std::uint64_t x = 1; x < full; ++x) labelings.push_back(x);
    const std::size_t L = labelings.size();
    budget.charge(static_cast<std::uint64_t>(L) * L);

    const int workers = std::max(1, options.threads);
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(code_space, 0));
    auto work = [&](int w) {
      auto& h = partial[w];
      std::vector<int> ids(L);
      for (std::size_t ia = w; ia < L; ia += workers) {
        // Bit k set means element k is positive; element order is irrelevant to counts.
        const std::uint64_t A = labelings[ia];
        const int a1 = std::popcount(A);
        for (std::size_t ib = 0; ib < L; ++ib) {
          const std::uint64_t B = labelings[ib];
          ids[ib] = table.lookup(a1, std::popcount(A & B), std::popcount(~A & B & full));
        }
        for (std::size_t i1 = 0; i1 < L; ++i1) {
          const std::uint32_t* row = &codes[static_cast<std::size_t>(ids[i1]) * K];
          for (std::size_t i2 = 0; i2 < L; ++i2) {
            if (i1 == i2 && !options.include_equal_predictions) continue;
            ++h[row[ids[i2]]];
          }
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (const auto& h : partial)
      for (std::size_t c = 0; c < code_space; ++c) hist[c] += h[c];
  }

  const std::size_t M = measures.size();
  res.inconsistent.assign(M, std::vector<std::uint64_t>(M, 0));
  for (std::size_t code = 0; code < code_space; ++code) {
    if (!hist[code]) continue;
    res.triplets += hist[code];
    std::vector<int> digit(M);
    std::size_t c = code;
    for (std::size_t k = 0; k < M; ++k, c /= 3) digit[k] = static_cast<int>(c % 3);
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = 0; j < M; ++j)
        if (digit[i] != digit[j]) res.inconsistent[i][j] += hist[code];
  }
  res.groups = groups_from(res.inconsistent, res.measures);
  return res;
}

Rational PairStat::rate() const {
  if (total == 0) return 0;
  Rational q(Integer(std::to_string(inconsistent)), Integer(std::to_string(total)));
  q.canonicalize();
  return q;
}

double PairStat::percent() const { return total ? 100.0 * static_cast<double>(inconsistent) / total : 0.0; }

const PairStat& ConsistencyReport::at(std::size_t i, std::size_t j) const {
  if (i == j) throw InputError("inconsistency of a measure with itself is undefined");
  if (i > j) std::swap(i, j);
  const std::size_t M = measures.size();
  std::size_t k = i * M - i * (i + 1) / 2 + (j - i - 1);
  return pairs.at(k);
}

ConsistencyReport pairwise_inconsistency(const std::vector<MeasureDescriptor>& measures,
                                         std::span<const MatrixPair> comparisons, long double eps) {
  if (comparisons.empty()) throw InputError("no comparisons given");
  if (measures.size() < 2) throw InputError("need at least two measures");
  const int m = comparisons.front().first.num_classes();
  for (const auto& [x, y] : comparisons)
    if (x.num_classes() != m || y.num_classes() != m) throw InputError("matrices differ in class count");

  ConsistencyReport rep;
  const std::size_t M = measures.size();
  for (const auto& d : measures) rep.measures.push_back(d.id());
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = i + 1; j < M; ++j) rep.pairs.push_back({rep.measures[i], rep.measures[j]});
  rep.comparisons = comparisons.size();

  std::vector<Relation> rel(M);
  std::vector<bool> shaky(M);
  for (const auto& [x, y] : comparisons) {
    for (std::size_t k = 0; k < M; ++k) {
      Value vx = evaluate_oriented(measures[k], x), vy = evaluate_oriented(measures[k], y);
      rel[k] = compare(vx, vy, eps);
      shaky[k] = compare(vx, vy, eps / 10) != compare(vx, vy, eps * 10);
    }
    std::size_t p = 0;
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t j = i + 1; j < M; ++j, ++p) {
        auto& s = rep.pairs[p];
        ++s.total;
        if (rel[i] != rel[j]) ++s.inconsistent;
        if (shaky[i] || shaky[j]) ++s.unstable;
      }
  }
  return rep;
}

std::vector<MatrixPair> unordered_pairs(std::span<const ConfusionMatrix> models) {
  std::vector<MatrixPair> out;
  for (std::size_t i = 0; i < models.size(); ++i)
    for (std::size_t j = i + 1; j < models.size(); ++j) out.emplace_back(models[i], models[j]);
  return out;
}

RankingTable rank_matrices(const std::vector<MeasureDescriptor>& measures,
                           const std::vector<std::pair<std::string, ConfusionMatrix>>& models, long double eps) {
  if (models.empty()) throw InputError("no models to rank");
  RankingTable t;
  for (const auto& d : measures) t.measures.push_back(d.id());
  for (const auto& [name, c] : models) t.models.push_back(name);
  for (const auto& d : measures) {
    std::vector<Value> raw, oriented;
    for (const auto& [name, c] : models) {
      raw.push_back(evaluate(d, c));
      oriented.push_back(orient(d, raw.back()));
    }
    std::vector<int> ranks;
    for (std::size_t i = 0; i < models.size(); ++i) {
      int better = 0;
      for (std::size_t j = 0; j < models.size(); ++j)
        if (compare(oriented[j], oriented[i], eps) == Relation::Greater) ++better;
      ranks.push_back(better + 1);
    }
    t.values.push_back(std::move(raw));
    t.ranks.push_back(std::move(ranks));
  }
  return t;
}

RankingTable rank_models(const std::vector<MeasureDescriptor>& measures, const Labeling& truth,
                         const std::vector<std::pair<std::string, Labeling>>& predictions, long double eps) {
  std::vector<std::pair<std::string, ConfusionMatrix>> models;
  for (const auto& [name, pred] : predictions) {
    if (pred.size() != truth.size() || pred.num_classes() != truth.num_classes())
      throw InputError("prediction '" + name + "' is not aligned with the truth labeling");
    models.emplace_back(name, build_confusion(truth, pred));
  }
  return rank_matrices(measures, models, eps);
}

}  // namespace maudit
