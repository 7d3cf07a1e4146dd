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

#include <cfloat>
#include <cmath>

#include "maudit/errors.hpp"
#include "maudit/properties.hpp"

namespace maudit {

std::vector<RatePoint> interior_grid(int divisions) {
  if (divisions < 2) throw InputError("grid needs at least two divisions");
  std::vector<RatePoint> grid;
  for (int k = 1; k < divisions; ++k)
    for (int l = 1; l < divisions; ++l) {
      RatePoint pt{Rational(k, divisions), Rational(l, divisions)};
      pt.p_a.canonicalize();
      pt.p_b.canonicalize();
      grid.push_back(std::move(pt));
    }
  return grid;
}

ConfusionMatrix rate_matrix(const Rational& p_ab, const Rational& p_a, const Rational& p_b) {
  return ConfusionMatrix(BinaryCounts(p_ab, p_a - p_ab, p_b - p_ab, 1 - p_a - p_b + p_ab));
}

namespace {

void require_interior(const RatePoint& p) {
  if (p.p_a <= 0 || p.p_a >= 1 || p.p_b <= 0 || p.p_b >= 1)
    throw InputError("rate grid touches the boundary of the unit square");
}

struct Stencil {
  int reach;
  std::vector<Rational> weights;  // offsets -reach..reach
  int power;
};

Stencil stencil(int order) {
  switch (order) {
    case 1: return {1, {Rational(-1, 2), 0, Rational(1, 2)}, 1};
    case 2: return {1, {1, -2, 1}, 2};
    case 3: return {2, {Rational(-1, 2), 1, 0, -1, Rational(1, 2)}, 3};
    case 4: return {2, {1, -4, 6, -4, 1}, 4};
  }
  throw InputError("derivative order must lie in 1..4");
}

}  // namespace

bool BaselineOrderReport::vanishes_everywhere(int order) const {
  bool seen = false;
  for (const auto& e : entries) {
    if (e.order != order) continue;
    seen = true;
    if (!e.vanishes) return false;
  }
  return seen;
}

long double BaselineOrderReport::max_abs(int order) const {
  long double best = 0;
  for (const auto& e : entries)
    if (e.order == order) best = std::max(best, std::fabs(e.derivative));
  return best;
}

BaselineOrderReport baseline_order(const MeasureDescriptor& d, int max_order,
                                   std::span<const RatePoint> grid, long double tolerance) {
  if (max_order < 1 || max_order > 4) throw InputError("derivative order must lie in 1..4");
  if (d.arity() == Arity::BinaryOnly && d.scheme != Averaging::None)
    throw InputError("baseline order works on binary measures");
  BaselineOrderReport report;
  report.measure = d.id();
  report.max_order = max_order;

  for (const auto& pt : grid) {
    require_interior(pt);
    const Rational lo = std::max(Rational(0), Rational(pt.p_a + pt.p_b - 1));
    const Rational hi = std::min(pt.p_a, pt.p_b);
    const Rational center = pt.p_a * pt.p_b;
    const Rational width = hi - lo;
    const Rational radius = std::min(center - lo, hi - center);

    for (int order = 1; order <= max_order; ++order) {
      Stencil st = stencil(order);
      // Second order uses a 1e-4 width step; higher orders need a wider one
      // because the roundoff term grows like eps / h^order.
      Rational h = order <= 2 ? width / 10000 : width / 100;
      Rational cap = radius / (2 * st.reach);
      if (h > cap) h = cap;

      long double fmax = 0;
      auto estimate = [&](const Rational& step) {
        long double acc = 0;
        for (int k = -st.reach; k <= st.reach; ++k) {
          const Rational& w = st.weights[k + st.reach];
          if (w == 0) continue;
          long double f = evaluate(d, rate_matrix(center + k * step, pt.p_a, pt.p_b)).approx();
          fmax = std::max(fmax, std::fabs(f));
          acc += to_long_double(w) * f;
        }
        return acc / std::pow(to_long_double(step), st.power);
      };
      long double coarse = estimate(h);
      long double fine = estimate(h / 2);
      long double richardson = (4 * fine - coarse) / 3;

      // Roundoff bound of the two-level combination, on top of the tolerance.
      long double noise = 64 * LDBL_EPSILON * std::max(fmax, 1.0L) /
                          std::pow(to_long_double(h / 2), st.power);
      OrderEntry e{pt, order, richardson, tolerance + noise, false};
      e.vanishes = std::fabs(richardson) < e.threshold;
      report.entries.push_back(e);
    }
  }
  return report;
}

long double gm_normalizer(const Rational& r, long double p_a, long double p_b) {
  const long double x = p_a * (1 - p_a);
  const long double y = p_b * (1 - p_b);
  if (r == 0) return 1 / std::sqrt(x * y);
  const long double rr = to_long_double(r);
  return 1 / std::pow((std::pow(x, rr) + std::pow(y, rr)) / 2, 1 / rr);
}

bool NormalizerReport::all_hold() const {
  for (const auto& c : conditions)
    if (!c.holds) return false;
  return !conditions.empty();
}

namespace {

// Exact normalizer for r = +-1, where s is rational.
std::optional<Rational> exact_normalizer(const Rational& r, const Rational& p_a, const Rational& p_b) {
  Rational x = p_a * (1 - p_a), y = p_b * (1 - p_b);
  if (r == 1) return 2 / (x + y);
  if (r == -1) return (1 / x + 1 / y) / 2;
  return std::nullopt;
}

// (1/s) ds/dp_a and (1/s) ds/dp_b in closed form.
std::pair<long double, long double> log_partials(const Rational& r, long double pa, long double pb) {
  const long double x = pa * (1 - pa), y = pb * (1 - pb);
  long double wa, wb;
  if (r == 0) {
    wa = wb = 0.5L;
  } else {
    const long double rr = to_long_double(r);
    const long double xr = std::pow(x, rr), yr = std::pow(y, rr);
    wa = xr / (xr + yr);
    wb = yr / (xr + yr);
  }
  return {(2 * pa - 1) / x * wa, (2 * pb - 1) / y * wb};
}

}  // namespace

NormalizerReport check_gm_normalizer_conditions(const Rational& r, std::span<const RatePoint> grid,
                                                long double strict_margin) {
  NormalizerReport rep;
  rep.r = r;
  for (int k = 1; k <= 6; ++k) rep.conditions.push_back({k, true, INFINITY, 0, std::nullopt});

  auto record = [&](int k, long double margin, const RatePoint& pt, bool ok) {
    auto& c = rep.conditions[k - 1];
    ++c.points;
    if (margin < c.worst_margin) {
      c.worst_margin = margin;
      c.worst_point = pt;
    }
    if (!ok) c.holds = false;
  };
  constexpr long double kRelTol = 1e-15L;
  constexpr long double kClosedTol = 1e-12L;
  constexpr long double kFdStep = 1e-6L;

  for (const auto& pt : grid) {
    require_interior(pt);
    const long double pa = to_long_double(pt.p_a), pb = to_long_double(pt.p_b);
    const long double s = gm_normalizer(r, pa, pb);

    // 1: symmetry in the arguments and under class flip.
    if (auto e = exact_normalizer(r, pt.p_a, pt.p_b)) {
      bool ok = *e == *exact_normalizer(r, pt.p_b, pt.p_a) && *e == *exact_normalizer(r, 1 - pt.p_a, 1 - pt.p_b);
      record(1, ok ? 0 : -1, pt, ok);
    } else {
      long double dev = std::max(std::fabs(s - gm_normalizer(r, pb, pa)),
                                 std::fabs(s - gm_normalizer(r, 1 - pa, 1 - pb))) / s;
      record(1, -dev, pt, dev <= kRelTol * 8);
    }

    // 2: value on the diagonal and the anti-diagonal.
    {
      const Rational target = 1 / (pt.p_a * (1 - pt.p_a));
      if (auto e1 = exact_normalizer(r, pt.p_a, pt.p_a)) {
        bool ok = *e1 == target && *exact_normalizer(r, pt.p_a, 1 - pt.p_a) == target;
        record(2, ok ? 0 : -1, pt, ok);
      } else {
        long double t = to_long_double(target);
        long double dev = std::max(std::fabs(gm_normalizer(r, pa, pa) - t),
                                   std::fabs(gm_normalizer(r, pa, 1 - pa) - t)) / t;
        record(2, -dev, pt, dev <= kRelTol * 8);
      }
    }

    // 3 and 4: strict upper bounds away from the anti-diagonal / diagonal.
    if (pt.p_b != 1 - pt.p_a) {
      long double bound = std::max(1 / (pa * pb), 1 / ((1 - pa) * (1 - pb)));
      record(3, bound - s, pt, bound - s > strict_margin);
    }
    if (pt.p_b != pt.p_a) {
      long double bound = std::max(1 / (pa * (1 - pb)), 1 / ((1 - pa) * pb));
      record(4, bound - s, pt, bound - s > strict_margin);
    }

    // 5 and 6: log-derivative combinations inside closed intervals.
    auto [da, db] = log_partials(r, pa, pb);
    auto log_s = [&](long double a, long double b) { return std::log(gm_normalizer(r, a, b)); };
    long double fa = (log_s(pa + kFdStep, pb) - log_s(pa - kFdStep, pb)) / (2 * kFdStep);
    long double fb = (log_s(pa, pb + kFdStep) - log_s(pa, pb - kFdStep)) / (2 * kFdStep);
    rep.max_partial_discrepancy =
        std::max({rep.max_partial_discrepancy, std::fabs(fa - da), std::fabs(fb - db)});

    long double q5 = pa * da + pb * db;
    long double lo5 = std::min(-2.0L, -1 - pa * pb / ((1 - pa) * (1 - pb)));
    long double hi5 = std::max((2 * pb - 1) / (1 - pb), (2 * pa - 1) / (1 - pa));
    long double m5 = std::min(q5 - lo5, hi5 - q5);
    record(5, m5, pt, m5 >= -kClosedTol);

    long double q6 = (1 - pa) * da - pb * db;
    long double lo6 = std::min(2 - 1 / pa, 2 - 1 / (1 - pb));
    long double hi6 = std::max(1 + pb * (1 - pa) / (pa * (1 - pb)), 2.0L);
    long double m6 = std::min(q6 - lo6, hi6 - q6);
    record(6, m6, pt, m6 >= -kClosedTol);
  }
  if (rep.max_partial_discrepancy > 1e-6L)
    throw InvariantError("closed-form normalizer partials disagree with finite differences");
  return rep;
}

ImpossibilityReport corroborate_impossibility(const std::vector<MeasureDescriptor>& measures,
                                              const AuditSpace& space, Budget& budget) {
  ImpossibilityReport rep;
  for (const auto& d : measures) {
    if (d.audit_only()) continue;
    ImpossibilityRow row;
    row.measure = d.id();
    row.mon = check_property(d, Property::Mon, space, budget);
    row.dist = check_property(d, Property::Dist, space, budget);
    row.cb = check_property(d, Property::CB, space, budget);
    row.satisfied = row.mon.holds() + row.dist.holds() + row.cb.holds();
    if (row.satisfied == 3) rep.consistent = false;
    if (row.satisfied == 2) {
      const Verdict& third = !row.mon.holds() ? row.mon : (!row.dist.holds() ? row.dist : row.cb);
      row.witness_replayed = third.witness && replay_witness(d, *third.witness, space.eps);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace maudit
