// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdiscord/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qdiscord {

namespace {

struct Simplex {
  std::vector<std::vector<double>> points;
  std::vector<double> values;
};

struct Runner {
  const Objective& f;
  int evaluations = 0;

  double eval(const std::vector<double>& x) {
    ++evaluations;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  }

  Simplex build(const std::vector<double>& center, double fc, double step) {
    Simplex s;
    s.points.push_back(center);
    s.values.push_back(fc);
    for (std::size_t i = 0; i < center.size(); ++i) {
      auto p = center;
      p[i] += step;
      s.values.push_back(eval(p));
      s.points.push_back(std::move(p));
    }
    return s;
  }

  // Returns iterations used; `converged` set when the value spread reaches tol.
  int run(Simplex& s, int budget, double tol, bool& converged) {
    const std::size_t n = s.points.size() - 1;
    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    int it = 0;
    converged = false;
    while (true) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.values[a] < s.values[b]; });
      const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
      if (s.values[worst] - s.values[best] <= tol) {
        converged = true;
        break;
      }
      if (it >= budget) break;
      ++it;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& p = s.points[order[k]];
        for (std::size_t i = 0; i < n; ++i) centroid[i] += p[i];
      }
      for (double& c : centroid) c /= static_cast<double>(n);

      const auto& pw = s.points[worst];
      for (std::size_t i = 0; i < n; ++i) trial[i] = centroid[i] + (centroid[i] - pw[i]);
      const double fr = eval(trial);

      if (fr < s.values[best]) {
        for (std::size_t i = 0; i < n; ++i) trial2[i] = centroid[i] + 2.0 * (centroid[i] - pw[i]);
        const double fe = eval(trial2);
        if (fe < fr) {
          s.points[worst] = trial2;
          s.values[worst] = fe;
        } else {
          s.points[worst] = trial;
          s.values[worst] = fr;
        }
        continue;
      }
      if (fr < s.values[second]) {
        s.points[worst] = trial;
        s.values[worst] = fr;
        continue;
      }
      // Contraction: outside if the reflection improved on the worst point.
      const bool outside = fr < s.values[worst];
      for (std::size_t i = 0; i < n; ++i) {
        trial2[i] = outside ? centroid[i] + 0.5 * (trial[i] - centroid[i]) : centroid[i] + 0.5 * (pw[i] - centroid[i]);
      }
      const double fc = eval(trial2);
      if (fc < (outside ? fr : s.values[worst])) {
        s.points[worst] = trial2;
        s.values[worst] = fc;
        continue;
      }
      const auto pb = s.points[best];
      for (std::size_t k = 0; k <= n; ++k) {
        if (k == best) continue;
        for (std::size_t i = 0; i < n; ++i) s.points[k][i] = pb[i] + 0.5 * (s.points[k][i] - pb[i]);
        s.values[k] = eval(s.points[k]);
      }
    }
    return it;
  }
};

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, const NelderMeadOptions& opts) {
  Runner r{f};
  NelderMeadResult out;
  out.x = std::move(start);
  out.value = r.eval(out.x);
  if (out.x.empty()) {
    out.converged = true;
    out.evaluations = r.evaluations;
    return out;
  }

  double step = opts.initial_step;
  int budget = opts.max_iterations;
  for (int round = 0; round <= opts.max_restarts && budget > 0; ++round) {
    Simplex s = r.build(out.x, out.value, step);
    bool converged = false;
    const int used = r.run(s, budget, opts.function_tolerance, converged);
    budget -= used;
    out.iterations += used;
    const auto best = static_cast<std::size_t>(std::min_element(s.values.begin(), s.values.end()) - s.values.begin());
    const double improvement = out.value - s.values[best];
    if (s.values[best] < out.value) {
      out.value = s.values[best];
      out.x = s.points[best];
    }
    out.converged = converged;
    if (!converged) break;
    if (round > 0 && improvement <= opts.function_tolerance) break;
    // Restart with a smaller simplex around the incumbent.
    step *= 0.1;
  }
  out.evaluations = r.evaluations;
  return out;
}

}  // namespace qdiscord
