// Copyright 2026 The gwass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Generalized distance on the line for p = 1.
//
// With sites z_1 < ... < z_N, net mass d_k = mu(z_k) - nu(z_k) and gaps
// g_k = z_{k+1} - z_k, the problem is
//
//   min  sum_k a |e_k| + sum_k b g_k |F_k|,   F_k = F_{k-1} + d_k + e_k,
//
// with F_0 = F_N = 0: e_k is mass removed or created at site k and F_k the
// flux across gap k. Creating mass is never cheaper than removing it on the
// other side, so this equals the sub-measure formulation. The cost-to-go in
// F is convex piecewise linear and is carried as a slope-trick structure.

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gwass/gw.hpp"

namespace gwass {

namespace {

// f(x) = min + sum_L w (l - x)^+ + sum_R w (x - r)^+, every l <= every r.
// Keys are stored relative to a common offset.
class ConvexPiecewiseLinear {
 public:
  explicit ConvexPiecewiseLinear(double slope) {
    left_[0.0] = slope;
    right_[0.0] = slope;
    left_weight_ = right_weight_ = slope;
  }

  void shift(double d) { offset_ += d; }

  // Infimal convolution with c|x|.
  void clip_slopes(double c) {
    while (right_weight_ > c && !right_.empty()) {
      auto it = std::prev(right_.end());
      const double excess = right_weight_ - c;
      if (it->second <= excess) {
        right_weight_ -= it->second;
        right_.erase(it);
      } else {
        it->second -= excess;
        right_weight_ = c;
      }
    }
    while (left_weight_ > c && !left_.empty()) {
      auto it = left_.begin();
      const double excess = left_weight_ - c;
      if (it->second <= excess) {
        left_weight_ -= it->second;
        left_.erase(it);
      } else {
        it->second -= excess;
        left_weight_ = c;
      }
    }
  }

  // Adds c |x - x0|.
  void add_abs(double c, double x0) {
    if (c <= 0.0) return;
    add_right_ramp(c, x0 - offset_);
    add_left_ramp(c, x0 - offset_);
  }

  double operator()(double x) const {
    const double k = x - offset_;
    double v = min_;
    for (const auto& [l, w] : left_) v += w * std::max(0.0, l - k);
    for (const auto& [r, w] : right_) v += w * std::max(0.0, k - r);
    return v;
  }

 private:
  // c (x - k)^+ : slopes right of k go up by c and the minimum moves left.
  void add_right_ramp(double c, double k) {
    if (left_.empty() || std::prev(left_.end())->first <= k) {
      right_[k] += c;
      right_weight_ += c;
      return;
    }
    left_[k] += c;
    left_weight_ += c;
    double rest = c;
    while (rest > 0.0 && !left_.empty()) {
      auto it = std::prev(left_.end());
      const double l = it->first;
      const double moved = std::min(it->second, rest);
      min_ += moved * (l - k);
      right_[l] += moved;
      right_weight_ += moved;
      left_weight_ -= moved;
      rest -= moved;
      if (it->second - moved <= 0.0) {
        left_.erase(it);
      } else {
        it->second -= moved;
      }
    }
  }

  void add_left_ramp(double c, double k) {
    if (right_.empty() || right_.begin()->first >= k) {
      left_[k] += c;
      left_weight_ += c;
      return;
    }
    right_[k] += c;
    right_weight_ += c;
    double rest = c;
    while (rest > 0.0 && !right_.empty()) {
      auto it = right_.begin();
      const double r = it->first;
      const double moved = std::min(it->second, rest);
      min_ += moved * (k - r);
      left_[r] += moved;
      left_weight_ += moved;
      right_weight_ -= moved;
      rest -= moved;
      if (it->second - moved <= 0.0) {
        right_.erase(it);
      } else {
        it->second -= moved;
      }
    }
  }

  double min_ = 0.0;
  double offset_ = 0.0;
  double left_weight_ = 0.0;
  double right_weight_ = 0.0;
  std::map<double, double> left_;
  std::map<double, double> right_;
};

}  // namespace

double gw_line_value(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                     double a, double b) {
  if (mu.dim() != nu.dim()) throw DimensionMismatch(mu.dim(), nu.dim());
  if (mu.dim() != 1) throw std::invalid_argument("line solver needs dim = 1");
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("a, b must be positive");

  std::vector<std::pair<double, double>> sites;
  sites.reserve(mu.size() + nu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) sites.emplace_back(mu.position(i)[0], mu.weight(i));
  for (std::size_t j = 0; j < nu.size(); ++j) sites.emplace_back(nu.position(j)[0], -nu.weight(j));
  std::sort(sites.begin(), sites.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& s : sites) {
    if (!merged.empty() && merged.back().first == s.first) {
      merged.back().second += s.second;
    } else {
      merged.push_back(s);
    }
  }
  if (merged.empty()) return 0.0;

  ConvexPiecewiseLinear f(a);
  for (std::size_t k = 0; k < merged.size(); ++k) {
    if (k > 0) f.clip_slopes(a);
    f.shift(merged[k].second);
    if (k + 1 < merged.size()) {
      f.add_abs(b * (merged[k + 1].first - merged[k].first), 0.0);
    }
  }
  return f(0.0);
}

}  // namespace gwass
