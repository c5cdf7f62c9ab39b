// ttskit/significance.hpp
//
// Two-tailed significance tests over listening-test score samples. The
// unpaired variant is Welch's unequal-variance t-test; a paired variant is
// available for matched listener designs.

// Copyright 2026  ttskit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TTSKIT_SIGNIFICANCE_HPP_
#define TTSKIT_SIGNIFICANCE_HPP_

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "ttskit/common.hpp"

namespace ttskit {

struct TTestResult {
  double t = 0.0;
  double degrees_of_freedom = 0.0;
  double p = 1.0;  // two-tailed, in (0, 1]
};

namespace detail {

inline double sample_mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

inline double sample_variance(const std::vector<double>& xs, double mean) {
  double s = 0.0;
  for (double x : xs) s += (x - mean) * (x - mean);
  return s / static_cast<double>(xs.size() - 1);
}

inline double two_tailed_p(double t, double df) {
  boost::math::students_t dist(df);
  double p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
  p = std::min(p, 1.0);
  // Extreme separation can underflow; keep p strictly positive.
  return std::max(p, std::numeric_limits<double>::min());
}

}  // namespace detail

// Welch's two-sample t-test. Zero variance in both samples yields p = 1 when
// the means are equal; with different means the statistic degenerates to
// +/-inf and p collapses to the smallest positive double.
inline TTestResult welch_t_test(const std::vector<double>& a,
                                const std::vector<double>& b) {
  if (a.size() < 2 || b.size() < 2)
    throw DataError("significance: each sample needs at least 2 values");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ma = detail::sample_mean(a);
  const double mb = detail::sample_mean(b);
  const double va = detail::sample_variance(a, ma);
  const double vb = detail::sample_variance(b, mb);
  TTestResult r;
  const double se2 = va / na + vb / nb;
  if (se2 == 0.0) {
    if (ma == mb) {
      r.t = 0.0;
      r.degrees_of_freedom = na + nb - 2.0;
      r.p = 1.0;
      return r;
    }
    r.t = ma > mb ? std::numeric_limits<double>::infinity()
                  : -std::numeric_limits<double>::infinity();
    r.degrees_of_freedom = na + nb - 2.0;
    r.p = std::numeric_limits<double>::min();
    return r;
  }
  r.t = (ma - mb) / std::sqrt(se2);
  r.degrees_of_freedom =
      se2 * se2 /
      (va * va / (na * na * (na - 1.0)) + vb * vb / (nb * nb * (nb - 1.0)));
  r.p = detail::two_tailed_p(r.t, r.degrees_of_freedom);
  return r;
}

// Paired two-tailed t-test over per-listener differences.
inline TTestResult paired_t_test(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  if (a.size() != b.size())
    throw DataError("significance: paired samples must have equal size");
  if (a.size() < 2)
    throw DataError("significance: each sample needs at least 2 values");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  const double n = static_cast<double>(d.size());
  const double md = detail::sample_mean(d);
  const double vd = detail::sample_variance(d, md);
  TTestResult r;
  r.degrees_of_freedom = n - 1.0;
  if (vd == 0.0) {
    if (md == 0.0) {
      r.t = 0.0;
      r.p = 1.0;
      return r;
    }
    r.t = md > 0.0 ? std::numeric_limits<double>::infinity()
                   : -std::numeric_limits<double>::infinity();
    r.p = std::numeric_limits<double>::min();
    return r;
  }
  r.t = md / std::sqrt(vd / n);
  r.p = detail::two_tailed_p(r.t, r.degrees_of_freedom);
  return r;
}

}  // namespace ttskit

#endif  // TTSKIT_SIGNIFICANCE_HPP_
