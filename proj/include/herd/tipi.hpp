#pragma once

#include <span>

#include "herd/maximizers.hpp"
#include "herd/model.hpp"

namespace herd {

// The zero-temperature objective and its exact subgradient, evaluated by
// exhaustive enumeration. Restricted to enumerated models on purpose: the
// exact maxima are what make these functions usable as testing oracles.
// Large models go through the herding engine instead.

// l0(w) = (1/N) sum_n max_h score(x_n, h) - max_s score(s). Continuous,
// piecewise linear, concave, nonpositive, with l0(0) = 0 and
// l0(b*w) = b*l0(w) for b >= 0.
double tipi_value(const EnumeratedModel& model, std::span<const double> w,
                  const IndexDataset& data,
                  std::int64_t cap = kDefaultJointCap);

// Gradient of the linear face selected by the canonical tie-broken
// maximizers: (1/N) sum_n g(x_n, z*_n) - g(s*). On tie boundaries this is
// the subgradient of the face the herding update actually applies.
std::vector<double> tipi_gradient(const EnumeratedModel& model,
                                  std::span<const double> w,
                                  const IndexDataset& data,
                                  std::int64_t cap = kDefaultJointCap);

// Finite-temperature scaled log-likelihood l_T = T * l(w/T), computed with
// max-shifted log-sum-exp. Converges to tipi_value as T -> 0, with
// |l_T - l0| <= T * max(log joint_count, log hidden_count).
double temperature_loglik(const EnumeratedModel& model,
                          std::span<const double> w, const IndexDataset& data,
                          double temperature);

// log Z(w): log sum over joint states of exp(score(s)).
double log_partition(const EnumeratedModel& model, std::span<const double> w);

// Upper bound on the gradient norm, valid for every w: each gradient
// component is a difference of values inside the feature's range, so
// B = sqrt(sum_a (max_s g_a - min_s g_a)^2) bounds ||grad l0||_2.
double gradient_norm_bound(const EnumeratedModel& model);
double gradient_norm_bound(const RbmModel& model);  // all features +/-1: 2*sqrt(F)

// Weight-norm containment diagnostics: the gradient bound B, an empirically
// measured recurrence radius R (max ||w_t||_2 seen on a trajectory; no closed
// form exists), and the safe radius R' = R + B that a chain started inside
// never leaves.
struct BoundDiagnostics {
  double grad_bound = 0.0;
  double recurrence_radius = 0.0;
  double safe_radius = 0.0;
};

BoundDiagnostics bound_diagnostics(double grad_bound,
                                   double empirical_radius);

}  // namespace herd
