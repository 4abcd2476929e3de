#include "herd/tipi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace herd {

namespace {

void check_inputs(const EnumeratedModel& model, std::span<const double> w,
                  const IndexDataset& data, std::int64_t cap) {
  if (static_cast<int>(w.size()) != model.feature_count())
    throw DataError("weight length does not match model feature count");
  if (model.joint_count() > cap)
    throw DataError("joint state space exceeds exhaustive-search cap");
  validate_dataset(model, data);
  if (data.empty()) throw DataError("empty dataset");
}

// log sum_i exp(values[i]), max-shifted.
double log_sum_exp(std::span<const double> values) {
  const double m = *std::max_element(values.begin(), values.end());
  double acc = 0.0;
  for (double v : values) acc += std::exp(v - m);
  return m + std::log(acc);
}

}  // namespace

double tipi_value(const EnumeratedModel& model, std::span<const double> w,
                  const IndexDataset& data, std::int64_t cap) {
  check_inputs(model, w, data, cap);
  double data_term = 0.0;
  for (int v : data.cases) {
    const int h = argmax_hidden(model, w, v);
    data_term += score(model, w, {v, h});
  }
  data_term /= static_cast<double>(data.cases.size());
  const EnumState s = argmax_joint_exhaustive(model, w, cap);
  return data_term - score(model, w, s);
}

std::vector<double> tipi_gradient(const EnumeratedModel& model,
                                  std::span<const double> w,
                                  const IndexDataset& data, std::int64_t cap) {
  check_inputs(model, w, data, cap);
  const std::size_t F = static_cast<std::size_t>(model.feature_count());
  std::vector<double> grad(F, 0.0);
  const double inv_n = 1.0 / static_cast<double>(data.cases.size());
  for (int v : data.cases) {
    const int h = argmax_hidden(model, w, v);
    add_features(model, {v, h}, inv_n, grad);
  }
  const EnumState s = argmax_joint_exhaustive(model, w, cap);
  add_features(model, s, -1.0, grad);
  return grad;
}

double temperature_loglik(const EnumeratedModel& model,
                          std::span<const double> w, const IndexDataset& data,
                          double temperature) {
  if (temperature <= 0.0)
    throw ConfigError("temperature must be positive");
  check_inputs(model, w, data, kDefaultJointCap);
  const int H = model.hidden_count();
  std::vector<double> scaled(static_cast<std::size_t>(H));
  double data_term = 0.0;
  for (int v : data.cases) {
    for (int h = 0; h < H; ++h)
      scaled[static_cast<std::size_t>(h)] =
          score(model, w, {v, h}) / temperature;
    data_term += log_sum_exp(scaled);
  }
  data_term /= static_cast<double>(data.cases.size());

  std::vector<double> joint(static_cast<std::size_t>(model.joint_count()));
  for (int j = 0; j < model.joint_count(); ++j)
    joint[static_cast<std::size_t>(j)] =
        score(model, w, model.state_from_joint(j)) / temperature;
  return temperature * (data_term - log_sum_exp(joint));
}

double log_partition(const EnumeratedModel& model, std::span<const double> w) {
  if (static_cast<int>(w.size()) != model.feature_count())
    throw DataError("weight length does not match model feature count");
  std::vector<double> joint(static_cast<std::size_t>(model.joint_count()));
  for (int j = 0; j < model.joint_count(); ++j)
    joint[static_cast<std::size_t>(j)] =
        score(model, w, model.state_from_joint(j));
  return log_sum_exp(joint);
}

double gradient_norm_bound(const EnumeratedModel& model) {
  double acc = 0.0;
  for (int a = 0; a < model.feature_count(); ++a) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < model.joint_count(); ++j) {
      const double g = model.features_at(j)[static_cast<std::size_t>(a)];
      lo = std::min(lo, g);
      hi = std::max(hi, g);
    }
    const double range = hi - lo;
    acc += range * range;
  }
  return std::sqrt(acc);
}

double gradient_norm_bound(const RbmModel& model) {
  return 2.0 * std::sqrt(static_cast<double>(model.feature_count()));
}

BoundDiagnostics bound_diagnostics(double grad_bound,
                                   double empirical_radius) {
  return {grad_bound, empirical_radius, empirical_radius + grad_bound};
}

}  // namespace herd
