#include "herd/maximizers.hpp"

#include <vector>

namespace herd {

namespace {

void check_weights(int feature_count, std::span<const double> w) {
  if (static_cast<int>(w.size()) != feature_count)
    throw DataError("weight length does not match model feature count");
}

// Pre-activation of hidden unit i given x: w[D+i] + sum_j W_ij x_j.
double hidden_field(const RbmModel& m, std::span<const double> w,
                    const SpinVector& x, int i) {
  const int D = m.visible_units();
  double field = w[static_cast<std::size_t>(m.hidden_bias_index(i))];
  const double* block = w.data() + m.pair_index(i, 0);
  for (int j = 0; j < D; ++j) field += block[j] * x[static_cast<std::size_t>(j)];
  return field;
}

// Pre-activation of visible unit j given z: w[j] + sum_i W_ij z_i.
double visible_field(const RbmModel& m, std::span<const double> w,
                     const SpinVector& z, int j) {
  const int K = m.hidden_units();
  double field = w[static_cast<std::size_t>(m.visible_bias_index(j))];
  for (int i = 0; i < K; ++i)
    field += w[static_cast<std::size_t>(m.pair_index(i, j))] * z[static_cast<std::size_t>(i)];
  return field;
}

}  // namespace

SpinVector argmax_hidden(const RbmModel& model, std::span<const double> w,
                         const SpinVector& x) {
  check_weights(model.feature_count(), w);
  if (static_cast<int>(x.size()) != model.visible_units())
    throw DataError("visible configuration does not match model");
  const int K = model.hidden_units();
  SpinVector z(static_cast<std::size_t>(K));
  for (int i = 0; i < K; ++i)
    z[static_cast<std::size_t>(i)] =
        hidden_field(model, w, x, i) >= 0.0 ? Spin{1} : Spin{-1};
  return z;
}

int argmax_hidden(const EnumeratedModel& model, std::span<const double> w,
                  int visible) {
  check_weights(model.feature_count(), w);
  if (visible < 0 || visible >= model.visible_count())
    throw DataError("visible index out of range");
  const int H = model.hidden_count();
  int best = 0;
  double best_score = score(model, w, {visible, 0});
  for (int h = 1; h < H; ++h) {
    const double s = score(model, w, {visible, h});
    if (s > best_score) {
      best_score = s;
      best = h;
    }
  }
  return best;
}

EnumState argmax_joint_exhaustive(const EnumeratedModel& model,
                                  std::span<const double> w,
                                  std::int64_t cap) {
  check_weights(model.feature_count(), w);
  if (model.joint_count() > cap)
    throw DataError("joint state space exceeds exhaustive-search cap");
  const int F = model.feature_count();
  int best = 0;
  double best_score = 0.0;
  for (int j = 0; j < model.joint_count(); ++j) {
    auto row = model.features_at(j);
    double s = 0.0;
    for (int a = 0; a < F; ++a) s += w[static_cast<std::size_t>(a)] * row[static_cast<std::size_t>(a)];
    if (j == 0 || s > best_score) {
      best_score = s;
      best = j;
    }
  }
  return model.state_from_joint(best);
}

RbmState argmax_joint_exhaustive(const RbmModel& model,
                                 std::span<const double> w, std::int64_t cap) {
  check_weights(model.feature_count(), w);
  const int D = model.visible_units();
  const int K = model.hidden_units();
  const bool enumerate_hidden = K <= D;
  const int outer_units = enumerate_hidden ? K : D;
  if (outer_units > 62 || (std::int64_t{1} << outer_units) > cap)
    throw DataError("joint state space exceeds exhaustive-search cap");
  const std::int64_t outer_count = std::int64_t{1} << outer_units;

  RbmState best;
  double best_score = 0.0;
  for (std::int64_t idx = 0; idx < outer_count; ++idx) {
    RbmState s;
    if (enumerate_hidden) {
      s.hidden = index_to_spins(static_cast<int>(idx), K);
      s.visible.resize(static_cast<std::size_t>(D));
      for (int j = 0; j < D; ++j)
        s.visible[static_cast<std::size_t>(j)] =
            visible_field(model, w, s.hidden, j) >= 0.0 ? Spin{1} : Spin{-1};
    } else {
      s.visible = index_to_spins(static_cast<int>(idx), D);
      s.hidden = argmax_hidden(model, w, s.visible);
    }
    const double sc = score(model, w, s);
    if (idx == 0 || sc > best_score) {
      best_score = sc;
      best = std::move(s);
    }
  }
  return best;
}

RbmState ascend_joint(const RbmModel& model, std::span<const double> w,
                      RbmState init, const AscentConfig& cfg) {
  check_weights(model.feature_count(), w);
  if (cfg.max_sweeps < 1) throw ConfigError("max_sweeps must be >= 1");
  const int D = model.visible_units();
  const int K = model.hidden_units();
  RbmState s = std::move(init);
  if (static_cast<int>(s.visible.size()) != D ||
      static_cast<int>(s.hidden.size()) != K)
    throw DataError("rbm state dimension mismatch");
  for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    bool changed = false;
    for (int j = 0; j < D; ++j) {
      // Flipping x_j changes the score by -2 x_j * field_j.
      const double delta =
          -2.0 * s.visible[static_cast<std::size_t>(j)] * visible_field(model, w, s.hidden, j);
      if (delta > 0.0) {
        s.visible[static_cast<std::size_t>(j)] = static_cast<Spin>(-s.visible[static_cast<std::size_t>(j)]);
        changed = true;
      }
    }
    for (int i = 0; i < K; ++i) {
      const double delta =
          -2.0 * s.hidden[static_cast<std::size_t>(i)] * hidden_field(model, w, s.visible, i);
      if (delta > 0.0) {
        s.hidden[static_cast<std::size_t>(i)] = static_cast<Spin>(-s.hidden[static_cast<std::size_t>(i)]);
        changed = true;
      }
    }
    if (!changed) break;
  }
  return s;
}

EnumState ascend_joint(const EnumeratedModel& model, std::span<const double> w,
                       EnumState init, const AscentConfig& cfg) {
  check_weights(model.feature_count(), w);
  if (cfg.max_sweeps < 1) throw ConfigError("max_sweeps must be >= 1");
  EnumState s = init;
  double current = score(model, w, s);
  for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    bool changed = false;
    // Visible coordinate: exact conditional scan, keep current on ties.
    {
      int best_v = s.visible;
      double best = current;
      for (int v = 0; v < model.visible_count(); ++v) {
        const double sc = score(model, w, {v, s.hidden});
        if (sc > best) {
          best = sc;
          best_v = v;
        }
      }
      if (best_v != s.visible) {
        s.visible = best_v;
        current = best;
        changed = true;
      }
    }
    // Hidden coordinate.
    {
      int best_h = s.hidden;
      double best = current;
      for (int h = 0; h < model.hidden_count(); ++h) {
        const double sc = score(model, w, {s.visible, h});
        if (sc > best) {
          best = sc;
          best_h = h;
        }
      }
      if (best_h != s.hidden) {
        s.hidden = best_h;
        current = best;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return s;
}

LowestEnergyCase<RbmModel> lowest_energy_case(const RbmModel& model,
                                              std::span<const double> w,
                                              const SpinDataset& data) {
  if (data.empty()) throw DataError("lowest_energy_case: empty dataset");
  LowestEnergyCase<RbmModel> best;
  for (std::size_t n = 0; n < data.cases.size(); ++n) {
    RbmState s{data.cases[n], argmax_hidden(model, w, data.cases[n])};
    const double energy = -score(model, w, s);
    if (n == 0 || energy < best.energy) {
      best = {static_cast<int>(n), std::move(s), energy};
    }
  }
  return best;
}

LowestEnergyCase<EnumeratedModel> lowest_energy_case(
    const EnumeratedModel& model, std::span<const double> w,
    const IndexDataset& data) {
  if (data.empty()) throw DataError("lowest_energy_case: empty dataset");
  LowestEnergyCase<EnumeratedModel> best;
  for (std::size_t n = 0; n < data.cases.size(); ++n) {
    EnumState s{data.cases[n], argmax_hidden(model, w, data.cases[n])};
    const double energy = -score(model, w, s);
    if (n == 0 || energy < best.energy) {
      best = {static_cast<int>(n), s, energy};
    }
  }
  return best;
}

}  // namespace herd
